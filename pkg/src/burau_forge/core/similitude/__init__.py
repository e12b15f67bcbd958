from .generators import (
    H0,
    HM1,
    GenId,
    ProjMat2,
    cd_matrices,
    coset_representatives,
    d2_form,
    gen_matrix,
    generator_lift,
    phi,
    similitude_unit,
)
from .normal_form import (
    GenWord,
    NotFound,
    basis_closure,
    outside_letters,
    q_normal_form,
    subgroup_member_basis,
    word_matrix,
)
from .quaternion import in_quaternionic_group, quaternion_pair
from .relations import RELATIONS, coset_classes, lifted_d, verify_relation
