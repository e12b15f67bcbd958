from .explore import SubcomplexReport, Vertex, explore, find_vertex, link_type_one
from .generators import (
    INFINITY,
    NAMED,
    BuildingGen,
    building_gen,
    in_unipotent_kernel,
    named_matrices,
    parse_gens,
    phi,
    phi_closed_form,
    tower_for_gens,
    unitary_form,
)
from .identities import (
    BUILDING_IDENTITIES,
    EXPECTED_PHI,
    a_matrix,
    link_type_one_classes,
    random_unipotent_word,
    unipotent_word_matrix,
    verify_building_identity,
)
from .lattice import (
    ADJACENT_DIVISORS,
    LatticeClass,
    adjacent,
    elem_divisors,
    lattice_canonical,
    lattice_equal,
    same_class_oracle,
    vertex_type,
)
from .valuation import pi_power, truncate_at_infinity, val_inf
from .words import (
    A_IN_L_LISTED,
    LISTED_AGREES,
    L_WORDS,
    LINK_TYPE_ONE,
    UNIPOTENT_WORDS,
    evaluate_word,
    expand_word,
    format_power_word,
    parse_power_word,
)
