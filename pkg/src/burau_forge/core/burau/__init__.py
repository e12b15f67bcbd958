from .criteria import LaurentCriteria, direct_criteria, laurent_criteria
from .diagonalization import (
    BACKWARD,
    FORWARD,
    DiagData,
    conj_M,
    conj_numerator,
    diag_data,
    diagonal_unitarity_holds,
    is_laurent_conjugate,
    j_prime_form,
    j_prime_unitary,
    reference_matrices,
    stabilizing_conjugate,
)
from .representation import (
    BurauKind,
    burau_matrix,
    generator_matrix,
    reduced_squier_form,
    reduction_basis,
    row_vector_v,
    squier_form,
)
from .target_groups import (
    GammaReport,
    embed_trivial,
    gamma_membership,
    gamma_prime_membership,
    hereditary_embed,
    reduced_images_at_one,
)
