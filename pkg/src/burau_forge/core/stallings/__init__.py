from .folding import CoreGraph, direction, fold, membership, rank, read_words
from .kernel import (
    WEIGHTS,
    a_subgroup_graph,
    a_subgroup_rank,
    a_words_in_l,
    conjugate_by_g1,
    expanded_a_word,
    f_quotient_value,
    kernel_weights,
    l_expansion_agrees,
    l_word_matrix,
    listed_a_words_in_l,
    listed_agreement,
    rewrite_in_kernel,
    to_free_word,
    to_power_word,
    verify_l_consistency,
)
