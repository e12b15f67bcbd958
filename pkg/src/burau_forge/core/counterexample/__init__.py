from ..burau import embed_trivial, hereditary_embed
from .pipeline import (
    A0_AT_MINUS_ONE,
    C_WORD,
    DEFAULT_EXPONENTS,
    CounterexampleReport,
    assemble_counterexample,
    build_C,
    c_checks,
    c_word,
    correction_at_minus_one,
    det_at_points,
    final_eigencheck,
    generic_witness,
    materialized_checks,
    run_counterexample,
)
