from .artin import ArtinAuto, artin_images, braid_equal, braids_commute
from .catalog import (
    B1,
    B2,
    Y,
    centralized_element,
    centralizer_data,
    conjugation_identities,
    strand_merge_quotient,
    verify_centralizer,
    verify_conjugation_identity,
)
from .words import BraidWord, FreeWord, free_reduce, parse_braid
