from .fields import (
    QQ,
    QQI,
    Field,
    GaussianField,
    GaussianRational,
    MultiQuadElement,
    MultiQuadField,
    PrimeField,
    RationalField,
    Residue,
    field_from_tag,
    multi_quad,
    prime_field,
    tower_for,
)
from .forms import is_unitary, projective_unitary_scalar, similitude_scalar, unitary_defect
from .laurent import LaurentPoly, lp
from .matrix import SqMatrix, projective_canonical, projective_ratio, projectively_equal
from .ratfunc import RatFunc, parse_entry
