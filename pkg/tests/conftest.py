import logging

import pytest
from hypothesis import strategies as st

from burau_forge.core.algebra import QQ, QQI, GaussianRational, LaurentPoly, SqMatrix, prime_field
from burau_forge.core.braids.words import BraidWord
from burau_forge.utils.config import Settings

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def laurent_polys(draw, field=QQ, max_terms=4):
    """Sparse Laurent polynomials with small exponents and coefficients."""
    terms = draw(st.dictionaries(st.integers(min_value=-4, max_value=4), small_ints, max_size=max_terms))
    if field is QQI:
        terms = {k: GaussianRational(c, draw(small_ints)) for k, c in terms.items()}
    return LaurentPoly(field, terms)


@st.composite
def braid_words(draw, n=4, max_len=8):
    letters = draw(st.lists(st.tuples(st.integers(min_value=1, max_value=n - 1), st.sampled_from((1, -1))),
                            max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def elementary_products(draw, n=3, max_factors=5):
    """Random elements of SL(n, Z[t, t^-1]) as products of transvections."""
    A = SqMatrix.identity(n, QQ)
    for _ in range(draw(st.integers(min_value=1, max_value=max_factors))):
        i, j = draw(st.permutations(list(range(n))))[:2]
        terms = draw(st.dictionaries(st.integers(min_value=-2, max_value=2), st.sampled_from((-2, -1, 1, 2)),
                                     min_size=1, max_size=2))
        A = A * SqMatrix.elementary(n, i, j, LaurentPoly(QQ, terms), QQ)
    return A


@pytest.fixture
def f5():
    return prime_field(5)


@pytest.fixture
def settings():
    return Settings(threads=2)


@pytest.fixture(autouse=True)
def quiet_logging(caplog):
    caplog.set_level(logging.WARNING)
