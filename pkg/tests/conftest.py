import pytest
from hypothesis import strategies as st

from ncalg.fields import GF, QQ, MERSENNE31
from ncalg.freealg import FreePoly

F7 = GF(7)
FM = GF(MERSENNE31)


@pytest.fixture
def xy():
    return FreePoly.gens(FM, 2)


def freepolys(field, nvars=2, max_degree=3, max_terms=4):
    words = st.lists(st.integers(0, nvars - 1), max_size=max_degree).map(tuple)
    coeffs = st.integers(-5, 5)
    return st.dictionaries(words, coeffs, max_size=max_terms).map(
        lambda d: FreePoly(field, nvars, d))


nc_fields = st.sampled_from([QQ, F7, GF(2)])
