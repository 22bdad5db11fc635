from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from dunkl.poly import Poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SAMPLE_MUS = [Fraction(s) for s in ("1/7", "1/3", "1/2", "1", "3/2", "2", "19/4")]


def rationals(max_num=50, max_den=12):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def polys(max_degree=12, **kw):
    return st.lists(rationals(**kw), max_size=max_degree + 1).map(Poly)


admissible_mus = rationals(max_num=40, max_den=9).filter(
    lambda q: not ((q + Fraction(1, 2)).denominator == 1 and q + Fraction(1, 2) <= 0)
)


@pytest.fixture(params=SAMPLE_MUS, ids=str)
def mu(request):
    return request.param
