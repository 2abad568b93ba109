from fractions import Fraction

import pytest
from hypothesis import strategies as st

from lefschetz_sections import FieldCtx, scalar

PRIMES = (2, 3, 5, 7, 101)


@pytest.fixture(params=[0, *PRIMES], ids=lambda p: f"char{p}")
def ctx(request):
    return FieldCtx(request.param)


def scalars(ctx: FieldCtx, nonzero: bool = False):
    """Hypothesis strategy for elements of ``ctx``."""
    if ctx.characteristic:
        lo = 1 if nonzero else 0
        base = st.integers(lo, ctx.characteristic - 1)
    else:
        base = st.fractions(min_value=-50, max_value=50, max_denominator=12)
        if nonzero:
            base = base.filter(lambda v: v != 0)
    return base.map(lambda v: scalar(v, ctx))


fields = st.sampled_from([FieldCtx(0), *(FieldCtx(p) for p in PRIMES)])
small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=7).map(Fraction)
