import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fields, scalars
from lefschetz_sections import DenseMatrix, FieldCtx, NotSquare, det_gauss, matrix_M, rank, scalar
from lefschetz_sections.linalg import bareiss_rank
from oracles import fraction_rank, permutation_det


def test_rank_examples():
    assert rank(DenseMatrix.identity(4)) == 4
    assert rank(DenseMatrix([[1, 2], [2, 4]])) == 1
    assert rank(DenseMatrix.zeros(3, 5)) == 0


def test_det_examples():
    assert det_gauss(DenseMatrix([[1, 2], [3, 4]])) == -2
    for n in range(0, 6):
        assert det_gauss(DenseMatrix.identity(n)) == 1
    assert det_gauss(matrix_M(2, 1, 1, 1)) == 6
    with pytest.raises(NotSquare):
        det_gauss(DenseMatrix([[1, 2, 3]]))


def _matrices(max_n=4, square=True):
    def build(ctx):
        dims = st.integers(1, max_n)
        shape = dims.map(lambda n: (n, n)) if square else st.tuples(dims, st.integers(1, 6))
        return shape.flatmap(
            lambda rc: st.lists(st.lists(scalars(ctx), min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
        ).map(lambda rows: DenseMatrix(rows, ctx))

    return fields.flatmap(build)


@settings(max_examples=150, deadline=None)
@given(_matrices())
def test_det_matches_leibniz(m):
    assert det_gauss(m) == permutation_det(m.entries)


@settings(max_examples=150, deadline=None)
@given(_matrices(max_n=6, square=False))
def test_rank_matches_textbook_elimination(m):
    assert rank(m) == fraction_rank(m.raw_rows(), m.ctx.characteristic)


@settings(max_examples=80, deadline=None)
@given(_matrices(max_n=5, square=False), st.randoms(use_true_random=False), st.data())
def test_rank_metamorphic(m, rnd, data):
    shuffled = list(m.entries)
    rnd.shuffle(shuffled)
    scales = [data.draw(scalars(m.ctx, nonzero=True)) for _ in shuffled]
    scaled = DenseMatrix([[v * s for v in row] for row, s in zip(shuffled, scales)], m.ctx)
    assert rank(scaled) == rank(m)


def test_rank_deficient_large_integer_matrix():
    rnd = random.Random(7)
    # rank 5 by construction: 40 x 30 product of 40x5 and 5x30 factors
    left = [[rnd.randint(-10**6, 10**6) for _ in range(5)] for _ in range(40)]
    right = [[rnd.randint(-10**6, 10**6) for _ in range(30)] for _ in range(5)]
    prod = [[sum(a * b for a, b in zip(row, col)) for col in zip(*right)] for row in left]
    assert bareiss_rank([list(r) for r in prod], 30) == 5
    assert rank(DenseMatrix(prod)) == 5
    assert rank(DenseMatrix(prod, FieldCtx(101))) == fraction_rank(prod, 101)


def test_rational_entries_det():
    m = DenseMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]])
    assert det_gauss(m) == scalar(Fraction(1, 10) - Fraction(1, 12))
