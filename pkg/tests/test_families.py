from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import scalars
from lefschetz_sections import (
    QQ,
    FieldCtx,
    HomogPoly,
    InvalidParameter,
    NonArtinianSection,
    NotTrueLifting,
    d_subset_sum,
    graded_span_dim,
    hilbert_function,
    hyperplane_section,
    ideal_I,
    ideal_J,
    ideal_L,
    in_N,
    lift_monomial,
    lifted_I,
    point_set,
    scalar,
    stirling_unsigned,
)
from oracles import sympy_poly_coeffs

x, y, z, w = sympy.symbols("x y z w")


def coeff_map(poly):
    return {m: c.value for m, c in poly.coeffs.items()}


def test_ideal_I():
    assert [g.format() for g in ideal_I(1).generators] == ["x^2", "y^2", "z^2", "x*y*z"]
    assert [g.format() for g in ideal_I(2).generators] == ["x^3", "y^3", "z^3", "x*y*z"]
    with pytest.raises(InvalidParameter):
        ideal_I(0)


def test_in_N():
    assert in_N(-1, 2)
    assert not in_N(1, 5)
    assert in_N(scalar(4, FieldCtx(5)), 1)
    assert in_N(Fraction(-1, 3), 3) and not in_N(Fraction(-1, 3), 2)


def test_ideal_J():
    for t in (1, 2, 3):
        assert ideal_J(t, 0).generators == ideal_I(t).generators
    j = ideal_J(2, 1)
    expected = [x**3, y * (x + y) * (2 * x + y), z * (x + z) * (2 * x + z), x * y * z]
    assert [coeff_map(g) for g in j.generators] == [sympy_poly_coeffs(e, [x, y, z]) for e in expected]
    with pytest.raises(NonArtinianSection):
        ideal_J(2, -1)


def test_ideal_L_examples():
    gens = ideal_L(1, 0, 1, 1).generators
    expected = [x**2, y**2, (x + y) ** 2, x * y * (x + y)]
    assert [coeff_map(g) for g in gens] == [sympy_poly_coeffs(e, [x, y]) for e in expected]
    second = ideal_L(2, 1, 1, 1).generators[1]
    assert second.coefficient((1, 2)) == stirling_unsigned(3, 2) == 3
    third = ideal_L(1, 1, 1, 1).generators[2]
    assert third.coefficient((1, 1)) == d_subset_sum(2, 1, 1, 1) == 3
    with pytest.raises(InvalidParameter):
        ideal_L(0, 1, 1, 1)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 8), st.data())
def test_ideal_L_coefficient_laws(t, data):
    ctx = data.draw(st.sampled_from([QQ, FieldCtx(7), FieldCtx(101)]))
    a = data.draw(scalars(ctx))
    b, c = data.draw(scalars(ctx, nonzero=True)), data.draw(scalars(ctx, nonzero=True))
    _, second, third, _ = ideal_L(t, a, b, c).generators
    for i in range(t + 1):
        assert second.coefficient((i, t + 1 - i)) == stirling_unsigned(t + 1, t + 1 - i) * a**i
        # d_{t+1, t+1-i}(a, b) is the i-th elementary symmetric function
        assert third.coefficient((i, t + 1 - i)) == d_subset_sum(t + 1, i, a, b) * c ** (t + 1 - i)


def test_lift_monomial():
    assert lift_monomial((0, 0, 0), [[0], [0], [0]]) == HomogPoly.constant(4)
    assert lift_monomial((1, 1, 1), [[0], [0], [0]]).coeffs == {(0, 1, 1, 1): 1}
    x0, x1 = sympy.symbols("x0 x1")
    lifted = lift_monomial((2,), [[0, 1]])
    assert coeff_map(lifted) == sympy_poly_coeffs(x1 * (x1 - x0), [x0, x1])
    with pytest.raises(InvalidParameter):
        lift_monomial((2,), [[1, 1]])
    with pytest.raises(InvalidParameter):
        lift_monomial((3,), [[0, 1]])


def test_lift_monomial_general_constants():
    x0, x1, x2 = sympy.symbols("x0 x1 x2")
    tv = [[Fraction(1, 2), -3, 5], [7, 0]]
    lifted = lift_monomial((3, 2), tv)
    oracle = sympy.prod([x1 - sympy.Rational(v) * x0 for v in tv[0]]) * sympy.prod([x2 - v * x0 for v in tv[1]])
    assert coeff_map(lifted) == sympy_poly_coeffs(oracle, [x0, x1, x2])


def test_lifted_I():
    expected = [x * (x - w), y * (y - w), z * (z - w), x * y * z]
    assert [coeff_map(g) for g in lifted_I(1).generators] == [sympy_poly_coeffs(e, [w, x, y, z]) for e in expected]
    first = lifted_I(2).generators[0]
    assert coeff_map(first) == sympy_poly_coeffs(x * (x - w) * (x - 2 * w), [w, x, y, z])
    f2 = FieldCtx(2)
    first2 = lifted_I(2, f2).generators[0]
    assert first2 == HomogPoly(4, 3, {(0, 3, 0, 0): 1, (1, 2, 0, 0): 1}, f2)


def test_point_set_examples():
    assert len(point_set(1)) == 7
    assert len(point_set(2)) == 19
    with pytest.raises(NotTrueLifting):
        point_set(3, FieldCtx(3))
    assert len(point_set(3, FieldCtx(5))) == 37
    assert point_set(1).to_lines()[1] == "1 : 0 : 0 : 1"


@pytest.mark.parametrize("t", range(1, 11))
def test_point_set_cardinality(t):
    pts = point_set(t)
    assert len(pts) == 3 * t * (t + 1) + 1 == len(set(pts))
    assert all(p[0] == 1 for p in pts)


@pytest.mark.parametrize("t", range(1, 9))
def test_generators_vanish_on_points(t):
    ideal = lifted_I(t)
    for p in point_set(t):
        assert all(g.evaluate(p).is_zero() for g in ideal.generators)


def test_hyperplane_section_examples():
    for t in (1, 2, 3):
        assert hyperplane_section(lifted_I(t), 0).generators == ideal_I(t).generators
    section = hyperplane_section(lifted_I(1), 1)
    assert section.generators[0].coeffs == {(2, 0, 0): 2}
    with pytest.raises(NonArtinianSection):
        hyperplane_section(lifted_I(2), -1)


@pytest.mark.parametrize("t", range(1, 7))
@pytest.mark.parametrize("a", [0, 1, 2, Fraction(1, 3), -3])
def test_section_consistency_and_hilbert_invariance(t, a):
    if in_N(a, t):
        pytest.skip("a in N")
    section = hyperplane_section(lifted_I(t), a)
    j = ideal_J(t, scalar(a))
    base = ideal_I(t)
    for d in range(2 * t + 2):
        assert graded_span_dim(section, d) == graded_span_dim(j, d)
        assert hilbert_function(j, d) == hilbert_function(base, d)
