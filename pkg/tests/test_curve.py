from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvesim.arith import GaussianRational as G, Poly, RatFunc
from curvesim.curve import (
    ParamCurve,
    is_circle,
    is_line,
    is_proper,
    precondition,
    precondition_shift,
    taylor2,
    to_polynomial_if_possible,
    validate,
)
from curvesim.errors import (
    CurveIsCircle,
    CurveIsLine,
    DegenerateInput,
    ImproperParametrization,
)
from curvesim.moebius import Moebius, moebius_apply_curve

from conftest import deltoid

x = Poly.x()
ONE = Poly([1])


def poly_curve(xp: Poly, yp: Poly) -> ParamCurve:
    return ParamCurve(RatFunc(xp), RatFunc(yp))


LINE = poly_curve(x, 2 * x + 1)
CIRCLE = ParamCurve(RatFunc(1 - x ** 2, 1 + x ** 2), RatFunc(2 * x, 1 + x ** 2))
PARABOLA = poly_curve(x, x ** 2)
CUSP = poly_curve(x ** 2, x ** 3)


def test_complex_form():
    z = deltoid()
    assert z.den == (x ** 2 + 1) ** 2
    assert z.num == Poly([G(3), G(0), G(-6), G(0, 8), G(-1)])
    assert z.degree() == 4
    assert z(F(0)) == G(3)


def test_validate_line():
    with pytest.raises(CurveIsLine):
        validate(LINE)


def test_validate_circle():
    with pytest.raises(CurveIsCircle):
        validate(CIRCLE)


def test_validate_deltoid():
    assert validate(deltoid()) is not None


def test_validate_improper():
    with pytest.raises(ImproperParametrization):
        validate(poly_curve(x ** 2, x ** 4 + x ** 2))


def test_validate_constant():
    with pytest.raises(DegenerateInput):
        validate(poly_curve(Poly([3]), Poly([1])))


def test_is_line():
    assert is_line(LINE)
    assert not is_line(CIRCLE)
    assert not is_line(deltoid())
    # a line traced by a rational map
    assert is_line(ParamCurve(RatFunc(x ** 2, x + 1), RatFunc(3 * x ** 2 + x + 1, x + 1)))


def test_is_circle():
    assert is_circle(CIRCLE)
    assert not is_circle(deltoid())
    assert not is_circle(PARABOLA)
    # a shifted, scaled circle
    c = ParamCurve(RatFunc(3 - 3 * x ** 2, 1 + x ** 2) + 5, RatFunc(6 * x, 1 + x ** 2) - 2)
    assert is_circle(c)


def test_is_proper():
    assert is_proper(CUSP)
    assert not is_proper(poly_curve(x ** 2, x ** 4))
    assert is_proper(deltoid())


def test_improper_via_reparametrization():
    # z(t^2 + t) traces the parabola twice
    z = poly_curve(x ** 2 + x, (x ** 2 + x) ** 2)
    assert not is_proper(z)


def test_polynomial_already():
    got = to_polynomial_if_possible(CUSP)
    assert got is not None
    z, mu = got
    assert z == CUSP and mu == Moebius.identity()


def test_polynomial_after_inversion():
    z = ParamCurve(RatFunc(x ** 2 + 1, x ** 2), RatFunc(ONE, x))
    w, mu = to_polynomial_if_possible(z)
    assert w.is_polynomial()
    assert w == moebius_apply_curve(z, mu)
    assert w == poly_curve(1 + x ** 2, x)


def test_polynomial_shifted_pole():
    z = ParamCurve(RatFunc(x, (x - 2) ** 2), RatFunc(ONE, x - 2))
    w, mu = to_polynomial_if_possible(z)
    assert w.is_polynomial()
    assert w == moebius_apply_curve(z, mu)


def test_polynomial_impossible_for_deltoid():
    assert to_polynomial_if_possible(deltoid()) is None


def test_shift_deltoid_pol():
    z, c = precondition_shift(deltoid(), "pol")
    assert c != 0
    t = taylor2(z.num, z.den)
    assert t[1] != 0 and t[2] != 0


def test_shift_parabola_pol():
    z, c = precondition_shift(poly_curve(x, x ** 2), "pol")
    assert c == 0 and z == PARABOLA


def test_shift_quartic():
    z, c = precondition_shift(poly_curve(x ** 3, x ** 4), "pol")
    assert c != 0


def test_precondition_gen_fallback_on_polynomial():
    # at t = oo a polynomial curve cannot satisfy the gen conditions, so a Moebius map is used
    z, mu = precondition(poly_curve(x ** 2, x ** 3), "gen")
    assert not mu.is_affine()
    assert z == moebius_apply_curve(poly_curve(x ** 2, x ** 3), mu)


coef = st.integers(-4, 4)


@settings(max_examples=30, deadline=None)
@given(st.lists(coef, min_size=3, max_size=4), st.lists(coef, min_size=3, max_size=4))
def test_reparametrizations_stay_proper(a, b):
    z = poly_curve(Poly(a), Poly(b))
    if z.degree() < 2 or is_line(z):
        return
    proper = is_proper(z)
    w = moebius_apply_curve(z, Moebius(2, F(1, 3), 1, 5))
    assert is_proper(w) == proper


def test_bitsize():
    z = poly_curve(Poly([7, 0, 1]), Poly([0, 1]))
    assert z.bitsize() == 4
    z = ParamCurve(RatFunc(Poly([F(1, 2), 1])), RatFunc(x ** 2))
    assert z.bitsize() == 3
