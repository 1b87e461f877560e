from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from curvesim.arith import (
    GaussianRational as G,
    Poly,
    RatFunc,
    poly_add,
    poly_compose,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_exquo,
    poly_gcd,
    poly_gcd_many,
    poly_mul,
    poly_squarefree_part,
    ratfunc_normalize,
    re_im_split,
    solve_linear,
)
from curvesim.detect import build_delta_nonzero_system
from curvesim.errors import ZeroDenominator

from conftest import shifted_deltoid

x = Poly.x()
I = G(0, 1)

small = st.integers(-20, 20)
fracs = st.fractions(min_value=-50, max_value=50, max_denominator=30)
gauss = st.builds(G, fracs, fracs)
polys = st.lists(small, min_size=0, max_size=7).map(Poly)
nonzero_polys = st.lists(small, min_size=1, max_size=7).filter(lambda c: c[-1] != 0).map(Poly)


def sym(p: Poly):
    t = sp.Symbol("t")
    return sp.Poly(sum(sp.Rational(F(c).numerator, F(c).denominator) * t ** k
                       for k, c in enumerate(p.c)), t, domain="QQ")


# -- fields --------------------------------------------------------------------

@given(gauss, gauss, gauss)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a != 0:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(gauss)
def test_gaussian_norm_identity(a):
    assert a * a.conjugate() == G(a.re ** 2 + a.im ** 2, 0)


@given(fracs, fracs, fracs)
def test_rational_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


# -- gcd -----------------------------------------------------------------------

def test_gcd_shared_root():
    assert poly_gcd(x ** 2 - 1, x - 1) == x - 1


def test_gcd_with_zero_is_monic():
    p = 3 * x ** 2 + 6
    assert poly_gcd(p, Poly()) == x ** 2 + 2
    assert poly_gcd(Poly(), Poly()) == Poly()


def test_gcd_of_deltoid_condition_numerators():
    z1 = shifted_deltoid()
    system = build_delta_nonzero_system(z1, z1)
    b = x
    want = b * (b - 1) * (b ** 2 - 6 * b + 6) * (b ** 2 - 2 * b - 2)
    assert poly_gcd_many(system.condition_numerators) == want
    assert system.P == want


def test_gcd_over_gaussian_rationals():
    p = (x - I) * (x + 2)
    q = (x - I) * (x - 3)
    assert poly_gcd(p, q) == x - I


@settings(max_examples=60)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_divides_and_cofactors_coprime(p, q, h):
    a, b = p * h, q * h
    g = poly_gcd(a, b)
    assert a % g == Poly() and b % g == Poly()
    assert poly_gcd(poly_exquo(a, g), poly_exquo(b, g)) == Poly([1])
    assert sym(g) == sym(a).gcd(sym(b)).monic()


# -- squarefree part -----------------------------------------------------------

def test_squarefree_simple():
    assert poly_squarefree_part((x - 1) ** 2 * (x + 2)) == (x - 1) * (x + 2)
    assert poly_squarefree_part(x ** 2 + 1) == x ** 2 + 1


def test_squarefree_repeated_factors():
    p = x ** 3 * (x ** 2 - 2) ** 2
    got = poly_squarefree_part(p)
    assert got == x * (x ** 2 - 2)
    # independent long division by gcd(p, p')
    sp_p = sym(p)
    quo, rem = sp.div(sp_p, sp_p.gcd(sp_p.diff()))
    assert rem.is_zero and sym(got) == quo.monic()


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        poly_squarefree_part(Poly())


@given(nonzero_polys)
def test_squarefree_matches_sympy(p):
    got = poly_squarefree_part(p)
    assert sym(got) == sym(p).sqf_part().monic()


# -- rational functions --------------------------------------------------------

def test_normalize_cancels():
    r = ratfunc_normalize(x ** 2 - 1, x - 1)
    assert (r.num, r.den) == (x + 1, Poly([1]))


def test_normalize_constant_denominator():
    r = ratfunc_normalize(2 * x, Poly([2]))
    assert (r.num, r.den) == (x, Poly([1]))


def test_normalize_already_reduced():
    den = (x ** 2 + 1) ** 2
    r = ratfunc_normalize(8 * x ** 3, den)
    assert (r.num, r.den) == (8 * x ** 3, den)


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDenominator):
        ratfunc_normalize(x, Poly())


def test_normalize_monic_denominator():
    r = ratfunc_normalize(x, 2 * x ** 2 + 4)
    assert r.den == x ** 2 + 2 and r.num == x.scale(F(1, 2))


# -- real / imaginary split ----------------------------------------------------

def test_split_linear():
    re, im = re_im_split(RatFunc(Poly([0, G(1, 1)])))
    assert re == RatFunc(x) and im == RatFunc(x)


def test_split_conjugate_denominator():
    re, im = re_im_split(RatFunc(Poly([1]), Poly([-I, 1])))
    assert re == RatFunc(x, x ** 2 + 1)
    assert im == RatFunc(Poly([1]), x ** 2 + 1)


def test_split_second_derivative_ratio_of_shifted_deltoid():
    z = shifted_deltoid().complex_ratfunc()
    d1 = z.derivative()
    d2 = d1.derivative()
    f = d2 / (d1 * 2)
    c, d = re_im_split(f)
    assert d != RatFunc(Poly())
    for beta in (F(1, 3), F(-7, 2), F(5)):
        direct = f(beta)
        assert G(c(beta), d(beta)) == direct


@given(st.lists(gauss, min_size=1, max_size=4), st.lists(small, min_size=1, max_size=4))
def test_split_round_trip(num, den):
    den_p = Poly(den)
    if not den_p:
        return
    f = RatFunc(Poly(num), den_p)
    re, im = re_im_split(f)
    back = RatFunc(re.num * im.den + I * im.num * re.den, re.den * im.den)
    assert back == f


# -- ring operations -----------------------------------------------------------

def test_add_and_mul():
    assert poly_add(x + 1, x - 1) == 2 * x
    assert poly_add(x, -x) == Poly()
    assert poly_mul(x + 1, x - 1) == x ** 2 - 1
    assert poly_mul(x, Poly()) == Poly()
    assert poly_mul(Poly([I]), Poly([I])) == Poly([-1])


def test_divmod():
    q, r = poly_divmod(x ** 3 + 2 * x + 5, x ** 2 + 1)
    assert (q, r) == (x, x + 5)
    q, r = poly_divmod(x ** 2, 2 * x)
    assert (q, r) == (x.scale(F(1, 2)), Poly())
    q, r = poly_divmod(Poly([3]), x)
    assert (q, r) == (Poly(), Poly([3]))


def test_derivative():
    assert poly_derivative(x ** 3) == 3 * x ** 2
    assert poly_derivative(Poly([7])) == Poly()
    assert poly_derivative(Poly([G(0, 1), G(2, 0), I])) == Poly([2, 2 * I])


def test_eval_including_extension_elements():
    assert poly_eval(x ** 2 + 1, F(1, 2)) == F(5, 4)
    assert poly_eval(x ** 2 + 1, I) == 0
    # hom maps coefficients into the target ring before Horner
    assert poly_eval(x ** 2, G(1, 1), hom=G.coerce) == G(0, 2)


def test_compose():
    assert poly_compose(x ** 2, x + 1) == x ** 2 + 2 * x + 1
    assert poly_compose(x + 1, x - 1) == x
    assert poly_compose(Poly([5]), x ** 3) == Poly([5])


@settings(max_examples=60)
@given(polys, polys, small)
def test_compose_evaluates_consistently(p, q, v):
    assert poly_eval(poly_compose(p, q), v) == poly_eval(p, poly_eval(q, v))


@given(nonzero_polys, nonzero_polys)
def test_divmod_identity(p, q):
    quo, rem = poly_divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree() < q.degree()


def test_solve_linear():
    assert solve_linear([[1, 2], [3, 4]], [5, 6]) == [F(-4), F(9, 2)]
    assert solve_linear([[1, 2], [2, 4]], [1, 3]) is None
    assert solve_linear([[1, 2], [2, 4]], [1, 2]) == [F(1), F(0)]
