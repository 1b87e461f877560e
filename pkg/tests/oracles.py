"""Reference computations used to check curvesim, built on sympy/numpy/scipy.

Nothing here calls the package's own polynomial or root-isolation code,
so the checks are independent of the implementation under test.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import sympy as sp
from scipy.optimize import brentq

from curvesim.realroots import AlgElem

T, TH = sp.symbols("t theta", real=True)


# ---------------------------------------------------------------------------
# conversions
# ---------------------------------------------------------------------------

def q(x) -> sp.Rational:
    x = Fraction(x)
    return sp.Rational(x.numerator, x.denominator)


def gauss(c) -> sp.Expr:
    return q(c.re) + sp.I * q(c.im)


def real_elem(x) -> sp.Expr:
    """A real field element as a polynomial expression in theta."""
    if isinstance(x, AlgElem):
        return sum(q(c) * TH ** k for k, c in enumerate(x.poly.c))
    return q(x)


def complex_elem(z) -> sp.Expr:
    return real_elem(z.re) + sp.I * real_elem(z.im)


def curve_expr(z):
    """(numerator, denominator) of the complex form as sympy polynomials in t."""
    num = sum(gauss(c) * T ** k for k, c in enumerate(z.num.c))
    den = sum(q(c) * T ** k for k, c in enumerate(z.den.c))
    return num, den


def curve_function(z) -> sp.Expr:
    num, den = curve_expr(z)
    return num / den


# ---------------------------------------------------------------------------
# exact re-verification of a witness
# ---------------------------------------------------------------------------

def _field_modulus(beta) -> sp.Poly | None:
    """Irreducible factor of beta's polynomial vanishing at beta (None if rational)."""
    if beta.is_rational():
        return None
    f = sp.Poly(sum(q(c) * TH ** k for k, c in enumerate(beta.minpoly.c)), TH)
    iv = beta.interval
    lo, hi = q(iv.lo), q(iv.hi)
    found = [g for g, _ in f.factor_list()[1] if g.count_roots(lo, hi) > 0]
    assert len(found) == 1, "isolating interval does not pin a single factor"
    return found[0]


def witness_is_sound(z1, z2, w) -> bool:
    """z2(phi(t)) * D1 == D2(phi(t)) * (a * N1~ + b * D1) modulo the field of beta."""
    n1, d1 = curve_expr(z1)
    if not w.similarity.preserving:
        n1 = sp.conjugate(n1)
    n2, d2 = curve_expr(z2)
    phi = w.moebius
    al, be, ga, de = (real_elem(v) for v in (phi.alpha, phi.beta, phi.gamma, phi.delta))
    deg = max(sp.degree(n2, T), sp.degree(d2, T))
    u, v = al * T + be, ga * T + de

    def hom(p):
        p = sp.Poly(p, T)
        return sum(c * u ** k * v ** (deg - k) for (k,), c in p.terms())

    a = complex_elem(w.similarity.a)
    b = complex_elem(w.similarity.b)
    expr = sp.expand(hom(n2) * d1 - hom(d2) * (a * n1 + b * d1))
    if expr == 0:
        return True
    m = _field_modulus(w.beta)
    if m is None:
        return sp.expand(expr.subs(TH, q(w.beta.value))) == 0
    poly = sp.Poly(expr, T, TH, domain="QQ_I")
    mod = sp.Poly(m.as_expr(), TH, domain="QQ_I")
    by_t: dict[int, sp.Expr] = {}
    for (kt, kth), c in poly.terms():
        by_t[kt] = by_t.get(kt, 0) + c * TH ** kth
    return all(sp.Poly(c, TH, domain="QQ_I").rem(mod).is_zero for c in by_t.values())


# ---------------------------------------------------------------------------
# numeric isometry search
# ---------------------------------------------------------------------------

class _Numeric:
    def __init__(self, z):
        f = curve_function(z)
        f1 = sp.diff(f, T)
        f2 = sp.diff(f1, T)
        self.f = sp.lambdify(T, f, "numpy")
        self.f1 = sp.lambdify(T, f1, "numpy")
        self.f2 = sp.lambdify(T, f2, "numpy")

    def z(self, t):
        return complex(self.f(t))

    def kappa(self, t):
        d1, d2 = complex(self.f1(t)), complex(self.f2(t))
        s = abs(d1)
        if s < 1e-12:
            return math.copysign(1e12, (d1.conjugate() * d2).imag or 1.0)
        return (d1.conjugate() * d2).imag / s ** 3


def _curvature_roots(num: _Numeric, target: float, us: np.ndarray) -> list[float]:
    vals = [num.kappa(math.tan(u)) - target for u in us]
    out = []
    for k in range(len(us) - 1):
        a, b = vals[k], vals[k + 1]
        if a == 0:
            out.append(math.tan(us[k]))
        elif a * b < 0:
            u = brentq(lambda x: num.kappa(math.tan(x)) - target, us[k], us[k + 1], xtol=1e-15)
            s = math.tan(u)
            if abs(num.kappa(s) - target) < 1e-6 * (1 + abs(target)):
                out.append(s)
    return out


def _distance_to_curve(num: _Numeric, w: complex, us: np.ndarray, pts: np.ndarray) -> float:
    dist = np.abs(pts - w)
    near = np.argpartition(dist, 8)[:8]

    def h(u):
        t = math.tan(u)
        # derivative in u keeps h continuous through t = infinity
        return ((num.z(t) - w).conjugate() * complex(num.f1(t)) * (1 + t * t)).real

    best = float(dist[near].min())
    n = len(us)

    def at(k):
        # tan has period pi, so the grid is cyclic through t = infinity
        return us[k % n] + math.pi * (k // n)

    for i in near:
        for r in (1, 3):
            a, b = at(i - r), at(i + r)
            try:
                if h(a) * h(b) < 0:
                    u = brentq(h, a, b, xtol=1e-16, rtol=4 * np.finfo(float).eps)
                    best = min(best, abs(num.z(math.tan(u)) - w))
                    break
            except (ValueError, ZeroDivisionError, RuntimeError):
                continue
    return best


def numeric_isometries(z, base=(0.3719, -1.2345, 2.718), grid: int = 6000,
                       checks: int = 25, tol: float = 1e-9):
    """Isometries g with g(C) = C, found from curvature matching and point tests.

    Candidates map the point at each base parameter to a point of equal
    (or opposite) signed curvature.  Returns (preserving, a, b) triples.
    """
    num = _Numeric(z)
    eps = 1e-9
    us = np.linspace(-math.pi / 2 + eps, math.pi / 2 - eps, grid)
    dense = np.linspace(-math.pi / 2 + eps, math.pi / 2 - eps, 40 * grid)
    pts = np.array([num.z(math.tan(u)) for u in dense])
    found: list = []
    for t0 in base:
        _search(num, t0, us, dense, pts, checks, tol, found)
    return found


def _search(num, t0, us, dense, pts, checks, tol, found):
    p0, d0 = num.z(t0), complex(num.f1(t0))
    e0 = d0 / abs(d0)
    k0 = num.kappa(t0)
    cands = []
    for sign in (1, -1):
        for s in _curvature_roots(num, sign * k0, us):
            qpt, d1 = num.z(s), complex(num.f1(s))
            e1 = d1 / abs(d1)
            if sign == 1:
                cands.append((True, e1 / e0))
                cands.append((False, -e1 / e0.conjugate()))
            else:
                cands.append((True, -e1 / e0))
                cands.append((False, e1 / e0.conjugate()))
            cands[-2] = (*cands[-2], qpt)
            cands[-1] = (*cands[-1], qpt)
    sample_ts = [math.tan(u) for u in np.linspace(-1.4, 1.4, checks)]
    for pres, a, qpt in cands:
        b = qpt - a * (p0 if pres else p0.conjugate())
        ok = True
        for t in sample_ts:
            p = num.z(t)
            if not (abs(p) < 1e3):
                continue
            w = a * (p if pres else p.conjugate()) + b
            if _distance_to_curve(num, w, dense, pts) > tol * (1 + abs(w)):
                ok = False
                break
        if ok and not any(f[0] == pres and abs(f[1] - a) < 1e-6 and abs(f[2] - b) < 1e-6
                          for f in found):
            found.append((pres, a, b))


# ---------------------------------------------------------------------------
# real roots by exact signs on a grid
# ---------------------------------------------------------------------------

def _sign_at(coeffs, x: Fraction) -> int:
    v = Fraction(0)
    for c in reversed(coeffs):
        v = v * x + c
    return (v > 0) - (v < 0)


def sign_grid_count(coeffs, lo=None, hi=None, grid: int = 400) -> int:
    """Distinct real roots of a squarefree polynomial from exact signs on a grid.

    The grid contains a uniform mesh, the ends of a root bound and rational
    approximations of all real critical points, so every pair of consecutive
    roots is separated by a grid point.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    lc = coeffs[-1]
    bound = 1 + max(abs(c / lc) for c in coeffs[:-1]) if len(coeffs) > 1 else Fraction(1)
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    pts = {lo, hi}
    pts.update(lo + (hi - lo) * k / grid for k in range(grid + 1))
    deriv = [k * c for k, c in enumerate(coeffs)][1:]
    if len(deriv) > 1:
        for r in np.roots([float(c) for c in reversed(deriv)]):
            if abs(r.imag) < 1e-7 and lo < r.real < hi:
                pts.add(Fraction(r.real).limit_denominator(10 ** 12))
    xs = sorted(pts)
    count, prev = 0, 0
    for x in xs:
        s = _sign_at(coeffs, x)
        if s == 0:
            count += 1
            prev = 0
            continue
        if prev and s != prev:
            count += 1
        if s:
            prev = s
    return count
