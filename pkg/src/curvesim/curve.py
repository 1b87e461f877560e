"""Rational plane curves z(t) = x(t) + i*y(t) and their input checks."""

from __future__ import annotations

from fractions import Fraction
from math import lcm as ilcm

from .arith import (
    GaussianRational,
    Poly,
    RatFunc,
    poly_exquo,
    poly_gcd,
    poly_squarefree_part,
    re_im_split,
    solve_linear,
)
from .errors import (
    CurveIsCircle,
    CurveIsLine,
    DegenerateInput,
    ImproperParametrization,
    PreconditionViolated,
)
from .moebius import Moebius, moebius_substitute

__all__ = [
    "ParamCurve",
    "validate",
    "is_line",
    "is_circle",
    "is_proper",
    "to_polynomial_if_possible",
    "precondition_shift",
    "precondition",
    "taylor2",
    "shift_sequence",
]

class ParamCurve:
    """Reduced rational parametrization t -> (x(t), y(t)).

    ``num`` and ``den`` hold the complex form z = num/den with Gaussian
    numerator and real monic denominator, coprime.
    """

    __slots__ = ("x", "y", "num", "den")

    def __init__(self, x, y):
        x = x if isinstance(x, RatFunc) else RatFunc(x)
        y = y if isinstance(y, RatFunc) else RatFunc(y)
        self.x, self.y = x, y
        d = _poly_lcm(x.den, y.den)
        nx = x.num * poly_exquo(d, x.den)
        ny = y.num * poly_exquo(d, y.den)
        n = max(len(nx.c), len(ny.c))
        self.num = Poly([GaussianRational(nx.coeff(k), ny.coeff(k)) for k in range(n)])
        self.den = d

    @classmethod
    def from_complex(cls, num: Poly, den: Poly) -> "ParamCurve":
        x, y = re_im_split(RatFunc(num, den))
        return cls(x, y)

    @classmethod
    def from_coeffs(cls, xnum, xden, ynum, yden) -> "ParamCurve":
        """Build from ascending coefficient lists of x and y."""
        f = lambda cs: Poly([Fraction(c) for c in cs])
        return cls(RatFunc(f(xnum), f(xden)), RatFunc(f(ynum), f(yden)))

    # -- basic data -----------------------------------------------------------
    def degree(self) -> int:
        return max(self.num.degree(), self.den.degree())

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def conjugate(self) -> "ParamCurve":
        return ParamCurve(self.x, -self.y)

    def complex_ratfunc(self) -> RatFunc:
        return RatFunc(self.num, self.den, reduced=True)

    def __call__(self, t):
        d = self.den(t)
        if d == 0:
            raise ZeroDivisionError("parameter is a pole of the curve")
        return self.num(t) / d

    def point(self, t: complex | float) -> complex:
        """Floating-point value, for plotting and numeric checks."""
        n = sum(complex(c) * t ** k for k, c in enumerate(self.num.c))
        d = sum(float(c) * t ** k for k, c in enumerate(self.den.c))
        return n / d

    def bitsize(self) -> int:
        """Largest bitsize of the integer coefficients after clearing denominators."""
        best = 0
        for f in (self.x, self.y):
            for p in (f.num, f.den):
                den = 1
                for c in p.c:
                    den = ilcm(den, Fraction(c).denominator)
                for c in p.c:
                    k = abs(Fraction(c) * den)
                    best = max(best, int(k).bit_length() + 1)
        return best

    def __eq__(self, other):
        if not isinstance(other, ParamCurve):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    __hash__ = None

    def __repr__(self):
        return f"ParamCurve(x={self.x.format()}, y={self.y.format()})"


def _poly_lcm(a: Poly, b: Poly) -> Poly:
    g = poly_gcd(a, b)
    return poly_exquo(a * b, g).monic()


def taylor2(num: Poly, den: Poly, at=0):
    """(z(at), z'(at), z''(at)) of z = num/den, or None if ``at`` is a pole."""
    if at != 0:
        shift = Poly((at, 1))
        num, den = num.compose(shift), den.compose(shift)
    d0, d1, d2 = den.coeff(0), den.coeff(1), den.coeff(2)
    if d0 == 0:
        return None
    n0, n1, n2 = num.coeff(0), num.coeff(1), num.coeff(2)
    c0 = n0 / d0 if not isinstance(n0, int) else Fraction(n0) / d0
    c1 = (n1 - c0 * d1) / d0
    c2 = (n2 - c1 * d1 - c0 * d2) / d0
    return c0, c1, 2 * c2


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def _check_nonconstant(z: ParamCurve):
    if z.x.num.degree() <= 0 and z.x.den.degree() == 0 and \
            z.y.num.degree() <= 0 and z.y.den.degree() == 0:
        raise DegenerateInput("the parametrization is constant")


def is_line(z: ParamCurve) -> bool:
    """True when x'y'' - x''y' vanishes identically."""
    x1, y1 = z.x.derivative(), z.y.derivative()
    x2, y2 = x1.derivative(), y1.derivative()
    return not (x1 * y2 - x2 * y1)


def is_circle(z: ParamCurve) -> bool:
    """True when Nr^2 + Ni^2 + D*Nr*W + E*Ni*W + F*W^2 = 0 has a rational solution."""
    nr, ni, w = z.num.real_part(), z.num.imag_part(), z.den
    cols = [nr * w, ni * w, w * w]
    rhs = -(nr * nr + ni * ni)
    n = max(len(p.c) for p in cols + [rhs])
    rows = [[p.coeff(k) for p in cols] for k in range(n)]
    return solve_linear(rows, [rhs.coeff(k) for k in range(n)]) is not None


def _specialized(f: RatFunc, s0) -> Poly:
    """Numerator of f(t) - f(s0) cleared of denominators."""
    return f.num.scale(f.den(s0)) - f.den.scale(f.num(s0))


def is_proper(z: ParamCurve, samples: int = 6) -> bool:
    """Birationality via the gcd of x(t)-x(s) and y(t)-y(s) over Q(s).

    At a rational s0 where the t-degree of the specialized x-equation does
    not drop, the specialized gcd has degree at least the generic one, so
    degree one there proves properness.  Otherwise an exact Euclid over
    Q(s) decides.
    """
    _check_nonconstant(z)
    fx, fy = z.x, z.y
    full_x = max(fx.num.degree(), fx.den.degree())
    full_y = max(fy.num.degree(), fy.den.degree())
    tried = 0
    for s0 in shift_sequence(4 * (samples + full_x + full_y) + 8):
        s0 = Fraction(s0, 3) + Fraction(1, 7)
        if fx.den(s0) == 0 or fy.den(s0) == 0:
            continue
        px, py = _specialized(fx, s0), _specialized(fy, s0)
        if px.degree() < full_x and py.degree() < full_y:
            continue
        g = poly_gcd(px, py)
        if g.degree() == 1:
            return True
        tried += 1
        if tried >= samples:
            break
    return _generic_gcd_degree(z) == 1


def _generic_gcd_degree(z: ParamCurve) -> int:
    def bivariate(f: RatFunc) -> Poly:
        # f.num(t) * f.den(s) - f.num(s) * f.den(t) in Q(s)[t]
        ns, ds = RatFunc(f.num, reduced=True), RatFunc(f.den, reduced=True)
        n = max(len(f.num.c), len(f.den.c))
        return Poly([ds * f.num.coeff(k) - ns * f.den.coeff(k) for k in range(n)])

    g = poly_gcd(bivariate(z.x), bivariate(z.y))
    return g.degree()


def validate(z: ParamCurve) -> ParamCurve:
    _check_nonconstant(z)
    if is_line(z):
        raise CurveIsLine("the parametrization describes a line")
    if is_circle(z):
        raise CurveIsCircle("the parametrization describes a circle")
    if not is_proper(z):
        raise ImproperParametrization("the parametrization is not proper")
    return z


def to_polynomial_if_possible(z: ParamCurve):
    """(polynomial parametrization, Moebius used) or None."""
    d = z.den
    if d.degree() == 0:
        return z, Moebius.identity()
    sq = poly_squarefree_part(d)
    if sq.degree() != 1:
        return None
    r = -sq.coeff(0) / sq.coeff(1)
    mu = Moebius(r, 1, 1, 0)
    n, dd = moebius_substitute(z.num, z.den, mu)
    return ParamCurve.from_complex(n, dd), mu


# ---------------------------------------------------------------------------
# preconditions of the detection algorithms
# ---------------------------------------------------------------------------

def shift_sequence(n: int):
    """0, 1, -1, 2, -2, ... (n terms)."""
    out = [0]
    k = 1
    while len(out) < n:
        out.append(k)
        if len(out) < n:
            out.append(-k)
        k += 1
    return out[:n]


def _pol_ok(num: Poly, den: Poly) -> bool:
    t = taylor2(num, den)
    return t is not None and t[1] != 0 and t[2] != 0


def _gen_ok(num: Poly, den: Poly) -> bool:
    t = taylor2(num, den)
    if t is None or t[1] == 0 or t[2] == 0:
        return False
    if (GaussianRational.coerce(t[2]) / GaussianRational.coerce(t[1])).im == 0:
        return False
    d = max(num.degree(), den.degree())
    inv = Moebius.reciprocal()
    n2, d2 = moebius_substitute(num, den, inv, d)
    return _pol_ok(n2, d2)


def precondition_shift(z: ParamCurve, mode: str = "pol", limit: int = 200):
    """(z(t + c), c) for the first c in 0, 1, -1, ... meeting the mode's conditions.

    Mode ``gen`` also needs conditions at t = infinity, which a shift cannot
    change; if they fail, :class:`PreconditionViolated` is raised and
    :func:`precondition` should be used instead.
    """
    check = _pol_ok if mode == "pol" else _gen_ok
    for c in shift_sequence(limit):
        mu = Moebius(1, c, 0, 1)
        n, d = moebius_substitute(z.num, z.den, mu)
        if check(n, d):
            return ParamCurve.from_complex(n, d), Fraction(c)
    raise PreconditionViolated(f"no shift among the first {limit} candidates works")


def precondition(z: ParamCurve, mode: str = "pol", limit: int = 40):
    """(z o mu, mu) with mu a Moebius map making the mode's conditions hold.

    Shifts t + c are preferred; in mode ``gen`` the fallback is
    mu(t) = (c2*t + c1)/(t + 1), which sends 0 to c1 and infinity to c2.
    """
    check = _pol_ok if mode == "pol" else _gen_ok
    d = z.degree()
    for c in shift_sequence(limit):
        mu = Moebius(1, c, 0, 1)
        n, dd = moebius_substitute(z.num, z.den, mu, d)
        if check(n, dd):
            return ParamCurve.from_complex(n, dd), mu
    if mode == "pol":
        raise PreconditionViolated("no admissible shift found")
    seq = shift_sequence(limit)
    for total in range(1, 2 * limit):
        for i in range(total + 1):
            j = total - i
            if i >= limit or j >= limit:
                continue
            c1, c2 = seq[i], seq[j]
            if c1 == c2:
                continue
            mu = Moebius(c2, c1, 1, 1)
            n, dd = moebius_substitute(z.num, z.den, mu, d)
            if check(n, dd):
                return ParamCurve.from_complex(n, dd), mu
    raise PreconditionViolated("no admissible reparametrization found")
