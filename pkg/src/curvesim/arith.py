"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`.  On top of them this module
provides Gaussian rationals, dense univariate polynomials over any exact
coefficient field (rationals, Gaussian rationals, rational functions, or the
number-field elements of :mod:`curvesim.realroots`) and reduced rational
functions.

Polynomials with rational coefficients are routed through integer
algorithms: products of long integer polynomials use Kronecker
substitution, and GCDs use the heuristic GCD (evaluation at a large
integer) with a primitive polynomial remainder sequence as fallback.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd, isqrt, lcm as ilcm
from typing import Iterable, Sequence

from .errors import ZeroDenominator

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "Poly",
    "RatFunc",
    "poly_add",
    "poly_mul",
    "poly_divmod",
    "poly_derivative",
    "poly_eval",
    "poly_compose",
    "poly_gcd",
    "poly_gcd_many",
    "poly_exquo",
    "poly_squarefree_part",
    "ratfunc_normalize",
    "re_im_split",
    "solve_linear",
]


def _fdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _is_rational(c) -> bool:
    return isinstance(c, (int, Fraction))


# ---------------------------------------------------------------------------
# integer polynomials as ascending lists of Python ints
# ---------------------------------------------------------------------------

_KRONECKER_CUTOFF = 12


def _zz_strip(f: list) -> list:
    while f and not f[-1]:
        f.pop()
    return f


def _zz_content(f: Sequence[int]) -> int:
    return reduce(igcd, f, 0)


def _zz_primitive(f: Sequence[int]) -> list:
    """Primitive part with positive leading coefficient."""
    if not f:
        return []
    c = _zz_content(f)
    if f[-1] < 0:
        c = -c
    if c == 1:
        return list(f)
    return [x // c for x in f]


def _zz_eval(f: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _zz_mul(f: Sequence[int], g: Sequence[int]) -> list:
    if not f or not g:
        return []
    n, m = len(f), len(g)
    if min(n, m) < _KRONECKER_CUTOFF:
        res = [0] * (n + m - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    res[i + j] += a * b
        return _zz_strip(res)
    bits = (max(map(abs, f)).bit_length() + max(map(abs, g)).bit_length()
            + min(n, m).bit_length() + 2)
    kb = (bits + 7) // 8
    k = 8 * kb
    F = 0
    for c in reversed(f):
        F = (F << k) + c
    G = 0
    for c in reversed(g):
        G = (G << k) + c
    N = n + m - 1
    half = 1 << (k - 1)
    offset = int.from_bytes((b"\x00" * (kb - 1) + b"\x80") * N, "little")
    raw = (F * G + offset).to_bytes(N * kb, "little")
    res = [int.from_bytes(raw[i * kb:(i + 1) * kb], "little") - half
           for i in range(N)]
    return _zz_strip(res)


def _zz_prem(f: Sequence[int], g: Sequence[int]) -> list:
    """Pseudo-remainder: lc(g)**(deg f - deg g + 1) * f mod g."""
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return list(f)
    r = list(f)
    lc = g[-1]
    steps = df - dg + 1
    while len(r) - 1 >= dg and r:
        d = len(r) - 1 - dg
        c = r[-1]
        r = [x * lc for x in r]
        for i, gi in enumerate(g):
            r[i + d] -= c * gi
        r.pop()
        _zz_strip(r)
        steps -= 1
    if steps > 0:
        s = lc ** steps
        r = [x * s for x in r]
    return r


def _zz_divexact(f: Sequence[int], g: Sequence[int]):
    """Quotient q with f == q*g over the integers, or None."""
    if not f:
        return []
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return None
    g2 = _zz_eval(g, 2)
    if g2 and _zz_eval(f, 2) % g2:
        return None
    r = list(f)
    lc = g[-1]
    q = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        c = r[k + dg]
        if c:
            qk, rem = divmod(c, lc)
            if rem:
                return None
            q[k] = qk
            for i in range(dg + 1):
                r[k + i] -= qk * g[i]
    if any(r[:dg]):
        return None
    return q


def _zz_prs_gcd(f: Sequence[int], g: Sequence[int]) -> list:
    f, g = _zz_primitive(f), _zz_primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _zz_prem(f, g)
        f, g = g, _zz_primitive(r)
    return f


def _zz_interpolate(h: int, x: int) -> list:
    out = []
    half = x // 2
    while h:
        g = h % x
        if g > half:
            g -= x
        out.append(g)
        h = (h - g) // x
    return out


def _zz_heu_gcd(f: Sequence[int], g: Sequence[int]):
    """Heuristic GCD of primitive integer polynomials; None if unlucky."""
    fn = max(map(abs, f))
    gn = max(map(abs, g))
    B = 2 * min(fn, gn) + 29
    x = max(min(B, 99 * isqrt(B)),
            2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
        ff, gg = _zz_eval(f, x), _zz_eval(g, x)
        if ff and gg:
            h = igcd(ff, gg)
            cand = _zz_primitive(_zz_interpolate(h, x))
            if cand and _zz_divexact(f, cand) is not None \
                    and _zz_divexact(g, cand) is not None:
                return cand
            cff = _zz_interpolate(ff // h, x)
            if cff:
                cand = _zz_divexact(f, cff)
                if cand and _zz_divexact(g, cand) is not None:
                    return _zz_primitive(cand)
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _zz_gcd(f: Sequence[int], g: Sequence[int]) -> list:
    """Primitive GCD (positive leading coefficient) of integer polynomials."""
    if not f:
        return _zz_primitive(g)
    if not g:
        return _zz_primitive(f)
    f, g = _zz_primitive(f), _zz_primitive(g)
    if len(f) == 1 or len(g) == 1:
        return [1]
    h = _zz_heu_gcd(f, g)
    if h is None:
        h = _zz_prs_gcd(f, g)
    return h


def _to_zz(coeffs: Sequence) -> tuple[Fraction, list]:
    """Split rational coefficients into (content, primitive integer list)."""
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = ilcm(den, c.denominator)
    ints = [c * den if isinstance(c, int) else c.numerator * (den // c.denominator)
            for c in coeffs]
    cont = _zz_content(ints)
    if ints and ints[-1] < 0:
        cont = -cont
    if cont == 0:
        return Fraction(0), []
    return Fraction(cont, den), [x // cont for x in ints]


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return GaussianRational(Fraction(x.real), Fraction(x.imag))
        return GaussianRational(x)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if _is_rational(other):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if _is_rational(other):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if _is_rational(other):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re * other.re - self.im * other.im,
                                    self.re * other.im + self.im * other.re)
        if _is_rational(other):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        if _is_rational(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_rational(other):
            return GaussianRational(other) * self.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if _is_rational(other):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return self.re == other.real and self.im == other.imag
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"{self.re}"
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}*i)"


# ---------------------------------------------------------------------------
# dense univariate polynomials
# ---------------------------------------------------------------------------

def _all_int(coeffs) -> bool:
    for c in coeffs:
        if type(c) is not int:
            return False
    return True


class Poly:
    """Dense univariate polynomial; ``c[k]`` is the coefficient of x**k.

    Coefficients may be ints/Fractions, :class:`GaussianRational`,
    :class:`RatFunc` or any other exact field element supporting the
    arithmetic operators.  The zero polynomial has ``degree() == -1``.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, a) -> "Poly":
        return cls((a,))

    @classmethod
    def from_roots(cls, roots) -> "Poly":
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    def degree(self) -> int:
        return len(self.c) - 1

    def lc(self):
        return self.c[-1] if self.c else 0

    def coeff(self, k: int):
        return self.c[k] if 0 <= k < len(self.c) else 0

    def __bool__(self):
        return bool(self.c)

    def is_rational(self) -> bool:
        return all(_is_rational(c) for c in self.c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        if len(self.c) == 0:
            return other == 0
        return len(self.c) == 1 and self.c[0] == other

    def __hash__(self):
        return hash(self.c)

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.c])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return Poly((other,)) - self

    def scale(self, k) -> "Poly":
        if k == 0:
            return Poly()
        return Poly([x * k for x in self.c])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        f, g = self.c, other.c
        if not f or not g:
            return Poly()
        if _all_int(f) and _all_int(g):
            return Poly(_zz_mul(f, g))
        res = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a == 0:
                continue
            for j, b in enumerate(g):
                res[i + j] = res[i + j] + a * b
        return Poly(res)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division over the coefficient field."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        g = other.c
        dg = len(g) - 1
        r = list(self.c)
        dq = len(r) - 1 - dg
        if dq < 0:
            return Poly(), self
        lc = g[-1]
        q = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = _fdiv(r[k + dg], lc)
            q[k] = c
            if c != 0:
                for i in range(dg):
                    r[k + i] = r[k + i] - c * g[i]
        return Poly(q), Poly(r[:dg])

    def __floordiv__(self, other):
        if not isinstance(other, Poly):
            return self.scale(_fdiv(1, other))
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return RatFunc(self, other)
        return self.scale(_fdiv(1, other))

    def monic(self) -> "Poly":
        if not self.c:
            return self
        lc = self.c[-1]
        if lc == 1:
            return self
        inv = _fdiv(1, lc)
        return Poly([x * inv for x in self.c])

    def derivative(self) -> "Poly":
        return Poly([k * self.c[k] for k in range(1, len(self.c))])

    def __call__(self, x, hom=None):
        """Horner evaluation; ``hom`` maps coefficients into x's ring."""
        acc = 0
        for c in reversed(self.c):
            acc = acc * x + (hom(c) if hom is not None else c)
        return acc

    def compose(self, q: "Poly") -> "Poly":
        """The polynomial self(q(x))."""
        acc = Poly()
        for c in reversed(self.c):
            acc = acc * q + c
        return acc

    def map(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.c])

    def conjugate(self) -> "Poly":
        return Poly([c.conjugate() if isinstance(c, GaussianRational) else c
                     for c in self.c])

    def real_part(self) -> "Poly":
        return Poly([c.re if isinstance(c, GaussianRational) else c for c in self.c])

    def imag_part(self) -> "Poly":
        return Poly([c.im if isinstance(c, GaussianRational) else 0 for c in self.c])

    def homogenize_at(self, u: "Poly", v: "Poly", degree: int | None = None) -> "Poly":
        """Sum of c_k u^k v^(n-k), i.e. v^n * self(u/v) with n = ``degree``."""
        n = self.degree() if degree is None else degree
        if not self.c:
            return Poly()
        upow = [Poly((1,))]
        for _ in range(len(self.c) - 1):
            upow.append(upow[-1] * u)
        vpow = [Poly((1,))]
        for _ in range(n):
            vpow.append(vpow[-1] * v)
        acc = Poly()
        for k, c in enumerate(self.c):
            if c != 0:
                acc = acc + (upow[k] * vpow[n - k]).scale(c)
        return acc

    def primitive(self) -> tuple[Fraction, "Poly"]:
        """(content, primitive integer polynomial) for rational coefficients."""
        cont, ints = _to_zz(self.c)
        return cont, Poly(ints)

    def format(self, var: str = "t") -> str:
        if not self.c:
            return "0"
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if a == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if _is_rational(a):
                sign = "-" if a < 0 else "+"
                mag = abs(a)
                body = str(mag) if (mag != 1 or not mono) else ""
                sep = "*" if body and mono else ""
                terms.append((sign, f"{body}{sep}{mono}"))
            else:
                sep = "*" if mono else ""
                terms.append(("+", f"({a!r}){sep}{mono}"))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self.format('x')})"


# -- functional aliases ------------------------------------------------------

def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    return p.divmod(q)


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_eval(p: Poly, x, hom=None):
    return p(x, hom)


def poly_compose(p: Poly, q: Poly) -> Poly:
    return p.compose(q)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    if p.is_rational() and q.is_rational():
        h = _zz_gcd(_to_zz(p.c)[1], _to_zz(q.c)[1])
        return Poly(h).monic() if len(h) > 1 else Poly((1,))
    a, b = p.monic(), q.monic()
    if a.degree() < b.degree():
        a, b = b, a
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def poly_gcd_many(polys: Iterable[Poly]) -> Poly:
    """GCD of a family of polynomials, smallest degrees first."""
    ps = sorted((p for p in polys if p), key=Poly.degree)
    if not ps:
        return Poly()
    g = ps[0].monic()
    for p in ps[1:]:
        if g.degree() == 0:
            break
        g = poly_gcd(g, p)
    return g


def poly_exquo(p: Poly, q: Poly) -> Poly:
    """Exact quotient p / q; raises ArithmeticError if q does not divide p."""
    if p.is_rational() and q.is_rational():
        cp, ip = _to_zz(p.c)
        cq, iq = _to_zz(q.c)
        if not ip:
            return Poly()
        quo = _zz_divexact(ip, iq)
        if quo is None:
            raise ArithmeticError("inexact polynomial division")
        k = cp / cq
        return Poly([k * x for x in quo])
    quo, rem = p.divmod(q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quo


def poly_squarefree_part(p: Poly) -> Poly:
    """Monic polynomial with the roots of p, each simple."""
    if not p:
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree() == 0:
        return Poly((1,))
    g = poly_gcd(p, p.derivative())
    return poly_exquo(p, g).monic()


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly((x,))


class RatFunc:
    """Reduced quotient num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        num = _as_poly(num)
        den = Poly((1,)) if den is None else _as_poly(den)
        if not den:
            raise ZeroDenominator("rational function with zero denominator")
        if not num:
            self.num, self.den = Poly(), Poly((1,))
            return
        if not reduced and den.degree() > 0:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = poly_exquo(num, g)
                den = poly_exquo(den, g)
        lc = den.lc()
        if lc != 1:
            inv = _fdiv(1, lc)
            num = num.scale(inv)
            den = den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(Poly.x(), reduced=True)

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self.den.degree() == 0 and self.num == other
        return self.den.degree() == 0 and self.num == other

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other, reduced=True)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.den.degree() == 0:
            return RatFunc(self.num * other.den + other.num, other.den, reduced=True)
        if other.den.degree() == 0:
            return RatFunc(self.num + other.num * self.den, self.den, reduced=True)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other, reduced=True)
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc(other, reduced=True) - self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, Poly):
                other = RatFunc(other, reduced=True)
            else:
                if other == 0:
                    return RatFunc(Poly())
                return RatFunc(self.num.scale(other), self.den, reduced=True)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not n1 or not n2:
            return RatFunc(Poly())
        g = poly_gcd(n1, d2)
        if g.degree() > 0:
            n1, d2 = poly_exquo(n1, g), poly_exquo(d2, g)
        g = poly_gcd(n2, d1)
        if g.degree() > 0:
            n2, d1 = poly_exquo(n2, g), poly_exquo(d1, g)
        return RatFunc(n1 * n2, d1 * d2, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other, reduced=True)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc(other, reduced=True) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, reduced=True)

    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x, hom=None):
        d = self.den(x, hom)
        if d == 0:
            raise ZeroDenominator("evaluation at a pole")
        return _fdiv(self.num(x, hom), d)

    def defined_at(self, x) -> bool:
        return self.den(x) != 0

    def conjugate(self) -> "RatFunc":
        return RatFunc(self.num.conjugate(), self.den.conjugate(), reduced=True)

    def format(self, var: str = "t") -> str:
        if self.den.degree() == 0:
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __repr__(self):
        return f"RatFunc({self.format('x')})"


def ratfunc_normalize(num: Poly, den: Poly) -> RatFunc:
    """Reduced form of num/den with monic denominator."""
    return RatFunc(num, den)


def re_im_split(f: RatFunc) -> tuple[RatFunc, RatFunc]:
    """Real and imaginary parts of a Gaussian-rational function of a real variable."""
    den = f.den
    num = f.num
    if any(isinstance(c, GaussianRational) and c.im != 0 for c in den.c):
        cd = den.conjugate()
        num = num * cd
        den = den * cd
    real_den = den.real_part()
    return (RatFunc(num.real_part(), real_den), RatFunc(num.imag_part(), real_den))


# ---------------------------------------------------------------------------
# small exact linear algebra
# ---------------------------------------------------------------------------

def solve_linear(rows: Sequence[Sequence], rhs: Sequence):
    """One solution of the rational system rows * x = rhs, or None.

    Free variables are set to zero.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x
