"""Real roots, real algebraic numbers and arithmetic in Q(theta).

Root counting uses Sturm sequences over the integers.  An
:class:`AlgebraicReal` is a squarefree integer polynomial together with an
open isolating interval on whose ends the polynomial changes sign.  The
polynomial is not required to be irreducible: whenever a computation
discovers a proper factor, the number is re-pinned to whichever factor
vanishes on the interval, so zero tests in ``Q(theta)`` stay exact without
ever factoring over Q.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

from .arith import (
    GaussianRational,
    Poly,
    RatFunc,
    _to_zz,
    _zz_content,
    _zz_divexact,
    _zz_gcd,
    _zz_prem,
    _zz_primitive,
    poly_gcd,
    poly_squarefree_part,
)
from .errors import IncompatibleExtensions
from .moebius import ParamInterval

__all__ = [
    "SturmSequence",
    "sturm_sequence",
    "count_real_roots",
    "isolate_real_roots",
    "AlgebraicReal",
    "AlgElem",
    "AlgComplex",
    "refine",
    "reduce_mod_minpoly",
    "sign_at",
    "evaluate_at",
    "charpoly",
    "to_algebraic_real",
    "real_sqrt",
]


# ---------------------------------------------------------------------------
# integer polynomial evaluation helpers
# ---------------------------------------------------------------------------

def _hom_eval(f, x: Fraction) -> int:
    """Integer with the sign of f(x): den(x)**deg(f) * f(x)."""
    if not f:
        return 0
    u, v = x.numerator, x.denominator
    acc = f[-1]
    vp = 1
    for c in reversed(f[:-1]):
        vp *= v
        acc = acc * u + c * vp
    return acc


def _sgn(n) -> int:
    return (n > 0) - (n < 0)


def _sign_inf(f, positive: bool) -> int:
    s = _sgn(f[-1])
    if not positive and (len(f) - 1) % 2:
        s = -s
    return s


def _cauchy_bound(f) -> Fraction:
    """Power of two strictly exceeding the modulus of every root."""
    lc = abs(f[-1])
    m = max((abs(c) for c in f[:-1]), default=0)
    bound = 1 + Fraction(m, lc)
    k = 1
    while k <= bound:
        k *= 2
    return Fraction(k)


def _squarefree_zz(p: Poly) -> list:
    if not p:
        raise ValueError("the zero polynomial has no finite root set")
    sq = poly_squarefree_part(p)
    return _to_zz(sq.c)[1]


def _interval_horner(coeffs, lo: Fraction, hi: Fraction):
    """Enclosure [a, b] of the polynomial's range over [lo, hi]."""
    a = b = Fraction(0)
    for c in reversed(coeffs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a = min(prods) + c
        b = max(prods) + c
    return a, b


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------

class SturmSequence:
    """Negated-remainder chain of a squarefree integer polynomial."""

    __slots__ = ("polys",)

    def __init__(self, polys):
        self.polys = tuple(polys)

    def variations(self, x) -> int:
        """Sign variations at x; x may be None, '+inf' or '-inf'."""
        if x == "+inf" or x == "-inf":
            signs = [_sign_inf(f, x == "+inf") for f in self.polys]
        else:
            x = Fraction(x)
            signs = [_sgn(_hom_eval(f, x)) for f in self.polys]
        v, prev = 0, 0
        for s in signs:
            if s:
                if prev and s != prev:
                    v += 1
                prev = s
        return v

    def as_polys(self) -> list[Poly]:
        return [Poly(f) for f in self.polys]


def _sturm_zz(f) -> SturmSequence:
    f0 = _zz_primitive(f)
    seq = [f0]
    if len(f0) > 1:
        seq.append(_zz_primitive([k * f0[k] for k in range(1, len(f0))]))
    while len(seq[-1]) > 1:
        a, b = seq[-2], seq[-1]
        r = _zz_prem(a, b)
        if not r:
            break
        # -rem(a, b) up to the positive factor |lc(b)|**(deg a - deg b + 1)
        if not (b[-1] < 0 and (len(a) - len(b) + 1) % 2):
            r = [-x for x in r]
        cont = abs(_zz_content(r))
        seq.append([x // cont for x in r])
    return SturmSequence(seq)


def sturm_sequence(p: Poly) -> SturmSequence:
    """Sturm chain p, p', -rem, ... of p, rescaled by positive constants only."""
    if not p:
        raise ValueError("Sturm sequence of the zero polynomial")
    return _sturm_zz(_to_zz(p.c)[1])


def _variations_at(seq: SturmSequence, end, upper: bool) -> int:
    if end is None:
        return seq.variations("+inf" if upper else "-inf")
    return seq.variations(end)


def count_real_roots(p: Poly, interval: ParamInterval | None = None) -> int:
    """Number of distinct real roots of p in the closed interval."""
    f = _squarefree_zz(p)
    if len(f) == 1:
        return 0
    interval = interval or ParamInterval.real_line()
    seq = _sturm_zz(f)
    n = _variations_at(seq, interval.lo, False) - _variations_at(seq, interval.hi, True)
    if interval.lo is not None and _hom_eval(f, Fraction(interval.lo)) == 0:
        n += 1
    return n


# ---------------------------------------------------------------------------
# algebraic reals
# ---------------------------------------------------------------------------

@total_ordering
class AlgebraicReal:
    """A real root of a squarefree integer polynomial, pinned by an interval.

    Irrational roots satisfy ``poly(lo) * poly(hi) < 0`` with the root the
    only one in ``(lo, hi)``.  Rational roots are stored exactly with the
    primitive linear polynomial as ``poly`` and ``lo == hi``.  Tightening the
    interval or the polynomial is a cache update, never a change of value.
    """

    __slots__ = ("_poly", "_lo", "_hi", "_exact")

    def __init__(self, poly, lo: Fraction, hi: Fraction, exact: Fraction | None = None):
        self._poly = list(poly)
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        self._exact = exact

    @classmethod
    def from_rational(cls, r) -> "AlgebraicReal":
        r = Fraction(r)
        return cls([-r.numerator, r.denominator], r, r, exact=r)

    # -- accessors ----------------------------------------------------------
    def is_rational(self) -> bool:
        return self._exact is not None

    @property
    def value(self) -> Fraction | None:
        return self._exact

    @property
    def minpoly(self) -> Poly:
        return Poly(self._poly)

    @property
    def interval(self) -> ParamInterval:
        return ParamInterval(self._lo, self._hi)

    def degree(self) -> int:
        return len(self._poly) - 1

    # -- refinement ---------------------------------------------------------
    def _set_rational(self, r: Fraction):
        self._exact = r
        self._poly = [-r.numerator, r.denominator]
        self._lo = self._hi = r

    def _bisect(self):
        f = self._poly
        m = (self._lo + self._hi) / 2
        sm = _sgn(_hom_eval(f, m))
        if sm == 0:
            self._set_rational(m)
            return
        if sm == _sgn(_hom_eval(f, self._lo)):
            self._lo = m
        else:
            self._hi = m

    def _newton_step(self) -> bool:
        """Try to shrink the interval quadratically; False if the step fails."""
        f = self._poly
        lo, hi = self._lo, self._hi
        w = hi - lo
        m = (lo + hi) / 2
        fm = _hom_eval(f, m)
        if fm == 0:
            self._set_rational(m)
            return True
        df = [k * f[k] for k in range(1, len(f))]
        dm = _hom_eval(df, m)
        if dm == 0:
            return False
        # both evaluations share the factor den(m)**(n-1) up to one den(m)
        x = m - Fraction(fm, dm * m.denominator)
        eps = max(w * w, Fraction(1, 1 << 4096))
        k = max(1, eps.denominator.bit_length() - eps.numerator.bit_length())
        grid = Fraction(1, 1 << k)
        xa = Fraction(((x - lo) / grid).__floor__()) * grid + lo
        a, b = xa - grid, xa + 2 * grid
        if a <= lo or b >= hi:
            return False
        sa, sb = _sgn(_hom_eval(f, a)), _sgn(_hom_eval(f, b))
        if sa == 0:
            self._set_rational(a)
            return True
        if sb == 0:
            self._set_rational(b)
            return True
        if sa == sb:
            return False
        self._lo, self._hi = a, b
        return True

    def _tighten_to(self, width: Fraction):
        width = Fraction(width)
        while self._exact is None and self._hi - self._lo > width:
            if len(self._poly) > 2 and not self._newton_step():
                self._bisect()
            elif len(self._poly) <= 2:
                self._bisect()

    def refine(self, width) -> ParamInterval:
        """Sub-interval of width at most ``width`` that still pins the root."""
        if Fraction(width) <= 0:
            raise ValueError("refinement width must be positive")
        self._tighten_to(width)
        return self.interval

    def refined(self, width) -> "AlgebraicReal":
        iv = self.refine(width)
        out = AlgebraicReal(self._poly, iv.lo, iv.hi, self._exact)
        return out

    def _repin(self, g: list):
        """Replace the polynomial by a factor g that keeps the root."""
        g = _zz_primitive(g)
        self._poly = g
        if len(g) == 2:
            self._set_rational(Fraction(-g[0], g[1]))

    def split_with(self, g: list) -> bool:
        """Given a factor g of the polynomial, re-pin to g or its cofactor.

        Returns True when the root is a root of g.
        """
        if self._exact is not None:
            return _hom_eval(g, self._exact) == 0
        g = _zz_primitive(g)
        if len(g) <= 1:
            return False
        if len(g) == len(self._poly):
            return True
        has = _sgn(_hom_eval(g, self._lo)) * _sgn(_hom_eval(g, self._hi)) < 0
        if has:
            self._repin(g)
        else:
            co = _zz_divexact(self._poly, g)
            if co is not None:
                self._repin(co)
        return has

    def __neg__(self) -> "AlgebraicReal":
        if self._exact is not None:
            return AlgebraicReal.from_rational(-self._exact)
        f = _zz_primitive([c if k % 2 == 0 else -c for k, c in enumerate(self._poly)])
        return AlgebraicReal(f, -self._hi, -self._lo)

    # -- numerics -----------------------------------------------------------
    def enclosure(self, width) -> tuple[Fraction, Fraction]:
        iv = self.refine(width)
        return iv.lo, iv.hi

    def __float__(self):
        if self._exact is not None:
            return float(self._exact)
        lo, hi = self.enclosure(Fraction(1, 1 << 60) * max(1, abs(self._lo)))
        return float((lo + hi) / 2)

    # -- comparison ---------------------------------------------------------
    def _cmp_rational(self, r: Fraction) -> int:
        if self._exact is not None:
            return _sgn(self._exact - r)
        if r <= self._lo:
            return 1
        if r >= self._hi:
            return -1
        fr = _sgn(_hom_eval(self._poly, r))
        if fr == 0:
            self._set_rational(r)
            return 0
        if fr == _sgn(_hom_eval(self._poly, self._lo)):
            self._lo = r
            return -1
        self._hi = r
        return 1

    def compare(self, other) -> int:
        if isinstance(other, (int, Fraction)):
            return self._cmp_rational(Fraction(other))
        if not isinstance(other, AlgebraicReal):
            raise TypeError(f"cannot compare AlgebraicReal with {type(other).__name__}")
        if other._exact is not None:
            return self._cmp_rational(other._exact)
        if self._exact is not None:
            return -other._cmp_rational(self._exact)
        if self.same_value(other):
            return 0
        while True:
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            self._bisect()
            other._bisect()
            if self._exact is not None or other._exact is not None:
                return self.compare(other)

    def same_value(self, other: "AlgebraicReal") -> bool:
        if self is other:
            return True
        if self._exact is not None or other._exact is not None:
            if self._exact is not None and other._exact is not None:
                return self._exact == other._exact
            irr, rat = (other, self) if self._exact is not None else (self, other)
            return irr._cmp_rational(rat._exact) == 0
        lo = max(self._lo, other._lo)
        hi = min(self._hi, other._hi)
        if lo >= hi:
            return False
        g = _zz_gcd(self._poly, other._poly)
        if len(g) <= 1:
            return False
        # g has at most one root in (lo, hi); it is shared iff g changes sign
        slo, shi = _sgn(_hom_eval(g, lo)), _sgn(_hom_eval(g, hi))
        if slo * shi < 0:
            self._repin(g)
            other._repin(g)
            return True
        return False

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicReal)):
            return self.compare(other) == 0
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicReal)):
            return self.compare(other) < 0
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        if self._exact is not None:
            return f"AlgebraicReal({self._exact})"
        return (f"AlgebraicReal(root of {Poly(self._poly).format('x')} "
                f"in ({self._lo}, {self._hi}))")


def isolate_real_roots(p: Poly) -> list[AlgebraicReal]:
    """All real roots of p in increasing order, rational ones made exact."""
    f = _squarefree_zz(p)
    if len(f) == 1:
        return []
    seq = _sturm_zz(f)
    B = _cauchy_bound(f)
    out: list[AlgebraicReal] = []
    stack = [(-B, B, seq.variations(-B), seq.variations(B))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            if _hom_eval(f, b) == 0:
                out.append(AlgebraicReal.from_rational(b))
                continue
            if _hom_eval(f, a) != 0:
                out.append(AlgebraicReal(f, a, b))
                continue
        m = (a + b) / 2
        vm = seq.variations(m)
        stack.append((m, b, vm, vb))
        stack.append((a, m, va, vm))
    for x in out:
        _detect_rational(x)
    return out


def _detect_rational(x: AlgebraicReal):
    """Make x exact if it is rational."""
    if x._exact is not None:
        return
    f = x._poly
    lc = abs(f[-1])
    # two rationals with denominators up to lc are at least 1/lc**2 apart
    x._tighten_to(Fraction(1, 2 * lc * lc))
    if x._exact is not None:
        return
    cand = ((x._lo + x._hi) / 2).limit_denominator(lc)
    if x._lo < cand < x._hi and _hom_eval(f, cand) == 0:
        x._set_rational(cand)


def refine(x: AlgebraicReal, width) -> ParamInterval:
    return x.refine(width)


# ---------------------------------------------------------------------------
# elements of Q(theta)
# ---------------------------------------------------------------------------

def _as_rat_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    return Poly((p,))


def _poly_xgcd(a: Poly, b: Poly):
    """(g, s) with g = gcd(a, b) monic and s*a = g mod b."""
    r0, r1 = a, b
    s0, s1 = Poly((1,)), Poly()
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    lc = r0.lc()
    return r0.monic(), s0.scale(Fraction(1) / lc)


def _root_has_zero(root: AlgebraicReal, r: Poly) -> bool:
    """Exact test r(theta) == 0, re-pinning theta on the way."""
    if not r:
        return True
    if root._exact is not None:
        return r(root._exact) == 0
    rz = _to_zz(r.c)[1]
    if len(rz) == 1:
        return False
    g = _zz_gcd(rz, root._poly)
    if len(g) <= 1:
        return False
    return root.split_with(g)


@total_ordering
class AlgElem:
    """Element p(theta) of Q(theta), theta an :class:`AlgebraicReal`."""

    __slots__ = ("root", "poly")

    def __init__(self, root: AlgebraicReal, poly):
        self.root = root
        self.poly = _as_rat_poly(poly)

    @classmethod
    def generator(cls, root: AlgebraicReal) -> "AlgElem":
        return cls(root, Poly.x())

    def reduced(self) -> Poly:
        r = self.poly
        if r.degree() >= self.root.degree():
            r = r % Poly(self.root._poly)
        return r

    def _lift(self, other):
        if isinstance(other, AlgElem):
            if other.root is not self.root and not self.root.same_value(other.root):
                raise IncompatibleExtensions("elements of different number fields")
            return other.poly
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def _new(self, poly: Poly) -> "AlgElem":
        out = AlgElem(self.root, poly)
        out.poly = out.reduced()
        return out

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (GaussianRational, AlgComplex)):
            return AlgComplex(self) + other
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return self._new(self.poly + p)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.root, -self.poly)

    def __sub__(self, other):
        if isinstance(other, (GaussianRational, AlgComplex)):
            return AlgComplex(self) - other
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return self._new(self.poly - p)

    def __rsub__(self, other):
        if isinstance(other, GaussianRational):
            return AlgComplex.coerce(other) - self
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return self._new(p - self.poly)

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, AlgComplex)):
            return AlgComplex(self) * other
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return self._new(self.poly * p)

    __rmul__ = __mul__

    def inverse(self) -> "AlgElem":
        while True:
            r = self.reduced()
            if self.root._exact is not None:
                v = r(self.root._exact)
                if v == 0:
                    raise ZeroDivisionError("inverse of zero in Q(theta)")
                return AlgElem(self.root, Poly((1 / Fraction(v),)))
            q = Poly(self.root._poly)
            g, s = _poly_xgcd(r, q)
            if g.degree() == 0:
                return self._new(s)
            if _root_has_zero(self.root, r):
                raise ZeroDivisionError("inverse of zero in Q(theta)")

    def __truediv__(self, other):
        if isinstance(other, (GaussianRational, AlgComplex)):
            return AlgComplex(self) / other
        if isinstance(other, (int, Fraction)):
            return self._new(self.poly.scale(1 / Fraction(other)))
        if isinstance(other, AlgElem):
            self._lift(other)
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = AlgElem(self.root, Poly((1,)))
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def conjugate(self):
        return self

    # -- exact predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return _root_has_zero(self.root, self.reduced())

    def __bool__(self):
        return not self.is_zero()

    def rational_value(self):
        """The value as a Fraction when it is rational, else None."""
        r = self.reduced()
        if self.root._exact is not None:
            return Fraction(r(self.root._exact))
        if r.degree() <= 0:
            return Fraction(r.coeff(0))
        return None

    def sign(self) -> int:
        if self.is_zero():
            return 0
        r = self.reduced()
        root = self.root
        if root._exact is not None:
            return _sgn(r(root._exact))
        width = root._hi - root._lo
        while True:
            a, b = _interval_horner(r.c, root._lo, root._hi)
            if a > 0:
                return 1
            if b < 0:
                return -1
            width /= 4
            root._tighten_to(width)
            if root._exact is not None:
                return _sgn(r(root._exact))

    def compare(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        try:
            diff = self - other
        except IncompatibleExtensions:
            if isinstance(other, AlgElem):
                return to_algebraic_real(self) == to_algebraic_real(other)
            raise
        if diff is NotImplemented:
            return NotImplemented
        return diff.is_zero()

    def __lt__(self, other):
        if not isinstance(other, (int, Fraction, AlgElem)):
            return NotImplemented
        return self.compare(other) < 0

    __hash__ = None

    # -- numerics -----------------------------------------------------------
    def enclosure(self, width) -> tuple[Fraction, Fraction]:
        """Rational interval of width at most ``width`` containing the value."""
        width = Fraction(width)
        r = self.reduced()
        root = self.root
        if root._exact is not None:
            v = Fraction(r(root._exact))
            return v, v
        step = root._hi - root._lo
        while True:
            a, b = _interval_horner(r.c, root._lo, root._hi)
            if b - a <= width:
                return a, b
            step /= 4
            root._tighten_to(step)
            if root._exact is not None:
                v = Fraction(r(root._exact))
                return v, v

    def __float__(self):
        a, b = self.enclosure(Fraction(1, 1 << 64))
        return float((a + b) / 2)

    def __repr__(self):
        return f"AlgElem({self.reduced().format('b')})"


def _real_elem(x):
    if isinstance(x, AlgElem):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"not a real field element: {x!r}")


class AlgComplex:
    """Complex number re + im*i over a real field (Fractions or Q(theta))."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _real_elem(re)
        self.im = _real_elem(im)

    @staticmethod
    def coerce(x) -> "AlgComplex":
        if isinstance(x, AlgComplex):
            return x
        if isinstance(x, GaussianRational):
            return AlgComplex(x.re, x.im)
        if isinstance(x, (int, Fraction, AlgElem)):
            return AlgComplex(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to AlgComplex")

    def conjugate(self) -> "AlgComplex":
        return AlgComplex(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        try:
            o = AlgComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return AlgComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return AlgComplex(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = AlgComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return AlgComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return AlgComplex.coerce(other) - self

    def __mul__(self, other):
        try:
            o = AlgComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return AlgComplex(self.re * o.re - self.im * o.im,
                          self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "AlgComplex":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        inv = 1 / n if isinstance(n, (int, Fraction)) else n.inverse()
        return AlgComplex(self.re * inv, -self.im * inv)

    def __truediv__(self, other):
        try:
            o = AlgComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return AlgComplex.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = AlgComplex(1, 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        try:
            o = AlgComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    __hash__ = None

    def __bool__(self):
        return not (self.re == 0 and self.im == 0)

    def is_rational(self) -> bool:
        return all(isinstance(v, (int, Fraction)) or v.rational_value() is not None
                   for v in (self.re, self.im))

    def to_gaussian(self) -> GaussianRational:
        parts = []
        for v in (self.re, self.im):
            r = v if isinstance(v, (int, Fraction)) else v.rational_value()
            if r is None:
                raise ValueError("value is not a Gaussian rational")
            parts.append(r)
        return GaussianRational(*parts)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"AlgComplex({self.re!r}, {self.im!r})"


# ---------------------------------------------------------------------------
# polynomials evaluated at algebraic numbers
# ---------------------------------------------------------------------------

def reduce_mod_minpoly(p: Poly, x: AlgebraicReal) -> Poly:
    """Canonical remainder of p modulo the polynomial pinning x.

    The result is zero exactly when p(x) = 0.  Gaussian coefficients are
    reduced part by part.
    """
    if any(isinstance(c, GaussianRational) for c in p.c):
        re = reduce_mod_minpoly(p.real_part(), x)
        im = reduce_mod_minpoly(p.imag_part(), x)
        n = max(len(re.c), len(im.c))
        return Poly([GaussianRational(re.coeff(k), im.coeff(k)) for k in range(n)])
    if x._exact is not None:
        return Poly((p(x._exact),))
    r = p % Poly(x._poly)
    if r and _root_has_zero(x, r):
        return Poly()
    if r.degree() >= x.degree():
        r = r % Poly(x._poly)
    return r


def sign_at(p: Poly, x: AlgebraicReal) -> int:
    """Exact sign of p(x)."""
    if x._exact is not None:
        return _sgn(p(x._exact))
    return AlgElem(x, p).sign()


def evaluate_at(f, x: AlgebraicReal):
    """Value of a rational polynomial or rational function at x.

    Returns a Fraction when x is rational, otherwise an :class:`AlgElem`.
    Raises ZeroDivisionError at a pole.
    """
    if isinstance(f, RatFunc):
        if x._exact is not None:
            return f(x._exact)
        return AlgElem(x, f.num) / AlgElem(x, f.den)
    if x._exact is not None:
        return Fraction(f(x._exact))
    return AlgElem(x, f)._new(f)


def charpoly(e: AlgElem) -> Poly:
    """Characteristic polynomial of multiplication by e on Q[t]/(q)."""
    q = Poly(e.root._poly).monic()
    n = q.degree()
    cols = []
    basis = Poly((1,))
    r = e.reduced()
    for j in range(n):
        col = (r * basis) % q
        cols.append([Fraction(col.coeff(i)) for i in range(n)])
        basis = (basis * Poly.x()) % q
    M = [[cols[j][i] for j in range(n)] for i in range(n)]
    # Faddeev-LeVerrier
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            Mk[i][i] += coeffs[n - k + 1]
        AM = [[sum(M[i][l] * Mk[l][j] for l in range(n)) for j in range(n)]
              for i in range(n)]
        tr = sum(AM[i][i] for i in range(n))
        coeffs[n - k] = -tr / k
        Mk = AM
    return Poly(coeffs)


def _pick_root(candidates, enclose):
    """The unique candidate lying in every enclosure of the target value."""
    width = Fraction(1)
    alive = list(candidates)
    while len(alive) > 1:
        lo, hi = enclose(width)
        keep = []
        for r in alive:
            if r._exact is not None:
                if lo <= r._exact <= hi:
                    keep.append(r)
                continue
            r._tighten_to(width)
            if r._exact is not None:
                if lo <= r._exact <= hi:
                    keep.append(r)
            elif r._hi >= lo and r._lo <= hi:
                keep.append(r)
        alive = keep
        width /= 16
    if not alive:
        raise ArithmeticError("no algebraic real matched the enclosure")
    return alive[0]


def to_algebraic_real(e) -> AlgebraicReal:
    """Standalone AlgebraicReal with the value of a real field element."""
    if isinstance(e, (int, Fraction)):
        return AlgebraicReal.from_rational(e)
    rv = e.rational_value()
    if rv is not None:
        return AlgebraicReal.from_rational(rv)
    roots = isolate_real_roots(charpoly(e))
    return _pick_root(roots, e.enclosure)


def real_sqrt(e) -> AlgebraicReal:
    """Non-negative square root of a non-negative real field element."""
    if isinstance(e, AlgElem):
        rv = e.rational_value()
        if rv is not None:
            e = rv
    if isinstance(e, (int, Fraction)):
        e = Fraction(e)
        if e < 0:
            raise ValueError("square root of a negative number")
        if e == 0:
            return AlgebraicReal.from_rational(0)
        from math import isqrt
        n, d = e.numerator, e.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return AlgebraicReal.from_rational(Fraction(rn, rd))
        roots = isolate_real_roots(Poly((-e, 0, 1)))
        return roots[-1]
    if e.sign() < 0:
        raise ValueError("square root of a negative number")
    h = charpoly(e)
    g = Poly([h.coeff(k // 2) if k % 2 == 0 else 0 for k in range(2 * h.degree() + 1)])
    roots = [r for r in isolate_real_roots(g) if r.compare(0) > 0]

    def enclose(width):
        lo, hi = e.enclosure(width * width / 4)
        lo = max(lo, Fraction(0))
        # square roots bracketed by rational bounds
        return _sqrt_floor(lo, width), _sqrt_ceil(hi, width)

    return _pick_root(roots, enclose)


def _sqrt_floor(x: Fraction, width: Fraction) -> Fraction:
    if x <= 0:
        return Fraction(0)
    s = Fraction(_isqrt_frac(x, width))
    while s * s > x:
        s -= width
    return max(s, Fraction(0))


def _sqrt_ceil(x: Fraction, width: Fraction) -> Fraction:
    s = Fraction(_isqrt_frac(x, width))
    while s * s < x:
        s += width
    return s


def _isqrt_frac(x: Fraction, width: Fraction) -> Fraction:
    from math import isqrt
    k = max(1, width.denominator.bit_length() + 2)
    scale = 1 << k
    return Fraction(isqrt(int(x * scale * scale)), scale)
