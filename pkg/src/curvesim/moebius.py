"""Real Moebius transformations of the parameter line.

Entries are exact real field elements: Fractions, or number-field elements
from :mod:`curvesim.realroots` when a transformation comes out of a witness.
Unbounded interval ends are represented by ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .arith import Poly
from .errors import IncompatibleExtensions

__all__ = [
    "Moebius",
    "ParamInterval",
    "IntervalSet",
    "moebius_compose",
    "moebius_apply_curve",
    "moebius_substitute",
    "moebius_image_interval",
]


def _sign(x) -> int:
    s = getattr(x, "sign", None)
    if s is not None:
        return s()
    return (x > 0) - (x < 0)


def _cmp(a, b) -> int:
    """sign(a - b), also for elements of different number fields."""
    try:
        return _sign(a - b)
    except IncompatibleExtensions:
        from .realroots import to_algebraic_real

        return to_algebraic_real(a).compare(to_algebraic_real(b))


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


# ---------------------------------------------------------------------------
# intervals
# ---------------------------------------------------------------------------

def _cmp_lo(a, b) -> int:
    """Compare lower ends, None meaning minus infinity."""
    if a is None:
        return 0 if b is None else -1
    if b is None:
        return 1
    return _cmp(a, b)


def _cmp_hi(a, b) -> int:
    """Compare upper ends, None meaning plus infinity."""
    if a is None:
        return 0 if b is None else 1
    if b is None:
        return -1
    return _cmp(a, b)


@dataclass(frozen=True, eq=False)
class ParamInterval:
    """Closed parameter interval [lo, hi]; ``None`` marks an unbounded end."""

    lo: object = None
    hi: object = None

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and _cmp(self.hi, self.lo) < 0:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def real_line(cls) -> "ParamInterval":
        return cls(None, None)

    @property
    def bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def is_point(self) -> bool:
        return self.bounded and _cmp(self.hi, self.lo) == 0

    def width(self):
        if not self.bounded:
            return None
        return self.hi - self.lo

    def contains(self, x) -> bool:
        if self.lo is not None and _cmp(x, self.lo) < 0:
            return False
        if self.hi is not None and _cmp(self.hi, x) < 0:
            return False
        return True

    def interior_contains(self, x) -> bool:
        if self.lo is not None and _cmp(x, self.lo) <= 0:
            return False
        if self.hi is not None and _cmp(self.hi, x) <= 0:
            return False
        return True

    def intersect(self, other: "ParamInterval") -> "ParamInterval | None":
        lo = self.lo if _cmp_lo(self.lo, other.lo) >= 0 else other.lo
        hi = self.hi if _cmp_hi(self.hi, other.hi) <= 0 else other.hi
        if lo is not None and hi is not None and _cmp(hi, lo) < 0:
            return None
        return ParamInterval(lo, hi)

    def subset_of(self, other: "ParamInterval") -> bool:
        return _cmp_lo(self.lo, other.lo) >= 0 and _cmp_hi(self.hi, other.hi) <= 0

    def __eq__(self, other):
        if not isinstance(other, ParamInterval):
            return NotImplemented
        return _cmp_lo(self.lo, other.lo) == 0 and _cmp_hi(self.hi, other.hi) == 0

    __hash__ = None

    def __str__(self):
        lo = "-oo" if self.lo is None else str(self.lo)
        hi = "oo" if self.hi is None else str(self.hi)
        return f"[{lo}, {hi}]"


class IntervalSet:
    """Finite union of closed intervals, kept sorted and merged."""

    __slots__ = ("intervals",)

    def __init__(self, intervals=()):
        items = sorted(intervals, key=cmp_to_key(lambda a, b: _cmp_lo(a.lo, b.lo)))
        merged: list[ParamInterval] = []
        for iv in items:
            if merged:
                last = merged[-1]
                touching = last.hi is None or iv.lo is None or _cmp(iv.lo, last.hi) <= 0
                if touching:
                    hi = last.hi if _cmp_hi(last.hi, iv.hi) >= 0 else iv.hi
                    merged[-1] = ParamInterval(last.lo, hi)
                    continue
            merged.append(iv)
        self.intervals = tuple(merged)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def is_empty(self) -> bool:
        return not self.intervals

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.intervals + tuple(other))

    def intersect(self, other) -> "IntervalSet":
        others = [other] if isinstance(other, ParamInterval) else list(other)
        out = []
        for a in self.intervals:
            for b in others:
                c = a.intersect(b)
                if c is not None:
                    out.append(c)
        return IntervalSet(out)

    def contains(self, x) -> bool:
        return any(iv.contains(x) for iv in self.intervals)

    def covers(self, target: ParamInterval) -> bool:
        return any(target.subset_of(iv) for iv in self.intervals)

    def __eq__(self, other):
        if isinstance(other, ParamInterval):
            other = IntervalSet([other])
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self.intervals == other.intervals

    __hash__ = None

    def __str__(self):
        if not self.intervals:
            return "{}"
        return " u ".join(str(iv) for iv in self.intervals)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# transformations
# ---------------------------------------------------------------------------

class Moebius:
    """t -> (alpha*t + beta) / (gamma*t + delta), scaled so delta = 1 or gamma = 1."""

    __slots__ = ("alpha", "beta", "gamma", "delta")

    def __init__(self, alpha, beta, gamma=0, delta=1, *, normalize: bool = True):
        if alpha * delta - beta * gamma == 0:
            raise ValueError("singular Moebius transformation")
        if normalize:
            if delta != 0:
                s = delta
            else:
                s = gamma
            if s != 1:
                alpha, beta, gamma, delta = (_div(alpha, s), _div(beta, s),
                                             _div(gamma, s), _div(delta, s))
                delta = 1 if delta != 0 else 0
                if delta == 0:
                    gamma = 1
        self.alpha, self.beta, self.gamma, self.delta = alpha, beta, gamma, delta

    @classmethod
    def identity(cls) -> "Moebius":
        return cls(1, 0, 0, 1)

    @classmethod
    def affine(cls, a, b) -> "Moebius":
        return cls(a, b, 0, 1)

    @classmethod
    def reciprocal(cls) -> "Moebius":
        return cls(0, 1, 1, 0)

    @property
    def det(self):
        return self.alpha * self.delta - self.beta * self.gamma

    def entries(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def is_affine(self) -> bool:
        return self.gamma == 0

    def pole(self):
        """Finite parameter sent to infinity, or None for affine maps."""
        if self.gamma == 0:
            return None
        return _div(-self.delta, self.gamma)

    def __call__(self, t):
        if t is None:
            return None if self.gamma == 0 else _div(self.alpha, self.gamma)
        den = self.gamma * t + self.delta
        if den == 0:
            return None
        return _div(self.alpha * t + self.beta, den)

    def inverse(self) -> "Moebius":
        return Moebius(self.delta, -self.beta, -self.gamma, self.alpha)

    def compose(self, other: "Moebius") -> "Moebius":
        """self o other."""
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Moebius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    __matmul__ = compose

    def map(self, fn) -> "Moebius":
        return Moebius(*(fn(x) for x in self.entries()), normalize=False)

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    __hash__ = None

    def format(self, var: str = "t") -> str:
        num = Poly((self.beta, self.alpha)).format(var) if _is_plain(self) else \
            f"({self.alpha})*{var} + ({self.beta})"
        if self.gamma == 0 and self.delta == 1:
            return num
        den = Poly((self.delta, self.gamma)).format(var) if _is_plain(self) else \
            f"({self.gamma})*{var} + ({self.delta})"
        return f"({num})/({den})"

    def __repr__(self):
        return f"Moebius({self.format()})"


def _is_plain(m: Moebius) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in m.entries())


def moebius_compose(phi1: Moebius, phi2: Moebius) -> Moebius:
    return phi1.compose(phi2)


def moebius_substitute(num: Poly, den: Poly, phi: Moebius, degree: int | None = None):
    """Numerator and denominator of num(phi(t)) / den(phi(t)) after clearing (gamma*t + delta)."""
    d = max(num.degree(), den.degree()) if degree is None else degree
    u = Poly((phi.beta, phi.alpha))
    v = Poly((phi.delta, phi.gamma))
    return num.homogenize_at(u, v, d), den.homogenize_at(u, v, d)


def moebius_apply_curve(z, phi: Moebius):
    """The reparametrized curve t -> z(phi(t)), reduced."""
    from .curve import ParamCurve

    n, d = moebius_substitute(z.num, z.den, phi)
    return ParamCurve.from_complex(n, d)


def moebius_image_interval(phi: Moebius, interval: ParamInterval) -> IntervalSet:
    """Closure of phi(I) inside the real line.

    When the pole of phi lies strictly inside I the image consists of two
    unbounded rays.
    """
    lo, hi = interval.lo, interval.hi
    s = _sign(phi.det)
    if phi.gamma == 0:
        a, b = phi(lo), phi(hi)
        if s > 0:
            return IntervalSet([ParamInterval(a, b)])
        return IntervalSet([ParamInterval(b, a)])

    p = phi.pole()
    at_lo = lo is not None and _cmp(p, lo) == 0
    at_hi = hi is not None and _cmp(p, hi) == 0
    if at_lo and at_hi:
        return IntervalSet()
    fl = phi(lo)
    fh = phi(hi)
    if at_lo:
        ray = ParamInterval(None, fh) if s > 0 else ParamInterval(fh, None)
        return IntervalSet([ray])
    if at_hi:
        ray = ParamInterval(fl, None) if s > 0 else ParamInterval(None, fl)
        return IntervalSet([ray])
    if interval.interior_contains(p):
        if s > 0:
            return IntervalSet([ParamInterval(None, fh), ParamInterval(fl, None)])
        return IntervalSet([ParamInterval(None, fl), ParamInterval(fh, None)])
    if s > 0:
        return IntervalSet([ParamInterval(fl, fh)])
    return IntervalSet([ParamInterval(fh, fl)])
