"""Human- and machine-readable reports of similarity witnesses.

Every numeric value is printed together with a rational interval that
provably contains it; the printed decimal lies inside that interval.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

from .curvefile import format_rational
from .detect import SimilarityWitness
from .moebius import IntervalSet, ParamInterval
from .realroots import AlgebraicReal, AlgElem, count_real_roots
from .similarity import classify

__all__ = ["Numeric", "numeric", "exact_str", "witness_report", "format_witness",
           "interval_set_report"]

THETA = "theta"  # the witness parameter, generator of its number field


class Numeric:
    """Decimal approximation ``value`` of x with x in [lo, hi]."""

    __slots__ = ("value", "lo", "hi", "digits")

    def __init__(self, value: Fraction, lo: Fraction, hi: Fraction, digits: int):
        self.value, self.lo, self.hi, self.digits = value, lo, hi, digits

    def __str__(self):
        return _decimal(self.value, self.digits)

    def __float__(self):
        return float(self.value)

    def to_dict(self) -> dict:
        return {"value": str(self), "interval": [format_rational(self.lo),
                                                 format_rational(self.hi)]}


def _decimal(q: Fraction, digits: int) -> str:
    scaled = q * 10 ** digits
    n = scaled.numerator // scaled.denominator
    sign = "-" if n < 0 else ""
    n = abs(n)
    if digits == 0:
        return f"{sign}{n}"
    s = str(n).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def _enclose(x, width: Fraction) -> tuple[Fraction, Fraction]:
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return x, x
    if isinstance(x, (AlgElem, AlgebraicReal)):
        return x.enclosure(width)
    raise TypeError(f"cannot approximate {type(x).__name__}")


def numeric(x, digits: int = 10) -> Numeric:
    """Decimal with ``digits`` fractional digits, within 10**-digits of x."""
    unit = Fraction(1, 10 ** digits)
    lo, hi = _enclose(x, unit)
    glo = Fraction(floor(lo / unit)) * unit
    ghi = Fraction(ceil(hi / unit)) * unit
    value = Fraction(round((lo + hi) / 2 / unit)) * unit
    value = min(max(value, glo), ghi)
    return Numeric(value, glo, ghi, digits)


def exact_str(x, var: str = THETA) -> str:
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    if isinstance(x, AlgElem):
        rv = x.rational_value()
        if rv is not None:
            return format_rational(rv)
        return x.reduced().format(var)
    if isinstance(x, AlgebraicReal):
        if x.is_rational():
            return format_rational(x.value)
        iv = x.interval
        return (f"root of {x.minpoly.format(var)} in "
                f"[{format_rational(iv.lo)}, {format_rational(iv.hi)}]")
    return str(x)


def _value(x, digits: int) -> dict:
    return {"exact": exact_str(x), **numeric(x, digits).to_dict()}


def _bound(x, digits: int):
    return None if x is None else _value(x, digits)


def interval_set_report(s: IntervalSet, digits: int = 10) -> list:
    return [[_bound(iv.lo, digits), _bound(iv.hi, digits)] for iv in s]


def _complex(z, digits: int) -> dict:
    return {"re": _value(z.re, digits), "im": _value(z.im, digits)}


def isolating_interval(x: AlgebraicReal, digits: int) -> ParamInterval:
    """Isolating interval of x, on the 10**-digits grid when that still isolates."""
    if x.is_rational():
        return x.interval
    unit = Fraction(1, 10 ** digits)
    lo, hi = x.enclosure(unit)
    glo = Fraction(floor(lo / unit)) * unit
    ghi = Fraction(ceil(hi / unit)) * unit
    iv = ParamInterval(glo, ghi)
    f = x.minpoly
    if f(glo) != 0 and f(ghi) != 0 and count_real_roots(f, iv) == 1:
        return iv
    return ParamInterval(lo, hi)


def witness_report(w: SimilarityWitness, digits: int = 10) -> dict:
    """Plain-data description of a witness (JSON serializable)."""
    f, phi, beta = w.similarity, w.moebius, w.beta
    kind = classify(f)
    iv = isolating_interval(beta, digits)
    out = {
        "branch": w.branch.value,
        "orientation": f.orientation.value,
        "verified": bool(w.verified),
        "beta": {
            "minpoly": [format_rational(c) for c in beta.minpoly.c],
            "interval": [format_rational(iv.lo), format_rational(iv.hi)],
            "variable": THETA,
            "exact": exact_str(beta) if beta.is_rational() else
            f"root of {beta.minpoly.format(THETA)} in "
            f"[{format_rational(iv.lo)}, {format_rational(iv.hi)}]",
            **{k: v for k, v in numeric(beta, digits).to_dict().items() if k == "value"},
        },
        "moebius": {name: _value(getattr(phi, name), digits)
                    for name in ("alpha", "beta", "gamma", "delta")},
        "a": _complex(f.a, digits),
        "b": _complex(f.b, digits),
        "kind": {
            "tag": kind.tag.value,
            "ratio": _value(kind.ratio, digits),
            "cos": _value(kind.angle_cos, digits),
            "sin": _value(kind.angle_sin, digits),
        },
    }
    mu = w.notes.get("precondition")
    if mu is not None:
        out["precondition"] = {
            "curve": "z2" if w.notes.get("swapped") else "z1",
            "moebius": {n: exact_str(getattr(mu, n)) for n in ("alpha", "beta", "gamma", "delta")},
        }
    k = out["kind"]
    if kind.fixed_point is not None:
        k["fixed_point"] = _complex(kind.fixed_point, digits)
    if kind.axis is not None:
        k["axis"] = {n: _value(v, digits) for n, v in zip("ABC", kind.axis)}
    if kind.glide is not None:
        k["glide"] = _complex(kind.glide, digits)
    if kind.translation is not None:
        k["translation"] = _complex(kind.translation, digits)
    return out


def _c(d: dict) -> str:
    re, im = d["re"]["value"], d["im"]["value"]
    sign = "-" if im.startswith("-") else "+"
    return f"{re} {sign} {im.lstrip('-')}i"


def _cx(d: dict) -> str:
    return f"({d['re']['exact']}) + ({d['im']['exact']})i"


def format_witness(rep: dict, index: int | None = None) -> str:
    """Multi-line text rendering of :func:`witness_report` output."""
    head = f"[{index}] " if index is not None else ""
    form = "z" if rep["orientation"] == "preserving" else "conj(z)"
    m = rep["moebius"]
    k = rep["kind"]
    lines = [
        f"{head}{rep['kind']['tag']}  ({rep['branch']}, "
        f"{'verified' if rep['verified'] else 'NOT verified'})",
        f"    f(z) = a*{form} + b",
        f"    a = {_cx(rep['a'])} ~ {_c(rep['a'])}",
        f"    b = {_cx(rep['b'])} ~ {_c(rep['b'])}",
        "    phi(t) = (alpha*t + beta)/(gamma*t + delta) with "
        + ", ".join(f"{n} = {m[n]['exact']}" for n in ("alpha", "beta", "gamma", "delta")),
        f"    {THETA} = {rep['beta']['exact']} ~ {rep['beta']['value']}",
        f"    ratio = {k['ratio']['value']}, cos = {k['cos']['value']}, sin = {k['sin']['value']}",
    ]
    if "fixed_point" in k:
        lines.append(f"    fixed point ~ {_c(k['fixed_point'])}")
    if "axis" in k:
        A, B, C = (k["axis"][n]["value"] for n in "ABC")
        lines.append(f"    axis: {A}*x + {B}*y = {C}")
    if "glide" in k:
        lines.append(f"    glide ~ {_c(k['glide'])}")
    if "translation" in k:
        lines.append(f"    translation ~ {_c(k['translation'])}")
    return "\n".join(lines)


def interval_str(s: IntervalSet | ParamInterval, digits: int = 6) -> str:
    items = [s] if isinstance(s, ParamInterval) else list(s)
    if not items:
        return "{}"

    def end(x, inf):
        return inf if x is None else exact_str(x) if isinstance(x, (int, Fraction)) \
            else f"{exact_str(x)} ~ {numeric(x, digits)}"

    return " u ".join(f"[{end(iv.lo, '-oo')}, {end(iv.hi, 'oo')}]" for iv in items)
