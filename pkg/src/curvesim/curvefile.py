"""JSON curve files with exact rational coefficients.

Rational curve::

    {"kind": "rational",
     "x": {"num": ["3", "0", "-6", "0", "-1"], "den": ["1", "0", "2", "0", "1"]},
     "y": {"num": ["0", "0", "0", "8"], "den": ["1", "0", "2", "0", "1"]}}

Piecewise curve::

    {"kind": "piecewise",
     "segments": [{"curve": {"x": ..., "y": ...}, "domain": ["0", "1/2"]}, ...]}

Coefficients are ascending by degree and written as ``"p/q"`` strings (JSON
integers are accepted too).  Floats are rejected so that no value is
silently rounded.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .arith import Poly, RatFunc
from .curve import ParamCurve
from .errors import CurveFileError
from .moebius import ParamInterval
from .piecewise import PiecewiseCurve, Segment

__all__ = [
    "parse_curve",
    "load_curve",
    "loads_curve",
    "curve_to_dict",
    "piecewise_to_dict",
    "dumps_curve",
    "save_curve",
    "format_rational",
]

_LIST = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]")
_RATIONAL = re.compile(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*")


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fail(path: str, msg: str):
    raise CurveFileError(f"{path}: {msg}")


def _rational(v, path: str) -> Fraction:
    if isinstance(v, bool):
        _fail(path, "expected a rational number, got a boolean")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        if not _RATIONAL.fullmatch(v):
            _fail(path, f"not an exact rational {v!r} (use integers or p/q)")
        num, _, den = v.replace(" ", "").partition("/")
        if den and int(den) == 0:
            _fail(path, "zero denominator")
        return Fraction(int(num), int(den) if den else 1)
    _fail(path, f"expected a rational string \"p/q\", got {type(v).__name__}")


def _poly(v, path: str) -> Poly:
    if not isinstance(v, list):
        _fail(path, "expected a list of coefficients")
    if not v:
        _fail(path, "empty coefficient list")
    return Poly([_rational(c, f"{path}[{k}]") for k, c in enumerate(v)])


def _object(v, path: str, keys: tuple) -> dict:
    if not isinstance(v, dict):
        _fail(path, "expected an object")
    for k in keys:
        if k not in v:
            _fail(path, f"missing field {k!r}")
    return v


def _ratfunc(v, path: str) -> RatFunc:
    v = _object(v, path, ("num",))
    num = _poly(v["num"], f"{path}.num")
    den = _poly(v["den"], f"{path}.den") if "den" in v else Poly((1,))
    if not den:
        _fail(f"{path}.den", "denominator is the zero polynomial")
    return RatFunc(num, den)


def _rational_curve(v, path: str) -> ParamCurve:
    v = _object(v, path, ("x", "y"))
    return ParamCurve(_ratfunc(v["x"], f"{path}.x"), _ratfunc(v["y"], f"{path}.y"))


def _segment(v, path: str) -> Segment:
    v = _object(v, path, ("curve", "domain"))
    dom = v["domain"]
    if not isinstance(dom, list) or len(dom) != 2:
        _fail(f"{path}.domain", "expected [lo, hi]")
    lo = _rational(dom[0], f"{path}.domain[0]")
    hi = _rational(dom[1], f"{path}.domain[1]")
    if hi < lo:
        _fail(f"{path}.domain", "empty interval (hi < lo)")
    curve = _rational_curve(v["curve"], f"{path}.curve")
    try:
        return Segment(curve, ParamInterval(lo, hi))
    except ValueError as exc:
        _fail(path, str(exc))


def parse_curve(doc, path: str = "$") -> ParamCurve | PiecewiseCurve:
    """Curve from an already decoded JSON document."""
    doc = _object(doc, path, ())
    kind = doc.get("kind", "rational")
    if kind == "rational":
        return _rational_curve(doc, path)
    if kind == "piecewise":
        segs = doc.get("segments")
        if not isinstance(segs, list) or not segs:
            _fail(f"{path}.segments", "expected a nonempty list of segments")
        return PiecewiseCurve([_segment(s, f"{path}.segments[{k}]")
                               for k, s in enumerate(segs)])
    _fail(f"{path}.kind", f"unknown kind {kind!r} (expected rational or piecewise)")


def loads_curve(text: str, source: str = "<string>"):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFileError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return parse_curve(doc)
    except CurveFileError as exc:
        raise CurveFileError(f"{source}: {exc}") from None


def load_curve(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CurveFileError(f"{path}: {exc.strerror}") from None
    return loads_curve(text, str(path))


def _poly_out(p: Poly) -> list[str]:
    return [format_rational(c) for c in p.c] if p else ["0"]


def _ratfunc_out(f: RatFunc) -> dict:
    return {"num": _poly_out(f.num), "den": _poly_out(f.den)}


def curve_to_dict(z: ParamCurve, name: str | None = None) -> dict:
    out = {"kind": "rational"}
    if name:
        out["name"] = name
    out["x"] = _ratfunc_out(z.x)
    out["y"] = _ratfunc_out(z.y)
    return out


def piecewise_to_dict(p: PiecewiseCurve, name: str | None = None) -> dict:
    out = {"kind": "piecewise"}
    if name:
        out["name"] = name
    out["segments"] = [
        {"curve": {"x": _ratfunc_out(s.curve.x), "y": _ratfunc_out(s.curve.y)},
         "domain": [format_rational(s.domain.lo), format_rational(s.domain.hi)]}
        for s in p
    ]
    return out


def dumps_curve(obj, name: str | None = None) -> str:
    d = piecewise_to_dict(obj, name) if isinstance(obj, PiecewiseCurve) else curve_to_dict(obj, name)
    text = json.dumps(d, indent=2)
    # keep coefficient lists on one line
    text = _LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


def save_curve(path, obj, name: str | None = None) -> None:
    Path(path).write_text(dumps_curve(obj, name), encoding="utf-8")
