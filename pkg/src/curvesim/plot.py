"""SVG rendering of rational and piecewise curves.

Sampling starts on a uniform rational grid and bisects parameter steps
where the polyline turns sharply.  Real poles of the denominator inside the
window split the sampling range, so no segment is drawn across a pole.
"""

from __future__ import annotations

import math
from fractions import Fraction
from xml.sax.saxutils import escape

from .curve import ParamCurve
from .piecewise import PiecewiseCurve
from .realroots import isolate_real_roots

__all__ = ["sample_curve", "polylines", "render_svg"]

_MAX_TURN = math.radians(8)


def _ranges(z: ParamCurve, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Sub-windows of [lo, hi] avoiding the real poles of z."""
    if z.den.degree() <= 0:
        return [(lo, hi)]
    margin = (hi - lo) / 10 ** 6
    cuts = []
    for r in isolate_real_roots(z.den):
        a, b = r.enclosure(margin)
        if b >= lo and a <= hi:
            cuts.append((a - margin, b + margin))
    out, start = [], lo
    for a, b in sorted(cuts):
        if a > start:
            out.append((start, a))
        start = max(start, b)
    if start < hi:
        out.append((start, hi))
    return out


def _turn(p, q, r) -> float:
    u, v = q - p, r - q
    if abs(u) == 0 or abs(v) == 0:
        return 0.0
    return abs(math.atan2((v / u).imag, (v / u).real))


def sample_curve(z: ParamCurve, lo, hi, samples: int = 200, depth: int = 6) -> list[list[complex]]:
    """Point lists (one per pole-free sub-window) sampling z on [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    out = []
    for a, b in _ranges(z, lo, hi):
        n = max(2, round(samples * (b - a) / (hi - lo))) if hi > lo else 1
        ts = [a + (b - a) * k / n for k in range(n + 1)]
        pts = [z.point(float(t)) for t in ts]
        for _ in range(depth):
            new_ts, new_pts, changed = [ts[0]], [pts[0]], False
            for k in range(1, len(ts)):
                bend = (k + 1 < len(ts) and _turn(pts[k - 1], pts[k], pts[k + 1]) > _MAX_TURN) or \
                       (k >= 2 and _turn(pts[k - 2], pts[k - 1], pts[k]) > _MAX_TURN)
                if bend:
                    m = (ts[k - 1] + ts[k]) / 2
                    new_ts.append(m)
                    new_pts.append(z.point(float(m)))
                    changed = True
                new_ts.append(ts[k])
                new_pts.append(pts[k])
            ts, pts = new_ts, new_pts
            if not changed:
                break
        out.append(pts)
    return out


def _clip(lines: list[list[complex]]) -> list[list[complex]]:
    """Split polylines at points far away from the bulk (near poles)."""
    mags = sorted(abs(p) for line in lines for p in line)
    if not mags:
        return []
    limit = 50 * (mags[len(mags) // 2] + 1)
    out = []
    for line in lines:
        cur = []
        for p in line:
            if abs(p) <= limit and math.isfinite(p.real) and math.isfinite(p.imag):
                cur.append(p)
            elif cur:
                out.append(cur)
                cur = []
        if cur:
            out.append(cur)
    return [line for line in out if len(line) > 1]


def polylines(obj, window=(-10, 10), samples: int = 200) -> list[list[complex]]:
    if isinstance(obj, PiecewiseCurve):
        lines = []
        for s in obj:
            lines.extend(sample_curve(s.curve, s.domain.lo, s.domain.hi, samples))
    else:
        lines = sample_curve(obj, window[0], window[1], samples)
    return _clip(lines)


def render_svg(obj, window=(-10, 10), samples: int = 200, size: int = 600,
               title: str | None = None) -> str:
    lines = polylines(obj, window, samples)
    pts = [p for line in lines for p in line]
    if pts:
        xs = [p.real for p in pts]
        ys = [-p.imag for p in pts]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = y0 = -1.0
        x1 = y1 = 1.0
    w, h = max(x1 - x0, 1e-9), max(y1 - y0, 1e-9)
    pad = 0.05 * max(w, h)
    vb = (x0 - pad, y0 - pad, w + 2 * pad, h + 2 * pad)
    stroke = max(vb[2], vb[3]) / 300
    height = round(size * vb[3] / vb[2]) if vb[2] else size
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{height}" '
            f'viewBox="{vb[0]:.6g} {vb[1]:.6g} {vb[2]:.6g} {vb[3]:.6g}">')
    body = [head]
    if title:
        body.append(f"  <title>{escape(title)}</title>")
    for line in lines:
        coords = " ".join(f"{p.real:.6g},{-p.imag:.6g}" for p in line)
        body.append(f'  <polyline fill="none" stroke="black" stroke-width="{stroke:.4g}" '
                    f'stroke-linejoin="round" points="{coords}"/>')
    body.append("</svg>")
    return "\n".join(body) + "\n"
