"""Global and partial similarity of piecewise rational curves.

A piece (z, I) of the first curve and a piece (w, J) of the second are
similar when the supports of z and w are related by a similarity f with
parameter change phi, and phi(I) meets J.  All interval arithmetic is exact;
endpoints built from irrational witnesses are number-field elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import ParamCurve, validate
from .detect import SimilarityWitness, similar
from .moebius import IntervalSet, ParamInterval, moebius_image_interval
from .realroots import count_real_roots

__all__ = [
    "Segment",
    "PiecewiseCurve",
    "SegmentMatch",
    "PartialMatch",
    "segment_similarities",
    "global_similar",
    "partial_similar",
]


@dataclass(frozen=True, eq=False)
class Segment:
    curve: ParamCurve
    domain: ParamInterval

    def __post_init__(self):
        d = self.domain
        if not d.bounded:
            raise ValueError("segment domains must be bounded")
        for e in (d.lo, d.hi):
            if not isinstance(e, (int, Fraction)):
                raise ValueError("segment endpoints must be rational")
        if count_real_roots(self.curve.den, d):
            raise ValueError(f"the parametrization has a pole in {d}")


class PiecewiseCurve:
    """Ordered list of segments (curve, domain)."""

    __slots__ = ("segments",)

    def __init__(self, segments):
        segs = []
        for s in segments:
            if not isinstance(s, Segment):
                curve, domain = s
                if not isinstance(domain, ParamInterval):
                    domain = ParamInterval(Fraction(domain[0]), Fraction(domain[1]))
                s = Segment(curve, domain)
            segs.append(s)
        if not segs:
            raise ValueError("a piecewise curve needs at least one segment")
        self.segments = tuple(segs)

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __getitem__(self, i) -> Segment:
        return self.segments[i]

    def validate(self) -> "PiecewiseCurve":
        for s in self.segments:
            validate(s.curve)
        return self

    def __repr__(self):
        inner = ", ".join(f"{s.curve!r} on {s.domain}" for s in self.segments)
        return f"PiecewiseCurve([{inner}])"


@dataclass(eq=False)
class SegmentMatch:
    """A whole-curve witness with phi(I) and phi(I) meet J."""

    witness: SimilarityWitness
    image: IntervalSet
    overlap: IntervalSet

    def exact(self, target: ParamInterval) -> bool:
        return self.image == IntervalSet([target])


@dataclass(eq=False)
class PartialMatch:
    i: int
    j: int
    witness: SimilarityWitness
    overlap: IntervalSet


def _match(w: SimilarityWitness, s1: Segment, s2: Segment) -> SegmentMatch:
    image = moebius_image_interval(w.moebius, s1.domain)
    return SegmentMatch(w, image, image.intersect(s2.domain))


def segment_similarities(s1, s2) -> list[SegmentMatch]:
    """Whole-curve witnesses of two segments with the image of the first domain."""
    s1 = s1 if isinstance(s1, Segment) else Segment(*s1)
    s2 = s2 if isinstance(s2, Segment) else Segment(*s2)
    return [_match(w, s1, s2) for w in similar(s1.curve, s2.curve)]


class _PairTable:
    """Segment matches for all pairs, running detection once per pair of supports."""

    def __init__(self, p1: PiecewiseCurve, p2: PiecewiseCurve):
        self.p1, self.p2 = p1, p2
        c1 = _distinct(s.curve for s in p1)
        c2 = _distinct(s.curve for s in p2)
        cache: dict = {}
        self.cells = {}
        for i, s1 in enumerate(p1):
            for j, s2 in enumerate(p2):
                key = (c1[i], c2[j])
                if key not in cache:
                    cache[key] = similar(s1.curve, s2.curve)
                self.cells[i, j] = [_match(w, s1, s2) for w in cache[key]]

    def with_similarity(self, i: int, j: int, f) -> SegmentMatch | None:
        for m in self.cells[i, j]:
            if m.witness.similarity == f:
                return m
        return None


def _distinct(curves) -> list[int]:
    """Index of the first equal curve for every entry."""
    seen: list[ParamCurve] = []
    out = []
    for c in curves:
        for k, d in enumerate(seen):
            if c == d:
                out.append(k)
                break
        else:
            seen.append(c)
            out.append(len(seen) - 1)
    return out


def _substantial(s: IntervalSet) -> bool:
    return any(not iv.is_point() for iv in s)


def _covered(target: ParamInterval, pieces: list[IntervalSet]) -> bool:
    """Target lies inside the union of the pieces meeting it in more than a point.

    Pieces may stick out of the target; the part outside is accounted for
    when the neighbouring targets are checked.
    """
    def meets(p: IntervalSet) -> bool:
        common = p.intersect(target)
        return not common.is_empty() if target.is_point() else _substantial(common)

    whole = IntervalSet([target])
    used = [iv for p in pieces if meets(p) for iv in p]
    return IntervalSet(used).intersect(whole) == whole


def _admitted(table: _PairTable, f) -> bool:
    p1, p2 = table.p1, table.p2
    for i, s1 in enumerate(p1):
        pieces = []
        for j, s2 in enumerate(p2):
            m = table.with_similarity(i, j, f)
            if m is not None:
                pieces.append(moebius_image_interval(m.witness.moebius.inverse(), s2.domain))
        if not _covered(s1.domain, pieces):
            return False
    for j, s2 in enumerate(p2):
        pieces = []
        for i, s1 in enumerate(p1):
            m = table.with_similarity(i, j, f)
            if m is not None:
                pieces.append(m.image)
        if not _covered(s2.domain, pieces):
            return False
    return True


def global_similar(p1: PiecewiseCurve, p2: PiecewiseCurve) -> list[SimilarityWitness]:
    """Similarities f mapping the piecewise curve p1 exactly onto p2.

    Every piece of p1 must be carried by f onto a union of pieces of p2
    and conversely.  The witnesses returned are those of the first piece
    of p1.
    """
    table = _PairTable(p1, p2)
    candidates: list[SimilarityWitness] = []
    for j in range(len(p2)):
        for m in table.cells[0, j]:
            f = m.witness.similarity
            if any(c.similarity == f for c in candidates):
                continue
            if _substantial(m.overlap) or p1[0].domain.is_point():
                candidates.append(m.witness)
    return [w for w in candidates if _admitted(table, w.similarity)]


def partial_similar(p1: PiecewiseCurve, p2: PiecewiseCurve, *,
                    allow_point: bool = False) -> list[PartialMatch]:
    """All (i, j, witness, J') with J' = phi(I_i) meet J_j nonempty.

    A single-point J' is reported only with ``allow_point`` or when both
    domains are themselves single points.
    """
    table = _PairTable(p1, p2)
    out = []
    for (i, j), matches in table.cells.items():
        both_points = p1[i].domain.is_point() and p2[j].domain.is_point()
        for m in matches:
            if m.overlap.is_empty():
                continue
            if not (_substantial(m.overlap) or allow_point or both_points):
                continue
            out.append(PartialMatch(i, j, m.witness, m.overlap))
    return out
