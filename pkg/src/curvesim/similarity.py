"""Plane similarities z -> a*z + b and z -> a*conj(z) + b.

The coefficients a and b are :class:`~curvesim.realroots.AlgComplex`
values over Q or over a number field Q(theta).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import GaussianRational
from .realroots import AlgComplex, AlgebraicReal, real_sqrt

__all__ = [
    "Orientation",
    "Similarity",
    "SimilarityKind",
    "Kind",
    "classify",
    "is_isometry",
    "similarity_compose",
    "similarity_inverse",
]


class Orientation(str, Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"


class Kind(str, Enum):
    IDENTITY = "Identity"
    TRANSLATION = "Translation"
    ROTATION = "Rotation"
    SPIRAL_SIMILARITY = "SpiralSimilarity"
    AXIS_REFLECTION = "AxisReflection"
    GLIDE_REFLECTION = "GlideReflection"
    REVERSING_SPIRAL = "ReversingSpiral"


def _c(x) -> AlgComplex:
    if isinstance(x, complex):
        x = GaussianRational.coerce(x)
    return AlgComplex.coerce(x)


class Similarity:
    """f(z) = a*z + b (preserving) or a*conj(z) + b (reversing)."""

    __slots__ = ("orientation", "a", "b")

    def __init__(self, orientation, a, b=0):
        self.orientation = Orientation(orientation)
        self.a = _c(a)
        self.b = _c(b)
        if not self.a:
            raise ValueError("a similarity needs a != 0")

    @property
    def preserving(self) -> bool:
        return self.orientation is Orientation.PRESERVING

    @property
    def a_re(self):
        return self.a.re

    @property
    def a_im(self):
        return self.a.im

    @property
    def b_re(self):
        return self.b.re

    @property
    def b_im(self):
        return self.b.im

    def __call__(self, z):
        z = _c(z)
        return self.a * (z if self.preserving else z.conjugate()) + self.b

    def inverse(self) -> "Similarity":
        if self.preserving:
            ai = self.a.inverse()
            return Similarity(self.orientation, ai, -self.b * ai)
        ai = self.a.conjugate().inverse()
        return Similarity(self.orientation, ai, -self.b.conjugate() * ai)

    def compose(self, other: "Similarity") -> "Similarity":
        """self o other."""
        if self.preserving:
            a, b = self.a * other.a, self.a * other.b + self.b
        else:
            a = self.a * other.a.conjugate()
            b = self.a * other.b.conjugate() + self.b
        same = self.preserving == other.preserving
        return Similarity(Orientation.PRESERVING if same else Orientation.REVERSING, a, b)

    def __matmul__(self, other):
        return self.compose(other)

    def __eq__(self, other):
        if not isinstance(other, Similarity):
            return NotImplemented
        return (self.orientation == other.orientation and self.a == other.a
                and self.b == other.b)

    __hash__ = None

    def numeric(self) -> tuple[complex, complex]:
        return complex(self.a), complex(self.b)

    def __repr__(self):
        a, b = self.numeric()
        form = "z" if self.preserving else "conj(z)"
        return f"Similarity({a:.6g}*{form} + {b:.6g})"


def similarity_compose(f: Similarity, g: Similarity) -> Similarity:
    return f.compose(g)


def similarity_inverse(f: Similarity) -> Similarity:
    return f.inverse()


def is_isometry(f: Similarity) -> bool:
    return f.a.norm() == 1


@dataclass(eq=False)
class SimilarityKind:
    """Geometric type of a similarity.

    ``axis`` is a triple (A, B, C) describing the line A*x + B*y = C;
    ``glide`` is the translation part along the axis of a glide reflection.
    """

    tag: Kind
    ratio: AlgebraicReal
    angle_cos: AlgebraicReal
    angle_sin: AlgebraicReal
    fixed_point: AlgComplex | None = None
    axis: tuple | None = None
    glide: AlgComplex | None = None
    translation: AlgComplex | None = None

    def describe(self, digits: int = 6) -> str:
        parts = [self.tag.value, f"ratio={float(self.ratio):.{digits}g}"]
        parts.append(f"cos={float(self.angle_cos):.{digits}g}")
        parts.append(f"sin={float(self.angle_sin):.{digits}g}")
        if self.fixed_point is not None:
            parts.append(f"fixed_point={complex(self.fixed_point):.{digits}g}")
        if self.axis is not None:
            A, B, C = (float(v) for v in self.axis)
            parts.append(f"axis: {A:.{digits}g}*x + {B:.{digits}g}*y = {C:.{digits}g}")
        if self.glide is not None:
            parts.append(f"glide={complex(self.glide):.{digits}g}")
        if self.translation is not None:
            parts.append(f"translation={complex(self.translation):.{digits}g}")
        return ", ".join(parts)


def _unit_component(x, norm) -> AlgebraicReal:
    """x / sqrt(norm) as an algebraic real."""
    if x == 0:
        return AlgebraicReal.from_rational(0)
    s = real_sqrt(x * x / norm)
    return s if x > 0 else -s


def classify(f: Similarity) -> SimilarityKind:
    a, b = f.a, f.b
    n = a.norm()
    ratio = real_sqrt(n)
    cos, sin = _unit_component(a.re, n), _unit_component(a.im, n)
    iso = n == 1
    if f.preserving:
        if a == 1:
            if not b:
                return SimilarityKind(Kind.IDENTITY, ratio, cos, sin)
            return SimilarityKind(Kind.TRANSLATION, ratio, cos, sin, translation=b)
        z0 = b / (1 - a)
        tag = Kind.ROTATION if iso else Kind.SPIRAL_SIMILARITY
        return SimilarityKind(tag, ratio, cos, sin, fixed_point=z0)
    if not iso:
        z0 = (a * b.conjugate() + b) / (1 - n)
        return SimilarityKind(Kind.REVERSING_SPIRAL, ratio, cos, sin, fixed_point=z0)
    # reversing isometry: f(f(z)) = z + (a*conj(b) + b)
    tau = (a * b.conjugate() + b) * Fraction(1, 2)
    c = (b - a * b.conjugate()) * Fraction(1, 2)
    p, q = a.re, a.im
    if p != 1:
        axis = (Fraction(1), -q / (1 - p), c.re / (1 - p))
    else:
        axis = (Fraction(0), Fraction(1), c.im / 2)
    if not tau:
        return SimilarityKind(Kind.AXIS_REFLECTION, ratio, cos, sin, axis=axis)
    return SimilarityKind(Kind.GLIDE_REFLECTION, ratio, cos, sin, axis=axis, glide=tau)
