"""Exact detection of similarities and symmetries of rational plane curves."""

__version__ = "0.1.0"

from .arith import GaussianRational, Poly, RatFunc, poly_gcd, poly_squarefree_part
from .curve import ParamCurve, is_circle, is_line, is_proper, validate
from .detect import (
    Branch,
    ConditionSystem,
    SimilarityWitness,
    check_identity,
    similar,
    similar_gen,
    similar_pol,
    symmetries,
)
from .errors import (
    CurveFileError,
    CurveIsCircle,
    CurveIsLine,
    CurvesimError,
    DegenerateInput,
    ImproperParametrization,
    IncompatibleExtensions,
    InternalDegenerate,
    PreconditionViolated,
    UnequalDegrees,
    ZeroDenominator,
)
from .moebius import IntervalSet, Moebius, ParamInterval
from .piecewise import PiecewiseCurve, global_similar, partial_similar
from .realroots import AlgComplex, AlgebraicReal, AlgElem, count_real_roots, isolate_real_roots
from .similarity import Kind, Orientation, Similarity, classify, is_isometry

__all__ = [
    "AlgComplex", "AlgElem", "AlgebraicReal", "Branch", "ConditionSystem",
    "CurveFileError", "CurveIsCircle", "CurveIsLine", "CurvesimError",
    "DegenerateInput", "GaussianRational", "ImproperParametrization",
    "IncompatibleExtensions", "InternalDegenerate", "IntervalSet", "Kind",
    "Moebius", "Orientation", "ParamCurve", "ParamInterval", "PiecewiseCurve",
    "Poly", "PreconditionViolated", "RatFunc", "Similarity", "SimilarityWitness",
    "UnequalDegrees", "ZeroDenominator", "check_identity", "classify",
    "count_real_roots", "global_similar", "is_circle", "is_isometry", "is_line",
    "is_proper", "isolate_real_roots", "partial_similar", "poly_gcd",
    "poly_squarefree_part", "similar", "similar_gen", "similar_pol", "symmetries",
    "validate",
]
