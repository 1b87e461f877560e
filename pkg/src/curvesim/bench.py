"""Timing harness over random parametrizations.

Instances are pairs of random curves of a given degree whose integer
coefficients are drawn uniformly from [-2**tau + 1, 2**tau - 1]: polynomial
curves for mode ``pol`` and curves with a common random denominator for
mode ``gen``.
Each grid cell (degree, bitsize) gets its own generator seeded from the
global seed, so instance content is reproducible cell by cell.
"""

from __future__ import annotations

import hashlib
import random
import statistics
import time
from dataclasses import asdict, dataclass, field

from .arith import Poly, RatFunc
from .curve import ParamCurve, precondition, validate
from .detect import similar_gen, similar_pol
from .errors import CurvesimError

__all__ = [
    "BenchConfig",
    "CellResult",
    "bitsize",
    "random_coefficient",
    "random_polynomial_curve",
    "random_rational_curve",
    "make_instance",
    "run_bench",
    "format_table",
    "DISCLAIMER",
]

DISCLAIMER = ("Timings are wall-clock seconds of this implementation on this "
              "machine; they are not comparable to any published CPU times.")


def bitsize(k: int) -> int:
    """ceil(log2 |k|) + 1, with bitsize(0) = 1."""
    k = abs(k)
    if k <= 1:
        return 1
    return (k - 1).bit_length() + 1


@dataclass
class BenchConfig:
    degrees: list[int]
    bitsizes: list[int]
    trials: int = 3
    mode: str = "gen"
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("pol", "gen"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if any(d < 2 for d in self.degrees):
            raise ValueError("degrees must be at least 2")
        if any(t < 1 for t in self.bitsizes):
            raise ValueError("bitsizes must be at least 1")


@dataclass
class CellResult:
    degree: int
    bitsize: int
    times: list[float] = field(default_factory=list)
    witnesses: list[int] = field(default_factory=list)
    instances: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    @property
    def mean(self) -> float:
        return statistics.fmean(self.times) if self.times else float("nan")

    @property
    def min(self) -> float:
        return min(self.times) if self.times else float("nan")

    @property
    def max(self) -> float:
        return max(self.times) if self.times else float("nan")

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(mean=self.mean, min=self.min, max=self.max)
        return d


def random_coefficient(rng: random.Random, tau: int) -> int:
    m = 2 ** tau - 1
    return rng.randint(-m, m)


def _random_poly(rng: random.Random, degree: int, tau: int) -> Poly:
    return Poly([random_coefficient(rng, tau) for _ in range(degree + 1)])


def _accept(z: ParamCurve, degree: int) -> bool:
    if z.degree() != degree:
        return False
    try:
        validate(z)
    except CurvesimError:
        return False
    return True


def random_polynomial_curve(rng: random.Random, degree: int, tau: int,
                            max_tries: int = 1000) -> ParamCurve:
    """Random valid polynomial curve of exact degree ``degree``."""
    for _ in range(max_tries):
        z = ParamCurve(RatFunc(_random_poly(rng, degree, tau)),
                       RatFunc(_random_poly(rng, degree, tau)))
        if _accept(z, degree):
            return z
    raise RuntimeError(f"no valid curve of degree {degree} found")


def random_rational_curve(rng: random.Random, degree: int, tau: int,
                          max_tries: int = 1000) -> ParamCurve:
    """Random valid curve (X/W, Y/W) of exact degree ``degree``, W nonconstant."""
    for _ in range(max_tries):
        w = _random_poly(rng, degree, tau)
        if w.degree() < 1:
            continue
        z = ParamCurve(RatFunc(_random_poly(rng, degree, tau), w),
                       RatFunc(_random_poly(rng, degree, tau), w))
        if not z.is_polynomial() and _accept(z, degree):
            return z
    raise RuntimeError(f"no valid curve of degree {degree} found")


def make_instance(rng: random.Random, degree: int, tau: int, mode: str = "pol"):
    gen = random_polynomial_curve if mode == "pol" else random_rational_curve
    return gen(rng, degree, tau), gen(rng, degree, tau)


def _digest(z1: ParamCurve, z2: ParamCurve) -> str:
    text = repr((z1.x, z1.y, z2.x, z2.y))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _solve(mode: str, z1: ParamCurve, z2: ParamCurve):
    if mode == "pol":
        z1p, _ = precondition(z1, "pol")
        return similar_pol(z1p, z2)
    return similar_gen(z1, z2, check=False)


def run_cell(config: BenchConfig, degree: int, tau: int, progress=None) -> CellResult:
    rng = random.Random(f"{config.seed}:{config.mode}:{degree}:{tau}")
    cell = CellResult(degree, tau)
    for _ in range(config.trials):
        z1, z2 = make_instance(rng, degree, tau, config.mode)
        cell.instances.append(_digest(z1, z2))
        start = time.perf_counter()
        try:
            ws = _solve(config.mode, z1, z2)
        except CurvesimError as exc:
            cell.errors.append(f"{type(exc).__name__}: {exc}")
            continue
        cell.times.append(time.perf_counter() - start)
        cell.witnesses.append(len(ws))
        if progress is not None:
            progress(cell)
    return cell


def run_bench(config: BenchConfig, progress=None) -> list[CellResult]:
    return [run_cell(config, d, tau, progress)
            for d in config.degrees for tau in config.bitsizes]


def format_table(config: BenchConfig, cells: list[CellResult]) -> str:
    """Rows by degree, columns by bitsize; each entry mean [min, max] seconds."""
    if not cells:
        return "(empty grid)"
    by_key = {(c.degree, c.bitsize): c for c in cells}
    header = [f"t_{config.mode}"] + [f"tau={t}" for t in config.bitsizes]
    rows = [header]
    for d in config.degrees:
        row = [f"d={d}"]
        for t in config.bitsizes:
            c = by_key[(d, t)]
            row.append(f"{c.mean:.3f} [{c.min:.3f}, {c.max:.3f}]" if c.times else "error")
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = ["  ".join(s.rjust(w) for s, w in zip(r, widths)) for r in rows]
    return "\n".join(lines)
