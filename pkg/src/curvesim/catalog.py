"""Named classical curves and curve identification against a database.

The database is a directory of curve files (``*.json``); the bundled one
lives in the package under ``data/db``.  The environment variable
``CURVESIM_DB`` points identification at another directory.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from pathlib import Path

from .arith import GaussianRational, Poly
from .curve import ParamCurve
from .curvefile import load_curve, save_curve
from .detect import SimilarityWitness, similar
from .errors import CurveFileError

__all__ = [
    "deltoid",
    "folium",
    "lemniscate",
    "epitrochoid",
    "cardioid_offset",
    "hypocycloid",
    "rose",
    "named_curves",
    "default_db_path",
    "load_database",
    "write_database",
    "identify",
    "Match",
]

_I = Poly([GaussianRational(0, 1)])


def _complex(re: list, im: list, den: list) -> ParamCurve:
    return ParamCurve.from_complex(Poly(re) + _I * Poly(im), Poly(den))


def deltoid() -> ParamCurve:
    return _complex([3, 0, -6, 0, -1], [0, 0, 0, 8], [1, 0, 2, 0, 1])


def folium() -> ParamCurve:
    return _complex([0, 3], [0, 0, 3], [1, 0, 0, 1])


def lemniscate() -> ParamCurve:
    return _complex([-3, -2, 0, 2, 3], [-1, -6, 0, 6, 1], [5, 12, 30, 12, 5])


def epitrochoid() -> ParamCurve:
    return _complex([256, 0, 288, 0, -7], [0, 256, 0, -80], [256, 0, 32, 0, 1])


def cardioid_offset() -> ParamCurve:
    re = [-39366, 0, 61236, -31104, 0, 3456, -756, 0, 6]
    im = [-18 * c for c in (0, 4374, -1296, -1134, 864, -126, -16, 6)]
    den = [6561, 0, 2916, 0, 486, 0, 36, 0, 1]
    return _complex(re, im, den)


def hypocycloid() -> ParamCurve:
    re = [16, 0, -224, -608, -680, -384, -120, -24, -3]
    im = [64, 192, 256, 320, 400, 304, 112, 16]
    den = [16, 64, 128, 160, 136, 80, 32, 8, 1]
    return _complex(re, im, den)


def rose(n: int) -> ParamCurve:
    """Rose with 2n petals, of degree 2n + 2."""
    s = [0] * (2 * n + 1)
    for k in range(n + 1):
        s[2 * k] = comb(2 * n, 2 * k) * (-1) ** k
    num = (Poly([0, 2]) + _I * Poly([1, 0, -1])) * Poly(s)
    return ParamCurve.from_complex(num, Poly([1, 0, 1]) ** (n + 1))


def named_curves() -> dict[str, ParamCurve]:
    out = {
        "deltoid": deltoid(),
        "folium": folium(),
        "lemniscate": lemniscate(),
        "epitrochoid": epitrochoid(),
        "cardioid-offset": cardioid_offset(),
        "hypocycloid": hypocycloid(),
    }
    for n in (2, 4, 6, 8, 10):
        out[f"rose-{2 * n}"] = rose(n)
    return out


def default_db_path() -> Path:
    env = os.environ.get("CURVESIM_DB")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data" / "db"


def load_database(path=None) -> dict[str, ParamCurve]:
    """Name to curve for every rational curve file of a directory."""
    path = Path(path) if path is not None else default_db_path()
    if not path.is_dir():
        raise CurveFileError(f"{path}: database directory not found")
    out = {}
    for f in sorted(path.glob("*.json")):
        z = load_curve(f)
        if isinstance(z, ParamCurve):
            out[f.stem] = z
    return out


def write_database(path) -> None:
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    for name, z in named_curves().items():
        save_curve(path / f"{name}.json", z, name)


@dataclass
class Match:
    name: str
    witness: SimilarityWitness
    count: int


def identify(z: ParamCurve, database: dict[str, ParamCurve] | None = None) -> list[Match]:
    """Database entries similar to z, each with one witness.

    Only entries of the same degree are compared, since a similarity
    preserves the degree of a proper parametrization.  The witness shown
    is one with a rational parameter when such a witness exists.
    """
    db = load_database() if database is None else database
    out = []
    for name, entry in db.items():
        if entry.degree() != z.degree():
            continue
        ws = similar(entry, z, check=False)
        if ws:
            shown = next((w for w in ws if w.beta.is_rational()), ws[0])
            out.append(Match(name, shown, len(ws)))
    return out
