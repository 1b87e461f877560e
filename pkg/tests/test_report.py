from fractions import Fraction as F

from hypothesis import given
from hypothesis import strategies as st

from curvesim.arith import Poly
from curvesim.detect import symmetries
from curvesim.realroots import AlgElem, count_real_roots, isolate_real_roots
from curvesim.report import (
    exact_str,
    format_witness,
    isolating_interval,
    numeric,
    witness_report,
)

from conftest import deltoid


def sqrt(n):
    return isolate_real_roots(Poly([-n, 0, 1]))[1]


def test_numeric_rational():
    n = numeric(F(1, 3), 5)
    assert str(n) == "0.33333"
    assert n.lo <= F(1, 3) <= n.hi


def test_numeric_negative():
    assert str(numeric(F(-7, 4), 3)) == "-1.750"
    assert str(numeric(F(-1, 3), 2)) == "-0.33"


def test_numeric_sqrt2():
    r = numeric(sqrt(2), 12)
    assert str(r) == "1.414213562373"
    assert r.lo < r.hi and r.hi - r.lo <= F(2, 10 ** 12)


@given(st.integers(2, 200).filter(lambda n: int(n ** 0.5) ** 2 != n), st.integers(1, 30))
def test_numeric_encloses(n, k):
    r = sqrt(n)
    v = numeric(r, k)
    assert v.lo <= v.value <= v.hi
    assert v.hi - v.lo <= F(2, 10 ** k)
    # the enclosing interval really contains the root
    assert v.lo ** 2 <= n <= v.hi ** 2


def test_numeric_algelem():
    t = AlgElem.generator(sqrt(3))
    e = (t + 1) / 2
    v = numeric(e, 8)
    # (2*lo - 1)^2 <= 3 <= (2*hi - 1)^2 brackets (sqrt(3) + 1)/2
    assert (2 * v.lo - 1) ** 2 <= 3 <= (2 * v.hi - 1) ** 2
    assert str(v) == "1.36602540"


def test_exact_strings():
    assert exact_str(F(5, 2)) == "5/2"
    r = sqrt(2)
    s = exact_str(r)
    assert s.startswith("root of theta^2 - 2 in [")
    t = AlgElem.generator(r)
    assert exact_str(t * t) == "2"
    assert "theta" in exact_str(t + 1)


def test_isolating_interval_on_grid():
    r = sqrt(2)
    iv = isolating_interval(r, 6)
    assert iv.lo == F(1414213, 10 ** 6) and iv.hi == F(1414214, 10 ** 6)
    assert count_real_roots(r.minpoly, iv) == 1


def test_witness_report_deltoid():
    ws = symmetries(deltoid())
    reps = [witness_report(w, 6) for w in ws]
    assert all(r["verified"] for r in reps)
    kinds = sorted(r["kind"]["tag"] for r in reps)
    assert kinds.count("AxisReflection") == 3
    for r in reps:
        for part in ("re", "im"):
            v = r["a"][part]
            lo, hi = (F(s) for s in v["interval"])
            assert lo <= F(v["value"]) <= hi
        text = format_witness(r, 1)
        assert text.startswith("[1] ")


def test_report_names_precondition():
    rep = witness_report(symmetries(deltoid())[0])
    assert rep["precondition"]["curve"] == "z1"
    assert rep["precondition"]["moebius"]["gamma"] == "0"
