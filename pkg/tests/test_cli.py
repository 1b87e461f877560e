import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from curvesim import cli
from curvesim.arith import Poly, RatFunc
from curvesim.catalog import named_curves
from curvesim.curve import ParamCurve
from curvesim.curvefile import save_curve
from curvesim.piecewise import PiecewiseCurve

from conftest import deltoid, image_deltoid, shifted_deltoid

x = Poly.x()


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / f"{name}.json"
        save_curve(path, obj, name)
        return str(path)
    return write


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_similar_deltoid_pair(files, capsys):
    a, b = files("a", shifted_deltoid()), files("b", image_deltoid())
    code, out, _ = run(capsys, "similar", a, b, "--precision", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "TRUE" and lines[1] == "6 witnesses"
    assert out.count("b = (1) + (2)i") == 6


def test_similar_json(files, capsys):
    a, b = files("a", shifted_deltoid()), files("b", image_deltoid())
    code, out, _ = run(capsys, "similar", a, b, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["similar"] and doc["count"] == 6
    assert all(w["verified"] for w in doc["witnesses"])
    for w in doc["witnesses"]:
        assert (w["b"]["re"]["exact"], w["b"]["im"]["exact"]) == ("1", "2")


def test_similar_self_has_identity(files, capsys):
    a = files("a", deltoid())
    code, out, _ = run(capsys, "similar", a, a, "--json")
    doc = json.loads(out)
    assert code == 0
    assert any(w["kind"]["tag"] == "Identity" for w in doc["witnesses"])


def test_similar_false(files, capsys):
    a = files("a", deltoid())
    b = files("b", ParamCurve(RatFunc(x ** 4 + x, (x ** 2 + 1) ** 2),
                              RatFunc(x ** 3 - 2, (x ** 2 + 1) ** 2)))
    code, out, _ = run(capsys, "similar", a, b)
    assert code == 1 and out.splitlines()[0] == "FALSE"


def test_similar_unequal_degrees(files, capsys):
    a, b = files("a", deltoid()), files("b", ParamCurve(RatFunc(x ** 2), RatFunc(x ** 3)))
    code, out, _ = run(capsys, "similar", a, b)
    assert code == 1 and "unequal degrees" in out


def test_circle_is_input_error(files, capsys):
    a = files("a", deltoid())
    c = files("c", ParamCurve(RatFunc(1 - x ** 2, 1 + x ** 2), RatFunc(2 * x, 1 + x ** 2)))
    code, _, err = run(capsys, "similar", a, c)
    assert code == 2 and "CurveIsCircle" in err


def test_bad_file_is_input_error(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"x": {"num": ["0.5"]}, "y": {"num": ["1"]}}')
    code, _, err = run(capsys, "symmetries", str(p))
    assert code == 2 and "$.x.num[0]" in err


@pytest.mark.parametrize("name, count", [("deltoid", 6), ("folium", 2), ("epitrochoid", 2)])
def test_symmetries_counts(files, capsys, name, count):
    f = files(name, named_curves()[name])
    code, out, _ = run(capsys, "symmetries", f, "--json")
    assert code == 0 and json.loads(out)["count"] == count


def test_symmetries_text(files, capsys):
    code, out, _ = run(capsys, "symmetries", files("d", deltoid()))
    assert "6 witnesses" in out
    assert out.count("AxisReflection") == 3 and out.count("Rotation") == 2


def test_identify(files, capsys, tmp_path):
    db = tmp_path / "db"
    db.mkdir()
    for name in ("deltoid", "folium"):
        save_curve(db / f"{name}.json", named_curves()[name], name)
    code, out, _ = run(capsys, "identify", files("q", image_deltoid()), "--db", str(db))
    assert code == 0 and out.startswith("deltoid  (6 similarities")
    assert "a = (0) + (-1/2)i" in out
    other = ParamCurve(RatFunc(x ** 4 - 3 * x + 1, x ** 2 + 2), RatFunc(2 * x ** 3 + x, x ** 2 + 2))
    code, out, _ = run(capsys, "identify", files("u", other), "--db", str(db))
    assert code == 1 and out.strip() == "unknown"


def test_identify_env_db(files, capsys, tmp_path, monkeypatch):
    db = tmp_path / "db"
    db.mkdir()
    save_curve(db / "mine.json", deltoid(), "mine")
    monkeypatch.setenv("CURVESIM_DB", str(db))
    code, out, _ = run(capsys, "identify", files("q", deltoid()), "--json")
    assert code == 0 and [m["name"] for m in json.loads(out)["matches"]] == ["mine"]


def test_plot_svg(files, capsys, tmp_path):
    out = tmp_path / "d.svg"
    code, _, _ = run(capsys, "plot", files("d", deltoid()), "-o", str(out),
                     "--window", "-5", "5", "--samples", "60")
    assert code == 0
    root = ET.fromstring(out.read_text())
    assert len(root.findall("{http://www.w3.org/2000/svg}polyline")) == 1


def test_plot_line_and_piecewise(files, capsys):
    code, out, _ = run(capsys, "plot", files("l", ParamCurve(RatFunc(x), RatFunc(2 * x))))
    assert code == 0 and out.count("<polyline") == 1
    p = PiecewiseCurve([(shifted_deltoid(), (-1, 0)), (shifted_deltoid(), (0, 1))])
    code, out, _ = run(capsys, "plot", files("p", p))
    assert code == 0 and out.count("<polyline") == 2


def test_plot_bad_window(files, capsys):
    code, _, _ = run(capsys, "plot", files("d", deltoid()), "--window", "1", "1")
    assert code == 2


def test_piecewise_global_and_partial(files, capsys):
    z1, z2 = shifted_deltoid(), image_deltoid()
    p1 = files("p1", PiecewiseCurve([(z1, (-1, 0)), (z1, (0, 1))]))
    p2 = files("p2", PiecewiseCurve([(z2, (-2, -1)), (z2, (-1, 0))]))
    p3 = files("p3", PiecewiseCurve([(z2, (-2, -1)), (z2, (-1, F(-1, 10)))]))
    code, out, _ = run(capsys, "piecewise", p1, p2)
    assert code == 0 and out.startswith("TRUE\n1 witness\n")
    code, out, _ = run(capsys, "piecewise", p1, p3)
    assert code == 1 and out.startswith("FALSE")
    code, out, _ = run(capsys, "piecewise", p1, p3, "--partial", "--json")
    doc = json.loads(out)
    assert code == 0
    short = [m for m in doc["matches"] if m["j"] == 1
             and m["witness"]["a"]["im"]["exact"] == "-1/2" and m["witness"]["a"]["re"]["exact"] == "0"]
    assert len(short) == 1
    ((lo, hi),) = short[0]["overlap"]
    assert (lo["exact"], hi["exact"]) == ("-1", "-1/10")


def test_piecewise_needs_piecewise_file(files, capsys):
    a = files("a", deltoid())
    code, _, err = run(capsys, "piecewise", a, a)
    assert code == 2 and "piecewise" in err


def test_bench_deterministic(capsys, tmp_path):
    d1, d2 = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["bench", "--degrees", "3", "--bitsizes", "2", "--trials", "2", "--seed", "5"]
    assert cli.main(argv + ["--dump", str(d1)]) == 0
    assert cli.main(argv + ["--dump", str(d2)]) == 0
    out = capsys.readouterr().out
    assert "not comparable" in out
    c1 = json.loads(d1.read_text())["cells"]
    c2 = json.loads(d2.read_text())["cells"]
    assert [c["instances"] for c in c1] == [c["instances"] for c in c2]


def test_bench_empty_grid(capsys):
    code, out, _ = run(capsys, "bench", "--degrees", "", "--bitsizes", "1")
    assert code == 0 and out.startswith("(empty grid)")


def test_bench_bad_config(capsys):
    code, _, _ = run(capsys, "bench", "--degrees", "1", "--bitsizes", "1")
    assert code == 2


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "curvesim.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "curvesim" in proc.stdout
