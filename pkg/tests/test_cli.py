import json
import re
import subprocess
import sys

import pytest

from orchard.cli import RunReport, main
from orchard.morphism import sigma_mutation
from orchard.io import load_configuration, parse_configuration

SQUARE = {"dim": 2, "points": [[0, 0], [1, 0], [1, 1], [0, 1]]}
# corner order for the flip example: (1,1) moves inside the triangle of the others
CORNERS = {"dim": 2, "points": [[0, 0], [1, 0], [0, 1], [1, 1]]}
CORNERS_MOVED = {"dim": 2, "points": [[0, 0], [1, 0], [0, 1], ["2/5", "2/5"]]}
TRIANGLE = {"dim": 2, "points": [[0, 0], [6, 0], [0, 6], [1, 1]]}
COLLINEAR = {"dim": 2, "points": [[0, 0], [1, 1], [2, 2], [5, 0]]}
LINES3 = {"dim": 2, "antipodal": True, "points": [[1, 0], [0, 1], [1, 1]]}
LINES4 = {"dim": 2, "antipodal": True, "points": [[1, 0], [0, 1], [1, 1], [1, -1]]}
PARALLEL = {"dim": 2, "antipodal": True, "points": [[1, 0], [2, 0], [0, 1]]}
CIRCLE6 = {"dim": 2, "points": [[0, 0], [7, 1], [3, 9], [-4, 5], [11, -6], [2, -8]]}
CONCYCLIC = {"dim": 2, "points": [[3, 4], [4, 3], [5, 0], [0, 5], [-3, 4], [-4, -3]]}


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_color_square(capsys, write):
    code, out, _ = run(capsys, "color", write("sq.json", SQUARE))
    assert code == 0
    assert out.splitlines() == ["cherry: 0 2", "plum: 1 3"]


def test_color_show_s(capsys, write):
    code, out, _ = run(capsys, "color", write("sq.json", SQUARE), "--show-s", "--verify")
    assert code == 0
    rows = out.splitlines()[3:]
    assert [list(map(int, r.split())) for r in rows] == [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]


def test_color_triangle(capsys, write):
    code, out, _ = run(capsys, "color", write("t.json", TRIANGLE))
    assert code == 0
    assert out.splitlines() == ["cherry: 0 1 2", "plum: 3"]


def test_color_three_dimensions_uses_neutral_names(capsys, write):
    cube = {"dim": 3, "points": [[0, 0, 0], [4, 0, 0], [0, 4, 0], [0, 0, 4], [1, 1, 1]]}
    code, out, _ = run(capsys, "color", write("c.json", cube))
    assert code == 0 and out.startswith("class_a:")


def test_color_collinear_exit_2(capsys, write):
    code, out, err = run(capsys, "color", write("col.json", COLLINEAR))
    assert code == 2 and out == ""
    assert "[0, 1, 2]" in err


def test_color_json_roundtrip(capsys, write):
    path = write("sq.json", SQUARE)
    code, out, _ = run(capsys, "--json", "color", path, "--show-s")
    assert code == 0
    data = json.loads(out)
    report = RunReport.from_json(data)
    assert report.dumps() == out
    assert report.command == "color" and report.seed == 0
    assert report.result["partition"]["classes"] == {"cherry": [0, 2], "plum": [1, 3]}
    assert re.fullmatch(r"[0-9a-f]{64}", report.inputs[0]["sha256"])
    assert "timing" not in data


def test_timing_flag(capsys, write):
    code, out, _ = run(capsys, "color", write("sq.json", SQUARE), "--json", "--timing")
    assert code == 0 and json.loads(out)["timing"] >= 0


def test_quiet(capsys, write):
    code, out, _ = run(capsys, "--quiet", "color", write("sq.json", SQUARE))
    assert code == 0 and out == ""


def test_svg(capsys, write, tmp_path):
    svg = tmp_path / "out.svg"
    config = {"dim": 2, "points": [[0, 0], [40, 3], [17, 29], [-8, 21], [25, -14], [5, 9], [33, 18]]}
    code, _, _ = run(capsys, "--json", "color", write("c.json", config), "--svg", str(svg))
    assert code == 0
    _, out, _ = run(capsys, "--json", "color", write("c.json", config))
    classes = json.loads(out)["result"]["partition"]["classes"]
    text = svg.read_text()
    circles = re.findall(r'<circle class="cherry"[^>]*><title>([^<]*)</title>', text)
    rects = re.findall(r'<rect class="plum"[^>]*><title>([^<]*)</title>', text)
    assert len(circles) + len(rects) == 7
    assert sorted(map(int, circles)) == classes["cherry"]
    assert sorted(map(int, rects)) == classes["plum"]
    assert set(re.findall(r'class="(\w+)"', text)) == {"cherry", "plum"}


def test_svg_needs_plane(capsys, write, tmp_path):
    config = {"dim": 1, "points": [[0], [3], [1], [7]]}
    code, _, err = run(capsys, "color", write("c.json", config), "--svg", str(tmp_path / "x.svg"))
    assert code == 1 and "planar" in err


def test_random_deterministic_and_colorable(capsys, write, tmp_path):
    _, first, _ = run(capsys, "random", "--n", "7", "--d", "2", "--seed", "42")
    _, second, _ = run(capsys, "random", "--n", "7", "--d", "2", "--seed", "42")
    assert first == second
    _, other, _ = run(capsys, "random", "--n", "7", "--d", "2", "--seed", "43")
    assert other != first
    out_path = tmp_path / "r.json"
    code, msg, _ = run(capsys, "random", "--n", "7", "--d", "2", "--seed", "42", "--out", str(out_path))
    assert code == 0 and "wrote 7 points" in msg
    assert json.loads(out_path.read_text()) == json.loads(first)
    config, _ = load_configuration(out_path)
    assert config.n == 7
    assert run(capsys, "color", str(out_path))[0] == 0


def test_random_generation_failure(capsys):
    code, _, err = run(capsys, "random", "--n", "4", "--d", "1", "--range", "1")
    assert code == 3 and "generic" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "core", "--n-max", "5")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oriented", "--json", "--seed", "5")
    assert code == 0
    report = RunReport.from_json(json.loads(out))
    assert report.result["passed"] and report.seed == 5
    assert {c["suite"] for c in report.result["checks"]} == {"oriented"}


def test_verify_failure_exit_code(capsys):
    def corrupt(phi, i, j, value):
        return -value if (i, j) == (0, 1) else value

    with sigma_mutation(corrupt):
        code, out, _ = run(capsys, "verify", "--suite", "core")
    assert code == 2
    assert "FAIL core/" in out


def test_verify_bad_n_max(capsys):
    assert run(capsys, "verify", "--n-max", "2")[0] == 1


def test_flip(capsys, write):
    a, b = write("a.json", CORNERS), write("b.json", CORNERS_MOVED)
    code, out, _ = run(capsys, "flip", "--a", a, "--b", b)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "flip of 1 2 3"
    assert lines[1] == "before: 0 3 | 1 2"
    assert lines[2] == "after:  0 1 2 | 3"
    code, out, _ = run(capsys, "flip", "--a", a, "--b", b, "--json")
    result = json.loads(out)["result"]
    assert result["flipset"] == [1, 2, 3]
    assert result["changed_pairs"] == [[0, 1], [0, 2], [0, 3]]


def test_flip_not_a_flip(capsys, write):
    a = write("a.json", SQUARE)
    code, out, _ = run(capsys, "flip", "--a", a, "--b", a)
    assert code == 0 and out.startswith("not a flip: 0")
    mirror = write("m.json", {"dim": 2, "points": [[-x, y] for x, y in SQUARE["points"]]})
    code, out, _ = run(capsys, "flip", "--a", a, "--b", mirror)
    assert code == 0 and out.startswith("not a flip: 4")


def test_flip_size_mismatch(capsys, write):
    code, _, _ = run(capsys, "flip", "--a", write("a.json", SQUARE), "--b", write("t.json", CIRCLE6))
    assert code == 1


def test_oriented_odd(capsys, write):
    code, out, _ = run(capsys, "oriented", "--input", write("l3.json", LINES3))
    assert code == 0
    assert out.splitlines() == [
        "parity: odd (semi-orientation)",
        "0: (1, 0)",
        "1: (0, 1)",
        "2: (-1, -1)",
    ]


def test_oriented_even(capsys, write):
    code, out, _ = run(capsys, "oriented", "--input", write("l4.json", LINES4))
    assert code == 0
    assert out.splitlines() == ["parity: even (two-partition of the lines)", "class_a: 0 1", "class_b: 2 3"]


def test_oriented_errors(capsys, write):
    assert run(capsys, "oriented", "--input", write("p.json", PARALLEL))[0] == 2
    assert run(capsys, "oriented", "--input", write("sq.json", SQUARE))[0] == 1
    assert run(capsys, "color", write("l3.json", LINES3))[0] == 1


def test_lift(capsys, write):
    path = write("c6.json", CIRCLE6)
    code, out, _ = run(capsys, "lift", "--basis", "circle", "--input", path)
    assert code == 0
    assert out.splitlines()[0] == "basis circle (lifted dimension 3)"
    assert out.splitlines()[-1] == "function separation agrees with the lifted partition"
    _, affine, _ = run(capsys, "lift", "--basis", "affine", "--input", path)
    _, color, _ = run(capsys, "color", path)
    assert affine.splitlines()[1:3] == color.splitlines()


@pytest.mark.parametrize("basis", ["circle", "conic"])
def test_lift_concyclic(capsys, write, basis):
    code, _, err = run(capsys, "lift", "--basis", basis, "--input", write("cc.json", CONCYCLIC))
    assert code == 2 and basis in err


def test_lift_bad_basis(capsys, write):
    assert run(capsys, "lift", "--basis", "spline", "--input", write("c6.json", CIRCLE6))[0] == 1
    cube = {"dim": 3, "points": [[0, 0, 0], [4, 0, 0], [0, 4, 0], [0, 0, 4]]}
    assert run(capsys, "lift", "--basis", "circle", "--input", write("c.json", cube))[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["random", "--n", "3"],
        ["random", "--n", "0", "--d", "2"],
        ["--seed", "-1", "verify"],
        ["--seed", str(2**64), "verify"],
        ["verify", "--suite", "nope"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""
    assert err.startswith("orchard") and "orchard: orchard:" not in err


def test_parse_errors(capsys, write, tmp_path):
    assert run(capsys, "color", write("bad.json", "{not json"))[0] == 1
    assert run(capsys, "color", write("f.json", {"dim": 2, "points": [[0.5, 1], [1, 2]]}))[0] == 1
    assert run(capsys, "color", str(tmp_path / "missing.json"))[0] == 1


def test_parse_configuration_rules():
    c = parse_configuration({"dim": 2, "points": [["1/2", 3], [0, "-2/3"]], "labels": ["p", "q"]})
    assert c.labels.labels == ("p", "q")
    for bad in [[], {"dim": 0, "points": []}, {"dim": 2, "points": [[1, 2, 3]]}, {"dim": 2, "points": [[1, 2]], "labels": []}]:
        with pytest.raises(ValueError):
            parse_configuration(bad)


def test_seed_accepts_hex(capsys):
    code, out, _ = run(capsys, "--json", "--seed", "0x10", "random", "--n", "3", "--d", "2")
    assert code == 0 and json.loads(out)["seed"] == 16


def test_module_entry_point_deterministic(write):
    path = write("sq.json", SQUARE)
    cmd = [sys.executable, "-m", "orchard", "--json", "color", path]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["result"]["partition"]["classes"]["cherry"] == [0, 2]
