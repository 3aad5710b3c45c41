import json
import subprocess
import sys

import pytest

from nilhall.cli import run
from nilhall.polyring import parse
from nilhall.hallpolys import theorem_polynomials


@pytest.fixture
def groups(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return {
        "heis": write("heisenberg.json", {"n": 3, "t": {"123": 1}}),
        "free": write("free-abelian.json", {"n": 5, "t": {}}),
        "bad": write("bad.json", {"n": 5, "t": {"123": 1, "345": 1}}),
        "g5": write("g5.json", {"n": 5, "t": {"123": 2, "124": -1, "134": 1,
                                               "145": 2, "234": 3, "245": 6, "135": 1}}),
        "junk": write("junk.json", {"n": 5, "t": {"999": 1}}),
    }


def test_mul_heisenberg(groups):
    assert run(["mul", "-g", groups["heis"], "0,1,0", "1,0,0"]) == (0, ["1,1,1"])


def test_check_free_abelian(groups):
    code, out = run(["check", "-g", groups["free"]])
    assert code == 0 and out[0] == "consistent"


def test_check_bad(groups):
    code, out = run(["check", "-g", groups["bad"]])
    assert code == 1
    assert out[0] == "inconsistent"
    assert "t123*t345 = 1 != 0" in out
    assert out[-1] == "failing relations: R2"


def test_oracle_flags(groups):
    g = groups["g5"]
    for argv in (["mul", "-g", g, "1,-2,3,0,5", "-4,2,0,1,1"],
                 ["pow", "-g", g, "-1,2,3,4,5", "-7"],
                 ["inv", "-g", g, "3,-1,2,2,0"],
                 ["comm", "-g", g, "1,2,3,4,5", "0,1,0,0,1"]):
        code, out = run(argv + ["--oracle"])
        assert code == 0 and out[-1] == "match"
        assert out[0].split()[1] == out[1].split()[1]


def test_arith_on_inconsistent_group(groups):
    code, out = run(["mul", "-g", groups["bad"], "0,0,0,0,0", "0,0,0,0,0"])
    assert code == 1 and len(out) == 1 and out[0].startswith("error:")


@pytest.mark.parametrize("argv", [
    ["mul", "-g", "HEIS", "0,1", "1,0,0"],
    ["mul", "-g", "HEIS", "0,x,0", "1,0,0"],
    ["frobnicate"],
    ["check", "-g", "JUNK"],
    ["check", "-g", "/nonexistent/file.json"],
])
def test_parse_errors_exit_2(groups, argv):
    argv = [groups["heis"] if a == "HEIS" else groups["junk"] if a == "JUNK" else a for a in argv]
    code, out = run(argv)
    assert code == 2
    assert len(out) == 1 and out[0].startswith("error:")


def test_hall_print_roundtrip():
    code, out = run(["hall", "--print"])
    assert code == 0 and len(out) == 5
    assert tuple(parse(line) for line in out) == tuple(theorem_polynomials())


def test_hall_print_specialised(groups):
    code, out = run(["hall", "-g", groups["heis"], "--print"])
    assert out == ["a1 + b1", "a2 + b2", "a2*b1 + a3 + b3"]


def test_derive():
    code, out = run(["derive"])
    assert code == 0
    assert out[0] == "derived:" and "comparison:" in out
    assert out[-5:] == ["  p%d: identical" % i for i in range(1, 6)]


def test_selftest_deterministic():
    argv = ["selftest", "--trials", "40", "--seed", "3"]
    first, second = run(argv), run(argv)
    assert first == second
    code, out = first
    assert code == 0
    assert out[0].startswith("selftest seed=3 trials=40")
    assert out[-1] == "all suites passed"


def test_module_entry_point(groups):
    proc = subprocess.run([sys.executable, "-m", "nilhall", "mul", "-g", groups["heis"],
                           "0,1,0", "1,0,0"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1,1,1\n"
