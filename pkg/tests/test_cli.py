import io
import json
import subprocess
import sys

import pytest

from diocount.cli import main
from diocount.gdiv import div_zx
from diocount.qpoly import QuasiPoly


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = run(*argv)
    assert code == 0, err or out
    return out


def js(*argv):
    return json.loads(ok(*argv))


class TestSuccess:
    def test_divide(self):
        out = js("divide", "--f", "[0,0,1]", "--g", "[1,2]")
        ref = div_zx([0, 0, 1], [1, 2])
        assert QuasiPoly.from_json(out["quotient"]) == ref.quotient
        assert QuasiPoly.from_json(out["remainder"]) == ref.remainder

    def test_divide_fit_route(self):
        a = js("divide", "--f", "[0,0,1]", "--g", "[1,2]", "--method", "fit")
        b = js("divide", "--f", "[0,0,1]", "--g", "[1,2]")
        assert a["quotient"] == b["quotient"] and a["remainder"] == b["remainder"]

    def test_divide_periodic(self):
        out = js("divide", "--f", '{"period": 2, "constituents": [[0, 1], [1, 1]]}', "--g", "[2]")
        assert QuasiPoly.from_json(out["remainder"])(3) == 0

    def test_count(self):
        assert js("count", "--matrix", "[[2,3]]", "--rhs", "[7]") == {"count": 1}

    def test_count_sweep_csv(self):
        out = ok("count", "--matrix", "[[2,3]]", "--rhs", "[[0,1]]", "--n-range", "0:6", "--format", "csv")
        assert out.splitlines() == ["n,value", "0,1", "1,0", "2,1", "3,1", "4,1", "5,1", "6,2"]

    def test_ggcd(self):
        out = js("ggcd", "--inputs", "[[0,1],[1,1]]")
        assert QuasiPoly.from_json(out["gcd"]) == QuasiPoly.const(1)
        assert out["bezout_holds"]
        assert [QuasiPoly.from_json(c) for c in out["cofactors"]] == [QuasiPoly.const(-1), QuasiPoly.const(1)]

    def test_strongly_coprime(self):
        assert js("strongly-coprime", "--inputs", "[2,3,[1,6]]")["strongly_coprime"]
        assert not js("strongly-coprime", "--inputs", "[2,4]")["strongly_coprime"]

    def test_dedekind(self):
        assert js("dedekind", "--parts", "[3]", "--modulus", "2", "--n", "1")["value"] == "-1/4"
        out = ok("dedekind", "--parts", "[3]", "--modulus", "2", "--n-range", "0:1", "--format", "csv")
        assert out.splitlines()[1:] == ["0,1/4", "1,-1/4"]
        trace = js("dedekind", "--parts", "[3,4]", "--modulus", "5", "--n", "2", "--route", "trace")
        galois = js("dedekind", "--parts", "[3,4]", "--modulus", "5", "--n", "2")
        assert trace["value"] == galois["value"]

    def test_denumerant(self):
        out = js("denumerant", "--parts", "[2,3]", "--n", "7", "--closed-form")
        assert out["values"] == [{"n": 7, "value": 1}]
        assert out["polynomial_part"] == ["5/12", "1/6"]

    def test_chambers(self):
        out = js("chambers", "--matrix", "[[1,0,0,1,1],[0,1,0,1,0],[0,0,1,0,1]]")
        assert out["unimodular"] and len(out["chambers"]) == 5
        assert all(c["fitted_poly"] is not None for c in out["chambers"])

    def test_count_unimodular(self):
        out = js("count-unimodular", "--matrix", "[[1,0,0,1,1],[0,1,0,1,0],[0,0,1,0,1]]",
                 "--rhs", "[[0,-1,2],[5,0,2],[0,10,1]]")
        assert out["rational_form"] == {"period": 1, "constituents": [["1", "4", "-115/2", "9", "3/2"]]}

    def test_count_2x3_constant(self):
        out = js("count-2x3", "--matrix", "[[5,7,4],[2,3,3]]", "--rhs", "[25,13]")
        assert out["count"] == 1

    def test_count_2x3_parametric(self):
        A = "[[[1,2],[1,3],[0,0,1]],[2,3,[1,1]]]"
        m = "[[1,0,0,3],[-1,1,3]]"
        out = js("count-2x3", "--matrix", A, "--rhs", m)
        assert out["chamber"] == "omega2" and out["fit"]["validated"]
        assert js("count-2x3", "--matrix", A, "--rhs", m, "--n", "9")["count"] == 2

    def test_probe(self):
        out = js("probe", "--matrix", "[[2,3]]", "--rhs", "[[0,1]]", "--n-range", "0:40")
        assert out["validated"] and out["fit"]["period"] == 6

    def test_json_from_file(self, tmp_path):
        f = tmp_path / "m.json"
        f.write_text("[[2,3]]")
        assert js("count", "--matrix", f"@{f}", "--rhs", "[7]") == {"count": 1}

    def test_round_trip(self):
        out = js("ggcd", "--inputs", '[[0,1,1],[2,2]]')
        q = QuasiPoly.from_json(out["gcd"])
        assert QuasiPoly.from_json(q.to_json()) == q
        assert q.to_json() == out["gcd"]

    def test_help(self):
        code, out, _ = run("--help")
        assert code == 0 and "subcommands" in out
        assert run("count", "--help")[0] == 0


MALFORMED = [
    ("divide", "--f", "[0,0,", "--g", "[1]"),
    ("divide", "--f", "[0,0,1]"),
    ("ggcd", "--inputs", '"x"'),
    ("strongly-coprime", "--inputs", "{}"),
    ("dedekind", "--parts", "[3]", "--modulus", "two", "--n", "1"),
    ("denumerant", "--parts", "[2,3]", "--n-range", "5"),
    ("chambers", "--matrix", "[1,2]"),
    ("count-unimodular", "--matrix", "[[1]]", "--rhs", "[[1],[2]]"),
    ("count-2x3", "--matrix", "[[5,7,4]]", "--rhs", "[1,2]"),
    ("count", "--matrix", "[[2,3]]", "--rhs", "[7]", "--format", "csv"),
    ("probe", "--matrix", "[[2,3]]", "--rhs", "[[0,1]]", "--n-range", "9:1"),
    ("count", "--matrix", "@/nonexistent.json", "--rhs", "[7]"),
]

DOMAIN = [
    ("divide", "--f", "[1,1]", "--g", "[]"),
    ("ggcd", "--inputs", "[0,0]"),
    ("strongly-coprime", "--inputs", "[2,[3,-1]]"),
    ("dedekind", "--parts", "[2]", "--modulus", "4", "--n", "1"),
    ("denumerant", "--parts", "[2,4]", "--n", "3", "--closed-form"),
    ("chambers", "--matrix", "[[1,-1]]"),
    ("count-unimodular", "--matrix", "[[2,3]]", "--rhs", "[[0,1]]"),
    ("count-2x3", "--matrix", "[[2,0,2],[0,2,2]]", "--rhs", "[4,4]"),
    ("count", "--matrix", "[[1,-1]]", "--rhs", "[0]"),
    ("probe", "--matrix", "[[1,-1]]", "--rhs", "[[0]]", "--n-range", "0:3", "--max-period", "0"),
]


@pytest.mark.parametrize("argv", MALFORMED, ids=lambda a: a[0])
def test_malformed_exit_one(argv):
    code, out, err = run(*argv)
    assert code == 1
    assert json.loads(err)["error"] == "malformed-input"


@pytest.mark.parametrize("argv", DOMAIN, ids=lambda a: a[0])
def test_domain_error_exit_two(argv):
    code, out, _ = run(*argv)
    if argv[0] == "probe":
        # per-n failures are recorded in the report, not raised
        assert code == 0 and json.loads(out)["failures"]
        return
    assert code == 2
    payload = json.loads(out)
    assert {"error", "message"} <= set(payload)


def test_every_subcommand_covered():
    names = {"divide", "ggcd", "strongly-coprime", "dedekind", "denumerant", "chambers",
             "count-unimodular", "count-2x3", "count", "probe"}
    assert {a[0] for a in MALFORMED} == names
    assert {a[0] for a in DOMAIN} == names


@pytest.mark.parametrize("argv", [(), ("frobnicate",)])
def test_unknown_subcommand(argv):
    code, out, err = run(*argv)
    assert code == 64 and "usage" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "diocount.cli", "count", "--matrix", "[[2,3]]", "--rhs", "[7]"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"count": 1}


def test_structured_error_detail():
    from diocount.errors import AmbiguousChamber, ConjectureCandidate
    assert ConjectureCandidate("x", {"attempts": [1]}).to_json()["report"] == {"attempts": [1]}
    assert AmbiguousChamber("x", [{"index": 0}]).to_json()["candidates"] == [{"index": 0}]
