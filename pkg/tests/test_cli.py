import json
import subprocess
import sys

from geonum.cli import main
from geonum.polytope import from_json


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_then_compute(tmp_path, capsys):
    f = tmp_path / "t2.json"
    assert run(["gen", "--body", "T:2", "--out", str(f)], capsys)[0] == 0
    code, out, _ = run(["compute", "--in", str(f), "--what", "volume"], capsys)
    assert code == 0 and out.strip() == "9/2"
    # round trip is byte identical
    text = f.read_text().strip()
    assert from_json(text).dumps() == text


def test_compute_many(capsys):
    code, out, _ = run(["compute", "--body", "C:2", "--what", "ehrhart,root-sum,lattice-surface,minima,centroid,surface",
                        "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["ehrhart"] == {"coeffs": ["1", "4", "4"]}
    assert data["root-sum"] == "1" and data["lattice-surface"] == "4"
    assert data["minima"]["values"] == ["1", "1"]
    assert data["surface"]["value"] == "8"


def test_verify_pell_row(capsys):
    code, out, _ = run(["verify", "--body", "Pell:3:2", "--checks", "hsw-sym"], capsys)
    assert code == 0
    assert "hsw-sym" in out and "3/4 <= 5/4" in out and "equality=False" in out
    code, out, _ = run(["verify", "--body", "Pell:3:1", "--checks", "hsw-sym", "--format", "json"], capsys)
    assert json.loads(out)[0]["equality"] is True


def test_verify_lattice_and_csv(capsys):
    code, out, _ = run(["verify", "--body", "C:2", "--lattice", "diag:2,3", "--checks", "mink2-upper",
                        "--format", "csv"], capsys)
    assert code == 0 and out.splitlines()[0] == "check_id,body,lhs,rhs,holds,equality,notes"
    assert out.splitlines()[1].startswith("mink2-upper,C:2,2/3,2/3")


def test_fuzz_command_deterministic(capsys, tmp_path):
    argv = ["fuzz", "--kind", "centered", "--dim", "2", "--count", "50", "--seed", "7",
            "--checks", "all-applicable", "--format", "json"]
    code, out1, _ = run(argv, capsys)
    code2, out2, _ = run(argv, capsys)
    assert code == code2 == 0 and out1 == out2
    assert json.loads(out1)["summary"]["violations"] == 0


def test_usage_errors(capsys):
    assert run(["verify", "--body", "T:2", "--checks", "hsw-sym"], capsys)[0] == 2
    assert run(["verify", "--body", "nope:2"], capsys)[0] == 2
    assert run(["compute", "--body", "T:2", "--in", "x.json"], capsys)[0] == 2
    assert run(["compute", "--body", "T:2", "--what", "bogus"], capsys)[0] == 2
    assert run(["fuzz", "--dim", "7"], capsys)[0] == 2
    assert run(["frobnicate"], capsys)[0] == 2
    assert run([], capsys)[0] == 2


def test_failed_theorem_exit_code(monkeypatch, capsys):
    from geonum import verify

    orig = verify.CHECKS["mink2-upper"]

    def broken(ctx, cdef, tol):
        r = orig.fn(ctx, cdef, tol)
        r.holds = False
        return r

    monkeypatch.setitem(verify.CHECKS, "mink2-upper", orig.__class__(
        orig.check_id, orig.requires, broken, orig.strict, orig.status, orig.summary))
    assert run(["verify", "--body", "C:2", "--checks", "mink2-upper"], capsys)[0] == 1


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "geonum", "compute", "--body", "S:3"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == "1/6"
