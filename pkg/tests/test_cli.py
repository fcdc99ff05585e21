import json
import subprocess
import sys

import pytest

from boolmetric.cli import main


def run(tmp_path, capsys, command, job, *flags):
    path = tmp_path / "job.json"
    path.write_text(job if isinstance(job, str) else json.dumps(job), encoding="utf-8")
    code = main([command, "--input", str(path), *flags])
    out, err = capsys.readouterr()
    return code, out, err


Z3 = {"p": 3, "omega": 1}
G32 = {"p": 3, "omega": 2}


def space(base, *gens):
    return {"base": [base], "generators": [[g] for g in gens]}


def poly(*terms, n=1):
    return {"n": n, "monomials": [{"exp": list(e), "coeff": c} for e, c in terms]}


def test_classify_one(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, "classify", {"ring": Z3, "objects": {"X": space([0], [1], [2])}})
    assert code == 0
    assert json.loads(out)["spaces"]["X"]["alphas"] == [[1], [1]]


def test_classify_pair(tmp_path, capsys):
    job = {"ring": G32, "objects": {"X": space([0, 0], [1, 0]), "Y": space([1, 1], [2, 1])}}
    code, out, _ = run(tmp_path, capsys, "classify", job)
    report = json.loads(out)
    assert report["isometric"] is True
    assert report["mapping"]["pairs"] == [[[[1, 0]], [[2, 1]]]]
    # deterministic output
    assert run(tmp_path, capsys, "classify", job)[1] == out


def test_classify_empty(tmp_path, capsys):
    job = {"ring": Z3, "objects": {"E": {"empty": True}, "X": space([0], [1])}}
    assert json.loads(run(tmp_path, capsys, "classify", job)[1])["isometric"] is False


@pytest.mark.parametrize(
    "ring,polys,members",
    [
        (Z3, [poly(((2,), 1), ((1,), -1))], [[[0]], [[1]]]),
        (Z3, [poly(((0,), 1))], []),
        (G32, [poly()], None),
    ],
)
def test_solve(tmp_path, capsys, ring, polys, members):
    job = {"ring": ring, "objects": {f"f{i}": q for i, q in enumerate(polys)}}
    code, out, _ = run(tmp_path, capsys, "solve", job)
    report = json.loads(out)
    assert code == 0
    if members is None:
        assert len(report["members"]) == 9
    else:
        assert report["members"] == members
    if members == []:
        assert report["variety"] == {"empty": True, "n": 1}


def test_interpolate(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, "interpolate", {"ring": Z3, "values": [0, 1, 1]})
    assert json.loads(out)["polynomials"] == [poly(((2,), [1]))]
    table = {"ring": Z3, "table": [[[[0]], [[0]]], [[[1]], [[0]]], [[[2]], [[1]]]]}
    code, out, _ = run(tmp_path, capsys, "interpolate", table)
    assert json.loads(out)["polynomials"] == [poly(((2,), [2]), ((1,), [1]))]


def test_base_and_orthogonalize(tmp_path, capsys):
    job = {"ring": G32, "objects": {"X": space([0, 0], [1, 1], [1, 2])}}
    report = json.loads(run(tmp_path, capsys, "base", job)[1])["spaces"]["X"]
    assert report["norms"] == report["alphas"] == [[1, 1], [0, 1]]
    full = {"ring": G32, "objects": {"X": space([0, 0], [1, 1], [2, 2])}}
    assert json.loads(run(tmp_path, capsys, "base", full)[1])["spaces"]["X"]["norms"] == [[1, 1], [1, 1]]
    report = json.loads(run(tmp_path, capsys, "orthogonalize", job)[1])["spaces"]["X"]
    assert report["elements"] == [[[1, 1]], [[0, 2]]]


def test_pretty(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, "classify", {"ring": Z3, "objects": {"X": space([0], [1], [2])}}, "--pretty")
    assert code == 0 and "alphas: [[1], [1]]" in out


def test_malformed_input(tmp_path, capsys):
    code, out, err = run(tmp_path, capsys, "classify", '{"ring": {"p": 3, "omega": 1},\n "objects": {"X": [[0]],}}')
    assert code == 2 and out == ""
    assert "line 2" in json.loads(err)["message"]
    code, _, err = run(tmp_path, capsys, "classify", {"ring": G32, "objects": {"X": space([0], [1])}})
    assert code == 2 and json.loads(err)["error"] == "DimensionError"
    code, _, err = run(tmp_path, capsys, "classify", {"ring": Z3, "objects": {"X": {"base": [[0]], "generators": [[[7]]]}}})
    assert code == 2 and "objects.X.generators[0]" in json.loads(err)["message"]


def test_verify_job(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, "verify", {"ring": Z3, "n": 1}, "--samples", "3")
    assert code == 0
    assert all(c["passed"] for c in json.loads(out))


def test_verify_exit_code_on_failure(monkeypatch, capsys):
    from boolmetric import oracle

    def broken(*a, **k):
        return oracle.OracleReport([oracle.CheckResult("x", 1, False, "boom")])

    monkeypatch.setattr(oracle, "run_envelope", broken)
    assert main(["verify"]) == 1
    assert json.loads(capsys.readouterr().out)[0]["counterexample"] == "boom"


@pytest.mark.slow
def test_verify_default_envelope_subprocess():
    proc = subprocess.run([sys.executable, "-m", "boolmetric.cli", "verify", "--samples", "4"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout[-2000:]
    assert all(c["passed"] for c in json.loads(proc.stdout))
