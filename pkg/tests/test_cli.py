import io
import json
import subprocess
import sys
from contextlib import redirect_stdout

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpeterweyl.cli import dumps, main
from qpeterweyl.clebsch import ThreeJTable


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_frt_text(capsys):
    code, out, _ = run(["frt", "--k", "2", "--format", "text"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert "a*d - d*a - (q - q^-1)*b*c = 0" in lines


def test_threej_json(capsys):
    code, out, _ = run(["threej", "--algebra", "gl", "--k", "2", "--lambda", "1,0", "--mu", "1,0", "--format", "json"], capsys)
    assert code == 0
    d = json.loads(out)
    values = {r["value"] for r in d["entries"]}
    assert "(q)/(q^2+1)" in values and "(q^2)/(q^2+1)" in values
    assert ThreeJTable.from_dict(d).to_dict() == d
    assert dumps(d) == out


def test_hopf_check(capsys):
    code, out, _ = run(["hopf-check", "--algebra", "sl2", "--max-weight", "3", "--samples", "20", "--seed", "7"], capsys)
    assert code == 0
    assert "all checks passed" in out


def test_schur_weyl(capsys):
    code, out, _ = run(["schur-weyl", "--k", "2", "--n", "3", "--format", "json"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["total"] == 8 and all(d["checks"].values())
    code, out, _ = run(["schur-weyl", "--k", "2", "--n", "3"], capsys)
    assert "4x1 + 2x2 = 8" in out


def test_pi(capsys):
    code, out, _ = run(["pi", "--k", "2", "--n", "2"], capsys)
    assert code == 0 and "rank 10" in out


def test_eval(capsys):
    code, out, _ = run(["eval", "--lambda", "1,0", "--i", "0", "--j", "0", "--word", "K1", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["value"] == "q"


def test_structure_constants_text(capsys):
    code, out, _ = run(["structure-constants", "--lambda", "1,0", "--mu", "1,0"], capsys)
    assert code == 0 and len(out.splitlines()) == 16


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["threej", "--lambda", "1,2", "--mu", "1,0"],
        ["threej", "--lambda", "1,0"],
        ["schur-weyl", "--k", "2"],
        ["eval", "--lambda", "1,0", "--i", "5"],
        ["eval", "--lambda", "1,0", "--word", "X1"],
        ["frt", "--k", "1"],
        ["threej", "--format", "yaml", "--lambda", "1", "--mu", "1"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "usage" in err


def test_verification_failure_exit_1(capsys, monkeypatch):
    from qpeterweyl import ofun

    class Bad:
        ok = False
        counts = {"compatibility": 1}
        failures = [("compatibility", "witness")]

        def summary(self):
            return "1 failures"

    monkeypatch.setattr(ofun, "verify_hopf", lambda *a, **k: Bad())
    code, out, _ = run(["hopf-check", "--max-weight", "1"], capsys)
    assert code == 1 and "failures" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "frt.txt"
    code, out, _ = run(["frt", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert "b*c - c*b = 0" in target.read_text()


def test_export_goldens(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QPW_OUTPUT_DIR", str(tmp_path / "g"))
    code, out, _ = run(["export-goldens"], capsys)
    assert code == 0
    files = {p.name for p in (tmp_path / "g").iterdir()}
    assert "weight_zero_products_gl2.json" in files and "schur_weyl_k2_n3.json" in files
    ad = json.loads((tmp_path / "g" / "weight_zero_products_gl2.json").read_text())["ad"]
    assert ad["s*s"] == "(q^2)/(q^2+1)"
    q1 = (tmp_path / "g" / "frt_k2_q1.txt").read_text().splitlines()
    assert all(" - " in l and "q" not in l for l in q1)
    sw = json.loads((tmp_path / "g" / "schur_weyl_k2_n3.json").read_text())
    assert sw["summary"] == "4x1 + 2x2 = 8"
    for p in (tmp_path / "g").glob("*.json"):
        text = p.read_text()
        assert dumps(json.loads(text)) == text


@settings(max_examples=10, deadline=None)
@given(
    st.sampled_from(
        [
            ["threej", "--algebra", "sl2", "--lambda", "{a}", "--mu", "{b}", "--format", "json"],
            ["structure-constants", "--algebra", "sl2", "--lambda", "{a}", "--mu", "{b}", "--format", "json"],
            ["hopf-check", "--algebra", "sl2", "--max-weight", "1", "--samples", "{a}", "--seed", "{b}", "--format", "json"],
        ]
    ),
    st.integers(0, 2),
    st.integers(0, 2),
)
def test_output_deterministic_and_round_trips(template, x, y):
    argv = [t.format(a=x, b=y) for t in template]
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            assert main(argv) == 0
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]
    assert dumps(json.loads(outs[0])) == outs[0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qpeterweyl", "frt", "--k", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "b*c - c*b = 0" in proc.stdout
