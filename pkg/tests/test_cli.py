import io
import json
import subprocess
import sys

import pytest

from pseudoeq.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def fx(fixture_dir):
    return lambda name: fixture_dir / name


def test_validate_and_props(fx):
    code, out, _ = run("validate", fx("B.eqa"))
    assert code == 0 and out.splitlines()[-1] == "A1–A7: pass"
    code, out, _ = run("props", fx("B.eqa"))
    for line in ("bounded: true", "invariant: true", "commutative: true", "symmetric: true"):
        assert line in out.splitlines()


def test_validate_reports_failure(tmp_path, fx):
    text = fx("B.eqa").read_text().replace("1 b 1 b", "1 b 1 0", 1)
    bad = tmp_path / "bad.eqa"
    bad.write_text(text)
    code, out, _ = run("validate", bad)
    assert code == 1
    assert "FAIL at" in out


def test_json_output(fx):
    code, out, _ = run("--json", "props", fx("A.eqa"))
    data = json.loads(out)
    props = data["properties"]
    assert code == 0 and props["equality"] is True and props["invariant"] is False
    code2, out2, _ = run("props", fx("A.eqa"), "--json")
    assert (code2, out2) == (code, out)


def test_input_errors(tmp_path, fx):
    code, _, err = run("props", tmp_path / "missing.eqa")
    assert code == 2 and err.startswith("error:")
    bad = tmp_path / "bad.eqa"
    bad.write_text("algebra X\nkind eq\nelements 0 1\ntop 1\nmeet\n0 0\n0 q\nend\n")
    code, _, err = run("validate", bad)
    assert code == 2 and "line 7, column 3" in err
    assert run("search", "--size", "3", "--claim", "nonsense")[0] == 2
    assert run("search", "--size", "9")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("check-bosbach", fx("B.eqa"), "--point", "0", "--values", "0,1/0,1,1")[0] == 2


def test_state_outputs_stable_across_jobs(fx):
    for cmd in (["states", fx("B.eqa"), "--kind", "I"], ["states", fx("B.eqa"), "--kind", "II"],
                ["morphisms", fx("B.eqa")]):
        outs = {run(*cmd, "--jobs", j)[1] for j in ("1", "2", "4")}
        outs.add(run(*cmd)[1])
        assert len(outs) == 1


def test_check_state_exit_codes(fx):
    assert run("check-state", fx("C.eqa"), "--identity", "--kind", "I")[0] == 0
    code, out, _ = run("check-state", fx("C.eqa"), "--identity", "--kind", "II", "--all")
    assert code == 1
    assert "FAIL at (a, b) lhs=1 rhs=b" in out


def test_operator_files(fx):
    code, out, _ = run("check-morphism", fx("B.eqa"), "--op-file", fx("ops/sigma1.op"))
    assert code == 0
    code, out, _ = run("kernel", fx("B.eqa"), "--op-file", fx("ops/sigma1.op"))
    assert code == 0 and "{b, 1}" in out
    assert run("extend", fx("B.eqa"), "--point", "0", "--op-file", fx("ops/reg_swap.op"))[0] == 2
    assert run("extend", fx("B.eqa"), "--point", "0", "--identity")[0] == 0


def test_deduction_commands(fx):
    code, out, _ = run("gen-ds", fx("B.eqa"), "--from", "a")
    assert code == 0 and "{a, 1}" in out
    code, out, _ = run("quotient", fx("B.eqa"), "--ds", "a,1")
    assert code == 0
    code, out, _ = run("congruences", fx("B.eqa"))
    assert code == 0 and "count 4" in out


def test_bck_commands(fx, tmp_path):
    code, out, _ = run("psi", fx("B.eqa"))
    assert code == 0 and "kind bck" in out
    doc = tmp_path / "psi.eqa"
    doc.write_text(out)
    code, out, _ = run("phi", doc)
    assert code == 0 and "kind eq" in out
    assert run("phi", fx("B_hoop.eqa"))[0] == 0


def test_bosbach_commands(fx):
    code, out, _ = run("check-bosbach", fx("B.eqa"), "--point", "0", "--values", "0,1/3,2/3,1")
    assert code == 0
    code, out, _ = run("check-bosbach", fx("B.eqa"), "--point", "0", "--values", "0,1/3,1/3,1")
    assert code == 1
    assert run("bosbach", fx("B.eqa"), "--point", "1")[0] == 2


def test_other_commands_run(fx):
    for argv in (["laws", fx("A.eqa")], ["pointed", fx("B.eqa"), "--point", "0"],
                 ["correspondence", fx("B.eqa")], ["roundtrip", fx("B.eqa")],
                 ["ds", fx("B.eqa"), "--normal"], ["search", "--size", "3", "--require", "linear"]):
        code, out, err = run(*argv)
        assert code == 0, (argv, err)
        assert out


def test_module_entry_point(fx):
    proc = subprocess.run([sys.executable, "-m", "pseudoeq", "props", str(fx("B.eqa"))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "invariant: true" in proc.stdout
