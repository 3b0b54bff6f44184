import io
import subprocess
import sys

import pytest

from unproj.cli import MACHINE_FIELDS, main
from unproj.scenarios import SCENARIOS

from conftest import shipped_workspaces


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in shipped_workspaces().items():
        p = tmp_path / name
        p.write_text(text)
        paths[name[:3]] = str(p)
    return paths


def test_verify_all_human_output():
    code, out = run("verify", "--all", "--jobs", "1")
    lines = out.splitlines()
    assert code == 1
    assert len(lines) >= 20
    assert lines[-1] == "19 scenarios: 18 passed, 1 failed, 0 errors"
    heads = [l.split()[0] for l in lines if l and not l.startswith(" ")][:-1]
    assert heads[:19] == [s.name for s in SCENARIOS]


def test_verify_single_scenario_passes():
    code, out = run("verify", "--scenario", "S05")
    assert code == 0
    assert out.splitlines()[-1] == "1 scenarios: 1 passed, 0 failed, 0 errors"


def test_machine_records_follow_the_schema(tmp_path):
    report = tmp_path / "report.txt"
    code, out = run("verify", "--machine", "--jobs", "2", "--report", str(report))
    assert code == 1
    names = {s.name for s in SCENARIOS}
    lines = out.splitlines()
    assert len(lines) == sum(len(s.checks) for s in SCENARIOS)
    for line in lines:
        fields = line.split("\t")
        assert len(fields) == len(MACHINE_FIELDS) == 5
        scenario, check, status, millis, witness = fields
        assert scenario in names and check
        assert status in ("PASS", "FAIL", "ERROR")
        assert millis.isdigit()
        assert (status == "FAIL") == bool(witness)
        assert "\n" not in witness
    assert report.read_text().startswith("S01-toric-vanish: PASS")


def test_report_is_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run("verify", "--report", str(a), "--jobs", "1")
    run("verify", "--report", str(b), "--jobs", "3")
    assert a.read_bytes() == b.read_bytes()


def test_verify_usage_errors():
    assert run("verify", "--scenario", "nope")[0] == 2
    assert run("verify", "--all", "--scenario", "S01")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2


def test_pfaffian_maximal(files):
    code, out = run("pfaffian", "--input", files["S08"], "--matrix", "jerry", "--maximal")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 5
    for want in ("e^2", "c^2", "d*x", "d*e", "b*e"):
        assert any(want in l for l in lines), want


def test_pfaffian_other_modes(files):
    code, out = run("pfaffian", "--input", files["S04"], "--sub4of6")
    assert code == 0 and len(out.splitlines()) == 15
    code, out = run("pfaffian", "--input", files["S08"], "--matrix", "jerry", "--delete", "5")
    assert (code, out) == (0, "-c^2 + b*x\n")
    assert run("pfaffian", "--input", files["S07"], "--matrix", "N", "--delete", "4")[0] == 2
    assert run("pfaffian", "--input", files["S07"], "--matrix", "tom", "--delete", "9")[0] == 2


def test_member_long_equation(files):
    poly = "a*x - (b+nu*g)*(c+nu*f) + mu*(d*f - e*g)"
    code, out = run("member", "--ideal", files["S10"] + "#w8", "--poly", poly)
    assert code == 1 and out.startswith("NOT MEMBER")
    code, out = run("member", "--ideal", files["S10"] + "#w8", "--poly", poly, "--saturate", "g")
    assert (code, out) == (0, "MEMBER\n")
    code, out = run("member", "--ideal", files["S11"], "--poly", poly)
    assert (code, out) == (0, "MEMBER\n")


def test_equal_and_groebner(files):
    code, out = run("equal", "--left", files["S01"] + "#binomials", "--right", files["S03"] + "#binomials")
    assert code == 0
    code, out = run("equal", "--left", files["S01"] + "#binomials", "--right", files["S01"] + "#tags")
    assert code == 1
    code, out = run("groebner", "--input", files["S01"], "--ideal", "binomials", "--order", "lex")
    assert code == 0 and out.strip()
    assert run("groebner", "--input", files["S01"], "--ideal", "binomials", "--order", "bogus")[0] == 2


def test_eliminate(files):
    code, out = run("eliminate", "--input", files["S14"], "--ideal", "base_equations", "--vars", "g")
    assert code == 0
    assert run("eliminate", "--input", files["S14"], "--ideal", "base_equations", "--vars", "qq")[0] == 2


def test_tom_and_jerry(files):
    assert run("tom", "--input", files["S07"], "--matrix", "tom", "--index", "1", "--ci", "x,c,e,f")[0] == 0
    code, out = run("tom", "--input", files["S08"], "--matrix", "jerry", "--index", "2", "--ci", "x,c,e,f")
    assert code == 1 and "m14" in out
    code, out = run("jerry", "--input", files["S08"], "--matrix", "jerry", "--rows", "2,3", "--ci", "x,c,e,f")
    assert code == 0 and "pivot" in out


def test_unproject(files):
    code, out = run("unproject", "--input", files["S09"], "--m1", "b*e - c*d + mu*f*g",
                    "--m2", "b*f + c*g - d*e + nu*f*g", "--xvars", "c,e,f", "--new", "a")
    assert code == 0
    assert len([l for l in out.splitlines() if l.strip()]) >= 3


def test_toric(files):
    code, out = run("toric", "--input", files["S01"], "--map", "newton", "--kernel")
    assert code == 0 and len(out.splitlines()) == 9
    code, out = run("toric", "--input", files["S01"], "--map", "newton", "--pullback", "a*c - b^2")
    assert code == 0 and out.strip() == "0"


def test_file_and_parse_errors(tmp_path, capsys):
    assert run("pfaffian", "--input", str(tmp_path / "missing.usr"), "--maximal")[0] == 2
    bad = tmp_path / "bad.usr"
    bad.write_text("ring a : weights 1;\npoly P = a * * a;\n")
    assert run("groebner", "--input", str(bad))[0] == 2
    err = capsys.readouterr().err
    assert "bad.usr:2:14" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "unproj", "verify", "--scenario", "S02"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "S02-colon-identity" in proc.stdout
