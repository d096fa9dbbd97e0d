import csv
import io
import json
import subprocess
import sys

import pytest

from ltsig.catalog import builtin_catalog, dump_catalog, load_catalog, parse_catalog
from ltsig.cli import main
from ltsig.errors import DuplicateName, ParseError, ValidationError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, line",
    [
        (["sigma", "trefoil", "1/2"], "sigma=-2 nullity=0 averaged=-2 certified=true"),
        (["sigma", "unknot", "1/3"], "sigma=0 nullity=0 averaged=0 certified=true"),
        # at the jump the kernel removes one eigenvalue and H has signature -1
        (["sigma", "T(2,5)", "1/10"], "sigma=-1 nullity=1 averaged=-1 certified=true"),
        (["--no-certify", "sigma", "trefoil", "0.5"], "sigma=-2 nullity=0 averaged=-2 certified=false"),
    ],
)
def test_sigma_command(argv, line):
    code, out, err = run(*argv)
    assert (code, out.strip(), err) == (0, line, "")


def test_sigma_formats():
    code, out, _ = run("sigma", "trefoil", "1/2", "--format", "json")
    assert json.loads(out) == {
        "knot": "T(2,3)", "alpha": "1/2", "sigma": -2, "nullity": 0, "averaged": -2, "certified": True
    }
    code, out, _ = run("--format", "csv", "sigma", "T(2,5)", "2/5")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1][2:] == ["-4", "0", "-4", "true"]


def _profile_rows(knot):
    code, out, err = run("profile", knot)
    assert code == 0 and err == ""
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["kind", "start", "end", "value", "certified"]
    return rows[1:]


def test_profile_t25():
    rows = _profile_rows("T(2,5)")
    assert [r[0] for r in rows].count("arc") == 5
    assert [r[0] for r in rows].count("jump") == 4
    assert rows[0] == ["arc", "0/1", "1/10", "0", "true"]
    assert rows[1] == ["jump", "1/10", "1/10", "-1", "true"]
    assert rows[-1] == ["arc", "9/10", "1/1", "0", "true"]


def test_profile_small_knots():
    assert _profile_rows("unknot") == [["arc", "0/1", "1/1", "0", "true"]]
    rows = _profile_rows("trefoil")
    assert [r[3] for r in rows if r[0] == "arc"] == ["0", "-2", "0"]


def test_profile_file_is_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run("profile", "T(3,5)", "--out", str(a))[0] == 0
    assert run("profile", "T(3,5)", "-o", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_profile_interval_jump_rows(tmp_path):
    cat = tmp_path / "cat.json"
    cat.write_text(json.dumps([{"name": "k", "seifert_matrix": [[1, 1], [0, 2]]}]))
    code, out, _ = run("--catalog", str(cat), "profile", "k")
    assert code == 0
    jumps = [r for r in csv.reader(io.StringIO(out)) if r[0] == "jump"]
    assert len(jumps) == 2
    for r in jumps:
        assert r[1].startswith("interval:") and r[3] == "" and r[4] == "false"


def test_twistspin_command():
    code, out, _ = run("twistspin", "T(2,5)", "3", "5", "2", "0")
    assert code == 0
    assert "twist_spin_sigma=0 equivariant_casson=-1 fo_conjecture_rhs=-8" in out
    assert "sigma_torus=0 discrepancy_printed=2 discrepancy_recomputed=4" in out
    code, out, _ = run("twistspin", "unknot", "3", "5", "2", "0")
    assert out.splitlines()[0] == "twist_spin_sigma=0 equivariant_casson=0 fo_conjecture_rhs=0"


def test_twistspin_gate_error():
    code, out, err = run("twistspin", "trefoil", "2", "3", "1", "0")
    assert code == 3
    assert out == ""
    assert err == "NotHomologySphereCover: |H1|=3\n"


def test_compare_fo():
    code, out, _ = run("compare-fo", "T(2,5)")
    assert code == 0
    assert "sigma_torus=0 sigma_G=4 discrepancy_printed=2 discrepancy_recomputed=4" in out
    assert "discrepancy_mismatch=true" in out


@pytest.mark.parametrize(
    "argv, code, name",
    [
        (["sigma", "nosuchknot", "1/2"], 2, "UnknownKnot"),
        (["sigma", "trefoil", "abc"], 2, "BadAlpha"),
        (["sigma", "trefoil", "0.5"], 2, "BadAlpha"),
        (["sigma", "trefoil"], 2, "UsageError"),
        ([], 2, "UsageError"),
        (["--precision-bits", "10", "sigma", "trefoil", "1/2"], 2, "UsageError"),
        (["twistspin", "T(2,5)", "3", "6", "1"], 3, "NotPrimePower"),
        (["--catalog", "/nonexistent.json", "catalog", "list"], 2, "IoError"),
    ],
)
def test_error_exit_codes(argv, code, name):
    got, out, err = run(*argv)
    assert got == code
    assert err.count("\n") == 1 and err.startswith(name + ":")


def test_catalog_list_and_dump(tmp_path):
    code, out, _ = run("catalog", "list")
    assert code == 0 and len(out.splitlines()) == len(builtin_catalog())
    assert "t^2 - t + 1" in out
    path = tmp_path / "dump.json"
    assert run("catalog", "dump", str(path))[0] == 0
    loaded = load_catalog(path, include_builtins=False)
    assert [(e.name, e.seifert_matrix) for e in loaded] == [
        (e.name, e.seifert_matrix) for e in builtin_catalog()
    ]


def test_load_catalog_examples(tmp_path):
    nb = len(builtin_catalog())
    p = tmp_path / "one.json"
    p.write_text('[{"name":"trefoil2","seifert_matrix":[[-1,1],[0,-1]]}]')
    assert len(load_catalog(p)) == nb + 1
    p.write_text("[]")
    assert len(load_catalog(p)) == nb
    p.write_text('[{"name":"bad","seifert_matrix":[[1]]}]')
    with pytest.raises(ValidationError) as info:
        load_catalog(p)
    assert "bad" in str(info.value) and "OddSize" in str(info.value)


def test_catalog_errors(tmp_path):
    with pytest.raises(ParseError) as info:
        parse_catalog('[\n {"name": "x",, }]')
    assert "line 2" in str(info.value)
    with pytest.raises(ParseError):
        parse_catalog('{"name": "x"}')
    with pytest.raises(DuplicateName):
        parse_catalog('[{"name":"a","seifert_matrix":[]},{"name":"a","seifert_matrix":[]}]')
    p = tmp_path / "dup.json"
    p.write_text('[{"name":"trefoil","seifert_matrix":[[-1,1],[0,-1]]}]')
    with pytest.raises(DuplicateName):
        load_catalog(p)


def test_catalog_round_trip(tmp_path):
    entries = parse_catalog('[{"name":"k","seifert_matrix":[[1,1],[0,2]]}]')
    path = tmp_path / "rt.json"
    dump_catalog(entries, path)
    again = load_catalog(path, include_builtins=False)
    assert [(e.name, e.seifert_matrix) for e in again] == [(e.name, e.seifert_matrix) for e in entries]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ltsig", "sigma", "trefoil", "1/2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "sigma=-2 nullity=0 averaged=-2 certified=true\n"
