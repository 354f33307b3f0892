import io
import json
import subprocess
import sys

import pytest

from dihedral_linking.cli import main

from conftest import K816_COLORING5, K816_OVER, K816_SIGN

K816_ARGS = ["--overstrands", ",".join(map(str, K816_OVER)),
             "--signs", ",".join(map(str, K816_SIGN))]


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_colorings_fig8():
    code, text = run(["colorings", "--p", "5", "--braid", "1 -2 1 -2"])
    assert code == 0
    lines = text.split()
    assert len(lines) == 1 and lines[0].count(",") == 3


def test_dln_text_816():
    code, text = run(["dln", "--p", "5", *K816_ARGS, "--coloring", ",".join(map(str, K816_COLORING5))])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "coloring: 2,3,2,2,0,4,0,1"
    assert lines[1].split() == ["-22", "18", "-6"]
    assert lines[-1] == "DLN: -6, 6, 18"


def test_dln_csv():
    code, text = run(["dln", "--p", "3", "--braid", "1 1 1", "--format", "csv"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "coloring,j,k,lk"
    assert len(lines) == 5
    assert {ln.rsplit(",", 1)[1] for ln in lines[1:]} >= {"2"}


def test_dln_json():
    code, text = run(["dln", "--p", "5", "--braid", "1 -2 1 -2", "--format", "json", "--name", "4_1"])
    assert code == 0
    payload = json.loads(text)
    assert payload["name"] == "4_1" and payload["p"] == 5
    (entry,) = payload["colorings"]
    assert sorted(int(v) for v in entry["multiset"]) == [-2, 0, 2]
    assert len(entry["matrix"]) == 3


def test_dln_sorted_arrows_same_multiset():
    base = ["dln", "--p", "5", *K816_ARGS, "--coloring", ",".join(map(str, K816_COLORING5))]
    _, a = run(base)
    _, b = run(base + ["--arrows", "sorted"])
    assert a.splitlines()[-1] == b.splitlines()[-1]


def test_dln_debug(capsys):
    code = main(["dln", "--p", "3", "--braid", "1 1 1", "--debug"], out=io.StringIO())
    assert code == 0
    err = capsys.readouterr().err
    assert "# system for K^1" in err and "→" in err


def test_mirror_flag():
    _, a = run(["dln", "--p", "3", "--braid", "1 1 1"])
    _, b = run(["dln", "--p", "3", "--braid", "1 1 1", "--mirror"])
    assert a.splitlines()[-1] == "DLN: 2"
    assert b.splitlines()[-1] == "DLN: -2"


@pytest.mark.parametrize("argv,code", [
    (["dln", "--p", "5", "--braid", "1 0 1"], 2),
    (["dln", "--p", "5", "--braid", "1 1 2 2"], 2),
    (["dln", "--p", "5", "--overstrands", "1,0,2", "--signs", "1,1,1"], 2),
    (["dln", "--p", "5"], 2),
    (["dln", "--p", "4", "--braid", "1 1 1"], 3),
    (["colorings", "--p", "1", "--braid", "1 1 1"], 3),
    (["dln", "--p", "5", *K816_ARGS, "--coloring", "0,0,0,0,0,0,0,0"], 4),
    (["dln", "--p", "5", *K816_ARGS, "--coloring", "1,2"], 4),
    (["dln", "--p", "3", "--braid", "1 1 1", "--coloring", "a,b"], 4),
])
def test_exit_codes(argv, code, capsys):
    assert main(argv, out=io.StringIO()) == code
    assert capsys.readouterr().err.startswith("error:")


def test_tabulate(tmp_path):
    src = tmp_path / "in.csv"
    src.write_text("name,braid,determinant\n3_1,1 1 1,3\n4_1,1 -2 1 -2,5\nbad,1 0 1,\n")
    dst = tmp_path / "out.csv"
    code, summary = run(["tabulate", "--p", "3", "--input", str(src), "--output", str(dst)])
    assert code == 0
    assert dst.read_text() == "name,p,values\n3_1,3,2\n"
    errors = (tmp_path / "out.csv.errors").read_text().splitlines()
    assert len(errors) == 1 and errors[0].startswith("bad\tZeroLetter")
    assert "1 colorable of 2 processed, 1 errors" in summary

    src.write_text("name,braid\n3_1,1 1 1\n")
    code, _ = run(["tabulate", "--p", "3", "--input", str(src), "--output", str(dst),
                   "--format", "text", "--per-coloring"])
    assert code == 0
    assert not (tmp_path / "out.csv.errors").exists()
    assert dst.read_text().splitlines()[0] == "3_1 | 2"


def test_tabulate_all_failed(tmp_path):
    src = tmp_path / "in.csv"
    src.write_text("name,braid\nbad,1 1 2 2\n")
    code, _ = run(["tabulate", "--p", "3", "--input", str(src), "--output", str(tmp_path / "o.csv")])
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dihedral_linking", "dln", "--p", "3",
                           "--braid", "1 1 1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "DLN: 2"
