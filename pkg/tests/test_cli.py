import json
import subprocess
import sys

import pytest

from sareg.cli import main


@pytest.fixture
def skew_file(tmp_path):
    p = tmp_path / "skew.arr"
    p.write_text("ring n=3 field=32003\nsubspace: x0; x1\nsubspace: x2; x3\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_regularity(capsys, skew_file):
    code, out, _ = run(capsys, "regularity", skew_file)
    assert code == 0
    assert out.splitlines()[0] == "reg = 2 (betti 2, hyperplane 2)"
    code, out, _ = run(capsys, "regularity", skew_file, "--strategy", "hyperplane")
    assert out.startswith("reg = 2\n")


def test_betti_and_intersect(capsys, skew_file):
    code, out, _ = run(capsys, "betti", skew_file)
    assert code == 0 and "total: 4 4 1" in out
    code, out, _ = run(capsys, "intersect", skew_file)
    assert sorted(out.split()) == ["x0*x2", "x0*x3", "x1*x2", "x1*x3"]


def test_sharp_output_parses(capsys, tmp_path):
    code, out, _ = run(capsys, "sharp", "--d", "3", "--seed", "2")
    assert code == 0
    p = tmp_path / "sharp.arr"
    p.write_text(out)
    code, out, _ = run(capsys, "regularity", str(p))
    assert out.startswith("reg = 3")


def test_exit_codes(capsys, tmp_path, skew_file):
    bad = tmp_path / "bad.arr"
    bad.write_text("ring n=3\nsubspace: x0 x1\n")
    code, _, err = run(capsys, "betti", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "betti", str(tmp_path / "missing.arr"))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite"])
    assert exc.value.code == 2
    assert run(capsys, "verify", "sharp", "--field", "10")[0] == 2
    assert run(capsys, "sharp", "--d", "1")[0] == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "theorem-random", "--trials", "2", "--seed", "3", "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records[-1]["summary"] and records[-1]["passed"] == 2
    assert all(r["passed"] and r["strategy_agreement"] for r in records[:-1])
    assert all("wall_time" not in r for r in records)


def test_module_entry_point(skew_file):
    proc = subprocess.run([sys.executable, "-m", "sareg", "betti", skew_file], capture_output=True, text=True)
    assert proc.returncode == 0 and "total: 4 4 1" in proc.stdout
