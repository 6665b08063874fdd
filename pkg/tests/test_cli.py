import csv
import io
import json
import subprocess
import sys

import pytest

from chiralpart.chirality import count_chiral, count_odd, is_chiral
from chiralpart.cli import main
from chiralpart.partition import from_frobenius, parse_frobenius, parse_partition, partition_count


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_count_json():
    code, text = run("count", "9")
    assert code == 0
    assert json.loads(text) == {"n": 9, "b": 20}


def test_count_flags():
    assert run("count", "16", "--self-conjugate", "--plain") == (0, "4\n")
    assert json.loads(run("count", "16", "--self-conjugate")[1])["self_conjugate"] == 4
    assert run("count", "7", "--hooks", "--plain") == (0, "4\n")
    record = json.loads(run("count", "9", "--by-valuation", "--odd", "--perm", "--partition-function")[1])
    assert record["b_by_valuation"] == {"0": 4, "1": 4, "2": 4, "3": 8}
    assert record["a"] == count_odd(9) and record["p"] == 30 and record["c"] == 11
    assert run("count", "9", "--plain") == (0, "20\n")
    assert run("count", "9", "--by-valuation", "--plain")[1].splitlines() == ["0 4", "1 4", "2 4", "3 8"]


def test_count_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "0"])
    assert exc.value.code == 2
    assert run("count", "2", "--perm")[0] == 2
    assert "--perm" in capsys.readouterr().err


def test_check():
    assert run("check", "[1,1]") == (0, "chiral\n")
    assert run("check", "[2]") == (1, "not chiral\n")
    assert run("check", "[3,1]", "--perm") == (0, "chiral\n")
    assert run("check", "[2,2]", "--perm") == (1, "not chiral\n")
    assert run("check", "[1,2]")[0] == 2
    assert run("check", "[x]")[0] == 2


def test_check_explain_prints_tower():
    code, text = run("check", "[5,4,2,2,1,1]", "--explain")
    assert code == 0
    lines = text.splitlines()
    assert lines[:4] == ["row0: -:1", "row1: 1:1", "row2: 01:1", "row3: 000:1"]
    assert "weights: 1,1,1,1" in lines and "v2(f): 0" in lines and "case: 1" in lines
    assert lines[-1] == "chiral"


def test_enumerate():
    assert run("enumerate", "2") == (0, "[1,1]\n")
    code, text = run("enumerate", "9")
    assert code == 0 and len(text.splitlines()) == 20
    code, text = run("enumerate", "9", "--valuation", "0")
    assert len(text.splitlines()) == 4
    assert len(run("enumerate", "9", "--limit", "3")[1].splitlines()) == 3
    assert run("enumerate", "1")[0] == 1
    code, text = run("enumerate", "16", "--self-conjugate")
    assert code == 0 and len(text.splitlines()) == 4
    assert run("enumerate", "16", "--self-conjugate", "--valuation", "1")[0] == 2
    code, text = run("enumerate", "9", "--frobenius")
    assert {sum(from_frobenius(parse_frobenius(line))) for line in text.splitlines()} == {9}


@pytest.mark.parametrize("n", [9, 17, 33])
def test_enumerate_lines_pass_check(n):
    _, text = run("enumerate", str(n))
    lines = text.splitlines()
    assert len(lines) == count_chiral(n)
    for line in lines:
        assert run("check", line) == (0, "chiral\n")


def test_sample():
    code, text = run("sample", "4097", "--seed", "7", "--frobenius")
    assert code == 0
    lam = from_frobenius(parse_frobenius(text.strip()))
    assert sum(lam) == 4097 and is_chiral(lam)
    assert run("sample", "4097", "--seed", "7", "--frobenius") == (code, text)
    assert run("sample", "2", "--count", "5") == (0, "[1,1]\n" * 5)
    assert run("sample", "1")[0] == 1
    assert run("sample", "8", "--valuation", "3")[0] == 1
    code, text = run("sample", "33", "--count", "4", "--seed", "3")
    assert all(run("check", line)[0] == 0 for line in text.splitlines())


def test_plotdata():
    code, text = run("plotdata", "20")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and len(rows) == 20
    assert text.splitlines()[0] == "n,a_n,b_n_plus_2"
    for row in rows:
        n, a, b = int(row["n"]), int(row["a_n"]), int(row["b_n_plus_2"])
        assert 2 * b <= 5 * a and a <= b
        assert (a == b) == (n % 4 == 0)
    _, text = run("plotdata", "4", "--log2")
    assert text.splitlines()[0] == "n,a_n,b_n_plus_2,log2_a_n,log2_b_n_plus_2"


def test_oeis():
    _, text = run("oeis", "20")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [int(r["b_n"]) for r in rows] == [0, 1, 2, 3, 5, 4, 8, 12, 20, 8, 16, 24, 40, 32, 64, 88, 152, 16, 32, 48]
    assert [int(r["p_minus_b"]) for r in rows] == [
        1, 1, 1, 2, 2, 7, 7, 10, 10, 34, 40, 53, 61, 103, 112, 143, 145, 369, 458, 579,
    ]
    assert all(int(r["b_n"]) + int(r["p_minus_b"]) == partition_count(int(r["n"])) for r in rows)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chiralpart", "check", "[2,1]"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "chiral\n"
    proc = subprocess.run([sys.executable, "-m", "chiralpart", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
