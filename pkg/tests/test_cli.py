import io
import json
import subprocess
import sys

import pytest

from invsum import cli
from invsum.cache import cached_table, read_table, table_path, write_table
from invsum.counting import NTable, m_table, n_table
from invsum.structures import PrimeField, ResidueRing, extension_field


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_ntable_csv():
    code, out, _ = run("ntable", "--p", "5", "--format", "csv")
    assert code == 0
    assert out == "t,N\n0,6\n1,1\n2,4\n3,4\n4,1\n"


def test_mtable_default_csv():
    code, out, _ = run("mtable", "--p", "3")
    assert code == 0
    assert out.splitlines()[1:] == ["0,0", "1,1", "2,1"]


def test_ntable_json():
    code, out, _ = run("ntable", "--p", "5", "--format", "json")
    assert json.loads(out) == {"structure": "p5", "N": {"0": 6, "1": 1, "2": 4, "3": 4, "4": 1}}


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["ntable", "--p", "4"], "even"),
        (["ntable", "--p", "9"], "not prime"),
        (["verify", "--p", "9"], "not prime"),
        (["coeffs", "--p", "6"], "even"),
        (["verify"], "--max-p"),
        (["ext", "--p", "3"], "--k"),
        (["zn"], "--n"),
        (["ntable", "--p", "3", "--k", "9"], "degree"),
        (["ntable", "--n", "2000003"], "cap"),
    ],
)
def test_usage_errors_exit_2(argv, needle):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ""
    assert needle in err


def test_argparse_errors_exit_2():
    assert run("frobnicate")[0] == 2
    assert run("ntable", "--p", "five")[0] == 2
    assert run("ntable", "--p", "5", "--format", "xml")[0] == 2


def test_verify_single_prime():
    code, out, _ = run("verify", "--p", "7")
    assert code == 0
    assert out.splitlines() == [
        "p,majoration,parity,main_theorem,congruence,mirror,power_sum,status",
        "7,pass,pass,pass,pass,pass,pass,ok",
    ]


def test_verify_max_p_100_one_line_per_prime():
    code, out, _ = run("verify", "--max-p", "100")
    assert code == 0
    assert len(out.splitlines()) == 1 + 24


def test_verify_json_lines():
    code, out, _ = run("verify", "--p", "5", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 6
    assert all(r["passed"] and r["structure"] == "p5" for r in rows)


def test_verify_reports_counterexample(tmp_path):
    s = PrimeField(7)
    write_table(tmp_path, NTable(s, [10, 4, 4, 5, 5, 4, 3]))
    code, out, err = run("verify", "--p", "7", "--cache-dir", str(tmp_path), "--trust-cache")
    assert code == 1
    assert "counterexample: p7 main_theorem at 5" in err
    assert "FAILED" in out


def test_coeffs():
    assert run("coeffs", "--p", "5")[1] == '{"p":5,"coeffs":{"0":4,"2":1,"4":4}}\n'
    assert list(json.loads(run("coeffs", "--p", "3")[1])["coeffs"]) == ["0", "2"]
    assert run("coeffs", "--p", "5", "--format", "csv")[1] == "k,c\n0,4\n2,1\n4,4\n"


def test_symmetries():
    code, out, _ = run("symmetries", "--p", "13")
    data = json.loads(out)
    assert code == 0
    assert [1, 0] in data["affine"] and [12, 0] in data["affine"]
    assert 3 in data["inversive"] and 10 in data["inversive"]
    code, out, _ = run("symmetries", "--p", "13", "--format", "csv")
    assert "inversive,3," in out.splitlines()


def test_sets():
    code, out, _ = run("sets", "--p", "5")
    assert out.splitlines() == ["set,size,elements", "A,3,0 2 3", "A+A,5,0 1 2 3 4", "A*A,3,0 1 4"]
    data = json.loads(run("sets", "--p", "5", "--format", "json")[1])
    assert data["sizes"] == {"A": 3, "A+A": 5, "A*A": 3}


def test_ext():
    code, out, err = run("ext", "--p", "3", "--k", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,element,M,N" and len(lines) == 10
    assert lines[1] == "0,0,2,14"
    assert "over F_9: holds" in err
    data = json.loads(run("ext", "--p", "3", "--k", "2", "--format", "json")[1])
    assert data["q"] == 9 and data["main_theorem"] == {"passed": True, "counterexample": None}
    assert data["irreducible"] == [1, 0, 1]


def test_zn():
    code, out, err = run("zn", "--n", "9")
    assert code == 0 and err == ""
    assert out.splitlines()[0] == "t,M,N"
    assert [int(r.split(",")[2]) for r in out.splitlines()[1:]] == [18, 0, 0, 0, 9, 9, 0, 0, 0]
    code, out, err = run("zn", "--n", "8", "--format", "json")
    assert "even" in err and json.loads(out)["even_modulus"] is True


def test_ntable_over_ring_and_extension():
    assert run("ntable", "--n", "9")[1].splitlines()[1] == "0,18"
    assert run("mtable", "--p", "3", "--k", "2")[1].splitlines()[0] == "a,element,M"


@pytest.mark.parametrize("structure", [PrimeField(13), ResidueRing(12), extension_field(5, 2)])
def test_cache_roundtrip(tmp_path, structure):
    for table in (n_table(structure), m_table(structure)):
        path = write_table(tmp_path, table)
        assert path == table_path(tmp_path, table.kind, structure)
        assert path.name == f"{table.kind}_{structure.descriptor}.json"
        assert read_table(tmp_path, table.kind, structure) == table


def test_cache_spot_check_rejects_bad_table(tmp_path):
    s = PrimeField(7)
    write_table(tmp_path, NTable(s, [11, 4, 4, 5, 5, 4, 4]))
    built = []

    def build():
        built.append(1)
        return n_table(s)

    assert list(cached_table(tmp_path, "ntable", s, build)) == [10, 4, 4, 5, 5, 4, 4]
    assert built == [1]
    # rewritten file is now good and served without rebuilding
    assert list(cached_table(tmp_path, "ntable", s, build)) == [10, 4, 4, 5, 5, 4, 4]
    assert built == [1]


def test_cache_ignores_garbage(tmp_path):
    s = PrimeField(5)
    table_path(tmp_path, "ntable", s).write_text("{not json")
    assert list(cached_table(tmp_path, "ntable", s, lambda: n_table(s))) == [6, 1, 4, 4, 1]


def test_cli_output_same_with_cache(tmp_path):
    plain = run("ntable", "--p", "31")[1]
    first = run("ntable", "--p", "31", "--cache-dir", str(tmp_path))[1]
    second = run("ntable", "--p", "31", "--cache-dir", str(tmp_path))[1]
    assert plain == first == second
    assert (tmp_path / "ntable_p31.json").exists()


def test_jobs_determinism():
    one = run("verify", "--max-p", "60", "--jobs", "1")
    four = run("verify", "--max-p", "60", "--jobs", "4")
    assert one == four and one[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "invsum", "ntable", "--p", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "t,N\n0,2\n1,1\n2,1\n"
