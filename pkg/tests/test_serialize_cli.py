import csv
import io
import json
import subprocess
import sys

import pytest

import neutro.rings as R
import neutro.serialize as S
from neutro.algebra import neutrosophic_group_ring
from neutro.cli import main
from neutro.magma import cyclic, full_neutro_magma, neutrosophify_tagged
from neutro.matrix import NeutroMatrix
from neutro.poly import parse_poly
from neutro.scalars import QQ, ZZ, Zmod, parse_scalar


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---- serialization ----------------------------------------------------------


def test_scalar_poly_matrix_round_trips():
    s = parse_scalar("5/19 - 2I", QQ)
    assert S.scalar_from_json(json.loads(json.dumps(S.scalar_to_json(s))), QQ) == s
    p = parse_poly("(2-I) + (7+5I)x - 8Ix^2", ZZ)
    assert S.poly_from_json(json.loads(json.dumps(S.poly_to_json(p)))) == p
    m = NeutroMatrix(Zmod(2), [["I", 0], [1, "I"]])
    assert S.matrix_from_json(S.matrix_to_json(m)) == m


def test_magma_and_ring_round_trips():
    m = neutrosophify_tagged(cyclic(3))
    back = S.magma_from_json(S.magma_to_json(m))
    assert back.labels == m.labels and back.table == m.table and back.neutro == m.neutro
    r = R.zn_neutro(4)
    assert S.ring_to_json(r) == {"parametric": 4}
    assert S.ring_from_json(S.ring_to_json(r)).order == 16
    t = R.scalar_ring_from_subset(6, ["0", "I", "2I", "3I", "4I", "5I"])
    t2 = S.ring_from_json(json.loads(json.dumps(S.ring_to_json(t))))
    assert all(t2.mul(i, j) == t.mul(i, j) and t2.add(i, j) == t.add(i, j) for i in range(6) for j in range(6))


def test_formal_sum_round_trip():
    alg = neutrosophic_group_ring(Zmod(3), cyclic(3))
    x = alg.parse("2 + g + 2g^2I")
    d = S.formal_sum_to_json(x, "cyclic:3")
    assert d["magma_ref"] == "cyclic:3"
    assert S.formal_sum_from_json(json.loads(json.dumps(d)), alg) == x


def test_schema_version_and_formats():
    body = json.loads(S.dumps({"a": 1}))
    assert body["schema_version"] == S.SCHEMA_VERSION
    assert "a: 1" in S.render({"a": 1}, "text")
    with pytest.raises(S.FormatError):
        S.render({"a": 1}, "xml")


def test_cayley_csv_has_label_header():
    m = full_neutro_magma(2, "mul")
    rows = list(csv.reader(io.StringIO(S.cayley_csv(m))))
    assert rows[0][1:] == list(m.labels)
    assert len(rows) == m.order + 1


def test_ideal_table_sort_order():
    r = R.zn_neutro(4)
    rows = S.ideal_table(r, R.ideals(r))
    keys = [(row["order"], row["mask"]) for row in rows]
    assert keys == sorted(keys)


# ---- command line -----------------------------------------------------------


def test_ring_analyze(capsys):
    code, out, _ = run_cli(capsys, "ring", "analyze", "--zn", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    kinds = [i["kind"] for i in data["ideals"]]
    assert kinds.count("PseudoNeutrosophicIdeal") == 1 and "NeutrosophicIdeal" not in kinds


def test_poly_mul_prints_constant_term(capsys):
    code, out, _ = run_cli(capsys, "poly", "mul", "--lhs", "(2-I) + (7+5I)x - 8Ix^2",
                           "--rhs", "(7+I) + (2+5I)x^2 + (3+I)x^3")
    assert code == 0 and "14-6I" in out.replace(" ", "")


def test_group_and_semigroup(capsys):
    code, out, _ = run_cli(capsys, "group", "analyze", "--base", "units-mod", "5", "--neutro", "tagged",
                           "--format", "json")
    assert code == 0 and json.loads(out)["order"] == 8
    code, out, _ = run_cli(capsys, "semigroup", "table", "--magma", "mul-mod:3", "--format", "csv")
    assert code == 0 and out.splitlines()[0].count(",") == 3


def test_matrix_and_algebra(capsys):
    code, out, _ = run_cli(capsys, "matrix", "mul", "--lhs", "I,0;1,I", "--rhs", "1,I;I,0")
    assert code == 0 and "1+I" in out.replace(" ", "")
    code, out, _ = run_cli(capsys, "algebra", "units", "--coeff", "Z4", "--magma", "cyclic:2", "--neutro", "tagged",
                           "--element", "1+2gI", "--format", "json")
    assert code == 0 and json.loads(out)["unit"] is True


def test_usage_errors_exit_two(capsys):
    code, _, err = run_cli(capsys, "nonsense")
    assert code == 2 and err
    code, _, err = run_cli(capsys, "ring", "analyze")
    assert code == 2 and err


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "1,7")
    assert code == 0 and out.count("PASS") == 2
    # the unit criterion contains a sub-check that cannot hold
    code, out, _ = run_cli(capsys, "verify", "10")
    assert code == 1 and "FAIL" in out


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "neutro", "verify", "8"], capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout


def test_thread_setting_is_validated(capsys, monkeypatch):
    monkeypatch.setenv("NEUTRO_MAX_THREADS", "zero")
    code, _, err = run_cli(capsys, "verify", "1")
    assert code == 2 and "NEUTRO_MAX_THREADS" in err
