import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aztec_tangent import cli, export, refined
from aztec_tangent.arctic import geometric_curve


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_partition_json(capsys):
    code, out, _ = run(capsys, "partition", "--n", "3", "--a", "1", "--b", "1")
    rep = json.loads(out)
    assert code == 0 and rep["Z_n"] == "64" and rep["octahedron_matches_closed_form"]


def test_partition_zero(capsys):
    code, out, _ = run(capsys, "partition", "--n", "0", "--a", "1", "--b", "2")
    assert code == 0 and json.loads(out)["T_n"] == "1"


def test_partition_csv(capsys):
    code, out, _ = run(capsys, "partition", "--n", "4", "--a", "1", "--b", "2", "--format", "csv")
    header, rows = export.read_csv(out)
    rec = dict(zip(header, rows[0]))
    assert code == 0 and rec["Z_n"] == 4 ** 6 * 5 ** 4
    assert rec["octahedron_matches_closed_form"] == "True"


@pytest.mark.parametrize("argv", [
    ["partition", "--n", "3", "--a", "x", "--b", "1"],
    ["partition", "--n", "3", "--a", "-1", "--b", "1"],
    ["partition", "--n", "-2", "--a", "1", "--b", "1"],
    ["curve", "--beta", "1", "--method", "magic"],
    ["refined", "--n", "0", "--a", "1", "--b", "1"],
    ["check", "--suite", "mtoroidal", "--alphas", "2,3", "--betas", "1,1"],
    ["check", "--suite", "mtoroidal", "--alphas", "2,3"],
    ["check", "--suite", "mtoroidal", "--m", "0"],
    [],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as e:
        code = cli.main(argv)
        raise SystemExit(code)
    assert e.value.code == 2


def test_refined_one(capsys):
    code, out, _ = run(capsys, "refined", "--n", "3", "--a", "1", "--b", "2")
    header, rows = export.read_csv(out)
    assert code == 0 and header == ["n", "k", "T_nk", "S_nk", "sum_check"]
    assert [r[2] for r in rows] == [5, Fraction(15, 2), Fraction(15, 2), 5]
    assert all(r[4] == "ok" for r in rows)


def test_refined_two(capsys, tmp_path):
    path = tmp_path / "t.csv"
    code, _, _ = run(capsys, "refined", "--n", "4", "--a", "2/3", "--b", "5", "--two", "--output", str(path))
    header, rows = export.read_csv(path.read_text())
    tab = refined.two_refined(4, Fraction(2, 3), Fraction(5))[4]
    assert code == 0 and len(rows) == 25
    assert all(r[3] == tab[r[1]][r[2]] for r in rows)


def test_curve_csv(capsys):
    code, out, _ = run(capsys, "curve", "--beta", "1", "--samples", "40")
    header, rows = export.read_csv(out)
    assert code == 0 and header == ["beta", "v", "method", "X", "Y", "residual"]
    assert all(abs(r[5]) < 1e-9 for r in rows)
    v, X, Y = rows[7][1], rows[7][3], rows[7][4]
    assert (X, Y) == geometric_curve(v, 1.0)


def test_curve_both_reports_discrepancy(capsys):
    code, _, err = run(capsys, "curve", "--beta", "1", "--method", "both", "--samples", "50")
    assert code == 0
    assert float(err.split()[-1]) < 1e-8


def test_curve_svg(capsys):
    code, out, _ = run(capsys, "curve", "--beta", "0.01", "--format", "svg", "--size", "300",
                       "--method", "both", "--samples", "30")
    assert code == 0 and out.startswith("<svg") and out.count("<polyline") == 2
    assert 'width="300"' in out and "<polygon" in out


def test_check_exact_suite(capsys):
    code, out, _ = run(capsys, "check", "--suite", "exact")
    rep = json.loads(out)
    assert code == 0 and rep["suite"] == "exact"
    assert all(set(c) >= {"name", "status", "residual", "tolerance"} for c in rep["cases"])


def test_check_appendix_beta(capsys):
    code, out, _ = run(capsys, "check", "--suite", "appendix", "--beta", "4")
    rep = json.loads(out)
    assert code == 0 and len(rep["cases"]) == 20


def test_check_mtoroidal(capsys):
    code, out, _ = run(capsys, "check", "--suite", "mtoroidal", "--m", "3")
    assert code == 0 and all(c["status"] == "pass" for c in json.loads(out)["cases"])
    code, out, _ = run(capsys, "check", "--suite", "mtoroidal",
                       "--alphas", "2,3/5,7/2", "--betas", "4/3,5,63/100")
    assert code == 0 and json.loads(out)["weights"]["beta"][2] == "63/100"


def test_check_failure_exit(capsys, monkeypatch):
    from aztec_tangent import checks
    monkeypatch.setitem(checks.SUITES, "exact", [99])
    monkeypatch.setitem(checks.CRITERIA, 99, ("always fails", lambda: [checks.exact_case("x", False)]))
    code, out, _ = run(capsys, "check", "--suite", "exact")
    assert code == 1 and json.loads(out)["cases"][0]["status"] == "fail"


def test_brute_cap_refusal(capsys, monkeypatch):
    monkeypatch.setenv("AZTEC_BRUTE_CAP", "5")
    code, out, err = run(capsys, "check", "--suite", "exact", "--brute-cap", "1")
    assert code == 2 and "cap" in err.lower()


finite = st.floats(allow_nan=False, allow_infinity=False)
cell = st.one_of(finite, st.fractions(max_denominator=10 ** 6), st.integers(-10 ** 9, 10 ** 9),
                 st.floats(-1e3, 1e3).map(np.float64))


@given(st.lists(st.lists(cell, min_size=3, max_size=3), max_size=6))
@settings(max_examples=60)
def test_csv_round_trip(rows):
    header, back = export.read_csv(export.to_csv(["p", "q", "r"], rows))
    assert header == ["p", "q", "r"]
    assert len(back) == len(rows)
    for r0, r1 in zip(rows, back):
        for x, y in zip(r0, r1):
            assert x == y
            assert isinstance(y, float) == isinstance(x, float)


def test_parse_cell_text():
    assert export.parse_cell("geometric") == "geometric"
    assert export.parse_cell("3/4") == Fraction(3, 4)
    assert export.parse_cell("1e-3") == 1e-3
    assert export.parse_cell("12") == 12 and isinstance(export.parse_cell("12"), int)
    assert export.fmt(np.float64(0.1)) == "0.1"
