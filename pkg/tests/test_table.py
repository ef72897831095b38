"""Table assembly, verification suites, export formats."""

import json

import pytest

from ud4table.characters import char_value
from ud4table.cyclotomic import CycInt, from_phi
from ud4table.ffield import Fq
from ud4table.table import (TENSOR_PARAMS, build_table, core_label, export,
                            parse_table_json, verify_counts,
                            verify_orthogonality, _float_str)


@pytest.fixture(scope="module")
def t2(ctx2):
    return build_table(ctx2)


@pytest.fixture(scope="module")
def t3(ctx3):
    return build_table(ctx3)


def test_build_shape(t2, t3):
    assert t2.n_rows == t2.n_cols == 103
    assert t3.n_rows == t3.n_cols == 753
    assert t2.values is not None            # small enough to materialize
    # rows run from the top-degree family down to the linear characters
    assert t2.rows[0].family == "F12"
    assert t2.rows[-1].family == "Flin"
    fams = [f for f, _, _ in t2.row_families()]
    assert fams[0] == "F12" and fams[-1] == "Flin"


def test_counts(t2, t3):
    for t in (t2, t3):
        rep = verify_counts(t)
        assert rep["ok"], rep
        assert rep["sum_class_sizes"] == rep["group_order"]
        assert rep["sum_degree_squares"] == rep["group_order"]


def test_row_filler_matches_direct(t2):
    # every materialized cell equals the direct closed-form evaluation
    for i, (lab, vals) in enumerate(t2.iter_rows()):
        for j, col in enumerate(t2.cols):
            assert vals[j] == char_value(lab, col.rep), (i, j)


@pytest.mark.parametrize("fix", ["t2", "t3"])
def test_core_tensor_factorization(fix, request):
    # cell-by-cell: value = phi(sum tensor-param * t_root) * core value
    t = request.getfixturevalue(fix)
    ctx = t.ctx
    sample = t.rows if t.n_rows <= 200 else t.rows[::7]
    cols = t.cols if t.n_cols <= 200 else t.cols[::7]
    for lab in sample:
        core = core_label(lab)
        pd = lab.params_dict
        names = TENSOR_PARAMS[lab.family]
        for col in cols:
            acc = ctx.zero
            for name in names:
                if pd[name]:
                    acc = acc + Fq(ctx, pd[name]) * col.rep.t(int(name[1:]))
            assert char_value(lab, col.rep) == \
                from_phi(acc) * char_value(core, col.rep)


def test_full_orthogonality(t2, t3):
    for t in (t2, t3):
        rep = verify_orthogonality(t, "full")
        assert rep["ok"] and rep["rows_ok"] and rep["cols_ok"]
    rep = verify_orthogonality(t3, "full")
    assert rep["row_pairs"] == 753 * 754 // 2


def test_sampled_orthogonality(t3):
    rep = verify_orthogonality(t3, "sampled", samples=100)
    assert rep["ok"] and rep["rows_ok"]
    assert rep["cols_ok"] is None           # columns not sampled, reported
    assert rep["row_pairs"] == 100 * 101 // 2
    # deterministic: same seed, same sample
    rep2 = verify_orthogonality(t3, "sampled", samples=100)
    assert rep == rep2


def test_orthogonality_detects_errors(t2):
    broken = build_table(t2.ctx)
    broken.values = [list(row) for row in t2.values]
    broken.values[5][7] = broken.values[5][7] + 1
    assert not verify_orthogonality(broken, "full")["ok"]


def test_json_roundtrip(t2):
    doc = export(t2, "json", "exact")
    back = parse_table_json(doc)
    assert back.n_rows == t2.n_rows and back.n_cols == t2.n_cols
    for i in range(t2.n_rows):
        assert back.rows[i] == t2.rows[i]
        assert back.values[i] == t2.values[i]
    for c1, c2 in zip(back.cols, t2.cols):
        assert c1.rep.coords == c2.rep.coords
        assert c1.centralizer_order == c2.centralizer_order
    meta = json.loads(doc)["meta"]
    assert meta["q"] == 2 and meta["group_order"] == 4096
    assert "F11" in meta["special_sums"]


def test_json_float_mode(t2):
    doc = export(t2, "json", "float")
    data = json.loads(doc)
    assert data["value_mode"] == "float"
    assert all(isinstance(v, str) for v in data["rows"][0]["values"])
    with pytest.raises(ValueError):
        parse_table_json(doc)               # floats cannot be re-imported


def test_float_rendering():
    # 1 + 2*zeta_3 = i*sqrt(3)
    assert _float_str(CycInt(3, (1, 2))) == "0+1.7320508i"
    assert _float_str(CycInt(3, (5, 0))) == "5+0i"


def test_csv_latex(t2):
    csv_doc = export(t2, "csv")
    lines = csv_doc.strip().splitlines()
    assert lines[0].startswith("label,degree")
    assert len(lines) == t2.n_rows + 2      # header + class sizes + rows
    tex = export(t2, "latex")
    assert "\\begin{tabular}" in tex and "% family F12" in tex
    with pytest.raises(ValueError):
        export(t2, "xml")
    with pytest.raises(ValueError):
        export(t2, "json", "symbolic")
