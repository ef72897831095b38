"""The brute-force oracle: symbolic group law, orbit classes, inductions."""

import random

import numpy as np
import pytest

from ud4table import oracle
from ud4table.characters import char_value, make_label
from ud4table.classes import enumerate_class_reps
from ud4table.cyclotomic import CycRational
from ud4table.ffield import field_make
from ud4table.group import UElement, parse_element


def rand_elem(ctx, rng):
    return UElement(ctx, [rng.randrange(ctx.q) for _ in range(12)])


def test_spec_shapes():
    # term counts per coordinate are a fingerprint of the collected group law
    assert [len(s) for s in oracle.mul_specs()] == \
        [2, 2, 2, 2, 3, 3, 3, 7, 7, 7, 15, 37]
    assert [len(s) for s in oracle.conj_specs()] == \
        [1, 1, 1, 1, 3, 3, 3, 11, 11, 11, 27, 77]
    assert [len(s) for s in oracle.inv_specs()] == \
        [1, 1, 1, 1, 2, 2, 2, 4, 4, 4, 8, 15]


@pytest.mark.parametrize("p,a", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_specs_match_group_ops(p, a):
    # the symbolic coordinate polynomials agree with collection, at any q
    ctx = field_make(p, a)
    vf = oracle.VecField(ctx)
    rng = random.Random(1234)
    for _ in range(40):
        x, y = rand_elem(ctx, rng), rand_elem(ctx, rng)
        xc = [np.int16(c) for c in x.coords]
        yc = [np.int16(c) for c in y.coords]
        got = tuple(int(c) for c in vf.eval_specs(oracle.mul_specs(), xc + yc))
        assert got == (x * y).coords
        got = tuple(int(c) for c in vf.eval_specs(oracle.inv_specs(), xc))
        assert got == x.inv().coords
        # conj_specs takes the conjugator's coordinates first
        got = tuple(int(c) for c in vf.eval_specs(oracle.conj_specs(), yc + xc))
        assert got == x.conj(y).coords


def test_orbit_classes_q2(ctx2):
    tbl = oracle.enumerate_quotient(ctx2, 13)
    part = oracle.orbit_classes(tbl)
    assert part.n_classes == 103
    assert int(part.class_sizes.sum()) == 4096
    # the identity is alone in its class
    assert part.size_of_class(part.class_id_of(
        parse_element(ctx2, "1"))) == 1
    # the center x12 is alone in its class
    assert part.size_of_class(part.class_id_of(
        parse_element(ctx2, "x12(1)"))) == 1


def test_verify_classes(ctx2):
    rep = oracle.verify_classes(ctx2, enumerate_class_reps(ctx2))
    assert rep["ok"], rep["problems"]
    assert rep["oracle_classes"] == rep["listed_classes"] == 103


def test_verify_classes_detects_errors(ctx2):
    reps = enumerate_class_reps(ctx2)
    # duplicate a representative: the driver must flag the conjugate pair
    bad = reps[:50] + [reps[49]] + reps[51:]
    rep = oracle.verify_classes(ctx2, bad)
    assert not rep["ok"]
    assert any("conjugate" in p for p in rep["problems"])


def test_check_linear_on(ctx2):
    tbl = oracle.enumerate_quotient(ctx2, 8)
    # the stated abelianized subgroups pass
    oracle.check_linear_on(tbl, (1, 2, 4, 5, 6, 7), (5, 6, 7))
    # coordinate 5 is not multiplicative on a set containing both 1 and 3
    with pytest.raises(ValueError):
        oracle.check_linear_on(tbl, (1, 2, 3, 4, 5, 6, 7), (5,))


def test_induce_linear_frozen(ctx2):
    # the height-1 construction: V = X1 X2 X4 X5 X6 X7 in U/M_8
    tbl = oracle.enumerate_quotient(ctx2, 8)
    elems = [parse_element(ctx2, s)
             for s in ("1", "x5(1)", "x3(1)", "x1(1)")]
    vals = oracle.induce_linear(tbl, (1, 2, 4, 5, 6, 7), {5: 1, 6: 1, 7: 1},
                                elems, (3,))
    assert [v.c for v in vals] == [(2,), (-2,), (0,), (0,)]
    lab = make_label(ctx2, "F567", a5=1, a6=1, a7=1, b1=0, b2=0, b4=0)
    assert [char_value(lab, e) for e in elems] == vals


def test_inner_product(ctx2):
    # <chi, chi> = 1 and <chi, psi> = 0 over the class list
    reps = enumerate_class_reps(ctx2)
    sizes = [r.class_size for r in reps]
    lab1 = make_label(ctx2, "F567", a5=1, a6=1, a7=1, b1=0, b2=0, b4=0)
    lab2 = make_label(ctx2, "F12", a12=1, b1=0, b2=0, b4=0)
    v1 = [char_value(lab1, r.rep) for r in reps]
    v2 = [char_value(lab2, r.rep) for r in reps]
    assert oracle.inner_product(v1, v1, sizes, 4096) == 1
    assert oracle.inner_product(v2, v2, sizes, 4096) == 1
    assert oracle.inner_product(v1, v2, sizes, 4096) == 0


def test_induce_halfdeg(ctx2):
    tbl = oracle.enumerate_quotient(ctx2, 11)
    for d124 in (0, 1):
        lab = make_label(ctx2, "F8910_qh", a8=1, a9=1, a10=1, a567=1,
                         d124=d124, d3=0)
        elems = [parse_element(ctx2, s)
                 for s in ("1", "x3(1)", "x8(1)", "x1(1)*x2(1)*x4(1)")]
        vals = oracle.induce_halfdeg(tbl, lab, elems)
        assert vals == [char_value(lab, e) for e in elems]


def test_verify_constructions_subset(ctx2):
    # one label from several structurally distinct families
    labels = [
        make_label(ctx2, "F567", a5=1, a6=1, a7=1, b1=0, b2=1, b4=0),
        make_label(ctx2, "F89_q2", a8=1, a9=1, b2=0, b3=1, b4=0),
        make_label(ctx2, "F910_q2", a9=1, a10=1, b1=1, b2=0, b3=0),
        make_label(ctx2, "F11", a11=1, b5=0, b6=1, b7=0, b3=1),
        make_label(ctx2, "F12", a12=1, b1=1, b2=0, b4=0),
        make_label(ctx2, "F8910_qh", a8=1, a9=1, a10=1, a567=1, d124=1, d3=1),
    ]
    reps = enumerate_class_reps(ctx2)
    rep = oracle.verify_constructions(ctx2, labels, reps)
    assert rep["ok"], rep["mismatches"]
    assert rep["checked"] >= len(labels) * len(reps)


def test_quotient_cap(ctx5):
    with pytest.raises(ValueError):
        oracle.enumerate_quotient(ctx5, 13)   # 5^12 far beyond the cap
