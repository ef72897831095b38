"""Character labels, enumeration, closed-form values, transport."""

import pytest

from ud4table.characters import (FAMILY_PARAMS, char_value, enumerate_chars,
                                 format_label, make_label, parse_label,
                                 transport_char)
from ud4table.classes import enumerate_class_reps
from ud4table.cyclotomic import zeta_pow
from ud4table.group import AUTOMORPHISMS, parse_element


def test_label_roundtrip(ctx3):
    lab = make_label(ctx3, "F11", a11=1, b5=0, b6=2, b7=0, b3=1)
    s = format_label(lab)
    assert s == "F11[a11=1,b5=0,b6=2,b7=0,b3=1]"
    assert parse_label(ctx3, s) == lab
    assert lab.degree == 27
    assert lab.param("b6") == 2


def test_parse_errors(ctx3, ctx2):
    with pytest.raises(ValueError):
        parse_label(ctx3, "F99[a1=1]")
    with pytest.raises(ValueError):
        parse_label(ctx3, "F11[a11=1]")                  # missing params
    with pytest.raises(ValueError):
        parse_label(ctx3, "F11[a11=0,b5=0,b6=0,b7=0,b3=0]")  # a11 not a unit
    with pytest.raises(ValueError):
        parse_label(ctx3, "F11[a11=3,b5=0,b6=0,b7=0,b3=0]")  # out of range
    with pytest.raises(ValueError):
        parse_label(ctx2, "F8910_qh[a8=1,a9=1,a10=1,a567=1,d124=2,d3=0]")
    # auxiliary a-parameters may be zero (p=2 canonical coset choice)
    lab = parse_label(ctx2, "F89_q3[a8=1,a9=1,a6=0,a7=1]")
    assert lab.param("a6") == 0


def test_enumeration_counts(ctx2, ctx3, ctx4, ctx5):
    # as many irreducible characters as conjugacy classes, at every q
    for ctx in (ctx2, ctx3, ctx4, ctx5):
        chars = enumerate_chars(ctx)
        assert len(chars) == len(enumerate_class_reps(ctx))
        assert len({(c.family, c.params) for c in chars}) == len(chars)
        assert sum(c.degree ** 2 for c in chars) == ctx.q ** 12


def test_degree_table(ctx3, ctx2):
    assert make_label(ctx3, "Flin", b1=0, b2=0, b3=0, b4=0).degree == 1
    assert make_label(ctx3, "F567", a5=1, a6=1, a7=1,
                      b1=0, b2=0, b4=0).degree == 3
    assert make_label(ctx3, "F12", a12=1, b1=0, b2=0, b4=0).degree == 81
    assert make_label(ctx2, "F8910_qh", a8=1, a9=1, a10=1, a567=1,
                      d124=0, d3=0).degree == 4      # q^3/2


def test_linear_characters(ctx3):
    # Flin values are p-th roots of unity, multiplicative on products
    lab = make_label(ctx3, "Flin", b1=1, b2=1, b3=0, b4=1)
    x = parse_element(ctx3, "x1(1)*x2(1)")
    y = parse_element(ctx3, "x4(2)*x12(1)")
    vx, vy = char_value(lab, x), char_value(lab, y)
    assert vx == zeta_pow(3, 2)
    assert char_value(lab, x * y) == vx * vy


def test_frozen_values(ctx2, ctx3, ctx4):
    # half-degree p=2 family
    qh = make_label(ctx2, "F8910_qh", a8=1, a9=1, a10=1, a567=1, d124=0, d3=0)
    assert char_value(qh, parse_element(ctx2, "1")) == 4
    assert char_value(qh, parse_element(ctx2, "x3(1)")) == -2
    assert char_value(qh, parse_element(ctx2, "x8(1)")) == -4
    assert char_value(qh, parse_element(ctx2, "x8(1)*x9(1)*x10(1)")) == -4
    # F11 at q=4
    lab4 = parse_label(ctx4, "F11[a11=1,b5=0,b6=2,b7=0,b3=1]")
    assert char_value(lab4, parse_element(ctx4, "x3(1)*x8(2)")) == -4
    # F12 at q=3: identity gives the degree, the center a scaled root of
    # unity, and the deep columns a Gauss-sum value
    f12 = make_label(ctx3, "F12", a12=1, b1=0, b2=0, b4=0)
    assert char_value(f12, parse_element(ctx3, "1")) == 81
    assert char_value(f12, parse_element(ctx3, "x12(1)")).c == (0, 81)
    assert char_value(f12, parse_element(ctx3, "x1(1)*x2(1)*x4(1)")).c == (-3, -6)


def test_values_vanish_off_support(ctx3):
    # characters induced from deep subgroups vanish on shallow classes
    f12 = make_label(ctx3, "F12", a12=1, b1=0, b2=0, b4=0)
    assert char_value(f12, parse_element(ctx3, "x3(1)")).is_zero()
    f11 = make_label(ctx3, "F11", a11=1, b5=0, b6=0, b7=0, b3=0)
    assert char_value(f11, parse_element(ctx3, "x1(1)")).is_zero()


def test_transport_char(ctx5, ctx2):
    tau = AUTOMORPHISMS["tau"]
    lab = make_label(ctx5, "F8_q3", a8=2, a7=3)
    tl = transport_char(tau, lab)
    assert tl.family == "F9_q3"
    assert tl.params_dict == {"a9": 2, "a6": 3}
    # p=2 families are not transport-stable
    lab2 = make_label(ctx2, "F8_q3", a8=1, a7=1)
    with pytest.raises(ValueError):
        transport_char(tau, lab2)


def test_family_params_cover_degrees():
    # every declared family has a parameter list and a degree
    from ud4table.characters import _DEGREE
    assert set(FAMILY_PARAMS) == set(_DEGREE)
