"""Field arithmetic: frozen small-field facts plus algebraic property tests."""

import pytest
from hypothesis import given, strategies as st

from ud4table.ffield import (FieldError, Fq, a_phi, default_poly, field_make,
                             nonimage_pick)


def test_default_polys_frozen():
    # lexicographically smallest monic irreducibles
    assert default_poly(2, 2) == (1, 1, 1)       # x^2 + x + 1
    assert default_poly(2, 3) == (1, 1, 0, 1)    # x^3 + x + 1
    assert default_poly(3, 2) == (1, 0, 1)       # x^2 + 1
    assert default_poly(5, 1) == (0, 1)


def test_f4_tables(ctx4):
    # g = element 2 satisfies g^2 = g + 1, g^{-1} = g + 1, Tr(g) = 1
    assert ctx4.poly == (1, 1, 1)
    assert ctx4.mul(2, 2) == 3
    assert ctx4.inv(2) == 3
    assert ctx4.trace_t == [0, 0, 1, 1]
    assert ctx4.add(2, 3) == 1


def test_f9_tables(ctx9):
    assert ctx9.poly == (1, 0, 1)
    assert ctx9.trace_t == [0, 2, 1, 0, 2, 1, 0, 2, 1]
    assert ctx9.inv_t == [0, 1, 2, 6, 5, 4, 3, 8, 7]


def test_prime_field_arithmetic(ctx3):
    assert ctx3.inv(2) == 2
    assert ctx3.neg(1) == 2
    assert ctx3.trace_t == [0, 1, 2]


def test_errors():
    with pytest.raises(FieldError):
        field_make(4, 1)
    with pytest.raises(FieldError):
        field_make(2, 20)      # q above the supported cap
    with pytest.raises(FieldError):
        field_make(2, 2, (1, 0, 1))   # x^2 + 1 = (x+1)^2 over F_2
    with pytest.raises(FieldError):
        field_make(3, 1).inv(0)


def test_int_embedding(ctx4):
    # small integers embed through the prime subfield
    g = ctx4.element(2)
    assert g + 1 == ctx4.element(3)
    assert g * 0 == ctx4.zero
    assert ctx4.element(1) == 1 and ctx4.element(1) == 3  # 3 = 1 mod 2


def test_a_phi(ctx9, ctx4):
    # a_phi(a) = a^{-p}
    assert a_phi(Fq(ctx9, 2)).i == 2    # 2^{-3} = 2 in F_9
    assert a_phi(Fq(ctx4, 2)).i == 2    # g^{-2} = g^{-2} = g (g^3 = 1)
    with pytest.raises(FieldError):
        a_phi(ctx4.zero)


def test_nonimage_pick(ctx2, ctx4):
    assert nonimage_pick(ctx2, lambda t: t * t + t).i == 1
    # over F_4 the image of t^2 + t is the prime subfield, so the pick is g
    assert nonimage_pick(ctx4, lambda t: t * t + t).i == 2
    with pytest.raises(FieldError):
        nonimage_pick(field_make(3, 1), lambda t: t)
    with pytest.raises(FieldError):
        nonimage_pick(ctx4, lambda t: t)   # surjective


@pytest.mark.parametrize("p,a", [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)])
def test_field_axioms(p, a):
    ctx = field_make(p, a)
    q = ctx.q
    elems = [ctx.element(i) for i in range(q)]
    for x in elems:
        for y in elems:
            assert x + y == y + x
            assert x * y == y * x
            for z in elems[:3]:
                assert (x + y) + z == x + (y + z)
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z
        assert x + (-x) == ctx.zero
        if not x.is_zero():
            assert x * x.inv() == ctx.one
        # Frobenius is additive: Tr is the sum of Frobenius powers
        assert (x ** p).trace() == x.trace()


@given(st.integers(0, 8), st.integers(0, 8))
def test_f9_trace_additive(i, j):
    ctx = field_make(3, 2)
    x, y = Fq(ctx, i), Fq(ctx, j)
    assert (x + y).trace() == (x.trace() + y.trace()) % 3


@given(st.integers(0, 3), st.integers(1, 3), st.integers(1, 3))
def test_f4_division(i, j, k):
    ctx = field_make(2, 2)
    x, y, z = Fq(ctx, i), Fq(ctx, j), Fq(ctx, k)
    assert (x / y) * y == x
    assert x / (y * z) == (x / y) / z
