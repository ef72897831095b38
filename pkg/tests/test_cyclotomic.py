"""Z[zeta_p] arithmetic and the exponential sums, with frozen small values."""

import cmath

import pytest
from hypothesis import given, strategies as st

from ud4table.cyclotomic import (CycInt, CycRational, from_phi,
                                 gauss_quadratic, kloosterman,
                                 quad_linear_sum, zeta_pow)
from ud4table.ffield import Fq, field_make


def test_canonical_reduction():
    # zeta_3^2 = -1 - zeta_3
    assert CycInt.from_exponents(3, [0, 0, 1]).c == (-1, -1)
    assert zeta_pow(3, 2).c == (-1, -1)
    assert zeta_pow(3, 3) == 1
    # 1 + zeta + ... + zeta^{p-1} = 0
    for p in (2, 3, 5, 7):
        s = CycInt.zero(p)
        for k in range(p):
            s = s + zeta_pow(p, k)
        assert s.is_zero()


def test_ring_ops():
    z = zeta_pow(5, 1)
    assert (z * z).c == zeta_pow(5, 2).c
    assert z * zeta_pow(5, 4) == 1
    assert z.conj() == zeta_pow(5, 4)
    assert (2 * z - z) == z
    assert (z - z).is_zero()
    with pytest.raises(ValueError):
        zeta_pow(3, 1) + zeta_pow(5, 1)


def test_integer_interface():
    v = CycInt.integer(3, -4)
    assert v.is_integer() and v.as_integer() == -4
    assert v == -4
    with pytest.raises(ValueError):
        zeta_pow(3, 1).as_integer()


def test_to_complex():
    z = zeta_pow(3, 1).to_complex()
    assert abs(z - cmath.exp(2j * cmath.pi / 3)) < 1e-12


def test_cyc_rational_reduction():
    num = CycInt(3, (2, 4))
    r = CycRational(num, 6)
    assert r.num.c == (1, 2) and r.den == 3
    assert CycRational(CycInt.integer(3, 6), 3) == 2
    assert CycRational(CycInt.integer(3, 6), 3).is_integer()
    with pytest.raises(ZeroDivisionError):
        CycRational(num, 0)


def test_from_phi():
    ctx = field_make(3, 1)
    assert from_phi(Fq(ctx, 0)) == 1
    assert from_phi(Fq(ctx, 1)) == zeta_pow(3, 1)


def test_gauss_frozen():
    c3 = field_make(3, 1)
    assert gauss_quadratic(Fq(c3, 1)).c == (1, 2)      # 1 + 2*zeta_3 = i*sqrt(3)
    assert gauss_quadratic(Fq(c3, 2)).c == (-1, -2)
    assert gauss_quadratic(Fq(c3, 0)) == 3             # q when c = 0
    # characteristic 2: the quadratic Gauss sum vanishes
    c2 = field_make(2, 1)
    assert gauss_quadratic(Fq(c2, 1)).c == (0,)
    c4 = field_make(2, 2)
    for i in range(1, 4):
        assert gauss_quadratic(Fq(c4, i)).is_zero()
    # F_9: squaring is 2-to-1 onto squares, the sum collapses to a rational
    assert gauss_quadratic(Fq(field_make(3, 2), 1)) == 3


def test_kloosterman_frozen():
    c3 = field_make(3, 1)
    # s=1: phi(2), s=2: phi(1); zeta + zeta^2 = -1
    assert kloosterman(Fq(c3, 1), Fq(c3, 1)) == -1
    assert kloosterman(Fq(c3, 0), Fq(c3, 0)) == 2      # q - 1 terms of phi(0)


def test_quad_linear_frozen():
    c2 = field_make(2, 1)
    assert quad_linear_sum(Fq(c2, 1), Fq(c2, 1)) == 2  # t^2 + t = 0 identically
    c3 = field_make(3, 1)
    assert quad_linear_sum(Fq(c3, 1), Fq(c3, 1)).c == (1, -1)
    # beta = 0 degenerates to the Gauss sum
    assert quad_linear_sum(Fq(c3, 2), Fq(c3, 0)) == gauss_quadratic(Fq(c3, 2))


@pytest.mark.parametrize("p,a", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_gauss_magnitude(p, a):
    ctx = field_make(p, a)
    for i in range(1, ctx.q):
        g = gauss_quadratic(Fq(ctx, i))
        assert g * g.conj() == ctx.q


@given(st.integers(2, 7).filter(lambda p: p in (2, 3, 5, 7)),
       st.lists(st.integers(-50, 50), min_size=6, max_size=6),
       st.lists(st.integers(-50, 50), min_size=6, max_size=6))
def test_cyc_ring_axioms(p, xs, ys):
    x = CycInt(p, xs[:p - 1])
    y = CycInt(p, ys[:p - 1])
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y).conj() == x.conj() + y.conj()
    assert (x * y).conj() == x.conj() * y.conj()
    # conjugation is an involution
    assert x.conj().conj() == x
    # norm consistency with the complex embedding
    z = (x * y).to_complex()
    assert abs(z - x.to_complex() * y.to_complex()) < 1e-6
