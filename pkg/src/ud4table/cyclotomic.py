"""Exact arithmetic in Z[zeta_p] plus the exponential sums the table needs.

A CycInt stores integer coefficients of 1, zeta, ..., zeta^{p-2}; the power
zeta^{p-1} is eliminated through 1 + zeta + ... + zeta^{p-1} = 0, which makes
equality a plain tuple comparison.  Coefficients are Python ints, so inner
product accumulators never overflow.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd

from .ffield import FieldCtx, FieldError, Fq


class CycInt:
    __slots__ = ("p", "c")

    def __init__(self, p: int, coeffs):
        self.p = p
        c = tuple(int(x) for x in coeffs)
        if len(c) != p - 1:
            raise ValueError(f"need {p - 1} coefficients for Z[zeta_{p}]")
        self.c = c

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(p: int) -> "CycInt":
        return CycInt(p, (0,) * (p - 1))

    @staticmethod
    def integer(p: int, n: int) -> "CycInt":
        return CycInt(p, (n,) + (0,) * (p - 2))

    @staticmethod
    def one(p: int) -> "CycInt":
        return CycInt.integer(p, 1)

    @staticmethod
    def from_exponents(p: int, counts) -> "CycInt":
        """sum counts[k] * zeta^k for k = 0..p-1, reduced to canonical form."""
        counts = list(counts) + [0] * (p - len(counts))
        top = counts[p - 1]
        return CycInt(p, tuple(counts[k] - top for k in range(p - 1)))

    # -- ring operations --------------------------------------------------

    def _chk(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt.integer(self.p, other)
        if not isinstance(other, CycInt):
            raise TypeError(f"cannot combine CycInt with {type(other)!r}")
        if other.p != self.p:
            raise ValueError("cyclotomic order mismatch")
        return other

    def __add__(self, other):
        o = self._chk(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._chk(other)
        return CycInt(self.p, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return self._chk(other) - self

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.c))
        o = self._chk(other)
        p = self.p
        counts = [0] * p
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        counts[(i + j) % p] += a * b
        return CycInt.from_exponents(p, counts)

    __rmul__ = __mul__

    def scale(self, n: int) -> "CycInt":
        return self * n

    def conj(self) -> "CycInt":
        """Complex conjugation: zeta -> zeta^{p-1}."""
        p = self.p
        counts = [0] * p
        for k, a in enumerate(self.c):
            counts[(p - k) % p] += a
        return CycInt.from_exponents(p, counts)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer() and self.c[0] == other
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.p, self.c))

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_integer(self) -> bool:
        return not any(self.c[1:])

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.c[0]

    def to_complex(self) -> complex:
        return sum(a * cmath.exp(2j * cmath.pi * k / self.p)
                   for k, a in enumerate(self.c))

    def __repr__(self):
        if self.is_integer():
            return f"CycInt({self.c[0]})"
        terms = " + ".join(f"{a}*z^{k}" for k, a in enumerate(self.c) if a)
        return f"CycInt[{self.p}]({terms})"


def zeta_pow(p: int, k: int) -> CycInt:
    counts = [0] * p
    counts[k % p] = 1
    return CycInt.from_exponents(p, counts)


def from_phi(x: Fq) -> CycInt:
    """phi(x) = zeta_p^{Tr(x)}."""
    return zeta_pow(x.ctx.p, x.trace())


class CycRational:
    """A CycInt numerator over a positive integer denominator, reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: CycInt, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("CycRational with zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(den, *[abs(a) for a in num.c]) if any(num.c) else den
        if g > 1:
            num = CycInt(num.p, tuple(a // g for a in num.c))
            den //= g
        self.num = num
        self.den = den

    def __eq__(self, other):
        if isinstance(other, int):
            return self.den == 1 and self.num == other
        if not isinstance(other, CycRational):
            return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, int):
            other = CycRational(CycInt.integer(self.num.p, other))
        return CycRational(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycRational(self.num * other, self.den)
        return CycRational(self.num * other.num, self.den * other.den)

    def is_integer(self) -> bool:
        return self.den == 1 and self.num.is_integer()

    def as_integer(self) -> int:
        if self.den != 1:
            raise ValueError(f"{self!r} is not integral")
        return self.num.as_integer()

    def __repr__(self):
        return f"CycRational({self.num!r}/{self.den})"


# ---------------------------------------------------------------------------
# exponential sums (always by direct O(q) summation; no closed forms)

def _trace_counts(ctx: FieldCtx, values) -> CycInt:
    """sum of phi(v) over an iterable of field indices, via trace histogram."""
    counts = [0] * ctx.p
    tr = ctx.trace_t
    for v in values:
        counts[tr[v]] += 1
    return CycInt.from_exponents(ctx.p, counts)


@lru_cache(maxsize=None)
def _gauss_cached(ctx: FieldCtx, c_idx: int) -> CycInt:
    mul = ctx.mul
    return _trace_counts(ctx, (mul(c_idx, mul(t, t)) for t in range(ctx.q)))


def gauss_quadratic(c: Fq) -> CycInt:
    """sum over t in F_q of phi(c t^2).  Equals q when c = 0."""
    return _gauss_cached(c.ctx, c.i)


@lru_cache(maxsize=None)
def _kloosterman_cached(ctx: FieldCtx, a_idx: int, b_idx: int) -> CycInt:
    add, mul, inv = ctx.add, ctx.mul, ctx.inv
    return _trace_counts(
        ctx, (add(mul(a_idx, s), mul(b_idx, inv(s))) for s in range(1, ctx.q)))


def kloosterman(A: Fq, B: Fq) -> CycInt:
    """sum over s in F_q^x of phi(A s + B / s)."""
    if A.ctx != B.ctx:
        raise FieldError("field context mismatch")
    return _kloosterman_cached(A.ctx, A.i, B.i)


@lru_cache(maxsize=None)
def _qls_cached(ctx: FieldCtx, a_idx: int, b_idx: int) -> CycInt:
    add, mul = ctx.add, ctx.mul
    return _trace_counts(
        ctx, (add(mul(a_idx, mul(s, s)), mul(b_idx, s)) for s in range(ctx.q)))


def quad_linear_sum(alpha: Fq, beta: Fq) -> CycInt:
    """sum over s in F_q of phi(alpha s^2 + beta s)."""
    if alpha.ctx != beta.ctx:
        raise FieldError("field context mismatch")
    return _qls_cached(alpha.ctx, alpha.i, beta.i)
