"""Irreducible character labels and their exact values in Z[zeta_p].

Each character of U is identified by a family name plus a tuple of named
field-element parameters (stored by enumeration index).  Enumeration emits
each irreducible exactly once, using canonical coset representatives for
the parameter conditions; the p = 2 parametrization differs in the places
where quadratic Gauss sums vanish, including the extra degree-q^3/2
family.  Values are computed from closed formulas per family, with the
triality automorphism filling in the shapes the formulas do not cover
directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import (CycInt, gauss_quadratic, kloosterman,
                         quad_linear_sum, zeta_pow)
from .ffield import FieldCtx, FieldError, Fq, a_phi, nonimage_pick
from .group import AUTOMORPHISMS, GraphAuto, UElement, apply_auto


class ShapeError(ValueError):
    """Element shape not covered by the generic value formulas."""


TAU = AUTOMORPHISMS["tau"]
TAU2 = AUTOMORPHISMS["tau2"]


# ---------------------------------------------------------------------------
# label type

# display order of parameters per family; "d124" is a plain 0/1 exponent,
# everything else is a field-element enumeration index
FAMILY_PARAMS = {
    "F12": ("a12", "b1", "b2", "b4"),
    "F11": ("a11", "b5", "b6", "b7", "b3"),
    "F8910": ("a8", "a9", "a10", "b3"),
    "F8910_q3": ("a8", "a9", "a10"),
    "F8910_qh": ("a8", "a9", "a10", "a567", "d124", "d3"),
    "F89_q3": ("a8", "a9", "a6", "a7"),
    "F89_q2": ("a8", "a9", "b2", "b3", "b4"),
    "F810_q3": ("a8", "a10", "a5", "a7"),
    "F810_q2": ("a8", "a10", "b1", "b3", "b4"),
    "F910_q3": ("a9", "a10", "a5", "a6"),
    "F910_q2": ("a9", "a10", "b1", "b2", "b3"),
    "F8_q3": ("a8", "a7"),
    "F8_q2": ("a8", "b3", "b4"),
    "F9_q3": ("a9", "a6"),
    "F9_q2": ("a9", "b2", "b3"),
    "F10_q3": ("a10", "a5"),
    "F10_q2": ("a10", "b1", "b3"),
    "F567": ("a5", "a6", "a7", "b1", "b2", "b4"),
    "F56": ("a5", "a6", "b1", "b2", "b4"),
    "F57": ("a5", "a7", "b1", "b2", "b4"),
    "F67": ("a6", "a7", "b1", "b2", "b4"),
    "F5": ("a5", "b2", "b4"),
    "F6": ("a6", "b1", "b4"),
    "F7": ("a7", "b1", "b2"),
    "Flin": ("b1", "b2", "b3", "b4"),
}

# degree of each family as (numerator power of q, divide-by-two flag)
_DEGREE = {
    "F12": (4, False), "F11": (3, False),
    "F8910": (3, False), "F8910_q3": (3, False), "F8910_qh": (3, True),
    "F89_q3": (3, False), "F810_q3": (3, False), "F910_q3": (3, False),
    "F8_q3": (3, False), "F9_q3": (3, False), "F10_q3": (3, False),
    "F89_q2": (2, False), "F810_q2": (2, False), "F910_q2": (2, False),
    "F8_q2": (2, False), "F9_q2": (2, False), "F10_q2": (2, False),
    "F567": (1, False), "F56": (1, False), "F57": (1, False),
    "F67": (1, False), "F5": (1, False), "F6": (1, False), "F7": (1, False),
    "Flin": (0, False),
}

# structural key (major root set, kind suffix) for automorphism transport
_FAMILY_KEY = {
    "F12": (frozenset({12}), ""), "F11": (frozenset({11}), ""),
    "F8910": (frozenset({8, 9, 10}), ""),
    "F8910_q3": (frozenset({8, 9, 10}), "q3"),
    "F8910_qh": (frozenset({8, 9, 10}), "qh"),
    "F89_q3": (frozenset({8, 9}), "q3"), "F89_q2": (frozenset({8, 9}), "q2"),
    "F810_q3": (frozenset({8, 10}), "q3"), "F810_q2": (frozenset({8, 10}), "q2"),
    "F910_q3": (frozenset({9, 10}), "q3"), "F910_q2": (frozenset({9, 10}), "q2"),
    "F8_q3": (frozenset({8}), "q3"), "F8_q2": (frozenset({8}), "q2"),
    "F9_q3": (frozenset({9}), "q3"), "F9_q2": (frozenset({9}), "q2"),
    "F10_q3": (frozenset({10}), "q3"), "F10_q2": (frozenset({10}), "q2"),
    "F567": (frozenset({5, 6, 7}), ""),
    "F56": (frozenset({5, 6}), ""), "F57": (frozenset({5, 7}), ""),
    "F67": (frozenset({6, 7}), ""),
    "F5": (frozenset({5}), ""), "F6": (frozenset({6}), ""),
    "F7": (frozenset({7}), ""),
    "Flin": (frozenset(), ""),
}
_KEY_FAMILY = {v: k for k, v in _FAMILY_KEY.items()}

_PARAM_RE = re.compile(r"^([abd])(\d+)$")


@dataclass(frozen=True)
class CharLabel:
    ctx: FieldCtx
    family: str
    params: tuple  # ((name, index), ...) in FAMILY_PARAMS order

    def __post_init__(self):
        names = FAMILY_PARAMS.get(self.family)
        if names is None:
            raise ValueError(f"unknown character family {self.family!r}")
        if tuple(n for n, _ in self.params) != names:
            raise ValueError(
                f"{self.family} expects parameters {names}, got "
                f"{tuple(n for n, _ in self.params)}")

    def param(self, name: str) -> int:
        for n, v in self.params:
            if n == name:
                return v
        raise KeyError(name)

    @property
    def params_dict(self) -> dict:
        return dict(self.params)

    @property
    def degree(self) -> int:
        e, half = _DEGREE[self.family]
        d = self.ctx.q ** e
        return d // 2 if half else d

    def to_record(self) -> dict:
        return {"family": self.family, "params": dict(self.params),
                "degree": self.degree, "label": format_label(self)}

    def __repr__(self):
        return f"CharLabel({format_label(self)})"


def make_label(ctx: FieldCtx, family: str, **params) -> CharLabel:
    return CharLabel(ctx, family,
                     tuple((n, int(params[n])) for n in FAMILY_PARAMS[family]))


def format_label(label: CharLabel) -> str:
    inner = ",".join(f"{n}={v}" for n, v in label.params)
    return f"{label.family}[{inner}]"


_LABEL_RE = re.compile(r"^\s*([A-Za-z0-9_]+)\s*\[(.*)\]\s*$")


def parse_label(ctx: FieldCtx, s: str) -> CharLabel:
    m = _LABEL_RE.match(s)
    if not m:
        raise ValueError(f"bad character label {s!r}")
    family, inner = m.group(1), m.group(2)
    if family not in FAMILY_PARAMS:
        raise ValueError(f"unknown character family {family!r}")
    given = {}
    for part in inner.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"bad parameter assignment {part!r}")
        name, val = part.split("=", 1)
        name, val = name.strip(), int(val.strip())
        if name in given:
            raise ValueError(f"duplicate parameter {name!r}")
        given[name] = val
    names = FAMILY_PARAMS[family]
    if set(given) != set(names):
        raise ValueError(f"{family} expects parameters {names}")
    # only the family's defining a-parameters must be units; auxiliary
    # a-parameters (e.g. a6, a7 of F89_q3) range over the whole field
    units = {f"a{i}" for i in _FAMILY_KEY[family][0]}
    if family == "F8910_qh":
        units.add("a567")
    for name, val in given.items():
        hi = 2 if name == "d124" else ctx.q
        if not 0 <= val < hi:
            raise ValueError(f"parameter {name}={val} out of range")
        if name in units and val == 0:
            raise ValueError(f"parameter {name} must be a unit")
    return make_label(ctx, family, **given)


def degree(label: CharLabel) -> int:
    return label.degree


# ---------------------------------------------------------------------------
# enumeration, in the table's row order

def enumerate_chars(ctx: FieldCtx):
    return list(_gen_labels(ctx))


def _gen_labels(ctx: FieldCtx):
    q, p = ctx.q, ctx.p
    units = range(1, q)
    full = range(q)
    neg, mul, inv = ctx.neg, ctx.mul, ctx.inv

    def lab(family, **params):
        return make_label(ctx, family, **params)

    # F12: chi^{a12, b1, b2, b4}, q^3 (q-1) labels of degree q^4
    for a12 in units:
        for b1 in full:
            for b2 in full:
                for b4 in full:
                    yield lab("F12", a12=a12, b1=b1, b2=b2, b4=b4)

    # F11: chi^{a11, b5, b6, b7, b3}, q^4 (q-1) labels of degree q^3
    for a11 in units:
        for b5 in full:
            for b6 in full:
                for b7 in full:
                    for b3 in full:
                        yield lab("F11", a11=a11, b5=b5, b6=b6, b7=b7, b3=b3)

    # F_{8,9,10}
    if p > 2:
        # q (q-1)^3 labels of degree q^3
        for a8 in units:
            for a9 in units:
                for a10 in units:
                    for b3 in full:
                        yield lab("F8910", a8=a8, a9=a9, a10=a10, b3=b3)
    else:
        # (q-1)^3 of degree q^3 plus 4 (q-1)^4 of degree q^3/2
        for a8 in units:
            for a9 in units:
                for a10 in units:
                    yield lab("F8910_q3", a8=a8, a9=a9, a10=a10)
        for a8 in units:
            for a9 in units:
                for a10 in units:
                    A = mul(mul(a8, a9), a10)
                    for a in units:
                        aA = mul(a, A)
                        d3_top = nonimage_pick(
                            ctx,
                            lambda s, aA=aA, A=A: Fq(ctx, aA) * s + Fq(ctx, A) * (s * s))
                        for d124 in (0, 1):
                            for d3 in (0, d3_top.i):
                                yield lab("F8910_qh", a8=a8, a9=a9, a10=a10,
                                          a567=a, d124=d124, d3=d3)

    # pair families on {8,9,10}: q^3-kind then q^2-kind for each pair.
    # the q^3-kind extra pair lies on the canonical transversal line
    # (s * major1, -s * major2) with s a unit; for p = 2 the first extra
    # coordinate is 0 and the second is a unit.  the q^2-kind b-pair uses
    # the same line with s ranging over all of F_q; for p = 2 the first
    # b-coordinate is 0 and the second is free.
    def pair_labels(family_q3, family_q2, m1, m2, x1, x2, y1, y2):
        for v1 in units:
            for v2 in units:
                if p > 2:
                    for s in units:
                        yield lab(family_q3, **{m1: v1, m2: v2,
                                                x1: mul(s, v1),
                                                x2: neg(mul(s, v2))})
                else:
                    for w in units:
                        yield lab(family_q3, **{m1: v1, m2: v2, x1: 0, x2: w})
        for v1 in units:
            for v2 in units:
                for b3 in full:
                    if p > 2:
                        for s in full:
                            yield lab(family_q2, **{m1: v1, m2: v2, "b3": b3,
                                                    y1: mul(s, v1),
                                                    y2: neg(mul(s, v2))})
                    else:
                        for w in full:
                            yield lab(family_q2, **{m1: v1, m2: v2, "b3": b3,
                                                    y1: 0, y2: w})

    yield from pair_labels("F89_q3", "F89_q2", "a8", "a9", "a6", "a7", "b2", "b4")
    yield from pair_labels("F810_q3", "F810_q2", "a8", "a10", "a5", "a7", "b1", "b4")
    yield from pair_labels("F910_q3", "F910_q2", "a9", "a10", "a5", "a6", "b1", "b2")

    # singleton families on {8,9,10}
    for major, extra, f3, f2, bnames in (
            ("a8", "a7", "F8_q3", "F8_q2", ("b3", "b4")),
            ("a9", "a6", "F9_q3", "F9_q2", ("b2", "b3")),
            ("a10", "a5", "F10_q3", "F10_q2", ("b1", "b3"))):
        for v in units:
            for w in units:
                yield lab(f3, **{major: v, extra: w})
        for v in units:
            for u in full:
                for w in full:
                    yield lab(f2, **{major: v, bnames[0]: u, bnames[1]: w})

    # F_{5,6,7}: q^2 (q-1)^3 labels of degree q
    for a5 in units:
        for a6 in units:
            for a7 in units:
                if p not in (2, 3):
                    # plane b1/a5 + b2/a6 + b4/a7 = 0; b1, b2 free
                    for b1 in full:
                        for b2 in full:
                            b4 = neg(mul(a7, ctx.add(mul(b1, inv(a5)),
                                                     mul(b2, inv(a6)))))
                            yield lab("F567", a5=a5, a6=a6, a7=a7,
                                      b1=b1, b2=b2, b4=b4)
                else:
                    # p in {2, 3}: b1 = 0, b2 and b4 free
                    for b2 in full:
                        for b4 in full:
                            yield lab("F567", a5=a5, a6=a6, a7=a7,
                                      b1=0, b2=b2, b4=b4)

    # pair families on {5,6,7}: the constrained b-pair runs over the line
    # (s * minor1, -s * minor2), s in F_q; p = 2 zeroes the tau-consistent
    # coordinate and frees the other
    def pair567(family, m1, m2, y1, y2, yfree):
        for v1 in units:
            for v2 in units:
                for w in full:
                    if p > 2:
                        for s in full:
                            yield lab(family, **{m1: v1, m2: v2, yfree: w,
                                                 y1: mul(s, v1),
                                                 y2: neg(mul(s, v2))})
                    else:
                        for u in full:
                            yield lab(family, **{m1: v1, m2: v2, yfree: w,
                                                 y1: 0, y2: u})

    yield from pair567("F56", "a5", "a6", "b1", "b2", "b4")
    yield from pair567("F57", "a5", "a7", "b1", "b4", "b2")
    yield from pair567("F67", "a6", "a7", "b2", "b4", "b1")

    # singleton families on {5,6,7}
    for major, f, bnames in (("a5", "F5", ("b2", "b4")),
                             ("a6", "F6", ("b1", "b4")),
                             ("a7", "F7", ("b1", "b2"))):
        for v in units:
            for u in full:
                for w in full:
                    yield lab(f, **{major: v, bnames[0]: u, bnames[1]: w})

    # linear characters
    for b1 in full:
        for b2 in full:
            for b3 in full:
                for b4 in full:
                    yield lab("Flin", b1=b1, b2=b2, b3=b3, b4=b4)


# ---------------------------------------------------------------------------
# transport by graph automorphisms

def transport_char(g: GraphAuto, label: CharLabel) -> CharLabel:
    ctx = label.ctx
    if ctx.p == 2:
        raise ValueError("character transport is not family-stable at p = 2")
    if ctx.p == 3 and label.family == "F567" and g.name != "id":
        raise ValueError(
            "F567 at p = 3 uses a coset choice not preserved by automorphisms")
    return _relabel(g, label)


def _relabel(g: GraphAuto, label: CharLabel) -> CharLabel:
    """Transport a label's family and parameter subscripts, no validity checks."""
    ctx = label.ctx
    major, kind = _FAMILY_KEY[label.family]
    target = _KEY_FAMILY[(frozenset(g.perm[i] for i in major), kind)]
    new = {}
    for name, val in label.params:
        m = _PARAM_RE.match(name)
        if m and name != "d124":
            new[f"{m.group(1)}{g.perm[int(m.group(2))]}"] = val
        else:
            new[name] = val
    return make_label(ctx, target, **new)


# ---------------------------------------------------------------------------
# value evaluation

class _Uncovered(Exception):
    """Internal: the direct formula branches do not cover this shape."""


@lru_cache(maxsize=None)
def _nzeta(p: int, n: int, k: int) -> CycInt:
    return zeta_pow(p, k) * n


def _phi(n: int, x: Fq) -> CycInt:
    """n * phi(x) with small-object caching."""
    return _nzeta(x.ctx.p, n, x.trace())


def _zero(p: int) -> CycInt:
    return _nzeta(p, 0, 0)


def _val_flin(ctx, P, x):
    return _phi(1, P["b1"] * x.t(1) + P["b2"] * x.t(2)
                + P["b3"] * x.t(3) + P["b4"] * x.t(4))


def _val_f567(ctx, a5, a6, a7, b1, b2, b4, x):
    # q * delta_{(t3, a5 t1 + a6 t2 + a7 t4), 0} * phi(b t + a t)
    t1, t2, t4 = x.t(1), x.t(2), x.t(4)
    if x.t(3) or (a5 * t1 + a6 * t2 + a7 * t4):
        return _zero(ctx.p)
    arg = (b1 * t1 + b2 * t2 + b4 * t4
           + a5 * x.t(5) + a6 * x.t(6) + a7 * x.t(7))
    return _phi(ctx.q, arg)


def _val_f89q3(ctx, a8, a9, a6, a7, x):
    if (x.t(1) or x.t(2) or x.t(3) or x.t(4) or x.t(5)
            or (a8 * x.t(6) + a9 * x.t(7))):
        return _zero(ctx.p)
    arg = a6 * x.t(6) + a7 * x.t(7) + a8 * x.t(8) + a9 * x.t(9)
    return _phi(ctx.q ** 3, arg)


def _val_f89q2(ctx, a8, a9, b2, b3, b4, x):
    q = ctx.q
    t2, t3, t4 = x.t(2), x.t(3), x.t(4)
    lin24 = a8 * t2 + a9 * t4
    lin67 = a8 * x.t(6) + a9 * x.t(7)
    if t3.is_zero():
        if x.t(1) or x.t(5) or lin24 or lin67:
            return _zero(ctx.p)
        return _phi(q * q, b2 * t2 + b4 * t4 + a8 * x.t(8) + a9 * x.t(9))
    if x.t(1) or lin24:
        return _zero(ctx.p)
    arg = (b2 * t2 + b3 * t3 + b4 * t4 + a8 * x.t(8) + a9 * x.t(9)
           + x.t(5) * (lin24 - lin67 / t3))
    return _phi(q, arg)


def _val_f8910(ctx, a8, a9, a10, b3, x):
    # p > 2 only
    q = ctx.q
    if x.t(1) or x.t(2) or x.t(4):
        return _zero(ctx.p)
    t3 = x.t(3)
    tail = a8 * x.t(8) + a9 * x.t(9) + a10 * x.t(10)
    if t3:
        if x.t(5) or x.t(6) or x.t(7):
            raise _Uncovered
        return _phi(q, b3 * t3 + tail) * gauss_quadratic(-(a8 * a9 * a10 * t3))
    if x.t(5) or x.t(6) or x.t(7):
        return _zero(ctx.p)
    return _phi(q ** 3, tail)


def _val_f8910q3_p2(ctx, a8, a9, a10, x):
    if (x.t(1) or x.t(2) or x.t(3) or x.t(4)
            or (a8 * x.t(5) + a10 * x.t(7))
            or (a8 * x.t(6) + a9 * x.t(7))):
        return _zero(ctx.p)
    return _phi(ctx.q ** 3, a8 * x.t(8) + a9 * x.t(9) + a10 * x.t(10))


def _val_f8910qh(ctx, a8, a9, a10, a, d124, d3, x):
    q = ctx.q
    t1, t2, t4 = x.t(1), x.t(2), x.t(4)
    if not (t1 or t2 or t4):
        on_coset = False
    elif t1 == a10 * a and t2 == a9 * a and t4 == a8 * a:
        on_coset = True
    else:
        return _zero(ctx.p)
    sign = -1 if (d124 and on_coset) else 1
    A = a8 * a9 * a10
    aphi = a_phi(a)
    t3 = x.t(3)
    tail = a8 * x.t(8) + a9 * x.t(9) + a10 * x.t(10)
    t5, t6, t7 = x.t(5), x.t(6), x.t(7)
    if t3.is_zero():
        # support of the value: (t5, t6, t7) proportional to (a10, a9, a8)
        if not (t5 or t6 or t7):
            u = ctx.zero
        else:
            u = t7 / a8
            if t5 != a10 * u or t6 != a9 * u:
                return _zero(ctx.p)
        val = _phi(q ** 3 // 2, A * a * u + tail)
        return val if sign > 0 else -val
    if t3 != aphi / A:
        return _zero(ctx.p)
    # the constant +1 is the leftover square term phi(t3*A*s0^2) from
    # completing the square in the transversal sum; it is (-1)^a, hence
    # invisible precisely when [F_q : F_2] is even
    arg = (d3 * t3 + A * a * (t7 / a8)
           + (A * A / aphi) * (t5 / a10 + t7 / a8) * (t6 / a9 + t7 / a8)
           + tail + 1)
    val = _phi(q * q // 2, arg)
    return val if sign > 0 else -val


def _val_f11_direct(ctx, a11, b5, b6, b7, b3, x):
    p, q = ctx.p, ctx.q
    if x.t(1) or x.t(2) or x.t(4):
        return _zero(p)
    t3, t11 = x.t(3), x.t(11)
    t5, t6, t7 = x.t(5), x.t(6), x.t(7)
    t8, t9, t10 = x.t(8), x.t(9), x.t(10)
    if t3:
        if t5 or t6 or t7:
            raise _Uncovered
        u8 = b7 * t3 + a11 * t8
        u9 = b6 * t3 + a11 * t9
        u10 = b5 * t3 + a11 * t10
        inner = CycInt.integer(p, q if (u8.is_zero() and u9.is_zero()) else 0)
        inner = inner + kloosterman(-u10, u9 * u8 / (a11 * t3))
        return _phi(q, b3 * t3 + a11 * t11) * inner
    if not (t5 or t6 or t7):
        if t8 or t9 or t10:
            return _zero(p)
        return _phi(q ** 3, a11 * t11)
    if t5 and t6 and t7:
        if t8 or t9:
            raise _Uncovered
        head = _phi(q, b5 * t5 + b6 * t6 + b7 * t7 + a11 * t11)
        if p == 2:
            return head * quad_linear_sum(a11 * t5 * t6 * t7, a11 * t5 * t10)
        if t10:
            raise _Uncovered
        return head * gauss_quadratic(-(a11 * t5 * t6 * t7))
    if t5 and not t7 and not t8:
        # x5 x6 x9 x10 x11 shape
        val = CycInt.integer(p, q * q if t6 * t9 == t5 * t10 else 0)
        if val.is_zero():
            return _zero(p)
        return _phi(q * q, b5 * t5 + b6 * t6 + a11 * t11)
    raise _Uncovered


def _val_f11(ctx, a11, b5, b6, b7, b3, x):
    try:
        return _val_f11_direct(ctx, a11, b5, b6, b7, b3, x)
    except _Uncovered:
        pass
    # transport: value(chi, x) = value(g.chi, g.x) with b-indices through g
    for g in (TAU, TAU2):
        pm = g.perm
        bs = {pm[5]: b5, pm[6]: b6, pm[7]: b7}
        try:
            return _val_f11_direct(ctx, a11, bs[5], bs[6], bs[7], b3,
                                   apply_auto(g, x))
        except _Uncovered:
            continue
    raise ShapeError("shape not covered by generic formulas (F11)")


def _val_f12_direct(ctx, a12, b1, b2, b4, x):
    p, q = ctx.p, ctx.q
    if x.t(3):
        return _zero(p)
    t1, t2, t4 = x.t(1), x.t(2), x.t(4)
    t12 = x.t(12)
    abc = bool(t1 or t2 or t4)
    mid = bool(x.t(5) or x.t(6) or x.t(7))
    if abc and mid:
        return _zero(p)
    if not abc:
        if mid or x.t(8) or x.t(9) or x.t(10) or x.t(11):
            return _zero(p)
        return _phi(q ** 4, a12 * t12)
    # now t3 = t5 = t6 = t7 = 0 and some of t1, t2, t4 is a unit
    if t1 and t2 and t4:
        if x.t(8) or x.t(9) or x.t(11):
            raise _Uncovered
        head = _phi(q, b1 * t1 + b2 * t2 + b4 * t4 + a12 * t12)
        if p == 2:
            return head * quad_linear_sum(a12 * t1 * t2 * t4,
                                          a12 * t1 * x.t(10))
        if x.t(10):
            raise _Uncovered
        return head * gauss_quadratic(-(a12 * t1 * t2 * t4))
    if t1 and t2 and not t4:
        if x.t(8) or x.t(11):
            raise _Uncovered
        if t1 * x.t(10) != t2 * x.t(9):
            return _zero(p)
        return _phi(q * q, b1 * t1 + b2 * t2 + a12 * t12)
    if t1 and not t2 and not t4:
        if x.t(8) or x.t(9) or x.t(11):
            raise _Uncovered
        if x.t(10):
            return _zero(p)
        return _phi(q * q, b1 * t1 + a12 * t12)
    raise _Uncovered


def _val_f12(ctx, a12, b1, b2, b4, x):
    try:
        return _val_f12_direct(ctx, a12, b1, b2, b4, x)
    except _Uncovered:
        pass
    for g in (TAU, TAU2):
        pm = g.perm
        bs = {pm[1]: b1, pm[2]: b2, pm[4]: b4}
        try:
            return _val_f12_direct(ctx, a12, bs[1], bs[2], bs[4],
                                   apply_auto(g, x))
        except _Uncovered:
            continue
    raise ShapeError("shape not covered by generic formulas (F12)")


def char_value(label: CharLabel, elem: UElement) -> CycInt:
    ctx = label.ctx
    if elem.ctx != ctx:
        raise FieldError("field context mismatch")
    fam = label.family
    P = {n: (v if n == "d124" else ctx.element(v)) for n, v in label.params}

    if fam == "Flin":
        return _val_flin(ctx, P, elem)
    if fam in ("F567", "F56", "F57", "F67", "F5", "F6", "F7"):
        z = ctx.zero
        return _val_f567(ctx, P.get("a5", z), P.get("a6", z), P.get("a7", z),
                         P.get("b1", z), P.get("b2", z), P.get("b4", z), elem)
    if fam in ("F89_q3", "F8_q3"):
        z = ctx.zero
        return _val_f89q3(ctx, P["a8"], P.get("a9", z), P.get("a6", z),
                          P["a7"], elem)
    if fam in ("F89_q2", "F8_q2"):
        z = ctx.zero
        return _val_f89q2(ctx, P["a8"], P.get("a9", z), P.get("b2", z),
                          P["b3"], P["b4"], elem)
    if fam in ("F910_q3", "F9_q3"):
        # tau image of the {8,9} / {8} construction: evaluate the base
        # label at tau^{-1}(x) with subscripts pulled back through tau
        z = ctx.zero
        return _val_f89q3(ctx, P["a9"], P.get("a10", z), P.get("a5", z),
                          P["a6"], apply_auto(TAU2, elem))
    if fam in ("F910_q2", "F9_q2"):
        z = ctx.zero
        return _val_f89q2(ctx, P["a9"], P.get("a10", z), P.get("b1", z),
                          P["b3"], P["b2"], apply_auto(TAU2, elem))
    if fam in ("F810_q3", "F10_q3"):
        # tau^2 image: base parameters (a8, a9, a6, a7) = (a10, a8, a7, a5)
        z = ctx.zero
        return _val_f89q3(ctx, P["a10"], P.get("a8", z), P.get("a7", z),
                          P["a5"], apply_auto(TAU, elem))
    if fam in ("F810_q2", "F10_q2"):
        z = ctx.zero
        return _val_f89q2(ctx, P["a10"], P.get("a8", z), P.get("b4", z),
                          P["b3"], P["b1"], apply_auto(TAU, elem))
    if fam == "F8910":
        try:
            return _val_f8910(ctx, P["a8"], P["a9"], P["a10"], P["b3"], elem)
        except _Uncovered:
            raise ShapeError(
                "shape not covered by generic formulas (F8910)") from None
    if fam == "F8910_q3":
        return _val_f8910q3_p2(ctx, P["a8"], P["a9"], P["a10"], elem)
    if fam == "F8910_qh":
        return _val_f8910qh(ctx, P["a8"], P["a9"], P["a10"], P["a567"],
                            P["d124"], P["d3"], elem)
    if fam == "F11":
        return _val_f11(ctx, P["a11"], P["b5"], P["b6"], P["b7"], P["b3"], elem)
    if fam == "F12":
        return _val_f12(ctx, P["a12"], P["b1"], P["b2"], P["b4"], elem)
    raise AssertionError(f"unhandled family {fam}")
