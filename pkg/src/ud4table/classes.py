"""Conjugacy-class representative families of U(q).

For p > 2 these are the tabulated minimal-representative families; for p = 2
the sum-type conditions degenerate (one parameter is set to zero instead) and
five families are replaced by variants with order-2q^k centralizers whose
extra parameter takes two values: 0 and a canonical non-image element.

Division-form conditions like b_9/a_1 + b_10/a_2 = 0 are implemented with
cleared denominators (all divisors are units).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ffield import FieldCtx, Fq, nonimage_pick
from .group import AUTOMORPHISMS, GraphAuto, UElement, apply_auto, identity, root_elem


class ClassTransportError(ValueError):
    pass


@dataclass(frozen=True)
class ClassRep:
    family: str
    params: dict = field(hash=False)   # name -> field element index
    rep: UElement = field(hash=False)
    centralizer_order: int = 0

    @property
    def class_size(self) -> int:
        q = self.rep.ctx.q
        return q ** 12 // self.centralizer_order

    def to_record(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "coords": list(self.rep.coords),
            "centralizer_order": self.centralizer_order,
            "class_size": self.class_size,
        }


def _build(ctx: FieldCtx, word) -> UElement:
    x = identity(ctx)
    for i, t in word:
        x = x * root_elem(i, Fq(ctx, t))
    return x


def _lbl(*indices) -> str:
    return "C_{%s}" % ",".join(str(i) for i in sorted(indices))


# family metadata: label -> (support indices, kind, count polynomial, centralizer)
# `kind` distinguishes same-support families (the centralizer-order exponent).
def _family_meta(p: int):
    def u(q):  # noqa: E743 - tiny local helpers
        return q - 1

    meta = {}

    def add(label, support, kind, count, cent):
        meta[label] = {"support": frozenset(support), "kind": kind,
                       "count": count, "cent": cent}

    if p > 2:
        add("C_{1,2,3,4}", (1, 2, 3, 4), "", lambda q: u(q) ** 4, lambda q: q ** 4)
    else:
        add("C^{p=2}_{1,2,3,4}", (1, 2, 3, 4), "", lambda q: 2 * u(q) ** 4,
            lambda q: 2 * q ** 4)
    for (i, j) in ((1, 2), (1, 4), (2, 4)):
        add(_lbl(i, j, 3), (i, j, 3), "", lambda q: u(q) ** 3 * q, lambda q: q ** 5)
    for i in (1, 2, 4):
        add(_lbl(i, 3), (i, 3), "", lambda q: u(q) ** 2 * q, lambda q: q ** 5)
    add("C_{1,2,4,q^6}", (1, 2, 4), "q^6",
        lambda q: u(q) ** 3 * (q * q - 1), lambda q: q ** 6)
    if p > 2:
        add("C_{1,2,4,q^7}", (1, 2, 4), "q^7", lambda q: u(q) ** 3 * q,
            lambda q: q ** 7)
    else:
        add("C^{p=2}_{1,2,4,2q^7}", (1, 2, 4), "2q^7", lambda q: 2 * u(q) ** 4,
            lambda q: 2 * q ** 7)
        add("C^{p=2}_{1,2,4,q^7}", (1, 2, 4), "q^7", lambda q: u(q) ** 3,
            lambda q: q ** 7)
    for (i, j) in ((1, 2), (1, 4), (2, 4)):
        add("C_{%d,%d,q^6}" % (i, j), (i, j), "q^6",
            lambda q: u(q) ** 2 * (q * q - 1), lambda q: q ** 6)
        add("C_{%d,%d,q^7}" % (i, j), (i, j), "q^7",
            lambda q: u(q) ** 3, lambda q: q ** 7)
        add("C_{%d,%d,q^8}" % (i, j), (i, j), "q^8",
            lambda q: u(q) ** 2 * q, lambda q: q ** 8)
    for i in (1, 2, 4):
        add("C_{%d,q^6}" % i, (i,), "q^6", lambda q: u(q) * (q * q - 1),
            lambda q: q ** 6)
        add("C_{%d,q^7}" % i, (i,), "q^7", lambda q: u(q) ** 2, lambda q: q ** 7)
        add("C_{%d,q^8}" % i, (i,), "q^8", lambda q: u(q) * q, lambda q: q ** 8)
    add("C_3", (3,), "", lambda q: u(q) * q ** 4, lambda q: q ** 8)
    if p > 2:
        add("C_{5,6,7}", (5, 6, 7), "", lambda q: u(q) ** 3 * q, lambda q: q ** 8)
    else:
        add("C^{p=2}_{5,6,7,2q^8}", (5, 6, 7), "2q^8", lambda q: 2 * u(q) ** 4,
            lambda q: 2 * q ** 8)
        add("C^{p=2}_{5,6,7,q^8}", (5, 6, 7), "q^8", lambda q: u(q) ** 3,
            lambda q: q ** 8)
    for (i, j) in ((5, 6), (5, 7), (6, 7)):
        add("C_{%d,%d,q^8}" % (i, j), (i, j), "q^8", lambda q: u(q) ** 3,
            lambda q: q ** 8)
        add("C_{%d,%d,q^9}" % (i, j), (i, j), "q^9", lambda q: u(q) ** 2 * q,
            lambda q: q ** 9)
    for i in (5, 6, 7):
        add("C_{%d,q^8}" % i, (i,), "q^8", lambda q: u(q) ** 2, lambda q: q ** 8)
        add("C_{%d,q^9}" % i, (i,), "q^9", lambda q: u(q) * q, lambda q: q ** 9)
    add("C_{8,9,10}", (8, 9, 10), "", lambda q: q ** 3 - 1, lambda q: q ** 10)
    add("C_{11}", (11,), "", lambda q: u(q), lambda q: q ** 11)
    add("C_{12}", (12,), "", lambda q: q, lambda q: q ** 12)
    return meta


# complements used by single/pair families: the extra roots in each template.
# For pair family C_{i,j,*} the missing outer index m gives partner roots
# i+3+m and j+3+m; singles use complement height-2/height-3 roots.
_PAIR_Q7_ROOTS = {(1, 2): (9, 10), (1, 4): (8, 10), (2, 4): (8, 9)}
_PAIR_Q6_COND = {(1, 2): (5, 6), (1, 4): (5, 7), (2, 4): (6, 7)}  # roots in condition
_SINGLE_Q6_ROOTS = {1: (6, 7), 2: (5, 7), 4: (5, 6)}
_SINGLE_Q7_ROOT = {1: 10, 2: 9, 4: 8}
_PAIR_Q8_ROOTS = {(5, 6): (9, 10), (5, 7): (8, 10), (6, 7): (8, 9)}
_SINGLE_Q8_ROOT = {5: 10, 6: 9, 7: 8}


def enumerate_class_reps(ctx: FieldCtx):
    """All class representatives, in table row order, parameters lexicographic."""
    return list(_gen_reps(ctx))


def _gen_reps(ctx: FieldCtx):
    p, q = ctx.p, ctx.q
    units = range(1, q)
    full = range(q)
    mul, neg, inv = ctx.mul, ctx.neg, ctx.inv

    def rep(family, cent, params, word):
        return ClassRep(family, params, _build(ctx, word), cent)

    def solve_pair(free_val, num, den):
        # x with free/num + x/den = 0  =>  x = -free*den/num
        return neg(mul(free_val, mul(den, inv(num))))

    # --- C_{1,2,3,4} -----------------------------------------------------
    if p > 2:
        for a3 in units:
            for a1 in units:
                for a2 in units:
                    for a4 in units:
                        yield rep("C_{1,2,3,4}", q ** 4,
                                  {"a3": a3, "a1": a1, "a2": a2, "a4": a4},
                                  [(3, a3), (1, a1), (2, a2), (4, a4)])
    else:
        for a3 in units:
            for a1 in units:
                for a2 in units:
                    for a4 in units:
                        prod = mul(a3, mul(a2, a4))
                        pick = nonimage_pick(
                            ctx, lambda t, c=prod: Fq(ctx, mul(c, ctx.add(
                                mul(t.i, t.i), t.i))))
                        for d10 in (0, pick.i):
                            yield rep("C^{p=2}_{1,2,3,4}", 2 * q ** 4,
                                      {"a3": a3, "a1": a1, "a2": a2, "a4": a4,
                                       "d10": d10},
                                      [(3, a3), (1, a1), (2, a2), (4, a4),
                                       (10, d10)])

    # --- C_{i,j,3} -------------------------------------------------------
    # pair (i,j) of outer indices with 3; partner roots r_i = i+3+m, r_j = j+3+m
    for (i, j), (ri, rj) in (((1, 2), (9, 10)), ((1, 4), (8, 10)),
                             ((2, 4), (8, 9))):
        fam = _lbl(i, j, 3)
        for a3 in units:
            for ai in units:
                for aj in units:
                    base = {"a3": a3, f"a{i}": ai, f"a{j}": aj}
                    if p > 2:
                        # b_ri/a_i + b_rj/a_j = 0, b_ri free
                        for bi in full:
                            bj = solve_pair(bi, ai, aj)
                            yield rep(fam, q ** 5,
                                      {**base, f"b{ri}": bi, f"b{rj}": bj},
                                      [(3, a3), (i, ai), (j, aj), (ri, bi),
                                       (rj, bj)])
                    else:
                        for bj in full:
                            yield rep(fam, q ** 5, {**base, f"b{rj}": bj},
                                      [(3, a3), (i, ai), (j, aj), (rj, bj)])

    # --- C_{i,3} ---------------------------------------------------------
    for i, r in ((1, 10), (2, 9), (4, 8)):
        for a3 in units:
            for ai in units:
                for b in full:
                    yield rep(_lbl(i, 3), q ** 5,
                              {"a3": a3, f"a{i}": ai, f"b{r}": b},
                              [(3, a3), (i, ai), (r, b)])

    # --- C_{1,2,4,q^6} ---------------------------------------------------
    for a1 in units:
        for a2 in units:
            for a4 in units:
                if p > 3:
                    # c5/a1 + c6/a2 + c7/a4 = 0; (c6, c7) free, not both 0
                    for c6 in full:
                        for c7 in full:
                            if c6 == 0 and c7 == 0:
                                continue
                            num = ctx.add(mul(c6, mul(a1, a4)),
                                          mul(c7, mul(a1, a2)))
                            c5 = neg(mul(num, inv(mul(a2, a4))))
                            yield rep("C_{1,2,4,q^6}", q ** 6,
                                      {"a1": a1, "a2": a2, "a4": a4,
                                       "c5": c5, "c6": c6, "c7": c7},
                                      [(1, a1), (2, a2), (4, a4), (5, c5),
                                       (6, c6), (7, c7)])
                else:
                    for c6 in full:
                        for c7 in full:
                            if c6 == 0 and c7 == 0:
                                continue
                            yield rep("C_{1,2,4,q^6}", q ** 6,
                                      {"a1": a1, "a2": a2, "a4": a4,
                                       "c6": c6, "c7": c7},
                                      [(1, a1), (2, a2), (4, a4), (6, c6),
                                       (7, c7)])

    # --- C_{1,2,4,q^7} ---------------------------------------------------
    if p > 2:
        for a1 in units:
            for a2 in units:
                for a4 in units:
                    for b12 in full:
                        yield rep("C_{1,2,4,q^7}", q ** 7,
                                  {"a1": a1, "a2": a2, "a4": a4, "b12": b12},
                                  [(1, a1), (2, a2), (4, a4), (12, b12)])
    else:
        for a1 in units:
            for a2 in units:
                for a4 in units:
                    for a10 in units:
                        alpha = mul(a1, mul(a2, a4))
                        beta = mul(a1, a10)
                        pick = nonimage_pick(
                            ctx, lambda t, al=alpha, be=beta: Fq(ctx, ctx.add(
                                mul(al, mul(t.i, t.i)), mul(be, t.i))))
                        for d12 in (0, pick.i):
                            yield rep("C^{p=2}_{1,2,4,2q^7}", 2 * q ** 7,
                                      {"a1": a1, "a2": a2, "a4": a4,
                                       "a10": a10, "d12": d12},
                                      [(1, a1), (2, a2), (4, a4), (10, a10),
                                       (12, d12)])
        for a1 in units:
            for a2 in units:
                for a4 in units:
                    yield rep("C^{p=2}_{1,2,4,q^7}", q ** 7,
                              {"a1": a1, "a2": a2, "a4": a4},
                              [(1, a1), (2, a2), (4, a4)])

    # --- C_{i,j,q^6/q^7/q^8} for outer pairs ----------------------------
    for (i, j) in ((1, 2), (1, 4), (2, 4)):
        ci, cj = _PAIR_Q6_COND[(i, j)]      # condition roots: c_ci/a_i + c_cj/a_j
        cfree = ({5, 6, 7} - {ci, cj}).pop()  # unconstrained c root
        ri, rj = _PAIR_Q7_ROOTS[(i, j)]
        for ai in units:
            for aj in units:
                base = {f"a{i}": ai, f"a{j}": aj}
                if p > 2:
                    for x in full:       # value of c_cj (free in the condition)
                        for y in full:   # value of the unconstrained c
                            if x == 0 and y == 0:
                                continue
                            ca = solve_pair(x, aj, ai)  # c_ci
                            vals = {ci: ca, cj: x, cfree: y}
                            yield rep("C_{%d,%d,q^6}" % (i, j), q ** 6,
                                      {**base, f"c{ci}": ca, f"c{cj}": x,
                                       f"c{cfree}": y},
                                      [(i, ai), (j, aj)] +
                                      [(r, vals[r]) for r in (5, 6, 7)])
                else:
                    for x in full:       # c_cj
                        for y in full:   # c_cfree
                            if x == 0 and y == 0:
                                continue
                            vals = {ci: 0, cj: x, cfree: y}
                            yield rep("C_{%d,%d,q^6}" % (i, j), q ** 6,
                                      {**base, f"c{cj}": x, f"c{cfree}": y},
                                      [(i, ai), (j, aj)] +
                                      [(r, vals[r]) for r in (5, 6, 7) if vals[r]])
        for ai in units:
            for aj in units:
                base = {f"a{i}": ai, f"a{j}": aj}
                if p > 2:
                    for x in units:      # a_ri free; a_ri/a_i + a_rj/a_j = 0
                        y = solve_pair(x, ai, aj)
                        yield rep("C_{%d,%d,q^7}" % (i, j), q ** 7,
                                  {**base, f"a{ri}": x, f"a{rj}": y},
                                  [(i, ai), (j, aj), (ri, x), (rj, y)])
                else:
                    for y in units:      # a_ri set to 0, a_rj free
                        yield rep("C_{%d,%d,q^7}" % (i, j), q ** 7,
                                  {**base, f"a{rj}": y},
                                  [(i, ai), (j, aj), (rj, y)])
        for ai in units:
            for aj in units:
                for b12 in full:
                    yield rep("C_{%d,%d,q^8}" % (i, j), q ** 8,
                              {f"a{i}": ai, f"a{j}": aj, "b12": b12},
                              [(i, ai), (j, aj), (12, b12)])

    # --- C_{i,q^6/q^7/q^8} for single outer indices ---------------------
    for i in (1, 2, 4):
        r6a, r6b = _SINGLE_Q6_ROOTS[i]
        r7 = _SINGLE_Q7_ROOT[i]
        for ai in units:
            for x in full:
                for y in full:
                    if x == 0 and y == 0:
                        continue
                    yield rep("C_{%d,q^6}" % i, q ** 6,
                              {f"a{i}": ai, f"c{r6a}": x, f"c{r6b}": y},
                              [(i, ai), (r6a, x), (r6b, y)])
        for ai in units:
            for x in units:
                yield rep("C_{%d,q^7}" % i, q ** 7,
                          {f"a{i}": ai, f"a{r7}": x}, [(i, ai), (r7, x)])
        for ai in units:
            for b12 in full:
                yield rep("C_{%d,q^8}" % i, q ** 8,
                          {f"a{i}": ai, "b12": b12}, [(i, ai), (12, b12)])

    # --- C_3 -------------------------------------------------------------
    for a3 in units:
        for b8 in full:
            for b9 in full:
                for b10 in full:
                    for b11 in full:
                        yield rep("C_3", q ** 8,
                                  {"a3": a3, "b8": b8, "b9": b9, "b10": b10,
                                   "b11": b11},
                                  [(3, a3), (8, b8), (9, b9), (10, b10),
                                   (11, b11)])

    # --- C_{5,6,7} -------------------------------------------------------
    if p > 2:
        for a5 in units:
            for a6 in units:
                for a7 in units:
                    for b11 in full:
                        yield rep("C_{5,6,7}", q ** 8,
                                  {"a5": a5, "a6": a6, "a7": a7, "b11": b11},
                                  [(5, a5), (6, a6), (7, a7), (11, b11)])
    else:
        for a5 in units:
            for a6 in units:
                for a7 in units:
                    for a10 in units:
                        alpha = mul(a5, mul(a6, a7))
                        beta = mul(a5, a10)
                        pick = nonimage_pick(
                            ctx, lambda t, al=alpha, be=beta: Fq(ctx, ctx.add(
                                mul(al, mul(t.i, t.i)), mul(be, t.i))))
                        for d11 in (0, pick.i):
                            yield rep("C^{p=2}_{5,6,7,2q^8}", 2 * q ** 8,
                                      {"a5": a5, "a6": a6, "a7": a7,
                                       "a10": a10, "d11": d11},
                                      [(5, a5), (6, a6), (7, a7), (10, a10),
                                       (11, d11)])
        for a5 in units:
            for a6 in units:
                for a7 in units:
                    yield rep("C^{p=2}_{5,6,7,q^8}", q ** 8,
                              {"a5": a5, "a6": a6, "a7": a7},
                              [(5, a5), (6, a6), (7, a7)])

    # --- C_{i,j,q^8/q^9} for height-2 pairs -----------------------------
    for (i, j) in ((5, 6), (5, 7), (6, 7)):
        ri, rj = _PAIR_Q8_ROOTS[(i, j)]
        for ai in units:
            for aj in units:
                base = {f"a{i}": ai, f"a{j}": aj}
                if p > 2:
                    for x in units:      # a_ri/a_i + a_rj/a_j = 0
                        y = solve_pair(x, ai, aj)
                        yield rep("C_{%d,%d,q^8}" % (i, j), q ** 8,
                                  {**base, f"a{ri}": x, f"a{rj}": y},
                                  [(i, ai), (j, aj), (ri, x), (rj, y)])
                else:
                    for y in units:
                        yield rep("C_{%d,%d,q^8}" % (i, j), q ** 8,
                                  {**base, f"a{rj}": y},
                                  [(i, ai), (j, aj), (rj, y)])
        for ai in units:
            for aj in units:
                for b11 in full:
                    yield rep("C_{%d,%d,q^9}" % (i, j), q ** 9,
                              {f"a{i}": ai, f"a{j}": aj, "b11": b11},
                              [(i, ai), (j, aj), (11, b11)])

    # --- C_{i,q^8/q^9} for height-2 singles -----------------------------
    for i in (5, 6, 7):
        r = _SINGLE_Q8_ROOT[i]
        for ai in units:
            for x in units:
                yield rep("C_{%d,q^8}" % i, q ** 8,
                          {f"a{i}": ai, f"a{r}": x}, [(i, ai), (r, x)])
        for ai in units:
            for b11 in full:
                yield rep("C_{%d,q^9}" % i, q ** 9,
                          {f"a{i}": ai, "b11": b11}, [(i, ai), (11, b11)])

    # --- C_{8,9,10}, C_{11}, C_{12} --------------------------------------
    for c8 in full:
        for c9 in full:
            for c10 in full:
                if c8 == 0 and c9 == 0 and c10 == 0:
                    continue
                yield rep("C_{8,9,10}", q ** 10,
                          {"c8": c8, "c9": c9, "c10": c10},
                          [(8, c8), (9, c9), (10, c10)])
    for a11 in units:
        yield rep("C_{11}", q ** 11, {"a11": a11}, [(11, a11)])
    for b12 in full:
        yield rep("C_{12}", q ** 12, {"b12": b12}, [(12, b12)])


def family_counts(ctx: FieldCtx) -> dict:
    counts = {}
    for r in enumerate_class_reps(ctx):
        counts[r.family] = counts.get(r.family, 0) + 1
    return counts


def expected_family_counts(ctx: FieldCtx) -> dict:
    meta = _family_meta(ctx.p)
    return {label: m["count"](ctx.q) for label, m in meta.items()}


def class_equation_check(ctx: FieldCtx) -> bool:
    total = 0
    by_family = {}
    for r in enumerate_class_reps(ctx):
        total += r.class_size
        by_family[r.family] = by_family.get(r.family, 0) + r.class_size
    if total != ctx.q ** 12:
        raise AssertionError(
            f"class equation fails: sum {total} != q^12; per-family {by_family}")
    return True


_PNAME_LETTERS = ("a", "b", "c", "d")


def transport_class(g: GraphAuto, r: ClassRep) -> ClassRep:
    """Image of a class representative under a graph automorphism.

    Only defined for p > 2 (the p=2 families are not stable), and for p = 3
    the C_{1,2,4,q^6} family is only stable under automorphisms fixing the
    index pair (6,7) setwise.
    """
    ctx = r.rep.ctx
    if ctx.p == 2:
        raise ClassTransportError("class families are not automorphism-stable at p=2")
    meta = _family_meta(ctx.p)
    m = meta[r.family]
    support = frozenset(g.perm[i] for i in m["support"])
    target = None
    for label, tm in meta.items():
        if tm["support"] == support and tm["kind"] == m["kind"]:
            target = label
            break
    if target is None:
        raise ClassTransportError(f"no target family for {r.family} under {g.name}")
    new_params = {}
    for name, val in r.params.items():
        letter = name[0]
        idx = int(name[1:])
        new_params[f"{letter}{g.perm[idx]}"] = val
    new_rep = apply_auto(g, r.rep)
    if ctx.p == 3 and r.family == "C_{1,2,4,q^6}":
        # the two-parameter p=3 template only uses roots 6 and 7
        if any(new_rep.coords[k - 1] and k not in (1, 2, 4, 6, 7)
               for k in range(1, 13)):
            raise ClassTransportError(
                "C_{1,2,4,q^6} is not stable under this automorphism for p=3")
    return ClassRep(target, new_params, new_rep, r.centralizer_order)
