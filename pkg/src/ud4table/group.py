"""The group U(q) of type D4 in 12-coordinate normal form.

Elements are words in the root subgroups X_1..X_12, stored in the fixed
product order x_3, x_1, x_2, x_4, x_5, ..., x_12.  Multiplication is by
commutator collection: adjacent out-of-order factors are swapped via
a b = b a [a, b], with [x_i(t), x_j(u)] = x_k(eps t u) read off the
structure-constant table.  Corrections strictly increase root height, so
collection terminates.
"""

from __future__ import annotations

import re

from .ffield import FieldCtx, FieldError, Fq

# positive roots as coefficient vectors over the simple roots alpha_1..alpha_4
ROOTS = {
    1: (1, 0, 0, 0), 2: (0, 1, 0, 0), 3: (0, 0, 1, 0), 4: (0, 0, 0, 1),
    5: (1, 0, 1, 0), 6: (0, 1, 1, 0), 7: (0, 0, 1, 1),
    8: (1, 1, 1, 0), 9: (1, 0, 1, 1), 10: (0, 1, 1, 1),
    11: (1, 1, 1, 1), 12: (1, 1, 2, 1),
}
HEIGHT = {i: sum(v) for i, v in ROOTS.items()}

# structure constants: (i, j) -> (k, eps) meaning [x_i(t), x_j(u)] = x_k(eps t u)
COMM = {
    (1, 3): (5, 1), (1, 6): (8, 1), (1, 7): (9, 1), (1, 10): (11, 1),
    (2, 3): (6, 1), (2, 5): (8, 1), (2, 7): (10, 1), (2, 9): (11, 1),
    (3, 4): (7, -1), (3, 11): (12, 1),
    (4, 5): (9, 1), (4, 6): (10, 1), (4, 8): (11, 1),
    (5, 10): (12, -1), (6, 9): (12, -1), (7, 8): (12, -1),
}

NORMAL_ORDER = (3, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12)
POS = {root: k for k, root in enumerate(NORMAL_ORDER)}


def commutator_coeff(i: int, j: int):
    """(k, eps) with [x_i(t), x_j(u)] = x_k(eps t u), or None if trivial."""
    hit = COMM.get((i, j))
    if hit is not None:
        return hit
    hit = COMM.get((j, i))
    if hit is not None:
        # [b, a] = [a, b]^{-1}; the target is central at the collection step
        return (hit[0], -hit[1])
    return None


def validate_root_data():
    """Cross-check COMM against root vector sums; raises on mismatch."""
    vec_to_idx = {v: i for i, v in ROOTS.items()}
    for i in range(1, 13):
        for j in range(i + 1, 13):
            s = tuple(x + y for x, y in zip(ROOTS[i], ROOTS[j]))
            entry = COMM.get((i, j))
            if s in vec_to_idx:
                if entry is None or entry[0] != vec_to_idx[s]:
                    raise AssertionError(f"structure constant mismatch at ({i},{j})")
                if entry[1] not in (1, -1):
                    raise AssertionError(f"bad sign at ({i},{j})")
            elif entry is not None:
                raise AssertionError(f"spurious commutator entry at ({i},{j})")


class GraphAuto:
    """A graph automorphism given by an index permutation fixing 3, 11, 12."""

    def __init__(self, name: str, perm: dict):
        self.name = name
        self.perm = {i: perm.get(i, i) for i in range(1, 13)}
        self._validate()

    def _validate(self):
        pm = self.perm
        if sorted(pm.values()) != list(range(1, 13)):
            raise ValueError(f"{self.name}: not a permutation")
        for i in (3, 11, 12):
            if pm[i] != i:
                raise ValueError(f"{self.name}: must fix index {i}")
        # the permuted relation table must coincide with COMM, signs included
        for (i, j), (k, eps) in COMM.items():
            pi, pj, pk = pm[i], pm[j], pm[k]
            if (pi, pj) in COMM:
                if COMM[(pi, pj)] != (pk, eps):
                    raise ValueError(f"{self.name}: breaks relation ({i},{j})")
            elif (pj, pi) in COMM:
                if COMM[(pj, pi)] != (pk, -eps):
                    raise ValueError(f"{self.name}: breaks relation ({i},{j})")
            else:
                raise ValueError(f"{self.name}: relation ({i},{j}) lost")

    def inverse(self) -> "GraphAuto":
        return GraphAuto(self.name + "^-1", {v: k for k, v in self.perm.items()})

    def __repr__(self):
        return f"GraphAuto({self.name})"


def _cycles(*cycles):
    perm = {}
    for cyc in cycles:
        for k, i in enumerate(cyc):
            perm[i] = cyc[(k + 1) % len(cyc)]
    return perm

AUTOMORPHISMS = {
    "id": GraphAuto("id", {}),
    "tau": GraphAuto("tau", _cycles((1, 4, 2), (5, 7, 6), (8, 9, 10))),
    "tau2": GraphAuto("tau2", _cycles((1, 2, 4), (5, 6, 7), (8, 10, 9))),
    "sigma12": GraphAuto("sigma12", _cycles((1, 2), (5, 6), (9, 10))),
    "sigma14": GraphAuto("sigma14", _cycles((1, 4), (5, 7), (8, 10))),
    "sigma24": GraphAuto("sigma24", _cycles((2, 4), (6, 7), (8, 9))),
}


# ---------------------------------------------------------------------------
# collection

def collect_generic(word, add, mul, neg, is_zero):
    """Collect a word [(root, value), ...] into normal form.

    Parametrized over the scalar operations so the same routine runs on
    field indices and on symbolic coefficients.  Returns a 12-entry list
    indexed by root-1.
    """
    w = [(i, t) for i, t in word if not is_zero(t)]
    k = 0
    while k < len(w) - 1:
        i, t = w[k]
        j, u = w[k + 1]
        if i == j:
            s = add(t, u)
            if is_zero(s):
                del w[k:k + 2]
            else:
                w[k:k + 2] = [(i, s)]
            k = max(k - 1, 0)
        elif POS[i] > POS[j]:
            repl = [(j, u), (i, t)]
            cm = commutator_coeff(i, j)
            if cm is not None:
                m, eps = cm
                v = mul(t, u)
                if eps < 0:
                    v = neg(v)
                if not is_zero(v):
                    repl.append((m, v))
            w[k:k + 2] = repl
            k = max(k - 1, 0)
        else:
            k += 1
    coords = [None] * 12
    for i, t in w:
        if coords[i - 1] is not None:
            raise AssertionError("collection left a repeated root factor")
        coords[i - 1] = t
    return coords


def _collect_idx(ctx: FieldCtx, word):
    coords = collect_generic(word, ctx.add, ctx.mul, ctx.neg, lambda v: v == 0)
    return tuple(0 if c is None else c for c in coords)


class UElement:
    """A group element; coords[i-1] is the index of t_i in the normal form."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: FieldCtx, coords):
        self.ctx = ctx
        self.coords = tuple(coords)
        if len(self.coords) != 12:
            raise ValueError("need 12 coordinates")

    def t(self, i: int) -> Fq:
        return Fq(self.ctx, self.coords[i - 1])

    def is_identity(self) -> bool:
        return not any(self.coords)

    def _word(self):
        return [(i, self.coords[i - 1]) for i in NORMAL_ORDER]

    def __mul__(self, other: "UElement") -> "UElement":
        if self.ctx != other.ctx:
            raise FieldError("field context mismatch")
        return UElement(self.ctx, _collect_idx(self.ctx, self._word() + other._word()))

    def inv(self) -> "UElement":
        neg = self.ctx.neg
        word = [(i, neg(self.coords[i - 1])) for i in reversed(NORMAL_ORDER)]
        return UElement(self.ctx, _collect_idx(self.ctx, word))

    def conj(self, h: "UElement") -> "UElement":
        """h^{-1} * self * h."""
        return h.inv() * self * h

    def commutator(self, other: "UElement") -> "UElement":
        return self.inv() * other.inv() * self * other

    def __eq__(self, other):
        return (isinstance(other, UElement) and self.coords == other.coords
                and self.ctx == other.ctx)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"UElement({format_element(self)})"


def identity(ctx: FieldCtx) -> UElement:
    return UElement(ctx, (0,) * 12)


def root_elem(i: int, t: Fq) -> UElement:
    if not 1 <= i <= 12:
        raise ValueError(f"root index {i} out of range")
    coords = [0] * 12
    coords[i - 1] = t.i
    return UElement(t.ctx, coords)


def mul(x: UElement, y: UElement) -> UElement:
    return x * y


def inv(x: UElement) -> UElement:
    return x.inv()


def conj(x: UElement, h: UElement) -> UElement:
    return x.conj(h)


def commutator(x: UElement, y: UElement) -> UElement:
    return x.commutator(y)


def apply_auto(g: GraphAuto, x: UElement) -> UElement:
    coords = [0] * 12
    for i in range(1, 13):
        coords[g.perm[i] - 1] = x.coords[i - 1]
    return UElement(x.ctx, coords)


def m_excluded(i: int):
    """Root indices whose coordinates must vanish for membership in M_i."""
    if not 1 <= i <= 13:
        raise ValueError(f"subgroup index {i} out of range")
    if i == 1:
        return ()
    if i == 2:
        return (3,)
    if i == 3:
        return (3, 1)
    return (3, 1, 2, 4) + tuple(range(5, i))


def m_kept(i: int):
    """Root indices surviving in M_i (complement of m_excluded)."""
    excl = set(m_excluded(i))
    return tuple(j for j in range(1, 13) if j not in excl)


def in_Mi(x: UElement, i: int) -> bool:
    return all(x.coords[j - 1] == 0 for j in m_excluded(i))


# ---------------------------------------------------------------------------
# textual element syntax: "x3(2)*x1(1)*x12(4)", identity printed as "1"

_FACTOR_RE = re.compile(r"^x(\d+)\((\d+)\)$")


def parse_element(ctx: FieldCtx, s: str) -> UElement:
    s = s.strip()
    if s in ("1", "e", ""):
        return identity(ctx)
    word = []
    for part in s.split("*"):
        m = _FACTOR_RE.match(part.strip())
        if not m:
            raise ValueError(f"bad element factor {part!r}")
        i, t = int(m.group(1)), int(m.group(2))
        if not 1 <= i <= 12:
            raise ValueError(f"root index {i} out of range")
        if not 0 <= t < ctx.q:
            raise ValueError(f"field index {t} out of range for q={ctx.q}")
        word.append((i, t))
    return UElement(ctx, _collect_idx(ctx, word))


def format_element(x: UElement) -> str:
    parts = [f"x{i}({x.coords[i - 1]})" for i in NORMAL_ORDER if x.coords[i - 1]]
    return "*".join(parts) if parts else "1"


validate_root_data()
