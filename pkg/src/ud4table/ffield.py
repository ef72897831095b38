"""Exact arithmetic in F_q for q = p^a.

Elements are represented by their enumeration index 0..q-1: an element with
polynomial coordinates (c_0, c_1, ..., c_{a-1}) in the power basis of the
defining polynomial gets index sum(c_i * p^i).  Index 0 is zero, index 1 is
one, and for a prime field the index is just the residue.  All arithmetic is
table-driven for small q, with a polynomial fallback above the table cap.
"""

from __future__ import annotations

MAX_Q = 10_000          # hard cap for exhaustive-sum work
TABLE_Q = 512           # full add/mul tables below this size


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient lists, lowest degree first)

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(f, g, p, mod):
    """f*g reduced mod the monic polynomial `mod`, coefficients mod p."""
    res = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                res[i + j] = (res[i + j] + fi * gj) % p
    # reduce by mod (monic, degree d)
    d = len(mod) - 1
    for k in range(len(res) - 1, d - 1, -1):
        c = res[k]
        if c:
            res[k] = 0
            for j in range(d):
                res[k - d + j] = (res[k - d + j] - c * mod[j]) % p
    return _poly_trim(res)


def _poly_divisible(f, g, p):
    """True if g divides f over F_p (g monic-izable, nonzero)."""
    f = list(f)
    _poly_trim(f)
    dg = len(g) - 1
    lead_inv = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and f:
        c = (f[-1] * lead_inv) % p
        shift = len(f) - 1 - dg
        for j in range(dg + 1):
            f[shift + j] = (f[shift + j] - c * g[j]) % p
        _poly_trim(f)
    return not f


def _is_irreducible(poly, p):
    """Exhaustive trial division by all monic polynomials of degree <= a/2."""
    a = len(poly) - 1
    if a == 1:
        return True
    for d in range(1, a // 2 + 1):
        for idx in range(p ** d):
            g = _digits(idx, p, d) + [1]
            if _poly_divisible(poly, g, p):
                return False
    return True


def _digits(n, p, length):
    out = []
    for _ in range(length):
        out.append(n % p)
        n //= p
    return out


def default_poly(p: int, a: int):
    """Lexicographically smallest monic irreducible of degree a over F_p.

    "Smallest" means smallest base-p encoding of the non-leading coefficients,
    i.e. the first hit in the deterministic element enumeration order.
    """
    if a == 1:
        return (0, 1)
    for idx in range(p ** a):
        poly = _digits(idx, p, a) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {a} over F_{p}")  # unreachable


class FieldCtx:
    """Immutable description of F_q plus precomputed arithmetic tables."""

    def __init__(self, p: int, a: int, poly=None):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if a < 1:
            raise FieldError(f"a = {a} must be >= 1")
        q = p ** a
        if q > MAX_Q:
            raise FieldError(f"q = {q} exceeds the supported cap {MAX_Q}")
        if poly is None:
            poly = default_poly(p, a)
        else:
            poly = tuple(int(c) % p for c in poly[:-1]) + (int(poly[-1]),)
            if len(poly) != a + 1 or poly[-1] != 1:
                raise FieldError("defining polynomial must be monic of degree a")
            if not _is_irreducible(list(poly), p):
                raise FieldError(f"polynomial {poly} is reducible over F_{p}")
        self.p = p
        self.a = a
        self.q = q
        self.poly = tuple(poly)
        self._coeffs = [tuple(_digits(i, p, a)) for i in range(q)]
        self._build_tables()

    # -- index-level arithmetic -------------------------------------------

    def _index(self, coeffs) -> int:
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + c
        return idx

    def _build_tables(self):
        p, a, q = self.p, self.a, self.q
        self.neg_t = [self._index([(-c) % p for c in self._coeffs[i]]) for i in range(q)]
        if a == 1:
            self.add_t = [[(i + j) % p for j in range(p)] for i in range(p)]
            self.mul_t = [[(i * j) % p for j in range(p)] for i in range(p)]
        elif q <= TABLE_Q:
            mod = list(self.poly)
            self.add_t = [
                [self._index([(x + y) % p for x, y in zip(self._coeffs[i], self._coeffs[j])])
                 for j in range(q)]
                for i in range(q)
            ]
            self.mul_t = []
            for i in range(q):
                fi = _poly_trim(list(self._coeffs[i]))
                row = []
                for j in range(q):
                    fj = _poly_trim(list(self._coeffs[j]))
                    prod = _poly_mulmod(fi, fj, p, mod)
                    row.append(self._index(prod + [0] * (a - len(prod))))
                self.mul_t.append(row)
        else:
            self.add_t = None
            self.mul_t = None
        # inverses by exhaustive search / Fermat
        self.inv_t = [0] * q
        for i in range(1, q):
            if self.inv_t[i]:
                continue
            for j in range(1, q):
                if self.mul(i, j) == 1:
                    self.inv_t[i] = j
                    self.inv_t[j] = i
                    break
        # traces: Tr(x) = sum of x^(p^i)
        self.trace_t = [0] * q
        for i in range(q):
            acc = 0
            frob = i
            for _ in range(a):
                acc = self.add(acc, frob)
                frob = self.pow(frob, p)
            coeffs = self._coeffs[acc]
            if any(coeffs[1:]):
                raise FieldError("trace landed outside the prime field (bug)")
            self.trace_t[i] = coeffs[0]

    def add(self, i: int, j: int) -> int:
        if self.add_t is not None:
            return self.add_t[i][j]
        p = self.p
        return self._index([(x + y) % p for x, y in zip(self._coeffs[i], self._coeffs[j])])

    def mul(self, i: int, j: int) -> int:
        if self.mul_t is not None:
            return self.mul_t[i][j]
        prod = _poly_mulmod(_poly_trim(list(self._coeffs[i])),
                            _poly_trim(list(self._coeffs[j])), self.p, list(self.poly))
        return self._index(prod + [0] * (self.a - len(prod)))

    def neg(self, i: int) -> int:
        return self.neg_t[i]

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg_t[j])

    def inv(self, i: int) -> int:
        if i == 0:
            raise FieldError("division by zero in F_q")
        return self.inv_t[i]

    def pow(self, i: int, e: int) -> int:
        if e < 0:
            i, e = self.inv(i), -e
        res, base = 1, i
        while e:
            if e & 1:
                res = self.mul(res, base)
            base = self.mul(base, base)
            e >>= 1
        return res

    # -- element-level API -------------------------------------------------

    def element(self, i: int) -> "Fq":
        if not 0 <= i < self.q:
            raise FieldError(f"index {i} out of range for F_{self.q}")
        return Fq(self, i)

    @property
    def zero(self) -> "Fq":
        return Fq(self, 0)

    @property
    def one(self) -> "Fq":
        return Fq(self, 1)

    def elements(self):
        return (Fq(self, i) for i in range(self.q))

    def units(self):
        return (Fq(self, i) for i in range(1, self.q))

    def coeffs(self, i: int):
        return self._coeffs[i]

    def from_coeffs(self, coeffs) -> "Fq":
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) != self.a:
            raise FieldError("coefficient vector has wrong length")
        return Fq(self, self._index(coeffs))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, a={self.a}, poly={self.poly})"

    def __eq__(self, other):
        return (isinstance(other, FieldCtx)
                and (self.p, self.a, self.poly) == (other.p, other.a, other.poly))

    def __hash__(self):
        return hash((self.p, self.a, self.poly))


def field_make(p: int, a: int, poly=None) -> FieldCtx:
    return FieldCtx(p, a, poly)


class Fq:
    """A field element: a context reference plus its enumeration index."""

    __slots__ = ("ctx", "i")

    def __init__(self, ctx: FieldCtx, i: int):
        self.ctx = ctx
        self.i = i

    def _chk(self, other) -> int:
        if isinstance(other, Fq):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldError("field context mismatch")
            return other.i
        if isinstance(other, int):
            # small integers embed through the prime subfield
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        j = self._chk(other)
        return Fq(self.ctx, self.ctx.add(self.i, j))

    __radd__ = __add__

    def __sub__(self, other):
        j = self._chk(other)
        return Fq(self.ctx, self.ctx.sub(self.i, j))

    def __rsub__(self, other):
        j = self._chk(other)
        return Fq(self.ctx, self.ctx.sub(j, self.i))

    def __mul__(self, other):
        j = self._chk(other)
        return Fq(self.ctx, self.ctx.mul(self.i, j))

    __rmul__ = __mul__

    def __truediv__(self, other):
        j = self._chk(other)
        return Fq(self.ctx, self.ctx.mul(self.i, self.ctx.inv(j)))

    def __neg__(self):
        return Fq(self.ctx, self.ctx.neg(self.i))

    def __pow__(self, e: int):
        return Fq(self.ctx, self.ctx.pow(self.i, e))

    def inv(self):
        return Fq(self.ctx, self.ctx.inv(self.i))

    def trace(self) -> int:
        return self.ctx.trace_t[self.i]

    def is_zero(self) -> bool:
        return self.i == 0

    def __bool__(self):
        return self.i != 0

    def __eq__(self, other):
        if isinstance(other, Fq):
            return self.i == other.i and self.ctx == other.ctx
        if isinstance(other, int):
            # integers embed through the prime subfield
            return self.i == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.i, self.ctx.q))

    def __repr__(self):
        return f"Fq({self.i}|q={self.ctx.q})"


def trace(x: Fq) -> int:
    return x.trace()


def a_phi(x: Fq) -> Fq:
    """The derived parameter a^{-p} attached to a unit a."""
    if x.is_zero():
        raise FieldError("a_phi requires a nonzero argument")
    return x.inv() ** x.ctx.p


def nonimage_pick(ctx: FieldCtx, fn) -> Fq:
    """Smallest-index element outside the image of an additive index-2 map.

    Only meaningful at p = 2, where maps of the shape t -> alpha*t^2 + beta*t
    have image of index 2 in (F_q, +).  The image is found by exhaustive
    evaluation; a surjective map signals a parameter bug upstream.
    """
    if ctx.p != 2:
        raise FieldError("nonimage_pick applies only in characteristic 2")
    image = {fn(x).i for x in ctx.elements()}
    if len(image) == ctx.q:
        raise FieldError("map is surjective; no non-image element exists")
    if len(image) != ctx.q // 2:
        raise FieldError(f"image has size {len(image)}, expected index 2")
    for i in range(ctx.q):
        if i not in image:
            return Fq(ctx, i)
    raise AssertionError("unreachable")
