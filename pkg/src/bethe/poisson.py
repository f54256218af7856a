"""Graded (classical) side: polynomial algebras with truncated Poisson
brackets, determinant-expansion families, slice restrictions and exact
rank certificates.

Variables v_ij^(r) (1 <= r <= M) are tagged by the same (level, row, col)
triples as the noncommutative generators.  Two contexts exist:

* plain -- coordinates on the truncated current space gl_N + ... +
  gl_N t^{M-1}; bracket window r = max(1, p+q-M) .. min(p,q);
* twisted -- coordinates on the sigma-twisted current space, subject to
  the linear relations y_ij^(r) = eps_ij (-1)^r y_{-j,-i}^(r); every
  polynomial is kept in a fixed fundamental-domain normal form, and the
  bracket carries the extra eps-twisted sum with the (-1)^{p+r-1} factor.

Rank computations are exact over the rationals (symbolic partial
derivatives, Gaussian elimination); random points come from a seeded
generator so every certificate is reproducible.
"""
from __future__ import annotations

import random

from .indices import IndexSet, ZMatrix
from .rationals import ONE, Q, ZERO, binomial


class PoissonContext:
    """Variable universe and bracket flavour ('plain' or 'twisted')."""

    __slots__ = ("kind", "index_set", "M", "_vars", "_bracket_cache")

    def __init__(self, kind: str, index_set: IndexSet, M: int):
        if kind not in ("plain", "twisted"):
            raise ValueError(f"unknown context kind {kind!r}")
        if kind == "twisted" and index_set.kind != "signed":
            raise ValueError("twisted context needs a signed index set")
        if M < 1:
            raise ValueError("M must be >= 1")
        self.kind = kind
        self.index_set = index_set
        self.M = M
        self._vars = None
        self._bracket_cache: dict = {}

    def __eq__(self, other):
        return (isinstance(other, PoissonContext)
                and (self.kind, self.index_set, self.M)
                == (other.kind, other.index_set, other.M))

    def __hash__(self):
        return hash((self.kind, self.index_set, self.M))

    def __repr__(self):
        return f"PoissonContext({self.kind!r}, {self.index_set!r}, M={self.M})"

    def reduce_var(self, v: tuple):
        """Normal form of a single variable: (sign, representative) or
        None when the variable is zero in this context."""
        r, i, j = v
        if r > self.M:
            return None  # killed by the truncation ideal
        if self.kind == "plain":
            return (1, v)
        a, b = -j, -i
        s = self.index_set.eps(i, j) * (-1) ** r
        if (a, b) == (i, j):
            return (1, v) if s == 1 else None
        if (i, j) < (a, b):
            return (1, v)
        return (s, (r, a, b))

    def variables(self) -> tuple:
        """Ordered tuple of fundamental-domain variables."""
        if self._vars is None:
            idx = self.index_set.indices()
            out = []
            for r in range(1, self.M + 1):
                for i in idx:
                    for j in idx:
                        red = self.reduce_var((r, i, j))
                        if red is not None and red[1] == (r, i, j):
                            out.append((r, i, j))
            self._vars = tuple(out)
        return self._vars

    # -- bracket on generators ---------------------------------------------

    def gen_bracket(self, a: tuple, b: tuple) -> "PoissonPoly":
        key = (a, b)
        hit = self._bracket_cache.get(key)
        if hit is not None:
            return hit
        (p, i, j), (q, k, l) = a, b
        terms: dict = {}

        def put(s1, v1, s2, w1, c):
            # product var^(s1) * var^(s2) with level-0 symbols = deltas
            if s1 == 0 and s2 == 0:
                word = ()
                if v1[0] != v1[1] or w1[0] != w1[1]:
                    return
            elif s1 == 0:
                if v1[0] != v1[1]:
                    return
                word = ((s2,) + w1,)
            elif s2 == 0:
                if w1[0] != w1[1]:
                    return
                word = ((s1,) + v1,)
            else:
                word = ((s1,) + v1, (s2,) + w1)
            word = tuple(sorted(word))
            terms[word] = terms.get(word, ZERO) + c

        lo = max(1, p + q - self.M)
        hi = min(p, q)
        for r in range(lo, hi + 1):
            put(r - 1, (k, j), p + q - r, (i, l), ONE)
            put(p + q - r, (k, j), r - 1, (i, l), -ONE)
            if self.kind == "twisted":
                eps = self.index_set.eps
                sgn = Q((-1) ** (p + r - 1))
                put(r - 1, (i, -k), p + q - r, (-j, l), sgn * eps(k, -j))
                put(p + q - r, (k, -i), r - 1, (-l, j), -sgn * eps(i, -l))
        res = PoissonPoly(self, terms)
        self._bracket_cache[key] = res
        return res


class PoissonPoly:
    """Sparse commutative polynomial; monomials are sorted tuples of
    variable triples, normalized to the context's fundamental domain."""

    __slots__ = ("context", "terms")

    def __init__(self, context: PoissonContext, terms: dict):
        self.context = context
        acc: dict = {}
        for mono, c in terms.items():
            c = Q(c)
            if not c:
                continue
            out = []
            dead = False
            for v in mono:
                red = context.reduce_var(v)
                if red is None:
                    dead = True
                    break
                s, w = red
                if s != 1:
                    c = c * s
                out.append(w)
            if dead:
                continue
            key = tuple(sorted(out))
            v = acc.get(key, ZERO) + c
            if v:
                acc[key] = v
            elif key in acc:
                del acc[key]
        self.terms = acc

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(context: PoissonContext, c) -> "PoissonPoly":
        return PoissonPoly(context, {(): c})

    @staticmethod
    def variable(context: PoissonContext, r: int, i: int, j: int) -> "PoissonPoly":
        context.index_set.check(i)
        context.index_set.check(j)
        return PoissonPoly(context, {((r, i, j),): ONE})

    # -- basics -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if self.context != other.context:
            raise ValueError("polynomials from different contexts")

    def __eq__(self, other):
        if isinstance(other, PoissonPoly):
            return self.context == other.context and self.terms == other.terms
        return self.terms == ({(): Q(other)} if other else {})

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, PoissonPoly):
            other = PoissonPoly.constant(self.context, other)
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            v = acc.get(m, ZERO) + c
            if v:
                acc[m] = v
            elif m in acc:
                del acc[m]
        out = PoissonPoly.__new__(PoissonPoly)
        out.context = self.context
        out.terms = acc
        return out

    __radd__ = __add__

    def __neg__(self):
        out = PoissonPoly.__new__(PoissonPoly)
        out.context = self.context
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, PoissonPoly):
            other = PoissonPoly.constant(self.context, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PoissonPoly):
            c = Q(other)
            out = PoissonPoly.__new__(PoissonPoly)
            out.context = self.context
            out.terms = {m: v * c for m, v in self.terms.items()} if c else {}
            return out
        self._check(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                v = acc.get(m, ZERO) + c1 * c2
                if v:
                    acc[m] = v
                elif m in acc:
                    del acc[m]
        out = PoissonPoly.__new__(PoissonPoly)
        out.context = self.context
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            word = "*".join(f"v[{r},{i},{j}]" for (r, i, j) in m) or "1"
            bits.append(f"({self.terms[m]})*{word}")
        return " + ".join(bits)

    # -- calculus -----------------------------------------------------------

    def variables_used(self) -> set:
        return {v for m in self.terms for v in m}

    def derivative(self, v: tuple) -> "PoissonPoly":
        red = self.context.reduce_var(v)
        if red is None:
            return PoissonPoly(self.context, {})
        _, v = red
        acc: dict = {}
        for m, c in self.terms.items():
            k = m.count(v)
            if not k:
                continue
            rest = list(m)
            rest.remove(v)
            key = tuple(rest)
            val = acc.get(key, ZERO) + c * k
            if val:
                acc[key] = val
            elif key in acc:
                del acc[key]
        out = PoissonPoly.__new__(PoissonPoly)
        out.context = self.context
        out.terms = acc
        return out

    def evaluate(self, values) -> "Q":
        """Value at a point; `values` is a CurrentPoint or a plain dict
        keyed by variable triples."""
        get = values.value if isinstance(values, CurrentPoint) else values.__getitem__
        acc = ZERO
        for m, c in self.terms.items():
            t = c
            for v in m:
                t = t * get(v)
                if not t:
                    break
            acc += t
        return acc

    def substitute(self, assignments: dict) -> "PoissonPoly":
        """Replace the listed variables by rational values."""
        acc = PoissonPoly(self.context, {})
        for m, c in self.terms.items():
            coeff = c
            keep = []
            for v in m:
                if v in assignments:
                    coeff = coeff * Q(assignments[v])
                    if not coeff:
                        break
                else:
                    keep.append(v)
            if coeff:
                acc = acc + PoissonPoly(self.context, {tuple(keep): coeff})
        return acc


def poisson_bracket(f: PoissonPoly, g: PoissonPoly) -> PoissonPoly:
    """Bilinear Leibniz extension of the truncated generator bracket."""
    if f.context != g.context:
        raise ValueError("polynomials from different contexts")
    ctx = f.context
    acc = PoissonPoly(ctx, {})
    for a in sorted(f.variables_used()):
        df = f.derivative(a)
        if df.is_zero():
            continue
        for b in sorted(g.variables_used()):
            dg = g.derivative(b)
            if dg.is_zero():
                continue
            br = ctx.gen_bracket(a, b)
            if br.is_zero():
                continue
            acc = acc + df * dg * br
    return acc


# -- points ---------------------------------------------------------------------


class CurrentPoint:
    """Rational value for every variable of a context, stored on the full
    index grid; twisted values must respect the eps-symmetry."""

    __slots__ = ("context", "values")

    def __init__(self, context: PoissonContext, values: dict):
        self.context = context
        idx = context.index_set.indices()
        full: dict = {}
        for r in range(1, context.M + 1):
            for i in idx:
                for j in idx:
                    v = (r, i, j)
                    red = context.reduce_var(v)
                    if red is None:
                        val = ZERO
                    else:
                        s, w = red
                        val = Q(values.get(w, ZERO)) * s
                    given = values.get(v)
                    if given is not None and Q(given) != val:
                        raise ValueError(
                            f"value at {v} violates the context symmetry")
                    full[v] = val
        self.values = full

    def value(self, v: tuple):
        r, i, j = v
        if r > self.context.M:
            return ZERO
        return self.values[v]

    @staticmethod
    def zero(context: PoissonContext) -> "CurrentPoint":
        return CurrentPoint(context, {})

    @staticmethod
    def from_level_matrix(context: PoissonContext, level: int,
                          matrix: dict) -> "CurrentPoint":
        """Point supported at a single level; `matrix` maps (i, j) to a
        rational entry."""
        return CurrentPoint(
            context, {(level, i, j): v for (i, j), v in matrix.items()})

    @staticmethod
    def random(context: PoissonContext, seed: int, bound: int = 9) -> "CurrentPoint":
        rng = random.Random(seed)
        vals = {}
        for v in context.variables():
            x = 0
            while x == 0:
                x = rng.randint(-bound, bound)
            vals[v] = Q(x)
        return CurrentPoint(context, vals)


# -- determinant families --------------------------------------------------------


def det_poly(context: PoissonContext, z: ZMatrix) -> dict:
    """Coefficients of det(u^M + V(u) + Z v) as {(deg_u, deg_v): poly},
    with V(u) the matrix of degree-staggered coordinate polynomials
    v_ij^(1) u^{M-1} + ... + v_ij^(M)."""
    from itertools import permutations

    from .tensor import perm_sign

    iset = context.index_set
    if not z.index_set.same(iset):
        raise ValueError("Z lives on a different index set")
    idx = iset.indices()
    M = context.M

    # entry (i, j) as {(deg_u, deg_v): PoissonPoly}
    entry = {}
    for i in idx:
        for j in idx:
            e: dict = {}
            if i == j:
                e[(M, 0)] = PoissonPoly.constant(context, ONE)
            zij = z.entry(i, j)
            if zij:
                e[(0, 1)] = PoissonPoly.constant(context, zij)
            for r in range(1, M + 1):
                p = PoissonPoly.variable(context, r, i, j)
                key = (M - r, 0)
                e[key] = e.get(key, PoissonPoly(context, {})) + p
            entry[(i, j)] = e

    acc: dict = {}
    for g in permutations(idx):
        sgn = perm_sign(g)
        prod = {(0, 0): PoissonPoly.constant(context, Q(sgn))}
        for pos, j in enumerate(idx):
            e = entry[(g[pos], j)]
            nxt: dict = {}
            for (a1, b1), p1 in prod.items():
                if p1.is_zero():
                    continue
                for (a2, b2), p2 in e.items():
                    k = (a1 + a2, b1 + b2)
                    cur = nxt.get(k)
                    nxt[k] = p1 * p2 if cur is None else cur + p1 * p2
            prod = nxt
        for k, p in prod.items():
            cur = acc.get(k)
            acc[k] = p if cur is None else cur + p
    return {k: p for k, p in acc.items() if not p.is_zero()}


def bethe_poly(k: int, z: ZMatrix, context: PoissonContext) -> list:
    """Coefficient list [c^(0), ..., c^(kM)] of the degree-k member of the
    determinant family: the coefficient of v^{N-k} divided by binomial(N,k),
    read off in descending powers of u from u^{kM}."""
    iset = context.index_set
    N = iset.N
    if not (1 <= k <= N):
        raise ValueError("k out of range")
    M = context.M
    full = det_poly(context, z)
    inv = ONE / binomial(N, k)
    out = []
    for r in range(0, k * M + 1):
        p = full.get((k * M - r, N - k))
        if p is None:
            p = PoissonPoly(context, {})
        out.append(p * inv)
    # nothing of the v^{N-k} slice may fall outside degrees 0..kM
    for (du, dv) in full:
        if dv == N - k and not (0 <= k * M - du <= k * M):
            raise AssertionError("unexpected degree in determinant expansion")
    if context.kind == "twisted":
        for r, p in enumerate(out):
            if (N - k + r) % 2 != 0 and not p.is_zero():
                raise AssertionError(
                    f"parity violation: coefficient {r} of the degree-{k} "
                    "member should vanish")
    return out


def classical_det_poly(z: ZMatrix, index_set: IndexSet) -> dict:
    """M = 1 specialization det(u + V + Z v) on a Lie algebra: twisted
    context for signed index sets, plain otherwise."""
    kind = "twisted" if index_set.kind == "signed" else "plain"
    context = PoissonContext(kind, index_set, 1)
    return det_poly(context, z)


# -- nilpotents and slices -------------------------------------------------------


def principal_nilpotent(index_set: IndexSet, variant: str = "section4") -> dict:
    """Regular nilpotent base points, as sparse {(i, j): rational}.

    plain:   E_21 + E_32 + ... (lower subdiagonal, unit entries);
    signed:  the standard chain E_{p+1,p} - eps-partner completed by the
             middle term E_{1,0} - E_{0,-1} (odd orthogonal), E_{1,-1}
             (symplectic and even orthogonal, the latter with + chain
             signs); variant 'lemma45' (even orthogonal only) replaces
             the middle term by E_{2,-1} - E_{1,-2}.
    """
    if index_set.kind == "plain":
        if variant != "section4":
            raise ValueError("plain index sets have a single variant")
        return {(i + 1, i): ONE for i in range(1, index_set.N)}
    form, N, n = index_set.form, index_set.N, index_set.n
    ent: dict = {}
    if variant == "lemma45":
        if not (form == "so" and N % 2 == 0):
            raise ValueError("variant 'lemma45' is specific to even "
                             "orthogonal index sets")
        for i in range(1, n):
            ent[(i + 1, i)] = ONE
            ent[(-i, -i - 1)] = -ONE
        ent[(2, -1)] = ONE
        ent[(1, -2)] = -ONE
        return ent
    if variant != "section4":
        raise ValueError(f"unknown variant {variant!r}")
    chain_sign = ONE if (form == "so" and N % 2 == 0) else -ONE
    for i in range(1, n):
        ent[(i + 1, i)] = ONE
        ent[(-i, -i - 1)] = chain_sign
    if form == "so" and N % 2 == 1:
        ent[(1, 0)] = ONE
        ent[(0, -1)] = -ONE
    else:
        ent[(1, -1)] = ONE
    return ent


def required_parity(index_set: IndexSet) -> int:
    """Parity of M (as M mod 2) for which the base nilpotent level sits in
    the twisted current space: odd for so_{2n+1}/sp_{2n}, even for so_{2n}."""
    if index_set.form == "so" and index_set.N % 2 == 0:
        return 0
    return 1


class Slice:
    """Affine slice: base point plus the span of the listed free
    coordinates; every other coordinate is frozen at the base value."""

    __slots__ = ("kind", "context", "base", "free")

    def __init__(self, kind: str, context: PoissonContext,
                 base: CurrentPoint, free: tuple):
        self.kind = kind
        self.context = context
        self.base = base
        self.free = free

    def fixed_assignments(self) -> dict:
        free = set(self.free)
        return {v: self.base.value(v)
                for v in self.context.variables() if v not in free}


def upper_slice(context: PoissonContext, variant: str = "section4") -> Slice:
    """The Borel-directed slice through the top-level nilpotent: free
    coordinates are the upper-triangular ones at every level."""
    if variant == "lemma45":
        kind = "s2n"
    elif context.kind == "twisted":
        if context.M % 2 != required_parity(context.index_set):
            raise ValueError("truncation level parity incompatible with "
                             "the base nilpotent")
        kind = "s"
    else:
        kind = "t"
    E = principal_nilpotent(context.index_set, variant)
    base = CurrentPoint.from_level_matrix(context, context.M, E)
    free = tuple(v for v in context.variables() if v[1] <= v[2])
    return Slice(kind, context, base, free)


def restrict_to_slice(p: PoissonPoly, s: Slice) -> PoissonPoly:
    if p.context != s.context:
        raise ValueError("polynomial and slice from different contexts")
    return p.substitute(s.fixed_assignments())


# -- exact ranks -----------------------------------------------------------------


def matrix_rank(rows: list) -> int:
    """Exact rank of a rational matrix (list of row lists)."""
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = ONE / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def jacobian_rank(fs: list, coords, values) -> int:
    """Rank of [df_a/dv_b] evaluated at the point."""
    coords = list(coords)
    rows = []
    for f in fs:
        rows.append([f.derivative(v).evaluate(values) for v in coords])
    if not rows:
        return 0
    return matrix_rank(rows)


def poisson_rank_at(point: CurrentPoint, context: PoissonContext) -> int:
    """Rank of the antisymmetric matrix of coordinate brackets at a point."""
    coords = context.variables()
    vals = {}
    rows = []
    for a in coords:
        row = []
        for b in coords:
            key = (a, b)
            if key not in vals:
                br = context.gen_bracket(a, b).evaluate(point)
                vals[(a, b)] = br
                vals[(b, a)] = -br
            row.append(vals[key])
        rows.append(row)
    return matrix_rank(rows)


def certified_jacobian_rank(fs: list, coords, context: PoissonContext,
                            seed: int, expected: int, retries: int = 5):
    """Max Jacobian rank over a few seeded random points; stops early when
    the expected rank is reached.  Returns (achieved, seed_used)."""
    best, best_seed = 0, seed
    for t in range(retries):
        pt = CurrentPoint.random(context, seed + t)
        r = jacobian_rank(fs, coords, pt)
        if r > best:
            best, best_seed = r, seed + t
        if best >= expected:
            break
    return best, best_seed


def nonzero_coefficients(polys: list) -> list:
    """Drop constants and zeros; the usual prefilter for rank certificates."""
    out = []
    for p in polys:
        if not p.is_zero() and set(p.terms) != {()}:
            out.append(p)
    return out
