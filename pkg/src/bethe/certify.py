"""High-level certification suites combining the algebraic and Poisson
layers: enveloping-algebra images, bracket axioms on seeded samples, graded
symbol consistency against the determinant expansions, and the rank
certificates for the shift-of-argument families.

Every suite returns a list of (item, bool) detail rows, matching the other
verify_* functions; the CLI wraps these into reports.
"""
from __future__ import annotations

import random

from .algebra import AlgebraElement, GlRule, commutator, symbol
from .evalmap import pi_apply, rho_apply, verify_image_commutativity
from .indices import IndexSet, ZMatrix
from .poisson import (CurrentPoint, PoissonContext, PoissonPoly, bethe_poly,
                      certified_jacobian_rank, classical_det_poly,
                      jacobian_rank, poisson_bracket, poisson_rank_at,
                      principal_nilpotent, restrict_to_slice, upper_slice)
from .rationals import Q
from .twisted import (TwistedContext, reflection_residual,
                      symmetry_residual_free, twisted_bethe_series)
from .yangian import bethe_series


def verify_rho_homomorphy(ctx: TwistedContext, D: int) -> list:
    """The enveloping-algebra substitution kills the symmetry and
    reflection residual families (it therefore factors through the
    defining relations)."""
    iset = ctx.index_set
    gl = GlRule(iset)
    idx = iset.indices()
    details = []
    for r in range(1, D + 1):
        for i in idx:
            for j in idx:
                res = rho_apply(symmetry_residual_free(ctx, i, j, r), gl)
                details.append(
                    (f"rho of symmetry residual i={i} j={j} order {r}",
                     res.is_zero()))
    for i in idx:
        for j in idx:
            for k in idx:
                for l in idx:
                    bil = reflection_residual(ctx, i, j, k, l, D,
                                              expanded=False)
                    ok = True
                    for (eu, ev), c in bil.entries.items():
                        if -(eu + ev) > D:
                            continue
                        if not rho_apply(c, gl).is_zero():
                            ok = False
                    details.append(
                        (f"rho of reflection residual ({i},{j},{k},{l})", ok))
    return details


def pi_bethe_images(index_set: IndexSet, z: ZMatrix, D: int) -> list:
    """Enveloping-algebra images of the B_k coefficients, all k, levels
    1..D, as one flat list."""
    from .algebra import YangianRule

    rule = YangianRule(index_set)
    gl = GlRule(index_set)
    out = []
    for k in range(1, index_set.N + 1):
        b = bethe_series(k, z, rule, D, cross_check=False)
        for r in range(1, D + 1):
            out.append(pi_apply(b.coeffs[r], gl))
    return out


def rho_bethe_images(ctx: TwistedContext, z: ZMatrix, D: int) -> list:
    """Enveloping-algebra images of the A_k coefficients (computed on the
    formal S-word carrier), all k, orders 1..D."""
    gl = GlRule(ctx.index_set)
    out = []
    for k in range(1, ctx.index_set.N + 1):
        a = twisted_bethe_series(ctx, k, z, D, expanded=False)
        for r in range(1, D + 1):
            out.append(rho_apply(a.coeffs[r], gl))
    return out


def verify_poisson_jacobi(context: PoissonContext, seed: int,
                          samples: int = 20) -> list:
    """Jacobi identity on seeded random generator triples."""
    rng = random.Random(seed)
    vs = context.variables()
    details = []
    for t in range(samples):
        a, b, c = (PoissonPoly.variable(context, *rng.choice(vs))
                   for _ in range(3))
        res = (poisson_bracket(a, poisson_bracket(b, c))
               + poisson_bracket(b, poisson_bracket(c, a))
               + poisson_bracket(c, poisson_bracket(a, b)))
        details.append((f"jacobi triple {t}", res.is_zero()))
    return details


def _random_quadratic(rule, rng, max_level: int) -> AlgebraElement:
    idx = rule.index_set.indices()
    g1 = rule.element(rng.choice(idx), rng.choice(idx),
                      rng.randint(1, max_level))
    g2 = rule.element(rng.choice(idx), rng.choice(idx),
                      rng.randint(1, max_level))
    return g1 * g2 * Q(rng.randint(1, 5))


def verify_symbol_homomorphy(index_set: IndexSet, M: int, seed: int,
                             pairs: int = 50, max_level: int = 3) -> list:
    """symbol([X, Y]) = {symbol X, symbol Y} for seeded random pairs of
    quadratic elements, in the degree (deg X + deg Y - 1) component."""
    from .algebra import YangianRule, filtration_degree

    rule = YangianRule(index_set)
    context = PoissonContext("plain", index_set, M)
    rng = random.Random(seed)
    details = []
    for t in range(pairs):
        x = _random_quadratic(rule, rng, max_level)
        y = _random_quadratic(rule, rng, max_level)
        d = filtration_degree(x) + filtration_degree(y) - 1
        lhs = symbol(commutator(x, y), d, context)
        rhs = poisson_bracket(symbol(x, filtration_degree(x), context),
                              symbol(y, filtration_degree(y), context))
        details.append((f"symbol pair {t}", lhs == rhs))
    return details


def verify_laplace_consistency(index_set: IndexSet, z: ZMatrix, M: int,
                               D: int | None = None) -> list:
    """Graded symbols of the series coefficients equal the determinant-
    expansion polynomials, coefficient by coefficient (plain or twisted
    per the index set)."""
    from .algebra import YangianRule

    N = index_set.N
    if D is None:
        D = N * M
    details = []
    if index_set.kind == "plain":
        context = PoissonContext("plain", index_set, M)
        rule = YangianRule(index_set)
        mk = lambda k: bethe_series(k, z, rule, D, cross_check=False)
    else:
        context = PoissonContext("twisted", index_set, M)
        ctx = TwistedContext(index_set)
        mk = lambda k: twisted_bethe_series(ctx, k, z, D, expanded=False)
    zero = PoissonPoly.constant(context, 0)
    for k in range(1, N + 1):
        series = mk(k)
        table = bethe_poly(k, z, context)
        for r in range(0, D + 1):
            lhs = symbol(series.coeffs[r], r, context)
            rhs = table[r] if r < len(table) else zero
            details.append((f"k={k} coefficient r={r}", lhs == rhs))
    return details


def bethe_family_polys(context: PoissonContext, z: ZMatrix) -> list:
    """All determinant-expansion coefficients, flattened over k and r."""
    out = []
    for k in range(1, context.index_set.N + 1):
        out.extend(bethe_poly(k, z, context))
    return out


def verify_jacobian_rank(context: PoissonContext, z: ZMatrix, expected: int,
                         seed: int = 0) -> list:
    """Jacobian of the family at a certified seeded point has the expected
    rank (= the dimension of the certification slice)."""
    fs = bethe_family_polys(context, z)
    rank, used = certified_jacobian_rank(fs, context.variables(), context,
                                         seed=seed, expected=expected)
    return [(f"jacobian rank {rank} (expected {expected}, seed {used})",
             rank == expected)]


def verify_poisson_rank(context: PoissonContext, expected: int) -> list:
    """Rank of the bracket at the principal-nilpotent base point placed at
    the top level equals the expected value (twice the slice codimension
    invariant)."""
    iset = context.index_set
    if iset.kind == "plain":
        mat = {(i + 1, i): 1 for i in range(1, iset.N)}
    else:
        mat = principal_nilpotent(iset, variant="section4")
    pt = CurrentPoint.from_level_matrix(context, context.M, mat)
    rank = poisson_rank_at(pt, context)
    return [(f"bracket rank {rank} at base point (expected {expected})",
             rank == expected)]


def verify_twisted_parity(context: PoissonContext, z: ZMatrix) -> list:
    """a_k^(r) = 0 exactly when N - k + r is odd."""
    N = context.index_set.N
    details = []
    for k in range(1, N + 1):
        table = bethe_poly(k, z, context)
        ok = all(p.is_zero() for r, p in enumerate(table)
                 if (N - k + r) % 2 == 1)
        details.append((f"parity zeros k={k}", ok))
    return details


def verify_classical_slice_rank(n: int, z: ZMatrix, seed: int = 7) -> list:
    """Even-orthogonal classical family: the determinant coefficients
    restricted to the Borel slice are a complete independent set (rank
    equals the slice dimension n^2)."""
    iset = IndexSet.signed(2 * n, "so")
    context = PoissonContext("twisted", iset, 1)
    fs = bethe_family_polys(context, z)
    sl = upper_slice(context, variant="lemma45")
    rest = [restrict_to_slice(f, sl) for f in fs]
    expected = n * n
    rng = random.Random(seed)
    rank = 0
    for _ in range(5):
        vals = {v: Q(rng.randint(1, 9)) for v in sl.free}
        rank = max(rank, jacobian_rank(rest, sl.free, vals))
        if rank == expected:
            break
    return [(f"classical slice rank {rank} (expected {expected}, "
             f"dim {len(sl.free)})", rank == expected)]


def verify_pi_rho_image_commutativity(index_set: IndexSet, z: ZMatrix,
                                      D: int) -> list:
    """Pairwise commutativity of the enveloping-algebra images, in the
    algebra and in the defining representation."""
    gl = GlRule(index_set)
    if index_set.kind == "plain":
        elems = pi_bethe_images(index_set, z, D)
        tag = "pi image"
    else:
        elems = rho_bethe_images(TwistedContext(index_set), z, D)
        tag = "rho image"
    rows = verify_image_commutativity(elems, gl)
    return [(f"{tag} {item}", ok) for item, ok in rows]


def expected_jacobian_rank(context: PoissonContext) -> int:
    """Dimension of the certification slice: MN(N+1)/2 in the plain case,
    the three-branch table in the twisted cases (odd M for odd-orthogonal
    and symplectic, even M for even-orthogonal)."""
    iset = context.index_set
    N, M = iset.N, context.M
    if iset.kind == "plain":
        return M * N * (N + 1) // 2
    n = iset.n
    if iset.form == "so" and N % 2 == 1:
        m = (M - 1) // 2
        return (2 * m * n + m + n) * (n + 1)
    if iset.form == "sp":
        m = (M - 1) // 2
        return (2 * m * n + m + n + 1) * n
    m = M // 2
    return (2 * n + 1) * m * n


def expected_poisson_rank(context: PoissonContext) -> int:
    """Generic bracket rank 2D at the base point."""
    iset = context.index_set
    N, M = iset.N, context.M
    if iset.kind == "plain":
        return M * (N * N - N)
    n = iset.n
    if iset.form == "so" and N % 2 == 1:
        m = (M - 1) // 2
        return 2 * (2 * m * n + m + n) * n
    if iset.form == "sp":
        m = (M - 1) // 2
        return 2 * (2 * m * n - m + n) * n
    m = M // 2
    return 2 * (2 * n - 1) * m * n
