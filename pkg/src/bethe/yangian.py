"""Generating matrix T(u), commuting Bethe-type series B_k(u), the quantum
determinant, inverse-series generators, and the associated verification
suites (RTT self-check, fusion, centrality, commutativity, and the
hat-series identity).

All series coefficients are exact algebra elements in PBW normal form, so
every check reduces to "the normal form of a residual is zero".
"""
from __future__ import annotations

from itertools import permutations

from .algebra import AlgebraElement, YangianRule, commutator
from .indices import IndexSet, ZMatrix
from .rationals import ONE, Q, ZERO, binomial
from .series import INF_CAP, BiLaurent, Ring, TruncatedSeries, algebra_ring
from .tensor import (TensorElement, antisymmetrizer, bilaurent_r, f_k_member,
                     perm_sign, tensor_ring)


def lift_tensor(t: TensorElement, ring: Ring) -> TensorElement:
    """Promote rational tensor coefficients into a richer ring."""
    return t.map_coeffs(lambda c: ring.one * c, ring)


def t_entry_series(rule: YangianRule, i: int, j: int, D: int) -> TruncatedSeries:
    """T_ij(u) = delta_ij + sum_r T_ij^(r) u^-r."""
    aring = algebra_ring(rule)
    coeffs = [aring.one if i == j else aring.zero]
    coeffs += [rule.element(i, j, r) for r in range(1, D + 1)]
    return TruncatedSeries(aring, coeffs, D)


def t_matrix(rule: YangianRule, D: int) -> dict:
    """All entries of the generating matrix as a dict (i, j) -> series."""
    idx = rule.index_set.indices()
    return {(i, j): t_entry_series(rule, i, j, D) for i in idx for j in idx}


def t_site_series(rule: YangianRule, sites: int, pos: int, D: int,
                  hat: bool = False) -> TruncatedSeries:
    """T(u) (or its inverse series) as a series of tensors living on one
    site of a larger tensor space, identity on the other sites."""
    iset = rule.index_set
    aring = algebra_ring(rule)
    one_site_ring = tensor_ring(1, iset, aring)
    idx = iset.indices()
    coeffs = [one_site_ring.one]
    for r in range(1, D + 1):
        ent = {((i,), (j,)): rule.element(i, j, r) for i in idx for j in idx}
        coeffs.append(TensorElement(1, iset, aring, ent))
    s = TruncatedSeries(one_site_ring, coeffs, D)
    if hat:
        s = s.invert()
    big_ring = tensor_ring(sites, iset, aring)
    return s.map_coeffs(lambda c: c.embed((pos,), sites), big_ring)


def t_product_series(rule: YangianRule, sites: int, k: int, D: int,
                     hat: bool = False, descending: bool = False) -> TruncatedSeries:
    """Ordered product of the site factors T_p(u-p), p = 1..k (or the hat
    factors, optionally in descending site order)."""
    ps = list(range(1, k + 1))
    if descending:
        ps.reverse()
    acc = None
    for p in ps:
        f = t_site_series(rule, sites, p, D, hat=hat).substitute_affine(1, -p)
        acc = f if acc is None else acc * f
    if acc is None:
        acc = TruncatedSeries.one(
            tensor_ring(sites, rule.index_set, algebra_ring(rule)), D)
    return acc


def z_site_tensor(z: ZMatrix, pos: int, sites: int, ring: Ring) -> TensorElement:
    one_site = TensorElement(1, z.index_set, ring,
                             {((i,), (j,)): ring.one * v
                              for (i, j), v in z.entries.items()})
    return one_site.embed((pos,), sites)


# -- Bethe series ----------------------------------------------------------------


def bethe_series(k: int, z: ZMatrix, rule: YangianRule, D: int,
                 cross_check: bool = True) -> TruncatedSeries:
    """B_k(u) via the double permutation sum; optionally cross-checked
    against the independent tensor-trace construction."""
    if not (1 <= k <= rule.index_set.N):
        raise ValueError("k out of range")
    b = bethe_series_perm(k, z, rule, D)
    if cross_check:
        b2 = bethe_series_tensor(k, z, rule, D)
        if b != b2:
            raise AssertionError(
                "permutation-sum and tensor-trace constructions disagree")
    return b


def bethe_series_perm(k: int, z: ZMatrix, rule: YangianRule, D: int) -> TruncatedSeries:
    iset = rule.index_set
    N = iset.N
    idx = iset.indices()
    aring = algebra_ring(rule)
    shifted = {}
    for p in range(1, k + 1):
        for i in idx:
            for j in idx:
                shifted[(i, j, p)] = t_entry_series(rule, i, j, D)\
                    .substitute_affine(1, -p)
    acc = TruncatedSeries.zero(aring, D)
    fact_n = 1
    for m in range(2, N + 1):
        fact_n *= m
    for g in permutations(idx):
        sg = perm_sign(g)
        for h in permutations(idx):
            zfac = ONE
            for p in range(k, N):
                zfac *= z.entry(g[p], h[p])
                if zfac == 0:
                    break
            if zfac == 0:
                continue
            term = None
            for p in range(k):
                f = shifted[(g[p], h[p], p + 1)]
                term = f if term is None else term * f
            acc = acc + term * (Q(sg * perm_sign(h)) * zfac)
    return acc * Q(1, fact_n)


def bethe_series_tensor(k: int, z: ZMatrix, rule: YangianRule, D: int) -> TruncatedSeries:
    iset = rule.index_set
    N = iset.N
    aring = algebra_ring(rule)
    big_ring = tensor_ring(N, iset, aring)
    hn = lift_tensor(antisymmetrizer(N, iset), aring)
    prod_series = t_product_series(rule, N, k, D)
    zs = TensorElement.identity(N, iset, aring)
    for p in range(k + 1, N + 1):
        zs = zs * z_site_tensor(z, p, N, aring)
    x = prod_series.scale(hn, side="left").scale(zs, side="right")
    return x.map_coeffs(lambda c: c.partial_trace_all(), aring)


def quantum_determinant(rule: YangianRule, D: int) -> TruncatedSeries:
    """B_N(u) as the sign-alternating ordered product over permutations."""
    iset = rule.index_set
    idx = iset.indices()
    aring = algebra_ring(rule)
    acc = TruncatedSeries.zero(aring, D)
    for g in permutations(idx):
        term = None
        for p, col in enumerate(idx):
            f = t_entry_series(rule, g[p], col, D).substitute_affine(1, -(p + 1))
            term = f if term is None else term * f
        acc = acc + term * Q(perm_sign(g))
    return acc


def hat_bethe_series(k: int, z: ZMatrix, rule: YangianRule, D: int) -> TruncatedSeries:
    """The inverse-series generators: trace of H_k times the descending
    product of inverse factors times Z_1..Z_k."""
    iset = rule.index_set
    aring = algebra_ring(rule)
    if k == 0:
        return TruncatedSeries.one(aring, D)
    hk = lift_tensor(antisymmetrizer(k, iset), aring)
    prod_series = t_product_series(rule, k, k, D, hat=True, descending=True)
    zs = TensorElement.identity(k, iset, aring)
    for p in range(1, k + 1):
        zs = zs * z_site_tensor(z, p, k, aring)
    x = prod_series.scale(hk, side="left").scale(zs, side="right")
    return x.map_coeffs(lambda c: c.partial_trace_all(), aring)


# -- verification suites -----------------------------------------------------------


def verify_rtt(rule: YangianRule, D: int) -> list:
    """Residuals of R(u-v) T_1(u) T_2(v) - T_2(v) T_1(u) R(u-v)."""
    iset = rule.index_set
    aring = algebra_ring(rule)
    ring2 = tensor_ring(2, iset, aring)
    idx = iset.indices()

    def t_bil(site, var):
        ent = {}
        for r in range(0, D + 1):
            if r == 0:
                c = TensorElement.identity(2, iset, aring)
            else:
                c = TensorElement(1, iset, aring,
                                  {((i,), (j,)): rule.element(i, j, r)
                                   for i in idx for j in idx}).embed((site,), 2)
            key = (-r, 0) if var == "u" else (0, -r)
            ent[key] = c
        cap_u = D if var == "u" else INF_CAP
        cap_v = D if var == "v" else INF_CAP
        return BiLaurent(ring2, ent, cap_u, cap_v)

    t1 = t_bil(1, "u")
    t2 = t_bil(2, "v")
    r = bilaurent_r("plain", (1, 2), 1, -1, 0, 2, iset, aring)
    res = r * t1 * t2 - t2 * t1 * r
    details = []
    bad = {k for k in res.entries}
    for ru in range(0, res.cap_u + 1):
        for rv in range(0, res.cap_v + 1):
            details.append((f"coefficient u^{-ru} v^{-rv}",
                            (-ru, -rv) not in bad))
    return details


def verify_fusion(rule: YangianRule, k: int, D: int) -> list:
    """H_k (T_1..T_k) = (T_k..T_1) H_k, plus the fused-block membership
    predicate H X = H X H, coefficientwise."""
    iset = rule.index_set
    aring = algebra_ring(rule)
    hk = lift_tensor(antisymmetrizer(k, iset), aring)
    fwd = t_product_series(rule, k, k, D)
    bwd = t_product_series(rule, k, k, D, descending=True)
    lhs = fwd.scale(hk, side="left")
    rhs = bwd.scale(hk, side="right")
    details = []
    for r in range(D + 1):
        details.append((f"fusion coefficient u^{-r}",
                        lhs.coeffs[r] == rhs.coeffs[r]))
    for r in range(D + 1):
        x = fwd.coeffs[r]
        details.append((f"membership coefficient u^{-r}",
                        hk * x == hk * x * hk))
    return details


def verify_centrality(rule: YangianRule, D: int, max_level: int) -> list:
    qdet = quantum_determinant(rule, D)
    idx = rule.index_set.indices()
    details = []
    for r in range(1, D + 1):
        c = qdet.coeffs[r]
        for s in range(1, max_level + 1):
            for i in idx:
                for j in idx:
                    res = commutator(c, rule.element(i, j, s))
                    details.append(
                        (f"[qdet coeff {r}, gen({i},{j})^({s})]", res.is_zero()))
    return details


def verify_bethe_commutativity(z: ZMatrix, rule: YangianRule, budget: int,
                               D: int | None = None) -> list:
    if D is None:
        D = budget - 1
    N = rule.index_set.N
    series = {k: bethe_series(k, z, rule, D) for k in range(1, N + 1)}
    details = []
    for k in range(1, N + 1):
        for l in range(k, N + 1):
            for r in range(1, D + 1):
                for s in range(1, D + 1):
                    if r + s > budget or (k == l and s <= r):
                        continue
                    res = commutator(series[k].coeffs[r], series[l].coeffs[s])
                    details.append(
                        (f"[B_{k} coeff {r}, B_{l} coeff {s}]", res.is_zero()))
    return details


def verify_hat_identity(z: ZMatrix, rule: YangianRule, D: int) -> list:
    """B_k(u) = B_N(u) * hat-B_{N-k}(u-k) * c_k with the scalar c_k
    resolved empirically among {binomial(N,k), 1/binomial(N,k)}.

    Constant terms force c_k = 1/binomial(N,k): the u^0 term of B_k is
    e_{N-k}(z)/binomial(N,k) while B_N and the hat series start at 1 and
    e_{N-k}(z).  The resolved scalar is reported per k.
    """
    N = rule.index_set.N
    bn = bethe_series(N, z, rule, D, cross_check=False)
    details = []
    for k in range(1, N + 1):
        bk = bethe_series(k, z, rule, D)
        hat = hat_bethe_series(N - k, z, rule, D).substitute_affine(1, -k)
        base = bn * hat
        scalar = None
        for c in (ONE / binomial(N, k), binomial(N, k)):
            if bk == base * c:
                scalar = c
                break
        details.append((f"hat identity k={k} (scalar {scalar})", scalar is not None))
    return details
