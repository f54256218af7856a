"""Evaluation substitutions into enveloping algebras, and the defining
matrix representation.

* pi: level-1 generators map to enveloping-algebra generators E_ij, all
  higher levels to zero.
* rho: defined on formal S-words; S_ij^(r) maps to F_ij (-+1/2)^{r-1} with
  F_ij = E_ij - eps_ij E_{-j,-i} (upper sign: orthogonal case).

The fixed-point enveloping algebra has no separate rewriting system here;
its elements live inside the ambient enveloping algebra after F-expansion.
"""
from __future__ import annotations

from .algebra import AlgebraElement, GlRule, commutator
from .indices import IndexSet
from .rationals import ONE, Q, ZERO


def pi_apply(a: AlgebraElement, gl_rule: GlRule) -> AlgebraElement:
    """Evaluation: T_ij^(1) -> E_ij, higher levels -> 0, then normal-order."""
    acc = gl_rule.zero()
    for word, c in a.terms.items():
        if any(g[0] >= 2 for g in word):
            continue
        term = gl_rule.one()
        for (_, i, j) in word:
            term = term * gl_rule.element(i, j)
        acc = acc + term * c
    return acc


def f_element(gl_rule: GlRule, i: int, j: int) -> AlgebraElement:
    """F_ij = E_ij - eps_ij E_{-j,-i} inside the ambient enveloping algebra."""
    iset = gl_rule.index_set
    return gl_rule.element(i, j) - gl_rule.element(-j, -i) * Q(iset.eps(i, j))


def rho_apply(w: AlgebraElement, gl_rule: GlRule) -> AlgebraElement:
    """Substitute S_ij^(r) -> F_ij (-+1/2)^{r-1} (upper sign for the
    orthogonal form) into a formal S-word element and normal-order."""
    iset = gl_rule.index_set
    if iset.kind != "signed":
        raise ValueError("rho needs a signed index set with a declared form")
    half = Q(-1, 2) if iset.form == "so" else Q(1, 2)
    acc = gl_rule.zero()
    for word, c in w.terms.items():
        term = gl_rule.one()
        scal = c
        for (r, i, j) in word:
            term = term * f_element(gl_rule, i, j)
            scal = scal * half ** (r - 1)
        acc = acc + term * scal
    return acc


def defining_rep(e: AlgebraElement, index_set: IndexSet) -> dict:
    """Algebra map to N x N rational matrices: E_ij -> matrix unit.

    Returns a sparse dict {(i, j): value}."""
    idx = index_set.indices()
    acc: dict = {}
    for word, c in e.terms.items():
        # product of matrix units: E_{i1 j1} ... E_{ik jk}
        if not word:
            for i in idx:
                acc[(i, i)] = acc.get((i, i), ZERO) + c
            continue
        alive = True
        for (g, h) in zip(word, word[1:]):
            if g[2] != h[1]:
                alive = False
                break
        if not alive:
            continue
        key = (word[0][1], word[-1][2])
        acc[key] = acc.get(key, ZERO) + c
    return {k: v for k, v in acc.items() if v}


def mat_mul(a: dict, b: dict) -> dict:
    acc: dict = {}
    by_row: dict = {}
    for (i, j), v in b.items():
        by_row.setdefault(i, []).append((j, v))
    for (i, m), v1 in a.items():
        for j, v2 in by_row.get(m, ()):
            acc[(i, j)] = acc.get((i, j), ZERO) + v1 * v2
    return {k: v for k, v in acc.items() if v}


def verify_image_commutativity(elements: list, gl_rule: GlRule) -> list:
    """Pairwise commutators vanish both in the enveloping algebra and in
    the defining matrix representation."""
    iset = gl_rule.index_set
    mats = [defining_rep(e, iset) for e in elements]
    details = []
    for a in range(len(elements)):
        for b in range(a + 1, len(elements)):
            alg_ok = commutator(elements[a], elements[b]).is_zero()
            m1 = mat_mul(mats[a], mats[b])
            m2 = mat_mul(mats[b], mats[a])
            details.append((f"pair ({a},{b}) algebra", alg_ok))
            details.append((f"pair ({a},{b}) matrices", m1 == m2))
    return details
