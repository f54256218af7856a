import random

import pytest

from bethe.certify import (expected_jacobian_rank, expected_poisson_rank,
                           verify_laplace_consistency, verify_poisson_jacobi,
                           verify_symbol_homomorphy)
from bethe.indices import IndexSet, parse_z_spec
from bethe.poisson import (CurrentPoint, PoissonContext, PoissonPoly,
                           bethe_poly, classical_det_poly, jacobian_rank,
                           matrix_rank, poisson_bracket, poisson_rank_at,
                           principal_nilpotent, restrict_to_slice,
                           upper_slice)
from bethe.rationals import Q


def _all_ok(rows):
    bad = [item for item, ok in rows if not ok]
    assert not bad, bad


def var(ctx, r, i, j):
    return PoissonPoly.variable(ctx, r, i, j)


def test_standard_bracket_at_level_one():
    ctx = PoissonContext("plain", IndexSet.plain(2), 1)
    assert poisson_bracket(var(ctx, 1, 1, 1), var(ctx, 1, 1, 2)) == \
        var(ctx, 1, 1, 2)
    f = var(ctx, 1, 1, 2) * var(ctx, 1, 2, 1)
    assert poisson_bracket(f, f).is_zero()


def test_truncation_window():
    # at M = 2 the bracket of two top-level coordinates keeps only the
    # r = 2 term of the double sum
    ctx = PoissonContext("plain", IndexSet.plain(2), 2)
    got = poisson_bracket(var(ctx, 2, 1, 1), var(ctx, 2, 1, 2))
    expect = (var(ctx, 1, 1, 1) * var(ctx, 2, 1, 2)
              - var(ctx, 2, 1, 1) * var(ctx, 1, 1, 2))
    assert got == expect


def test_twisted_reduction_to_fundamental_domain():
    iset = IndexSet.signed(2, "sp")
    ctx = PoissonContext("twisted", iset, 2)
    # y_11^(1) = -y_{-1,-1}^(1);   y_{1,-1}^(2) is forced to zero
    assert var(ctx, 1, 1, 1) == -var(ctx, 1, -1, -1)
    assert var(ctx, 2, 1, -1).is_zero()


def test_jacobi_plain_and_twisted():
    _all_ok(verify_poisson_jacobi(
        PoissonContext("plain", IndexSet.plain(3), 2), seed=1, samples=20))
    _all_ok(verify_poisson_jacobi(
        PoissonContext("twisted", IndexSet.signed(3, "so"), 2),
        seed=2, samples=20))


def test_bethe_poly_oracle_values():
    iset = IndexSet.plain(2)
    ctx = PoissonContext("plain", iset, 1)
    z = parse_z_spec("diag:1,2", iset)
    b1 = bethe_poly(1, z, ctx)
    assert b1[0] == PoissonPoly.constant(ctx, Q(3, 2))
    assert b1[1] == (var(ctx, 1, 1, 1) * 2 + var(ctx, 1, 2, 2)) * Q(1, 2)
    b2 = bethe_poly(2, z, ctx)
    assert b2[1] == var(ctx, 1, 1, 1) + var(ctx, 1, 2, 2)
    assert b2[2] == (var(ctx, 1, 1, 1) * var(ctx, 1, 2, 2)
                     - var(ctx, 1, 1, 2) * var(ctx, 1, 2, 1))


def test_family_is_involutive_and_top_series_central():
    iset = IndexSet.plain(2)
    ctx = PoissonContext("plain", iset, 2)
    z = parse_z_spec("diag:1,2", iset)
    fam = [p for k in (1, 2) for p in bethe_poly(k, z, ctx)]
    for a in fam:
        for b in fam:
            assert poisson_bracket(a, b).is_zero()
    for p in bethe_poly(2, z, ctx):
        for v in ctx.variables():
            assert poisson_bracket(p, PoissonPoly.variable(ctx, *v)).is_zero()


def test_twisted_parity_and_sign_symmetry():
    iset = IndexSet.signed(2, "sp")
    ctx = PoissonContext("twisted", iset, 2)
    z = parse_z_spec("diag:1", iset, "prime_skew")
    for k in (1, 2):
        for r, p in enumerate(bethe_poly(k, z, ctx)):
            if (iset.N - k + r) % 2 == 1:
                assert p.is_zero()


def test_symbol_homomorphy_seeded():
    _all_ok(verify_symbol_homomorphy(IndexSet.plain(2), 2, seed=9, pairs=15))


def test_laplace_consistency_small():
    iset = IndexSet.plain(2)
    z = parse_z_spec("diag:1,2", iset)
    _all_ok(verify_laplace_consistency(iset, z, 1))
    sp = IndexSet.signed(2, "sp")
    zs = parse_z_spec("diag:1", sp, "prime_skew")
    _all_ok(verify_laplace_consistency(sp, zs, 1, D=2))


def test_current_point_symmetry_is_validated():
    iset = IndexSet.signed(2, "sp")
    ctx = PoissonContext("twisted", iset, 2)
    with pytest.raises(ValueError):
        CurrentPoint(ctx, {(2, 1, -1): Q(1)})  # forced-zero coordinate


def test_matrix_rank_oracle():
    rows = [[Q(1), Q(2)], [Q(2), Q(4)], [Q(0), Q(1)]]
    assert matrix_rank(rows) == 2
    assert matrix_rank([[Q(0), Q(0)]]) == 0


def test_jacobian_rank_of_constants_is_zero():
    ctx = PoissonContext("plain", IndexSet.plain(2), 1)
    consts = [PoissonPoly.constant(ctx, Q(5))]
    vals = {v: Q(1) for v in ctx.variables()}
    assert jacobian_rank(consts, ctx.variables(), vals) == 0


def test_poisson_rank_zero_point_and_ceiling():
    iset = IndexSet.plain(2)
    ctx = PoissonContext("plain", iset, 2)
    assert poisson_rank_at(CurrentPoint.zero(ctx), ctx) == 0
    ceiling = expected_poisson_rank(ctx)
    rng = random.Random(3)
    for seed in range(5):
        pt = CurrentPoint.random(ctx, seed=rng.randint(0, 10 ** 6))
        assert poisson_rank_at(pt, ctx) <= ceiling


def test_slice_restriction_values():
    iset = IndexSet.plain(3)
    ctx = PoissonContext("plain", iset, 2)
    sl = upper_slice(ctx)
    fixed = sl.fixed_assignments()
    assert fixed[(2, 2, 1)] == 1      # subdiagonal at top level
    assert fixed[(1, 3, 1)] == 0      # below the subdiagonal
    p = PoissonPoly.variable(ctx, 2, 2, 1) * PoissonPoly.variable(ctx, 2, 1, 1)
    r = restrict_to_slice(p, sl)
    assert r == PoissonPoly.variable(ctx, 2, 1, 1)


def test_principal_nilpotents_match_the_display():
    assert principal_nilpotent(IndexSet.signed(2, "sp")) == {(1, -1): 1}
    so3 = principal_nilpotent(IndexSet.signed(3, "so"))
    assert so3 == {(1, 0): 1, (0, -1): -1}
    so4 = principal_nilpotent(IndexSet.signed(4, "so"), variant="lemma45")
    assert so4 == {(2, 1): 1, (-1, -2): -1, (2, -1): 1, (1, -2): -1}


def test_classical_det_poly_shape():
    iset = IndexSet.signed(4, "so")
    z = parse_z_spec("diag:1,2", iset, "prime_skew")
    coeffs = classical_det_poly(z, iset)
    assert isinstance(coeffs, dict) and coeffs
