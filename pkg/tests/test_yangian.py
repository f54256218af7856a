from bethe.algebra import YangianRule, commutator
from bethe.indices import IndexSet, parse_z_spec
from bethe.rationals import ONE, Q
from bethe.yangian import (bethe_series, bethe_series_perm,
                           bethe_series_tensor, hat_bethe_series,
                           quantum_determinant, t_entry_series,
                           verify_bethe_commutativity, verify_centrality,
                           verify_fusion, verify_hat_identity, verify_rtt)


def _all_ok(rows):
    bad = [item for item, ok in rows if not ok]
    assert not bad, bad


def test_generating_series_layout():
    rule = YangianRule(IndexSet.plain(2))
    s = t_entry_series(rule, 1, 2, 3)
    assert s.coeffs[0].is_zero()
    assert s.coeffs[2] == rule.element(1, 2, 2)
    d = t_entry_series(rule, 1, 1, 3)
    assert d.coeffs[0] == rule.one()


def test_rtt_residuals_vanish():
    _all_ok(verify_rtt(YangianRule(IndexSet.plain(2)), 2))


def test_rtt_negative_control():
    class Corrupted(YangianRule):
        def raw_bracket(self, a, b):
            out = YangianRule.raw_bracket(self, a, b)
            # flip the sign of every correction term
            return [(-c, w) for c, w in out]

    rows = verify_rtt(Corrupted(IndexSet.plain(2)), 2)
    assert any(not ok for _, ok in rows)


def test_fusion():
    rule = YangianRule(IndexSet.plain(2))
    _all_ok(verify_fusion(rule, 2, 2))


def test_quantum_determinant_low_coefficients():
    rule = YangianRule(IndexSet.plain(2))
    qd = quantum_determinant(rule, 3)
    t = lambda i, j, r: rule.element(i, j, r)
    assert qd.coeffs[0] == rule.one()
    assert qd.coeffs[1] == t(1, 1, 1) + t(2, 2, 1)
    # independent 2x2 oracle with the package's site shifts u-1, u-2:
    # t11(u-1) t22(u-2) - t21(u-1) t12(u-2)
    s = lambda i, j: t_entry_series(rule, i, j, 3)
    oracle = (s(1, 1).substitute_affine(1, -1) * s(2, 2).substitute_affine(1, -2)
              - s(2, 1).substitute_affine(1, -1) * s(1, 2).substitute_affine(1, -2))
    assert qd == oracle


def test_centrality_small():
    _all_ok(verify_centrality(YangianRule(IndexSet.plain(2)), 2, 2))


def test_dual_path_constructions_agree():
    iset = IndexSet.plain(2)
    rule = YangianRule(iset)
    z = parse_z_spec("diag:1,2", iset)
    for k in (1, 2):
        a = bethe_series_perm(k, z, rule, 2)
        b = bethe_series_tensor(k, z, rule, 2)
        assert a == b


def test_bethe_constant_terms():
    # u^0 coefficient of B_k is e_{N-k}(z) / binomial(N, k)
    iset = IndexSet.plain(2)
    rule = YangianRule(iset)
    z = parse_z_spec("diag:1,2", iset)
    b1 = bethe_series(1, z, rule, 1)
    assert b1.coeffs[0] == rule.one() * Q(3, 2)
    b2 = bethe_series(2, z, rule, 1)
    assert b2.coeffs[0] == rule.one()


def test_commutativity_small_budget():
    iset = IndexSet.plain(2)
    z = parse_z_spec("diag:1,2", iset)
    _all_ok(verify_bethe_commutativity(z, YangianRule(iset), budget=3))


def test_hat_identity_scalar_is_reciprocal_binomial():
    iset = IndexSet.plain(2)
    z = parse_z_spec("diag:1,2", iset)
    rows = verify_hat_identity(z, YangianRule(iset), 3)
    _all_ok(rows)
    assert "scalar 1/2" in rows[0][0]


def test_hat_series_starts_at_elementary_symmetric():
    iset = IndexSet.plain(2)
    rule = YangianRule(iset)
    z = parse_z_spec("diag:1,2", iset)
    h1 = hat_bethe_series(1, z, rule, 1)
    assert h1.coeffs[0] == rule.one() * Q(3)  # e_1(z) = 1 + 2
