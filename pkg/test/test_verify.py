# -*- coding: utf-8 -*-
from unittest import TestCase

from realgw import verify
from realgw.verify import IdentityReport


class TestIdentities(TestCase):

    def assertHolds(self, report, minimum=1):
        self.assertEqual([], report.failures, report.identity_id)
        self.assertGreaterEqual(report.grid_size, minimum)
        self.assertTrue(report.holds)

    def test_check_binomial_parity(self):
        self.assertHolds(verify.check_binomial_parity([(1, 1), (2, 3)]), 2)
        self.assertHolds(verify.check_binomial_parity(), 169)

    def test_check_union_canonical_vs_cvc(self):
        self.assertHolds(verify.check_union_canonical_vs_cvc([(0, 0, 1, 0, 0), (1, 1, 1, 0, 0)]), 2)
        self.assertHolds(verify.check_union_canonical_vs_cvc(), 10 ** 4)

    def test_check_doublet_vs_cvc(self):
        self.assertHolds(verify.check_doublet_vs_cvc([(0, 0), (1, 0)]), 2)
        self.assertHolds(verify.check_doublet_vs_cvc())

    def test_check_relspin_mod8(self):
        self.assertHolds(verify.check_relspin_mod8([(4,), (0,)]), 2)
        self.assertHolds(verify.check_relspin_mod8(), 17)

    def test_check_union_crl_vs_lemma(self):
        self.assertHolds(verify.check_union_crl_vs_lemma([(0, 0, 0, 0), (2, 0, 1, 3)]), 2)
        self.assertHolds(verify.check_union_crl_vs_lemma())

    def test_check_enode_crl_vs_lemma(self):
        self.assertHolds(verify.check_enode_crl_vs_lemma([(1, 0), (2, 0)]), 2)
        self.assertHolds(verify.check_enode_crl_vs_lemma())

    def test_check_sin_vs_sinh(self):
        self.assertHolds(verify.check_sin_vs_sinh(), 7 * 6 * 11)
        self.assertEqual(7 * 6 * 3, verify.check_sin_vs_sinh(4).grid_size)

    def test_supplementary_identities(self):
        self.assertHolds(verify.check_arss_cross_term())
        self.assertHolds(verify.check_epsilon_gamma_forms())
        self.assertHolds(verify.check_epsilon_gamma_vanishes())
        self.assertHolds(verify.check_orientcomp_vs_cvc())
        self.assertHolds(verify.check_twist_additivity())
        self.assertHolds(verify.check_dimension_parity())

    def test_check_union_with_doublet(self):
        self.assertHolds(verify.check_union_with_doublet([(1, 0, 1, 0), (3, 2, -1, 4)]), 2)
        self.assertHolds(verify.check_union_with_doublet(), 5 * 10 * 5 * 9)

    def test_check_graph_congruence(self):
        self.assertHolds(verify.check_graph_congruence([(seed,) for seed in range(1, 101)]), 100)

    def test_failures_reported(self):
        report = verify._sweep('always-false', [(1,), (2,)], lambda x: x == 1)
        self.assertEqual([(2,)], report.failures)
        self.assertFalse(report.holds)
        self.assertEqual({'identity_id': 'always-false', 'grid_size': 2, 'failures': [[2]], 'holds': False},
                         report.to_json())

    def test_run_identity(self):
        report = verify.run_identity('relspin-mod8')
        self.assertIsInstance(report, IdentityReport)
        self.assertEqual(report, verify.run_identity('relspin-mod8'))
        self.assertRaises(ValueError, verify.run_identity, 'unknown')

    def test_run_all(self):
        reports = verify.run_all()
        self.assertEqual(list(verify.IDENTITIES), [r.identity_id for r in reports])
        for report in reports:
            self.assertHolds(report)
        core = ('binomial-parity', 'union-canonical-vs-cvc', 'doublet-vs-cvc', 'relspin-mod8',
                'union-crl-vs-lemma', 'enode-crl-vs-lemma')
        self.assertGreaterEqual(sum(r.grid_size for r in reports if r.identity_id in core), 10 ** 4)
