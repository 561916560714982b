# -*- coding: utf-8 -*-
import random
from unittest import TestCase

from hypothesis import given
from hypothesis import strategies as st

from realgw import PreconditionError
from realgw.signs import (
    CANONICAL,
    CONJ_NODE,
    DOUBLET,
    E2,
    E3,
    E_NODE,
    FORGET_BOUNDARY,
    PROJECTION,
    RELSPIN,
    RELSPIN_E2,
    RELSPIN_E3,
    SPIN,
    SPIN_E3,
    UNION,
    Comparison,
    ModuliDescriptor,
    RealBundleDescriptor,
    arss_condition,
    arss_cross_term,
    arss_cross_term_eps,
    ci_parity_facts,
    conj_node_lemma,
    conj_pullback_parity,
    cvc_parity,
    doublet_lemma,
    e_node_lemma,
    eta_ci_condition,
    induced_corollaries,
    line_conjugation_exists,
    moduli_propositions,
    orientcomp_epsilons,
    orienting_line_degree,
    relspin_comparison,
    twist_exponent,
    union_lemma,
    virtual_dimension,
)

genera = st.integers(-6, 10)
ranks = st.integers(1, 6)
degrees = st.integers(-20, 20)


class TestComparison(TestCase):

    def test_sign(self):
        self.assertEqual(1, Comparison(True, '').sign)
        self.assertEqual(-1, Comparison(False, '').sign)
        self.assertTrue(Comparison(False, '').flips)
        self.assertEqual({'preserves': True, 'sign': 1, 'condition': 'c'}, Comparison(True, 'c').to_json())


class TestBundleLemmas(TestCase):

    def test_cvc_parity(self):
        self.assertTrue(cvc_parity(0, 1, 0).preserves)
        self.assertTrue(cvc_parity(0, 1, 1).flips)
        self.assertTrue(cvc_parity(1, 2, 3).flips)
        self.assertRaises(ValueError, cvc_parity, 0, 0, 0)
        self.assertRaises(TypeError, cvc_parity, 0, 1, '1')

    def test_conj_pullback_parity(self):
        self.assertTrue(conj_pullback_parity(0, 1, 0).flips)
        self.assertTrue(conj_pullback_parity(1, 1, 0).preserves)
        self.assertTrue(conj_pullback_parity(0, 2, 0).preserves)

    def test_real_bundle_descriptor(self):
        V = RealBundleDescriptor(1, 2, 3)
        self.assertEqual(3, V.index)
        self.assertTrue(V.canonical_vs_projection().flips)
        self.assertTrue(V.conjugate_pullback().flips)
        self.assertTrue(V.has_conjugation)
        self.assertRaises(ValueError, RealBundleDescriptor, 0, 0, 0)

    def test_union_lemma(self):
        self.assertTrue(union_lemma(0, 0, 1, 0, 0, CANONICAL).flips)
        self.assertTrue(union_lemma(1, 0, 1, 0, 0, CANONICAL).preserves)
        self.assertRaises(ValueError, union_lemma, 0, 0, 1, 0, 0, 'other')

    @given(genera, genera, ranks, degrees, degrees)
    def test_union_lemma_projection_symmetric(self, g1, g2, k, d1, d2):
        self.assertTrue(union_lemma(g1, g2, k, d1, d2, PROJECTION).preserves)
        self.assertEqual(union_lemma(g1, g2, k, d1, d2, CANONICAL).preserves,
                         union_lemma(g2, g1, k, d2, d1, CANONICAL).preserves)

    def test_doublet_lemma(self):
        self.assertTrue(doublet_lemma(1, 1, 0, PROJECTION).preserves)
        self.assertTrue(doublet_lemma(0, 1, 0, PROJECTION).flips)
        self.assertTrue(doublet_lemma(0, 3, 7, CANONICAL).preserves)
        self.assertRaises(PreconditionError, doublet_lemma, 0, 1, 0, CANONICAL, False)

    def test_conj_node_lemma(self):
        self.assertTrue(conj_node_lemma(1, PROJECTION).flips)
        self.assertTrue(conj_node_lemma(2, PROJECTION).preserves)
        self.assertTrue(conj_node_lemma(3, CANONICAL).preserves)

    def test_e_node_lemma(self):
        self.assertTrue(e_node_lemma(5, 2, -3, PROJECTION).preserves)
        self.assertTrue(e_node_lemma(1, 1, 1, CANONICAL).preserves)
        self.assertTrue(e_node_lemma(1, 1, 0, CANONICAL).flips)

    @given(genera, ranks, degrees)
    def test_unconditional_clauses(self, g, k, d):
        self.assertTrue(doublet_lemma(g, k, d, CANONICAL).preserves)
        self.assertTrue(conj_node_lemma(k, CANONICAL).preserves)
        self.assertEqual(conj_node_lemma(k, PROJECTION).preserves, e_node_lemma(g, k, d, PROJECTION).preserves)


class TestCorollaries(TestCase):

    def test_induced_corollaries(self):
        self.assertTrue(induced_corollaries(UNION, PROJECTION, g1=1, g2=5, d1=0, d2=0).preserves)
        self.assertTrue(induced_corollaries(CONJ_NODE, PROJECTION).flips)
        self.assertTrue(induced_corollaries(CONJ_NODE, CANONICAL).preserves)
        self.assertTrue(induced_corollaries(E_NODE, CANONICAL, g=0, d=2).preserves)
        self.assertTrue(induced_corollaries(E_NODE, PROJECTION, g=2, d=0).flips)
        self.assertTrue(induced_corollaries(DOUBLET, PROJECTION, g=0, d2=0).flips)
        self.assertTrue(induced_corollaries(DOUBLET, CANONICAL, g=0, d2=0).preserves)
        self.assertTrue(induced_corollaries(UNION, CANONICAL, g1=0, g2=0, d1=1, d2=0).flips)

    def test_induced_corollaries_errors(self):
        self.assertRaises(ValueError, induced_corollaries, 'unknown', PROJECTION)
        self.assertRaises(ValueError, induced_corollaries, UNION, E2, g1=0, g2=0, d1=0, d2=0)
        self.assertRaises(TypeError, induced_corollaries, E_NODE, PROJECTION, g=0)

    def test_relspin_comparison(self):
        table = {0: (True, True), 2: (False, False), 4: (True, False), 6: (False, True), 8: (True, True)}
        for degV, (e2, e3) in table.items():
            self.assertEqual(e2, relspin_comparison(degV, RELSPIN_E2).preserves, degV)
            self.assertEqual(e3, relspin_comparison(degV, RELSPIN_E3).preserves, degV)
        self.assertTrue(relspin_comparison(4, SPIN_E3).preserves)
        self.assertRaises(PreconditionError, relspin_comparison, 2, SPIN_E3)
        self.assertRaises(PreconditionError, relspin_comparison, 3, RELSPIN_E2)

    @given(st.integers(-40, 40).map(lambda x: 2 * x))
    def test_relspin_periodicity(self, degV):
        self.assertEqual(relspin_comparison(degV, RELSPIN_E3).preserves,
                         relspin_comparison(degV + 8, RELSPIN_E3).preserves)
        self.assertEqual(relspin_comparison(degV, RELSPIN_E2).preserves,
                         relspin_comparison(degV + 4, RELSPIN_E2).preserves)


class TestPropositions(TestCase):

    def test_union(self):
        self.assertTrue(moduli_propositions(UNION, E2, n=3, g1=0, g2=0, c1B1=0, c1B2=0).flips)
        self.assertTrue(moduli_propositions(UNION, E3, n=3, g1=0, g2=0, c1B1=2, c1B2=0).flips)
        self.assertTrue(moduli_propositions(UNION, E3, n=3, g1=0, g2=0, c1B1=0, c1B2=0).preserves)
        self.assertRaises(PreconditionError, moduli_propositions, UNION, E2, n=4, g1=0, g2=0, c1B1=0, c1B2=0)

    @given(genera, genera, st.integers(-5, 5).map(lambda x: 2 * x), st.integers(-5, 5).map(lambda x: 2 * x))
    def test_union_symmetric(self, g1, g2, c1, c2):
        for variant in (E2, E3):
            self.assertEqual(
                moduli_propositions(UNION, variant, n=5, g1=g1, g2=g2, c1B1=c1, c1B2=c2).preserves,
                moduli_propositions(UNION, variant, n=5, g1=g2, g2=g1, c1B1=c2, c1B2=c1).preserves)

    def test_doublet(self):
        self.assertTrue(moduli_propositions(DOUBLET, E2, g=0, s_minus=1, c1L_phiB=1).preserves)
        self.assertTrue(moduli_propositions(DOUBLET, E3, g=0, s_minus=0).flips)
        self.assertRaises(TypeError, moduli_propositions, DOUBLET, E2, g=0, s_minus=1)

    def test_nodes(self):
        self.assertTrue(moduli_propositions(CONJ_NODE, E2).preserves)
        self.assertTrue(moduli_propositions(CONJ_NODE, E3).flips)
        self.assertTrue(moduli_propositions(E_NODE, E2, g=3, c1B=0).flips)
        self.assertTrue(moduli_propositions(E_NODE, E3, g=1, c1B=2).preserves)
        self.assertTrue(moduli_propositions(E_NODE, E3, g=1, c1B=0).flips)

    def test_relspin(self):
        self.assertTrue(moduli_propositions(RELSPIN, E2, c1B=4).flips)
        self.assertTrue(moduli_propositions(RELSPIN, E2, c1B=2).preserves)
        self.assertTrue(moduli_propositions(RELSPIN, E3, c1B=12).preserves)
        self.assertTrue(moduli_propositions(RELSPIN, E3, c1B=6).flips)
        self.assertTrue(moduli_propositions(RELSPIN, SPIN, c1B=0).flips)
        self.assertRaises(PreconditionError, moduli_propositions, RELSPIN, SPIN, c1B=0, orientable_fixed_line=False)
        self.assertTrue(moduli_propositions(RELSPIN, SPIN, c1B=0, orientable_fixed_line=True).flips)
        self.assertRaises(ValueError, moduli_propositions, RELSPIN, E2, c1B=0, orientable_fixed_line=False)
        self.assertRaises(ValueError, moduli_propositions, RELSPIN, E3, c1B=2, orientable_fixed_line=True)
        self.assertRaises(ValueError, moduli_propositions, UNION, SPIN, n=3, g1=0, g2=0, c1B1=0, c1B2=0)

    def test_forget_boundary(self):
        self.assertEqual(-1, moduli_propositions(FORGET_BOUNDARY, E2, node_side='minus').sign)
        self.assertEqual(1, moduli_propositions(FORGET_BOUNDARY, E3, node_side='plus').sign)
        self.assertRaises(ValueError, moduli_propositions, FORGET_BOUNDARY, E2, node_side='left')
        self.assertRaises(ValueError, moduli_propositions, 'unknown', E2)


class TestModuliFacts(TestCase):

    def test_virtual_dimension(self):
        self.assertEqual(6, virtual_dimension(ModuliDescriptor(0, 1, 3, 4)))
        self.assertEqual(0, virtual_dimension(ModuliDescriptor(1, 0, 3, 0)))
        self.assertEqual(4, virtual_dimension(ModuliDescriptor(0, 0, 5, 2)))
        self.assertRaises(TypeError, virtual_dimension, (0, 1, 3, 4))

    def test_moduli_descriptor(self):
        self.assertRaises(PreconditionError, ModuliDescriptor, 0, 0, 4, 0)
        self.assertRaises(PreconditionError, ModuliDescriptor, 0, 0, 3, 1)
        self.assertRaises(ValueError, ModuliDescriptor, 0, -1, 3, 0)

    def test_dimension_even(self):
        rng = random.Random(20)
        for _ in range(10 ** 4):
            m = ModuliDescriptor(rng.randint(-50, 50), rng.randint(0, 50),
                                 2 * rng.randint(0, 30) + 1, 2 * rng.randint(-50, 50))
            self.assertEqual(0, virtual_dimension(m) % 2, m)

    def test_twist_exponent(self):
        self.assertEqual(0, twist_exponent(1, 0))
        self.assertEqual(0, twist_exponent(0, 1))
        for g in range(-3, 6):
            self.assertEqual(0, twist_exponent(2 * g - 1, 0))
        self.assertRaises(ValueError, twist_exponent, 0, -1)

    def test_line_conjugation_exists(self):
        self.assertTrue(line_conjugation_exists(True, 2, 0))
        self.assertFalse(line_conjugation_exists(False, 2, 0))
        self.assertTrue(line_conjugation_exists(False, 1, 0))

    def test_ci_parity_facts(self):
        self.assertTrue(ci_parity_facts(1, [5]).sum_parity_ok)
        self.assertTrue(ci_parity_facts(2, [3, 3]).eta_mod4_ok)
        self.assertFalse(ci_parity_facts(1, [2]).sum_parity_ok)
        self.assertFalse(ci_parity_facts(2, [2, 2]).eta_mod4_ok)
        self.assertRaises(PreconditionError, ci_parity_facts, 2, [5])

    def test_eta_ci_condition(self):
        self.assertTrue(eta_ci_condition(1, [3, 3]))
        self.assertFalse(eta_ci_condition(1, [4]))
        self.assertTrue(eta_ci_condition(1, [4], with_conjugation=False))

    def test_orienting_line_degree(self):
        self.assertEqual(0, orienting_line_degree(5, [5]))
        self.assertEqual(1, orienting_line_degree(6, [2, 2]))
        self.assertRaises(PreconditionError, orienting_line_degree, 5, [4])

    def test_arss_condition(self):
        self.assertTrue(arss_condition(0, 1, 0))
        self.assertFalse(arss_condition(3, 2, 1))
        self.assertTrue(arss_condition(4, 3, 0))
        self.assertRaises(PreconditionError, arss_condition, 0, 1, 2)

    def test_arss_cross_term(self):
        self.assertEqual(0, arss_cross_term([7]))
        self.assertEqual(0, arss_cross_term([0, 0]))
        self.assertEqual(1, arss_cross_term([0, 1]))
        self.assertEqual(1, arss_cross_term_eps([0, 1]))
        self.assertRaises(ValueError, arss_cross_term_eps, [2])

    def test_orientcomp_epsilons(self):
        self.assertEqual((0, 0), orientcomp_epsilons(0, 0, 3))
        self.assertEqual(1, orientcomp_epsilons(2, 0, 3).eps_conv)
        self.assertEqual(0, orientcomp_epsilons(2, 0, 5).eps_factor)
        self.assertEqual(1, orientcomp_epsilons(2, 0, 3).eps_factor)
