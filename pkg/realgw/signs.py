# -*- coding: utf-8 -*-
"""
Orientation comparisons as predicates over integer descriptors.

Every comparison returns a ``Comparison`` whose ``preserves`` is True when the
two orientations agree (the isomorphism respects them, the diagram commutes,
the homotopy classes are the same) and whose ``sign`` is +1 exactly then.
Genera may be negative: a disconnected domain has g - 1 = sum(g_i - 1).
"""
from collections import namedtuple
from itertools import combinations

from .utils import PreconditionError, binom2, check_int, get_type, parity

PROJECTION = 'projection'
CANONICAL = 'canonical'
LEMMA_VARIANTS = (PROJECTION, CANONICAL)

# moduli spaces oriented via the projection (E2) or canonical (E3) construction
E2 = 'e2'
E3 = 'e3'
SPIN = 'spin'

RELSPIN_E2 = 'relspin-e2'
RELSPIN_E3 = 'relspin-e3'
SPIN_E3 = 'spin-e3'

UNION = 'union'
DOUBLET = 'doublet'
CONJ_NODE = 'conj-node'
E_NODE = 'e-node'
RELSPIN = 'relspin'
FORGET_BOUNDARY = 'forget-boundary'

PLUS = 'plus'
MINUS = 'minus'


class Comparison(namedtuple('Comparison', ['preserves', 'condition'])):
    """Outcome of an orientation comparison; condition is a readable parity statement"""
    __slots__ = ()

    @property
    def sign(self):
        return 1 if self.preserves else -1

    @property
    def flips(self):
        return not self.preserves

    def to_json(self):
        return {'preserves': self.preserves, 'sign': self.sign, 'condition': self.condition}


def _even(value, condition):
    return Comparison(value % 2 == 0, condition)


def _always(preserves, condition):
    return Comparison(preserves, condition)


def _check_variant(variant, allowed):
    if variant not in allowed:
        raise ValueError('unsupport variant {0!r}, expected one of {1}'.format(variant, ', '.join(allowed)))
    return variant


def _check_rank(k):
    check_int(k, 'rank')
    if k < 1:
        raise ValueError('rank should be positive, got {0}'.format(k))
    return k


def _check_odd_dimension(n):
    check_int(n, 'n')
    if n < 1 or n % 2 == 0:
        raise PreconditionError('n odd', 'complex dimension n must be odd and positive, got {0}'.format(n))
    return n


def _check_even(value, name):
    check_int(value, name)
    if value % 2:
        raise PreconditionError('{0} even'.format(name), '{0} must be even, got {1}'.format(name, value))
    return value


def _ints(*values):
    for value in values:
        check_int(value, 'parameter')


def bundle_index(g, k, d):
    """Index (1-g)k + d of a rank k degree d bundle over a genus g surface"""
    _ints(g, d)
    return (1 - g) * _check_rank(k) + d


class RealBundleDescriptor(namedtuple('RealBundleDescriptor', ['genus', 'rank', 'degree', 'has_conjugation'])):
    """Integer shadow (g, rk, deg, conjugation lift exists) of a real bundle pair"""
    __slots__ = ()

    def __new__(cls, genus, rank, degree, has_conjugation=True):
        _ints(genus, degree)
        _check_rank(rank)
        return super(RealBundleDescriptor, cls).__new__(cls, genus, rank, degree, bool(has_conjugation))

    @property
    def index(self):
        return bundle_index(self.genus, self.rank, self.degree)

    def canonical_vs_projection(self):
        return cvc_parity(self.genus, self.rank, self.degree)

    def conjugate_pullback(self):
        return conj_pullback_parity(self.genus, self.rank, self.degree)


class ModuliDescriptor(namedtuple('ModuliDescriptor', ['g', 'ell', 'n', 'c1B', 'c1LB'])):
    """Integer shadow of a real map moduli problem: genus, conjugate pairs of
    marked points, odd complex dimension n, <c1(X), B> and optionally <c1(L), B>
    """
    __slots__ = ()

    def __new__(cls, g, ell, n, c1B, c1LB=None):
        check_int(g, 'g')
        check_int(ell, 'ell')
        if ell < 0:
            raise ValueError('ell should be nonnegative, got {0}'.format(ell))
        _check_odd_dimension(n)
        _check_even(c1B, 'c1B')
        if c1LB is not None:
            check_int(c1LB, 'c1LB')
        return super(ModuliDescriptor, cls).__new__(cls, g, ell, n, c1B, c1LB)


CIParity = namedtuple('CIParity', ['sum_parity_ok', 'eta_mod4_ok'])
OrientationEpsilons = namedtuple('OrientationEpsilons', ['eps_conv', 'eps_factor'])


def cvc_parity(g, k, d):
    """Canonical vs projection orientation on det of 2(L, phi) vs L + conj pullback:
    the isomorphism respects them iff ind(ind-1)/2 is even, ind = (1-g)k + d
    """
    ind = bundle_index(g, k, d)
    return _even(binom2(ind), 'ind(ind-1)/2 even with ind=(1-g)k+d={0}'.format(ind))


def conj_pullback_parity(g, k, d):
    """Conjugate pullback respects the complex orientations iff (1-g)k + d is even"""
    ind = bundle_index(g, k, d)
    return _even(ind, '(1-g)k+d={0} even'.format(ind))


def union_lemma(g1, g2, k, d1, d2, variant):
    """Disjoint union of two symmetric surfaces carrying bundles of rank k"""
    _check_variant(variant, LEMMA_VARIANTS)
    ind1, ind2 = bundle_index(g1, k, d1), bundle_index(g2, k, d2)
    if variant == PROJECTION:
        return _always(True, 'projection orientations always respected')
    return _even(ind1 * ind2, 'ind1*ind2={0}*{1} even'.format(ind1, ind2))


def doublet_lemma(g, k, d2, variant, has_conjugation=True):
    """Doublet of a genus g surface, second bundle of degree d2"""
    _check_variant(variant, LEMMA_VARIANTS)
    if variant == PROJECTION:
        ind = bundle_index(g, k, d2)
        return _even(ind, '(1-g)k+d2={0} even'.format(ind))
    if not has_conjugation:
        raise PreconditionError('has_conjugation', 'canonical doublet comparison needs a conjugation lift')
    _check_rank(k)
    return _always(True, 'canonical orientations always respected')


def conj_node_lemma(k, variant):
    """Conjugate pair of nodes"""
    _check_variant(variant, LEMMA_VARIANTS)
    if variant == PROJECTION:
        return _even(_check_rank(k), 'rk L={0} even'.format(k))
    _check_rank(k)
    return _always(True, 'canonical orientations always respected')


def e_node_lemma(g, k, d, variant):
    """Isolated real node (E-node)"""
    _check_variant(variant, LEMMA_VARIANTS)
    _ints(g, d)
    _check_rank(k)
    if variant == PROJECTION:
        return _even(k, 'rk L={0} even'.format(k))
    return _even(k * (g + d), 'k(g+d)={0} even'.format(k * (g + d)))


def _union_crl(variant, g1, g2, d1, d2):
    _ints(g1, g2, d1, d2)
    base = (g1 - 1) * (g2 - 1)
    if variant == PROJECTION:
        return _even(base, '(g1-1)(g2-1)={0} even'.format(base))
    twisted = (g1 - 1 + d1) * (g2 - 1 + d2)
    return _even(base + twisted, '(g1-1)(g2-1)+(g1-1+d1)(g2-1+d2)={0} even'.format(base + twisted))


def _doublet_crl(variant, g, d2):
    _ints(g, d2)
    if variant == PROJECTION:
        return _even(g - 1 + d2, 'g-1+d2={0} even'.format(g - 1 + d2))
    return _always(True, 'complex orientations always intertwined')


def _conj_node_crl(variant):
    if variant == PROJECTION:
        return _always(False, 'never commutes up to homotopy')
    return _always(True, 'always commutes')


def _e_node_crl(variant, g, d):
    _ints(g, d)
    if variant == PROJECTION:
        return _even(g - 1, 'g-1={0} even'.format(g - 1))
    return _even(d, 'd={0} even'.format(d))


_COROLLARIES = {
    UNION: _union_crl,
    DOUBLET: _doublet_crl,
    CONJ_NODE: _conj_node_crl,
    E_NODE: _e_node_crl,
}


def induced_corollaries(crl_id, variant, **params):
    """Orientations induced on determinant lines of real CR-operators
    :param crl_id: 'union' (g1, g2, d1, d2), 'doublet' (g, d2), 'conj-node' (), 'e-node' (g, d)
    :param variant: 'projection' or 'canonical'
    :raise ValueError: unknown corollary or variant
    :raise TypeError: missing or unexpected parameter
    """
    if crl_id not in _COROLLARIES:
        raise ValueError('unknown corollary: ' + str(crl_id))
    _check_variant(variant, LEMMA_VARIANTS)
    return _COROLLARIES[crl_id](variant, **params)


def relspin_comparison(degV, variant):
    """Orientations over (P^1, tau) from a relative spin structure (or spin
    structure) vs the real orientation, for a bundle pair of even degree
    """
    _check_variant(variant, (RELSPIN_E2, RELSPIN_E3, SPIN_E3))
    _check_even(degV, 'degV')
    if variant == RELSPIN_E2:
        return Comparison(degV % 4 == 0, 'deg V={0} in 4Z'.format(degV))
    if variant == RELSPIN_E3:
        return Comparison(degV % 8 in (0, 6), 'deg V={0} = 0 or -2 mod 8'.format(degV))
    if degV % 4:
        raise PreconditionError('degV in 4Z', 'spin comparison is stated only for deg V in 4Z, got {0}'.format(degV))
    return _always(True, 'spin and E3 orientations agree for deg V in 4Z')


def _union_prp(variant, n, g1, g2, c1B1, c1B2):
    _check_odd_dimension(n)
    _ints(g1, g2)
    _check_even(c1B1, 'c1B1')
    _check_even(c1B2, 'c1B2')
    base = (n - 1) // 2 * (g1 - 1) * (g2 - 1)
    if variant == E2:
        return _even(base, '(n-1)(g1-1)(g2-1)/2={0} even'.format(base))
    total = base + (g1 - 1 + c1B1 // 2) * (g2 - 1 + c1B2 // 2)
    return _even(total, '(n-1)(g1-1)(g2-1)/2+(g1-1+c1B1/2)(g2-1+c1B2/2)={0} even'.format(total))


def _doublet_prp(variant, g, s_minus, c1L_phiB=None):
    _ints(g, s_minus)
    if variant == E2:
        if c1L_phiB is None:
            raise TypeError("doublet proposition via e2 missing required parameter 'c1L_phiB'")
        check_int(c1L_phiB, 'c1L_phiB')
        return _even(c1L_phiB + s_minus, '<c1(L),phi_*B>+|S^-|={0} even'.format(c1L_phiB + s_minus))
    return _even(g - 1 + s_minus, 'g-1+|S^-|={0} even'.format(g - 1 + s_minus))


def _conj_node_prp(variant):
    if variant == E2:
        return _always(True, 'intrinsic and pullback orientations agree')
    return _always(False, 'intrinsic and pullback orientations are opposite')


def _e_node_prp(variant, g, c1B):
    check_int(g, 'g')
    _check_even(c1B, 'c1B')
    if variant == E2:
        return _always(False, 'intrinsic and pullback orientations are opposite')
    return _even(g + c1B // 2, 'g+c1B/2={0} even'.format(g + c1B // 2))


def _relspin_prp(variant, c1B, orientable_fixed_line=None):
    _check_even(c1B, 'c1B')
    if orientable_fixed_line is not None and variant != SPIN:
        raise ValueError('orientable_fixed_line applies only to the spin variant, got {0!r}'.format(variant))
    if variant == E2:
        return Comparison(c1B % 4 != 0, 'c1B={0} not in 4Z'.format(c1B))
    if variant == E3:
        return Comparison(c1B % 8 in (2, 4), 'c1B={0} = 2 or 4 mod 8'.format(c1B))
    if orientable_fixed_line is not None and not orientable_fixed_line:
        raise PreconditionError('orientable fixed-locus line bundle',
                                'spin comparison is stated only for an orientable fixed-locus line bundle')
    return _always(False, 'spin and E3 orientations are opposite')


def _forget_boundary_crl(variant, node_side):
    if node_side not in (PLUS, MINUS):
        raise ValueError('node_side must be plus or minus, got {0!r}'.format(node_side))
    return _always(node_side == PLUS, 'sign of the boundary diffeomorphism is {0}1'.format(
        '+' if node_side == PLUS else '-'))


_PROPOSITIONS = {
    UNION: _union_prp,
    DOUBLET: _doublet_prp,
    CONJ_NODE: _conj_node_prp,
    E_NODE: _e_node_prp,
    RELSPIN: _relspin_prp,
    FORGET_BOUNDARY: _forget_boundary_crl,
}


def moduli_propositions(prp_id, variant, **params):
    """Orientations of real map moduli spaces and their nodal strata
    :param prp_id: 'union' (n, g1, g2, c1B1, c1B2), 'doublet' (g, s_minus[, c1L_phiB]),
        'conj-node' (), 'e-node' (g, c1B), 'relspin' (c1B[, orientable_fixed_line under spin]),
        'forget-boundary' (node_side)
    :param variant: 'e2' or 'e3'; 'relspin' also takes 'spin'
    """
    if prp_id not in _PROPOSITIONS:
        raise ValueError('unknown proposition: ' + str(prp_id))
    _check_variant(variant, (E2, E3, SPIN) if prp_id == RELSPIN else (E2, E3))
    return _PROPOSITIONS[prp_id](variant, **params)


def virtual_dimension(m):
    """(1-g)(n-3) + 2 ell + c1B; even for every ModuliDescriptor"""
    if not isinstance(m, ModuliDescriptor):
        raise TypeError('expected ModuliDescriptor, not ' + get_type(m))
    return (1 - m.g) * (m.n - 3) + 2 * m.ell + m.c1B


def twist_exponent(g, fixed_components):
    """Parity of (g-1) + |sigma| for the final twist of the moduli orientation"""
    check_int(g, 'g')
    check_int(fixed_components, 'fixed_components')
    if fixed_components < 0:
        raise ValueError('fixed_components should be nonnegative')
    return parity(g - 1 + fixed_components)


def line_conjugation_exists(has_fixed_locus, g, half_degree):
    """Whether the orienting line bundle over a genus g symmetric surface with a
    real bundle pair of degree 2*half_degree lifts the involution by a conjugation
    """
    check_int(g, 'g')
    check_int(half_degree, 'half_degree')
    if g < 0:
        raise ValueError('genus should be nonnegative, got {0}'.format(g))
    return bool(has_fixed_locus) or (g + half_degree) % 2 == 1


def _check_multidegree(a):
    a = list(a)
    for a_i in a:
        check_int(a_i, 'a_i')
        if a_i < 1:
            raise ValueError('multidegree components should be positive, got {0}'.format(a_i))
    return a


def ci_parity_facts(k, a):
    """Parity facts for a complete intersection of multidegree a in (Z+)^k"""
    check_int(k, 'k')
    a = _check_multidegree(a)
    if len(a) != k:
        raise PreconditionError('a has k components', 'expected {0} components, got {1}'.format(k, len(a)))
    total = sum(a)
    odd = sum(1 for a_i in a if a_i % 2)
    return CIParity(sum_parity_ok=(total - k) % 2 == 0,
                    eta_mod4_ok=odd % 2 == 1 or (total - k) % 4 == 0)


def eta_ci_condition(m, a, with_conjugation=True):
    """Orientability condition for an eta_{2m}-real complete intersection:
    |a| = 2m mod 4 with a conjugation lift, mod 2 without one
    """
    check_int(m, 'm')
    total = sum(_check_multidegree(a))
    return (total - 2 * m) % (4 if with_conjugation else 2) == 0


def orienting_line_degree(n, a):
    """deg L = (n - |a|)/2 of the natural real orientation on X_{n;a}"""
    check_int(n, 'n')
    diff = n - sum(_check_multidegree(a))
    if diff % 2:
        raise PreconditionError('n - |a| even', 'n - |a| = {0} is odd'.format(diff))
    return diff // 2


def arss_condition(degL, m, m1):
    """Stabilization and associated relative spin orientations agree iff
    deg L - m m1 - C(m1, 2) is divisible by 4
    """
    _ints(degL, m, m1)
    if m < 1 or not 0 <= m1 <= m:
        raise PreconditionError('0 <= m1 <= m', 'need 0 <= m1 <= m with m >= 1, got m={0}, m1={1}'.format(m, m1))
    return (degL - m * m1 - binom2(m1)) % 4 == 0


def arss_cross_term(edge_degs):
    """Parity of sum_{i<j} (1 + (d_i - 1)(d_j - 1)) over the sphere components"""
    edge_degs = list(edge_degs)
    _ints(*edge_degs)
    return parity(sum(1 + (d_i - 1) * (d_j - 1) for d_i, d_j in combinations(edge_degs, 2)))


def arss_cross_term_eps(eps):
    """Parity of sum_{i<j} (e_i + e_j + e_i e_j) over w1 indicators e_i in {0, 1}"""
    eps = list(eps)
    for e in eps:
        if e not in (0, 1):
            raise ValueError('indicators must be 0 or 1, got {0!r}'.format(e))
    return parity(sum(e_i + e_j + e_i * e_j for e_i, e_j in combinations(eps, 2)))


def orientcomp_epsilons(g, c1B, n):
    """Exponents by which moduli orientations differ when switching
    the orienting construction (eps_conv) or the factor orientations (eps_factor)
    """
    check_int(g, 'g')
    _check_even(c1B, 'c1B')
    _check_odd_dimension(n)
    x = g + c1B // 2
    return OrientationEpsilons(eps_conv=parity(binom2(x)),
                               eps_factor=parity((n - 1) // 2 * binom2(g)))
