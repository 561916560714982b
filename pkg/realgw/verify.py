# -*- coding: utf-8 -*-
"""
Derivation chains between the sign statements, checked as integer identities
over parameter grids. Each side of an identity is computed by the public
predicates in ``signs``, ``graphs`` and ``multicover``; no side is obtained by
rewriting the other.
"""
import logging
from collections import OrderedDict, namedtuple
from itertools import product

from . import graphs, signs
from .multicover import TransformConvention, multicover_coefficient
from .series import PowerSeries
from .utils import binom2, parity

logger = logging.getLogger(__name__)

GENERA = range(-3, 7)
RANKS = range(1, 5)
DEGREES = range(-8, 9)
EVEN_DEGREES = range(-16, 17, 2)
BINOMIAL_RANGE = range(-6, 7)
ODD_DIMENSIONS = range(1, 10, 2)
FIXED_COMPONENTS = range(0, 5)
SIN_H = range(0, 7)
SIN_C1B = (-4, -2, 0, 2, 4, 8)
SIN_ORDER = 20
GRAPH_SEEDS = range(1, 1001)


class IdentityReport(namedtuple('IdentityReport', ['identity_id', 'grid_size', 'failures'])):
    """Outcome of one identity sweep; the identity holds iff failures is empty"""
    __slots__ = ()

    @property
    def holds(self):
        return not self.failures

    def to_json(self):
        return {
            'identity_id': self.identity_id,
            'grid_size': self.grid_size,
            'failures': [list(f) if isinstance(f, tuple) else f for f in self.failures],
            'holds': self.holds,
        }


REPORT_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'IdentityReport',
    'type': 'object',
    'required': ['identity_id', 'grid_size', 'failures', 'holds'],
    'properties': {
        'identity_id': {'type': 'string'},
        'grid_size': {'type': 'integer', 'minimum': 0},
        'failures': {'type': 'array', 'items': {'type': ['array', 'integer']}},
        'holds': {'type': 'boolean'},
    },
}


def _sweep(identity_id, grid, predicate):
    size = 0
    failures = []
    for params in grid:
        size += 1
        if not predicate(*params):
            failures.append(params)
    logger.debug('%s: %d tuples, %d failures', identity_id, size, len(failures))
    return IdentityReport(identity_id, size, failures)


def check_binomial_parity(grid=None):
    """C(a+b, 2) = C(a, 2) + C(b, 2) + ab mod 2 over pairs (a, b)"""
    grid = product(BINOMIAL_RANGE, BINOMIAL_RANGE) if grid is None else grid
    return _sweep('binomial-parity', grid, lambda a, b:
                  parity(binom2(a + b)) == parity(binom2(a) + binom2(b) + a * b))


def _union_canonical_vs_cvc(g1, g2, k, d1, d2):
    lemma = signs.union_lemma(g1, g2, k, d1, d2, signs.CANONICAL)
    combined = (signs.cvc_parity(g1 + g2 - 1, k, d1 + d2).flips
                ^ signs.cvc_parity(g1, k, d1).flips
                ^ signs.cvc_parity(g2, k, d2).flips)
    return lemma.flips == combined


def check_union_canonical_vs_cvc(grid=None):
    """Canonical union comparison against the canonical-vs-projection parity
    of the union and of its two pieces, over (g1, g2, k, d1, d2)
    """
    grid = product(GENERA, GENERA, RANKS, DEGREES, DEGREES) if grid is None else grid
    return _sweep('union-canonical-vs-cvc', grid, _union_canonical_vs_cvc)


def _doublet_vs_cvc(g, d):
    lemma = signs.doublet_lemma(g, 1, d, signs.PROJECTION)
    return lemma.flips == signs.cvc_parity(2 * g - 1, 1, 2 * d).flips


def check_doublet_vs_cvc(grid=None):
    """Projection doublet comparison for a line bundle of degree d on both
    halves against the canonical-vs-projection parity of the doublet, over (g, d)
    """
    grid = product(GENERA, DEGREES) if grid is None else grid
    return _sweep('doublet-vs-cvc', grid, _doublet_vs_cvc)


def _relspin_mod8(degV):
    e2 = signs.relspin_comparison(degV, signs.RELSPIN_E2)
    e3 = signs.relspin_comparison(degV, signs.RELSPIN_E3)
    return e2.preserves == (e3.preserves ^ signs.cvc_parity(0, 1, -degV // 2).flips)


def check_relspin_mod8(grid=None):
    """E2 and E3 relative spin comparisons differ by the canonical-vs-projection
    parity of the line bundle of degree -degV/2 over P^1, over even degV
    """
    grid = ((v,) for v in EVEN_DEGREES) if grid is None else grid
    return _sweep('relspin-mod8', grid, _relspin_mod8)


def _union_crl_vs_lemma(g1, g2, d1, d2):
    trivial = signs.union_lemma(g1, g2, 1, 0, 0, signs.CANONICAL).flips
    projection = signs.induced_corollaries(signs.UNION, signs.PROJECTION, g1=g1, g2=g2, d1=d1, d2=d2)
    canonical = signs.induced_corollaries(signs.UNION, signs.CANONICAL, g1=g1, g2=g2, d1=d1, d2=d2)
    via_projection = trivial ^ signs.union_lemma(g1, g2, 1, -d1, -d2, signs.PROJECTION).flips
    via_canonical = trivial ^ signs.union_lemma(g1, g2, 1, -d1, -d2, signs.CANONICAL).flips
    return projection.flips == via_projection and canonical.flips == via_canonical


def check_union_crl_vs_lemma(grid=None):
    """Union corollaries as the lemma at the trivial line bundle combined with
    the lemma at degrees (-d1, -d2), over (g1, g2, d1, d2)
    """
    grid = product(GENERA, GENERA, DEGREES, DEGREES) if grid is None else grid
    return _sweep('union-crl-vs-lemma', grid, _union_crl_vs_lemma)


def _enode_crl_vs_lemma(g, d):
    trivial = signs.e_node_lemma(g, 1, 0, signs.CANONICAL).flips
    projection = signs.induced_corollaries(signs.E_NODE, signs.PROJECTION, g=g, d=d)
    canonical = signs.induced_corollaries(signs.E_NODE, signs.CANONICAL, g=g, d=d)
    via_projection = signs.e_node_lemma(g, 1, d, signs.PROJECTION).flips ^ trivial
    via_canonical = trivial ^ signs.e_node_lemma(g, 1, -d, signs.CANONICAL).flips
    return projection.flips == via_projection and canonical.flips == via_canonical


def check_enode_crl_vs_lemma(grid=None):
    """E-node corollaries against the E-node lemma, over (g, d)"""
    grid = product(GENERA, DEGREES) if grid is None else grid
    return _sweep('enode-crl-vs-lemma', grid, _enode_crl_vs_lemma)


def _sin_vs_sinh(h, c1B, g):
    sin = multicover_coefficient(h, c1B, g, TransformConvention.SIN)
    sinh = multicover_coefficient(h, c1B, g, TransformConvention.SINH)
    return sin == (-1) ** g * sinh


def check_sin_vs_sinh(order=SIN_ORDER):
    """sin coefficients are the sinh coefficients with sign (-1)^g, for t^{2g}
    up to order (capped by the series truncation)
    """
    top = min(order, PowerSeries.default_order()) // 2
    grid = product(SIN_H, SIN_C1B, range(top + 1))
    return _sweep('sin-vs-sinh', grid, _sin_vs_sinh)


def _arss_cross_term(*degrees):
    return signs.arss_cross_term(degrees) == signs.arss_cross_term_eps([d % 4 for d in degrees])


def check_arss_cross_term(grid=None):
    """Cross-term congruence on sphere components whose degrees reduce mod 4
    to the w1 indicators, over degree tuples of length up to three
    """
    if grid is None:
        degrees = [d for d in DEGREES if d % 4 in (0, 1)]
        grid = (t for length in range(4) for t in product(degrees, repeat=length))
    return _sweep('arss-cross-term', grid, _arss_cross_term)


def _sample_graph(n, abs_a, k, real_edges):
    a = [1] * (k - 1) + [abs_a - (k - 1)] if k else []
    flags = [graphs.FlagDecoration()] * real_edges
    vertex = graphs.GraphVertex(0, 0, 1, flags)
    edges = [graphs.GraphEdge(i, graphs.REAL, 1, (0, 0)) for i in range(real_edges)]
    return graphs.DecoratedGraph([vertex], edges, n, a)


def _graph_grid(step):
    for n, k in product(range(1, 10), range(0, 4)):
        if (n - k) % 2:
            continue
        sums = [0] if k == 0 else range(k, k + 9, step)
        for abs_a, r in product(sums, range(0, 6)):
            yield n, abs_a, k, r


def _epsilon_gamma_forms(n, abs_a, k, r):
    G = _sample_graph(n, abs_a, k, r)
    split = graphs.projection_orientation_exponent(G) ^ parity((n - 2 - abs_a) // 2 * binom2(r))
    return split == graphs.epsilon_gamma(G)


def check_epsilon_gamma_forms(grid=None):
    """The projection exponent plus the multidegree term gives the
    disjoint-union exponent, over (n, |a|, k, |E_R|) with |a| = k mod 2
    """
    grid = _graph_grid(2) if grid is None else grid
    return _sweep('epsilon-gamma-forms', grid, _epsilon_gamma_forms)


def check_epsilon_gamma_vanishes(grid=None):
    """The disjoint-union exponent is zero when |a| = k mod 4"""
    grid = _graph_grid(4) if grid is None else grid
    return _sweep('epsilon-gamma-vanishes', grid,
                  lambda n, abs_a, k, r: graphs.epsilon_gamma(_sample_graph(n, abs_a, k, r)) == 0)


def _orientcomp_vs_cvc(g, c1B, n):
    eps = signs.orientcomp_epsilons(g, c1B, n)
    conv = int(signs.cvc_parity(g, 1, -c1B // 2).flips)
    factor = parity((n - 1) // 2 * int(signs.cvc_parity(g, 1, 0).flips))
    return eps.eps_conv == conv and eps.eps_factor == factor


def check_orientcomp_vs_cvc(grid=None):
    """Orientation-convention exponents against the rank one canonical-vs-projection
    parity, over (g, c1B, n)
    """
    if grid is None:
        grid = product(GENERA, [d for d in DEGREES if d % 2 == 0], ODD_DIMENSIONS)
    return _sweep('orientcomp-vs-cvc', grid, _orientcomp_vs_cvc)


def _twist_additivity(g1, s1, g2, s2):
    union = signs.twist_exponent(g1 + g2 - 1, s1 + s2)
    return union == signs.twist_exponent(g1, s1) ^ signs.twist_exponent(g2, s2)


def check_twist_additivity(grid=None):
    """Twist exponent of a disjoint union is the sum of those of its pieces"""
    grid = product(GENERA, FIXED_COMPONENTS, GENERA, FIXED_COMPONENTS) if grid is None else grid
    return _sweep('twist-additivity', grid, _twist_additivity)


def check_dimension_parity(grid=None):
    """Virtual dimension is even, over (g, ell, n, c1B) with n odd and c1B even"""
    if grid is None:
        grid = product(GENERA, range(0, 4), ODD_DIMENSIONS, [d for d in DEGREES if d % 2 == 0])
    return _sweep('dimension-parity', grid, lambda g, ell, n, c1B:
                  signs.virtual_dimension(signs.ModuliDescriptor(g, ell, n, c1B)) % 2 == 0)


def _union_with_doublet(n, g1, g2, c1B1):
    return all(signs.moduli_propositions(signs.UNION, variant, n=n, g1=g1, g2=g2, c1B1=c1B1, c1B2=0).preserves
               for variant in (signs.E2, signs.E3))


def check_union_with_doublet(grid=None):
    """Union isomorphism preserves both moduli orientations when the second
    piece is a doublet of odd genus in class 0, over (n, g1, g2, c1B1)
    """
    if grid is None:
        grid = product(ODD_DIMENSIONS, GENERA, [g for g in GENERA if g % 2],
                       [d for d in DEGREES if d % 2 == 0])
    return _sweep('union-with-doublet', grid, _union_with_doublet)


def _graph_congruence(seed):
    G = graphs.generate_random_graph(seed)
    g, d = graphs.derive_genus_degree(G)
    return graphs.congruence_identity_check(G).holds and (d * g) % 2 == 0


def check_graph_congruence(grid=None):
    """Closing congruence and evenness of d*g on seeded random graphs"""
    grid = ((seed,) for seed in GRAPH_SEEDS) if grid is None else grid
    report = _sweep('graph-congruence', grid, _graph_congruence)
    return report._replace(failures=[seed for seed, in report.failures])


IDENTITIES = OrderedDict([
    ('binomial-parity', check_binomial_parity),
    ('union-canonical-vs-cvc', check_union_canonical_vs_cvc),
    ('doublet-vs-cvc', check_doublet_vs_cvc),
    ('relspin-mod8', check_relspin_mod8),
    ('union-crl-vs-lemma', check_union_crl_vs_lemma),
    ('enode-crl-vs-lemma', check_enode_crl_vs_lemma),
    ('sin-vs-sinh', check_sin_vs_sinh),
    ('arss-cross-term', check_arss_cross_term),
    ('epsilon-gamma-forms', check_epsilon_gamma_forms),
    ('epsilon-gamma-vanishes', check_epsilon_gamma_vanishes),
    ('orientcomp-vs-cvc', check_orientcomp_vs_cvc),
    ('twist-additivity', check_twist_additivity),
    ('dimension-parity', check_dimension_parity),
    ('union-with-doublet', check_union_with_doublet),
    ('graph-congruence', check_graph_congruence),
])


def run_identity(identity_id):
    """Run one registered identity on its default grid
    :raise ValueError: unknown identity id
    """
    if identity_id not in IDENTITIES:
        raise ValueError('unknown identity: ' + str(identity_id))
    return IDENTITIES[identity_id]()


def run_all():
    """Run every registered identity in registry order"""
    reports = [check() for check in IDENTITIES.values()]
    logger.info('verified %d identities, %d failing', len(reports),
                sum(1 for r in reports if not r.holds))
    return reports
