# -*- coding: utf-8 -*-
"""
Decorated fixed-point graphs of torus localization on real maps to P^{n-1}.

Only the quotient data is stored: one representative vertex per conjugate
pair (V_+), the sigma-invariant edges (E_R) and one edge per conjugate pair
(E_+). A real edge joins a vertex to its conjugate, so both of its ends name
the same representative. Each vertex carries one flag per edge end at it,
which makes |E_v| the number of its flags.
"""
import json
import logging
import random
from collections import namedtuple
from collections.abc import Mapping
from fractions import Fraction
from math import floor

from .utils import PreconditionError, binom2, check_int, get_type, parity

logger = logging.getLogger(__name__)

TAU = 'tau'
ETA = 'eta'
PHI_KINDS = (TAU, ETA)

REAL = 'real'
CONJ = 'conj'
EDGE_KINDS = (REAL, CONJ)


def _check_nonneg(value, name):
    check_int(value, name)
    if value < 0:
        raise ValueError('{0} should be nonnegative, got {1}'.format(name, value))
    return value


def _check_positive(value, name):
    check_int(value, name)
    if value < 1:
        raise ValueError('{0} should be positive, got {1}'.format(name, value))
    return value


class FlagDecoration(namedtuple('FlagDecoration', ['b', 'p', 'in_S_minus'])):
    __slots__ = ()

    def __new__(cls, b=0, p=0, in_S_minus=False):
        return super(FlagDecoration, cls).__new__(
            cls, _check_nonneg(b, 'b'), _check_nonneg(p, 'p'), bool(in_S_minus))


class GraphVertex(namedtuple('GraphVertex', ['id', 'genus_label', 'theta', 'flags'])):
    """Vertex of V_+ with genus label g(v), fixed point label theta(v) and its flags"""
    __slots__ = ()

    def __new__(cls, id, genus_label, theta, flags=()):
        flags = tuple(flags)
        for flag in flags:
            if not isinstance(flag, FlagDecoration):
                raise TypeError('flags must be FlagDecoration, not ' + get_type(flag))
        return super(GraphVertex, cls).__new__(
            cls, id, _check_nonneg(genus_label, 'genus_label'), _check_positive(theta, 'theta'), flags)

    @property
    def valence(self):
        return len(self.flags)


class GraphEdge(namedtuple('GraphEdge', ['id', 'kind', 'degree', 'endpoints'])):
    """Real edge (E_R) or representative of a conjugate pair of edges (E_+)"""
    __slots__ = ()

    def __new__(cls, id, kind, degree, endpoints):
        if kind not in EDGE_KINDS:
            raise ValueError('unsupport edge kind: ' + str(kind))
        endpoints = tuple(endpoints)
        if len(endpoints) != 2:
            raise ValueError('an edge needs exactly two endpoints, got {0}'.format(len(endpoints)))
        if kind == REAL and endpoints[0] != endpoints[1]:
            raise ValueError('a real edge joins a vertex to its conjugate; store both ends at the representative')
        return super(GraphEdge, cls).__new__(cls, id, kind, _check_positive(degree, 'degree'), endpoints)

    @property
    def ends(self):
        """Edge ends among V_+: one for a real edge, two for a conjugate pair"""
        return self.endpoints[:1] if self.kind == REAL else self.endpoints


class DecoratedGraph(object):
    """
    Fixed-point graph (Gamma, sigma) for phi-real complete intersections
    X_{n;a} in P^{n-1}. Immutable; genus and degree are derived.
    """

    def __init__(self, vertices, edges, n, a, phi_kind=TAU):
        """
        :param vertices: GraphVertex list (V_+)
        :param edges: GraphEdge list (E_R and E_+)
        :param n: P^{n-1} has n homogeneous coordinates
        :param a: multidegree, list of positive integers
        :param phi_kind: 'tau' or 'eta' (eta needs n even)
        :raise PreconditionError: n - k odd, or eta with n odd
        :raise ValueError: malformed vertices or edges
        """
        self.n = _check_positive(n, 'n')
        self.a = tuple(_check_positive(a_i, 'a_i') for a_i in a)
        if phi_kind not in PHI_KINDS:
            raise ValueError('unsupport involution kind: ' + str(phi_kind))
        self.phi_kind = phi_kind
        if phi_kind == ETA and n % 2:
            raise PreconditionError('n even for eta', 'eta acts on P^{{n-1}} only for n even, got n={0}'.format(n))
        if (self.n - self.k) % 2:
            raise PreconditionError('n - k even', 'n - k = {0} is odd'.format(self.n - self.k))
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self._check_structure()

    def _check_structure(self):
        ids = [v.id for v in self.vertices]
        if not ids:
            raise ValueError('a graph needs at least one vertex')
        if len(set(ids)) != len(ids):
            raise ValueError('vertex ids must be unique')
        if len(set(e.id for e in self.edges)) != len(self.edges):
            raise ValueError('edge ids must be unique')
        incidence = dict.fromkeys(ids, 0)
        for edge in self.edges:
            for end in edge.ends:
                if end not in incidence:
                    raise ValueError('edge {0} ends at unknown vertex {1}'.format(edge.id, end))
                incidence[end] += 1
        for vertex in self.vertices:
            if vertex.valence != incidence[vertex.id]:
                raise ValueError('vertex {0} has {1} flags but {2} edge ends'.format(
                    vertex.id, vertex.valence, incidence[vertex.id]))

    @property
    def k(self):
        return len(self.a)

    @property
    def abs_a(self):
        return sum(self.a)

    @property
    def phi_sign(self):
        """|phi|: 0 for tau, 1 for eta"""
        return 0 if self.phi_kind == TAU else 1

    @property
    def real_edges(self):
        return [e for e in self.edges if e.kind == REAL]

    @property
    def conj_edges(self):
        return [e for e in self.edges if e.kind == CONJ]

    @property
    def edge_count(self):
        """|Edg| = |E_R| + 2|E_+|, edges of the full graph"""
        return len(self.real_edges) + 2 * len(self.conj_edges)

    @property
    def genus(self):
        return 1 + self.edge_count + 2 * sum(v.genus_label - 1 for v in self.vertices)

    @property
    def degree(self):
        return sum(e.degree for e in self.real_edges) + 2 * sum(e.degree for e in self.conj_edges)

    def __eq__(self, other):
        if not isinstance(other, DecoratedGraph):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(json.dumps(self.to_json(), sort_keys=True))

    def __repr__(self):
        return '<realgw.DecoratedGraph n={0} a={1} phi={2}: {3} vertices, {4} real, {5} conjugate edges>'.format(
            self.n, list(self.a), self.phi_kind, len(self.vertices), len(self.real_edges), len(self.conj_edges))

    def to_json(self):
        position = {v.id: i for i, v in enumerate(self.vertices)}
        return {
            'n': self.n,
            'a': list(self.a),
            'phi': self.phi_kind,
            'vertices': [{
                'genus': v.genus_label,
                'theta': v.theta,
                'flags': [{'b': f.b, 'p': f.p, 'sminus': f.in_S_minus} for f in v.flags],
            } for v in self.vertices],
            'edges': [{
                'kind': e.kind,
                'degree': e.degree,
                'ends': [position[end] for end in e.endpoints],
            } for e in self.edges],
        }

    @classmethod
    def from_json(cls, doc):
        """Build a graph from its JSON document; vertex ids are list positions"""
        if not isinstance(doc, Mapping):
            raise TypeError('graph document must be an object, not ' + get_type(doc))
        vertices = [
            GraphVertex(i, v['genus'], v['theta'],
                        [FlagDecoration(f['b'], f['p'], f['sminus']) for f in v.get('flags', [])])
            for i, v in enumerate(doc['vertices'])
        ]
        edges = [GraphEdge(i, e['kind'], e['degree'], e['ends']) for i, e in enumerate(doc['edges'])]
        return cls(vertices, edges, doc['n'], doc['a'], doc.get('phi', TAU))


GRAPH_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'DecoratedGraph',
    'type': 'object',
    'required': ['n', 'a', 'phi', 'vertices', 'edges'],
    'properties': {
        'n': {'type': 'integer', 'minimum': 1},
        'a': {'type': 'array', 'items': {'type': 'integer', 'minimum': 1}},
        'phi': {'enum': list(PHI_KINDS)},
        'vertices': {
            'type': 'array',
            'minItems': 1,
            'items': {
                'type': 'object',
                'required': ['genus', 'theta', 'flags'],
                'properties': {
                    'genus': {'type': 'integer', 'minimum': 0},
                    'theta': {'type': 'integer', 'minimum': 1},
                    'flags': {
                        'type': 'array',
                        'items': {
                            'type': 'object',
                            'required': ['b', 'p', 'sminus'],
                            'properties': {
                                'b': {'type': 'integer', 'minimum': 0},
                                'p': {'type': 'integer', 'minimum': 0},
                                'sminus': {'type': 'boolean'},
                            },
                        },
                    },
                },
            },
        },
        'edges': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['kind', 'degree', 'ends'],
                'properties': {
                    'kind': {'enum': list(EDGE_KINDS)},
                    'degree': {'type': 'integer', 'minimum': 1},
                    'ends': {'type': 'array', 'items': {'type': 'integer', 'minimum': 0},
                             'minItems': 2, 'maxItems': 2},
                },
            },
        },
    },
}


def _check_graph(G):
    if not isinstance(G, DecoratedGraph):
        raise TypeError('expected DecoratedGraph, not ' + get_type(G))
    return G


def derive_genus_degree(G):
    """g = 1 + |Edg| + 2 sum(g(v) - 1), d = sum_{E_R} deg + 2 sum_{E_+} deg"""
    _check_graph(G)
    return G.genus, G.degree


def epsilon_gamma(G):
    """Sign exponent of the disjoint-union isomorphism: (n + (k+|a|)/2) C(|E_R|, 2) mod 2
    :raise PreconditionError: when k + |a| is odd
    """
    _check_graph(G)
    if (G.k + G.abs_a) % 2:
        raise PreconditionError('|a| = k mod 2', 'k + |a| = {0} is odd'.format(G.k + G.abs_a))
    return parity((G.n + (G.k + G.abs_a) // 2) * binom2(len(G.real_edges)))


def projection_orientation_exponent(G):
    """(n-2-k)/2 C(|E_R|, 2) mod 2, the extra sign when the moduli spaces
    are oriented via the projection construction
    """
    _check_graph(G)
    return parity((G.n - 2 - G.k) // 2 * binom2(len(G.real_edges)))


def _real_edge_floor(n, abs_a, de):
    return floor(Fraction(n - abs_a, 4) * de)


def real_edge_exponent(phi_kind, n, abs_a, de):
    """|phi| + (d(e)+1)/2 + floor((n-|a|)d(e)/4) mod 2 for a real edge of odd degree
    :raise PreconditionError: even degree (the contribution vanishes) or odd n - |a|
    """
    if phi_kind not in PHI_KINDS:
        raise ValueError('unsupport involution kind: ' + str(phi_kind))
    check_int(n, 'n')
    check_int(abs_a, 'abs_a')
    _check_positive(de, 'de')
    if de % 2 == 0:
        raise PreconditionError('real edge degree odd', 'real edge degree {0} is even'.format(de))
    if (n - abs_a) % 2:
        raise PreconditionError('n - |a| even', 'n - |a| = {0} is odd'.format(n - abs_a))
    phi_sign = 0 if phi_kind == TAU else 1
    return parity(phi_sign + (de + 1) // 2 + _real_edge_floor(n, abs_a, de))


def conj_edge_exponent(n, abs_a, de):
    """(n-|a|)d(e)/2 - 1 mod 2 for a conjugate pair of edges
    :raise PreconditionError: when (n-|a|)d(e) is odd
    """
    check_int(n, 'n')
    check_int(abs_a, 'abs_a')
    _check_positive(de, 'de')
    product = (n - abs_a) * de
    if product % 2:
        raise PreconditionError('(n - |a|) d(e) even', '(n - |a|) d(e) = {0} is odd'.format(product))
    return parity(product // 2 - 1)


def vertex_exponent(v):
    """s_v = sum over flags in S_v^- of (1 + b + p), mod 2"""
    if not isinstance(v, GraphVertex):
        raise TypeError('expected GraphVertex, not ' + get_type(v))
    return parity(sum(1 + f.b + f.p for f in v.flags if f.in_S_minus))


CongruenceResult = namedtuple('CongruenceResult', ['holds', 'lhs', 'middle', 'rhs'])


def _integral(value, name):
    if value.denominator != 1:
        raise PreconditionError('integral intermediate', '{0} = {1} is not an integer'.format(name, value))
    return value.numerator


def congruence_identity_check(G):
    """Evaluate both sides (and the middle expression) of the closing mod 2
    congruence for a graph whose localization product is nonzero
    :return: CongruenceResult with parities lhs, middle, rhs
    :raise PreconditionError: |a| != k mod 4, an even real edge degree, or a
        non-integral intermediate
    """
    _check_graph(G)
    n, k, abs_a = G.n, G.k, G.abs_a
    if (abs_a - k) % 4:
        raise PreconditionError('|a| = k mod 4', '|a| - k = {0} is not divisible by 4'.format(abs_a - k))
    for edge in G.real_edges:
        if edge.degree % 2 == 0:
            raise PreconditionError('real edge degree odd', 'real edge {0} has even degree {1}'.format(
                edge.id, edge.degree))
    if (n - abs_a) % 2:
        raise PreconditionError('n - |a| even', 'n - |a| = {0} is odd'.format(n - abs_a))
    g, d = G.genus, G.degree
    r = len(G.real_edges)
    m = Fraction(n - abs_a)

    lhs = Fraction(n - 2 - k, 2) * binom2(r)
    lhs += sum(1 + floor(m / 4 * e.degree) for e in G.real_edges)
    lhs += sum(m / 2 * e.degree - 1 for e in G.conj_edges)
    lhs += sum(v.genus_label - 1 + v.valence for v in G.vertices)

    middle = m / 4 * d * (m / 2 * d - 1) + Fraction(g * (g - 1), 2) + m / 2 * d * g + r

    x = g + m / 2 * d
    rhs = x * (x - 1) / 2 + (g - 1)

    lhs = parity(_integral(lhs, 'lhs'))
    middle = parity(_integral(middle, 'middle'))
    rhs = parity(_integral(rhs, 'rhs'))
    return CongruenceResult(lhs == middle == rhs, lhs, middle, rhs)


_BOUND_FIELDS = ['max_vertices', 'max_real_edges', 'max_conj_edges', 'max_genus', 'max_degree',
                 'max_n', 'max_k', 'max_a', 'max_flag_label']


class GraphBounds(namedtuple('GraphBounds', _BOUND_FIELDS)):
    """Caps for generate_random_graph"""
    __slots__ = ()

    def __new__(cls, max_vertices=4, max_real_edges=4, max_conj_edges=3, max_genus=2, max_degree=5,
                max_n=9, max_k=3, max_a=5, max_flag_label=3):
        values = (max_vertices, max_real_edges, max_conj_edges, max_genus, max_degree,
                  max_n, max_k, max_a, max_flag_label)
        for name, value in zip(_BOUND_FIELDS, values):
            _check_nonneg(value, name)
        return super(GraphBounds, cls).__new__(cls, *values)

    @classmethod
    def parse(cls, text):
        """Parse 'max_n=7,max_k=2' into bounds, unspecified fields keep their defaults"""
        if not text:
            return cls()
        options = {}
        for item in text.split(','):
            key, sep, value = item.partition('=')
            key = key.strip()
            if not sep or key not in _BOUND_FIELDS:
                raise ValueError('unknown bound: {0!r}'.format(item))
            options[key] = int(value)
        return cls(**options)


def _infeasible(reason):
    return PreconditionError('bounds feasible', 'bounds infeasible: ' + reason)


def _draw_multidegree(rng, k, max_a):
    if k == 0:
        return []
    for _ in range(20):
        a = [rng.randint(1, max_a) for _ in range(k - 1)]
        candidates = [x for x in range(1, max_a + 1) if (sum(a) + x - k) % 4 == 0]
        if candidates:
            return a + [rng.choice(candidates)]
    return [1] * k


def generate_random_graph(seed, bounds=None):
    """Random graph satisfying the structural invariants and the nonzero-product
    conditions (|a| = k mod 4, odd real edge degrees); deterministic per seed
    :param seed: int seed
    :param bounds: GraphBounds, defaults to GraphBounds()
    :raise PreconditionError: when the bounds admit no graph
    """
    bounds = bounds or GraphBounds()
    if bounds.max_vertices < 1:
        raise _infeasible('max_vertices must be at least 1')
    if bounds.max_degree < 1:
        raise _infeasible('max_degree must be at least 1')
    if bounds.max_k and bounds.max_a < 1:
        raise _infeasible('max_a must be at least 1')
    pairs = [(n, k) for n in range(1, bounds.max_n + 1) for k in range(bounds.max_k + 1) if (n - k) % 2 == 0]
    if not pairs:
        raise _infeasible('no n <= max_n with n - k even')
    rng = random.Random(seed)
    n, k = rng.choice(pairs)
    a = _draw_multidegree(rng, k, bounds.max_a)
    phi_kind = rng.choice(PHI_KINDS) if n % 2 == 0 else TAU

    count = rng.randint(1, bounds.max_vertices)
    odd_degrees = list(range(1, bounds.max_degree + 1, 2))
    edges = []
    for _ in range(rng.randint(0, bounds.max_real_edges)):
        u = rng.randrange(count)
        edges.append(GraphEdge(len(edges), REAL, rng.choice(odd_degrees), (u, u)))
    for _ in range(rng.randint(0, bounds.max_conj_edges)):
        ends = (rng.randrange(count), rng.randrange(count))
        edges.append(GraphEdge(len(edges), CONJ, rng.randint(1, bounds.max_degree), ends))

    incidence = [0] * count
    for edge in edges:
        for end in edge.ends:
            incidence[end] += 1
    label = bounds.max_flag_label
    vertices = []
    for i in range(count):
        flags = [FlagDecoration(rng.randint(0, label), rng.randint(0, label), rng.random() < 0.5)
                 for _ in range(incidence[i])]
        vertices.append(GraphVertex(i, rng.randint(0, bounds.max_genus), rng.randint(1, n), flags))
    return DecoratedGraph(vertices, edges, n, a, phi_kind)


FuzzReport = namedtuple('FuzzReport', ['passed', 'failed', 'first_counterexample'])


def fuzz_congruence(seeds, bounds=None):
    """Run congruence_identity_check on generated graphs, one per seed
    :param seeds: iterable of ints
    :return: FuzzReport(passed, failed, first_counterexample or None)
    """
    passed = failed = 0
    first = None
    for seed in seeds:
        G = generate_random_graph(seed, bounds)
        result = congruence_identity_check(G)
        g, d = derive_genus_degree(G)
        if result.holds and (d * g) % 2 == 0:
            passed += 1
            continue
        failed += 1
        if first is None:
            first = {'seed': seed, 'graph': G.to_json(), 'lhs': result.lhs,
                     'middle': result.middle, 'rhs': result.rhs, 'dg': d * g}
            logger.warning('congruence fails for seed %s: lhs=%d rhs=%d', seed, result.lhs, result.rhs)
    logger.info('graph congruence: %d passed, %d failed', passed, failed)
    return FuzzReport(passed, failed, first)


def graph_to_json(G):
    return _check_graph(G).to_json()


def graph_from_json(doc):
    return DecoratedGraph.from_json(doc)
