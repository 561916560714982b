# -*- coding: utf-8 -*-
from .series import (
    PowerSeries,
    Rational,
    format_rational,
    parse_rational,
    rational_arith,
    series_mul,
    series_pow,
    series_reciprocal,
    series_sin_over_halft,
    series_sinh_over_halft,
)
from .multicover import (
    InvariantVector,
    TransformConvention,
    convention_for_orientation,
    forward_transform,
    integrality_check,
    invert_transform,
    multicover_coefficient,
    transform_exponent,
)
from .signs import (
    Comparison,
    ModuliDescriptor,
    RealBundleDescriptor,
    arss_condition,
    arss_cross_term,
    ci_parity_facts,
    conj_node_lemma,
    conj_pullback_parity,
    cvc_parity,
    doublet_lemma,
    e_node_lemma,
    induced_corollaries,
    line_conjugation_exists,
    moduli_propositions,
    orientcomp_epsilons,
    relspin_comparison,
    twist_exponent,
    union_lemma,
    virtual_dimension,
)
from .graphs import (
    DecoratedGraph,
    FlagDecoration,
    GraphBounds,
    GraphEdge,
    GraphVertex,
    congruence_identity_check,
    generate_random_graph,
)
from .verify import IdentityReport, run_all, run_identity
from .utils import PreconditionError

__version__ = '0.1.0'

__all__ = [
    'PowerSeries', 'Rational', 'format_rational', 'parse_rational', 'rational_arith',
    'series_mul', 'series_pow', 'series_reciprocal', 'series_sin_over_halft', 'series_sinh_over_halft',
    'InvariantVector', 'TransformConvention', 'convention_for_orientation', 'forward_transform',
    'integrality_check', 'invert_transform', 'multicover_coefficient', 'transform_exponent',
    'Comparison', 'ModuliDescriptor', 'RealBundleDescriptor', 'arss_condition', 'arss_cross_term',
    'ci_parity_facts', 'conj_node_lemma', 'conj_pullback_parity', 'cvc_parity', 'doublet_lemma',
    'e_node_lemma', 'induced_corollaries', 'line_conjugation_exists', 'moduli_propositions',
    'orientcomp_epsilons', 'relspin_comparison', 'twist_exponent', 'union_lemma', 'virtual_dimension',
    'DecoratedGraph', 'FlagDecoration', 'GraphBounds', 'GraphEdge', 'GraphVertex',
    'congruence_identity_check', 'generate_random_graph',
    'IdentityReport', 'run_all', 'run_identity',
    'PreconditionError',
]
