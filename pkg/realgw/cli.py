# -*- coding: utf-8 -*-
"""
Command line entry point: ``python -m realgw <subcommand> ...``

Results go to stdout as JSON with sorted keys. Exit status is 0 on success,
1 for malformed input, a failed precondition or a failing check, and 2 for
usage errors.
"""
import argparse
import json
import logging
import sys

from . import graphs, signs, verify
from .multicover import (
    INVARIANTS_SCHEMA,
    InvariantVector,
    TransformConvention,
    forward_transform,
    integrality_check,
    invert_transform,
    multicover_coefficient,
)
from .series import PowerSeries, format_rational
from .utils import PreconditionError, parse_range

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

SCHEMAS = {
    'graph': graphs.GRAPH_SCHEMA,
    'invariants': INVARIANTS_SCHEMA,
    'report': verify.REPORT_SCHEMA,
}


def _variant(params):
    if 'variant' not in params:
        raise TypeError("missing required parameter 'variant'")
    return params.pop('variant')


def _lemma(func):
    return lambda params: func(variant=_variant(params), **params)


def _family(dispatch, predicate_id):
    return lambda params: dispatch(predicate_id, _variant(params), **params)


SIGN_PREDICATES = {
    'cvc': lambda params: signs.cvc_parity(**params),
    'conj-pullback': lambda params: signs.conj_pullback_parity(**params),
    'union-lemma': _lemma(signs.union_lemma),
    'doublet-lemma': _lemma(signs.doublet_lemma),
    'conj-node-lemma': _lemma(signs.conj_node_lemma),
    'e-node-lemma': _lemma(signs.e_node_lemma),
    'union-crl': _family(signs.induced_corollaries, signs.UNION),
    'doublet-crl': _family(signs.induced_corollaries, signs.DOUBLET),
    'conj-node-crl': _family(signs.induced_corollaries, signs.CONJ_NODE),
    'e-node-crl': _family(signs.induced_corollaries, signs.E_NODE),
    'relspin-comparison': _lemma(signs.relspin_comparison),
    'union-prp': _family(signs.moduli_propositions, signs.UNION),
    'doublet-prp': _family(signs.moduli_propositions, signs.DOUBLET),
    'conj-node-prp': _family(signs.moduli_propositions, signs.CONJ_NODE),
    'e-node-prp': _family(signs.moduli_propositions, signs.E_NODE),
    'relspin-prp': _family(signs.moduli_propositions, signs.RELSPIN),
    'forget-boundary': _family(signs.moduli_propositions, signs.FORGET_BOUNDARY),
}


def parse_params(text):
    """Parse 'k=v,...'; values become int, bool ('true' / 'false') or str"""
    params = {}
    if not text:
        return params
    for item in text.split(','):
        key, sep, value = item.partition('=')
        key = key.strip()
        if not sep or not key:
            raise ValueError('malformed parameter: {0!r}'.format(item))
        value = value.strip()
        if value.lower() in ('true', 'false'):
            params[key] = value.lower() == 'true'
        else:
            try:
                params[key] = int(value)
            except ValueError:
                params[key] = value
    return params


def _read_document(args, stdin):
    if args.input:
        with open(args.input) as f:
            return json.load(f)
    return json.load(stdin)


def _convention(args, doc):
    return TransformConvention.parse(args.conv or doc.get('convention', TransformConvention.SINH.value))


def cmd_transform(args, stdin):
    doc = _read_document(args, stdin)
    E = InvariantVector.from_json(doc, key='E')
    conv = _convention(args, doc)
    gw = forward_transform(E, conv)
    return EXIT_OK, {
        'c1B': gw.c1B,
        'convention': conv.value,
        'max_genus': gw.max_genus,
        'gw': gw.entries_json(),
    }


def cmd_invert(args, stdin):
    doc = _read_document(args, stdin)
    gw = InvariantVector.from_json(doc, key='gw')
    conv = _convention(args, doc)
    E = invert_transform(gw, conv)
    violations = integrality_check(E)
    if violations:
        logger.info('%d non-integral counts', len(violations))
    return EXIT_OK, {
        'c1B': gw.c1B,
        'convention': conv.value,
        'max_genus': gw.max_genus,
        'gw': gw.entries_json(),
        'E': E.entries_json(),
        'integral': not violations,
        'violations': [[genus, format_rational(value)] for genus, value in violations],
    }


def cmd_coeff(args, stdin):
    value = multicover_coefficient(args.h, args.c1b, args.g, args.conv or TransformConvention.SINH)
    return EXIT_OK, {'value': format_rational(value)}


def cmd_sign(args, stdin):
    return EXIT_OK, SIGN_PREDICATES[args.predicate](parse_params(args.params)).to_json()


def cmd_dim(args, stdin):
    m = signs.ModuliDescriptor(args.g, args.ell, args.n, args.c1b)
    return EXIT_OK, {'dim': signs.virtual_dimension(m)}


def cmd_graph_check(args, stdin):
    if args.input or not args.seeds:
        G = graphs.DecoratedGraph.from_json(_read_document(args, stdin))
        g, d = graphs.derive_genus_degree(G)
        result = graphs.congruence_identity_check(G)
        return (EXIT_OK if result.holds else EXIT_FAILURE), {
            'genus': g,
            'degree': d,
            'epsilon_gamma': graphs.epsilon_gamma(G),
            'projection_exponent': graphs.projection_orientation_exponent(G),
            'congruence': result._asdict(),
        }
    report = graphs.fuzz_congruence(parse_range(args.seeds), graphs.GraphBounds.parse(args.bounds))
    return (EXIT_OK if not report.failed else EXIT_FAILURE), report._asdict()


def cmd_verify(args, stdin):
    if args.all:
        reports = verify.run_all()
    elif args.identity:
        reports = [verify.run_identity(args.identity)]
    else:
        raise ValueError('verify needs --all or an identity id')
    holds = all(r.holds for r in reports)
    output = {'holds': holds, 'reports': [r.to_json() for r in reports]}
    return (EXIT_OK if holds else EXIT_FAILURE), output


def cmd_schema(args, stdin):
    return EXIT_OK, SCHEMAS[args.kind]


def build_parser():
    parser = argparse.ArgumentParser(prog='realgw', description='Real GW sign calculus and multiple-cover transform')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug logs')
    parser.add_argument('--order', type=int, default=None, help='series truncation order (overrides REALGW_ORDER)')
    sub = parser.add_subparsers(dest='command', metavar='subcommand')
    sub.required = True
    conventions = [c.value for c in TransformConvention]

    p = sub.add_parser('transform', help='curve counts E to GW invariants')
    p.add_argument('--in', dest='input', help='JSON input file (default: stdin)')
    p.add_argument('--conv', choices=conventions)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser('invert', help='GW invariants to curve counts E')
    p.add_argument('--in', dest='input', help='JSON input file (default: stdin)')
    p.add_argument('--conv', choices=conventions)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser('coeff', help='one multiple-cover coefficient')
    p.add_argument('--h', type=int, required=True)
    p.add_argument('--c1b', type=int, required=True)
    p.add_argument('--g', type=int, required=True)
    p.add_argument('--conv', choices=conventions)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser('sign', help='evaluate an orientation comparison')
    p.add_argument('predicate', choices=sorted(SIGN_PREDICATES))
    p.add_argument('--params', default='', help='k=v,... (variant=... where the predicate has variants)')
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser('dim', help='virtual dimension of the real map moduli space')
    p.add_argument('--g', type=int, required=True)
    p.add_argument('--ell', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--c1b', type=int, required=True)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser('graph-check', help='closing congruence on one graph or on seeded random graphs')
    p.add_argument('--in', dest='input', help='graph JSON file')
    p.add_argument('--seeds', help='seed range a..b')
    p.add_argument('--bounds', default='', help='generator caps, e.g. max_n=7,max_k=2')
    p.set_defaults(func=cmd_graph_check)

    p = sub.add_parser('verify', help='run derivation identities')
    p.add_argument('identity', nargs='?', choices=list(verify.IDENTITIES))
    p.add_argument('--all', action='store_true')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('schema', help='JSON schema of an I/O format')
    p.add_argument('kind', choices=sorted(SCHEMAS))
    p.set_defaults(func=cmd_schema)
    return parser


def _configure_logging(verbosity):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(format='%(name)s:%(levelname)s:%(message)s', level=level)


def _error(stderr, kind, message, **extra):
    doc = dict(extra, error=kind, message=message)
    stderr.write(json.dumps(doc, sort_keys=True) + '\n')
    return EXIT_FAILURE


def main(argv=None, stdin=None, stdout=None, stderr=None):
    """Run one subcommand and return its exit status"""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        if args.order is not None:
            PowerSeries.set_default_order(args.order)
        code, output = args.func(args, stdin)
    except json.JSONDecodeError as e:
        return _error(stderr, 'malformed-json', e.msg, line=e.lineno, column=e.colno, position=e.pos)
    except PreconditionError as e:
        return _error(stderr, 'precondition', str(e), precondition=e.precondition)
    except KeyError as e:
        return _error(stderr, 'missing-key', 'missing key: {0}'.format(e.args[0]))
    except (ValueError, TypeError, IndexError, ZeroDivisionError, OSError) as e:
        return _error(stderr, 'invalid-input', str(e))
    stdout.write(json.dumps(output, sort_keys=True) + '\n')
    return code
