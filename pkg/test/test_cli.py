# -*- coding: utf-8 -*-
import json
import os
import tempfile
from contextlib import redirect_stderr
from io import StringIO
from unittest import TestCase, mock

from realgw import PowerSeries
from realgw.cli import main, parse_params
from realgw.utils import parse_range

GW_DOC = {'c1B': 0, 'convention': 'sinh', 'max_genus': 2, 'gw': {'0': '1', '1': '0', '2': '-1/24'}}

EVEN_REAL_EDGE = {
    'n': 5, 'a': [5], 'phi': 'tau',
    'vertices': [{'genus': 0, 'theta': 1, 'flags': [{'b': 0, 'p': 0, 'sminus': False}]}],
    'edges': [{'kind': 'real', 'degree': 2, 'ends': [0, 0]}],
}


def run(argv, stdin=''):
    out, err = StringIO(), StringIO()
    with redirect_stderr(StringIO()):
        code = main(argv, StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


class TestCli(TestCase):

    def tearDown(self):
        PowerSeries.reset_default_order()

    def test_coeff(self):
        code, out, _ = run(['coeff', '--h', '2', '--c1b', '0', '--g', '1', '--conv', 'sinh'])
        self.assertEqual(0, code)
        self.assertEqual('{"value": "1/24"}\n', out)
        _, out, _ = run(['coeff', '--h', '0', '--c1b', '0', '--g', '1'])
        self.assertEqual({'value': '-1/24'}, json.loads(out))

    def test_coeff_order(self):
        code, _, err = run(['--order', '4', 'coeff', '--h', '1', '--c1b', '0', '--g', '3'])
        self.assertEqual(1, code)
        self.assertEqual('genus within truncation order', json.loads(err)['precondition'])

    def test_order_from_environment(self):
        argv = ['coeff', '--h', '1', '--c1b', '0', '--g', '3']
        with mock.patch.dict(os.environ, {'REALGW_ORDER': '4'}):
            PowerSeries.reset_default_order()
            code, _, err = run(argv)
            self.assertEqual(1, code)
            self.assertEqual('genus within truncation order', json.loads(err)['precondition'])
        with mock.patch.dict(os.environ, {'REALGW_ORDER': 'abc'}):
            PowerSeries.reset_default_order()
            code, _, err = run(argv)
            self.assertEqual((1, 'invalid-input'), (code, json.loads(err)['error']))
            PowerSeries.reset_default_order()
            self.assertEqual(0, run(['--order', '6'] + argv)[0])

    def test_dim(self):
        code, out, _ = run(['dim', '--g', '0', '--ell', '1', '--n', '3', '--c1b', '4'])
        self.assertEqual((0, '{"dim": 6}\n'), (code, out))
        code, _, err = run(['dim', '--g', '0', '--ell', '1', '--n', '4', '--c1b', '4'])
        self.assertEqual(1, code)
        self.assertEqual('n odd', json.loads(err)['precondition'])

    def test_sign(self):
        code, out, _ = run(['sign', 'cvc', '--params', 'g=0,k=1,d=1'])
        self.assertEqual(0, code)
        doc = json.loads(out)
        self.assertEqual((False, -1), (doc['preserves'], doc['sign']))
        _, out, _ = run(['sign', 'union-lemma', '--params', 'g1=0,g2=0,k=1,d1=0,d2=0,variant=canonical'])
        self.assertFalse(json.loads(out)['preserves'])
        _, out, _ = run(['sign', 'forget-boundary', '--params', 'variant=e2,node_side=minus'])
        self.assertEqual(-1, json.loads(out)['sign'])
        _, out, _ = run(['sign', 'relspin-prp', '--params', 'variant=spin,c1B=0,orientable_fixed_line=true'])
        self.assertTrue(json.loads(out)['sign'] == -1)
        code, _, err = run(['sign', 'relspin-comparison', '--params', 'degV=2,variant=spin-e3'])
        self.assertEqual(1, code)
        self.assertEqual('degV in 4Z', json.loads(err)['precondition'])
        code, _, _ = run(['sign', 'union-lemma', '--params', 'g1=0'])
        self.assertEqual(1, code)

    def test_parse_params(self):
        self.assertEqual({'g': -1, 'flag': True, 'variant': 'e2'}, parse_params('g=-1, flag=TRUE,variant=e2'))
        self.assertEqual({}, parse_params(''))
        self.assertRaises(ValueError, parse_params, 'g')

    def test_parse_range(self):
        self.assertEqual(range(1, 6), parse_range('1..5'))
        self.assertEqual(range(3, 4), parse_range('3'))
        self.assertEqual(range(2, 3), parse_range('2..2'))
        self.assertRaises(ValueError, parse_range, '5..1')
        self.assertRaises(ValueError, parse_range, 'a..b')

    def test_transform_invert(self):
        code, out, _ = run(['invert'], json.dumps(GW_DOC))
        self.assertEqual(0, code)
        inverted = json.loads(out)
        self.assertEqual({'0': '1', '1': '0', '2': '0'}, inverted['E'])
        self.assertTrue(inverted['integral'])
        self.assertEqual([], inverted['violations'])
        code, out, _ = run(['transform'], out)
        self.assertEqual(0, code)
        self.assertEqual(json.dumps(GW_DOC, sort_keys=True) + '\n', out)

    def test_invert_violations(self):
        doc = {'c1B': 2, 'gw': {'0': '1/2'}}
        _, out, _ = run(['invert', '--conv', 'sin'], json.dumps(doc))
        doc = json.loads(out)
        self.assertEqual('sin', doc['convention'])
        self.assertFalse(doc['integral'])
        self.assertEqual([[0, '1/2']], doc['violations'])

    def test_input_file(self):
        fd, path = tempfile.mkstemp(suffix='.json')
        try:
            with os.fdopen(fd, 'w') as f:
                json.dump({'c1B': 0, 'E': {'0': '1', '2': '0'}}, f)
            code, out, _ = run(['transform', '--in', path])
            self.assertEqual(0, code)
            self.assertEqual('-1/24', json.loads(out)['gw']['2'])
        finally:
            os.remove(path)
        code, _, err = run(['transform', '--in', path])
        self.assertEqual(1, code)
        self.assertEqual('invalid-input', json.loads(err)['error'])

    def test_malformed_json(self):
        code, out, err = run(['invert'], '{"c1B": 0,\n "gw": }')
        self.assertEqual((1, ''), (code, out))
        err = json.loads(err)
        self.assertEqual('malformed-json', err['error'])
        self.assertEqual(2, err['line'])
        self.assertIn('position', err)
        code, _, err = run(['invert'], '{"gw": {}}')
        self.assertEqual((1, 'missing-key'), (code, json.loads(err)['error']))

    def test_missing_entries(self):
        code, out, err = run(['invert'], json.dumps({'c1B': 0}))
        self.assertEqual((1, ''), (code, out))
        self.assertEqual('missing-key', json.loads(err)['error'])
        code, _, err = run(['invert'], json.dumps({'c1B': 0, 'GW': {'0': '1/2'}}))
        self.assertEqual((1, 'missing-key'), (code, json.loads(err)['error']))
        code, _, err = run(['transform'], json.dumps({'c1B': 0, 'gw': {'0': '1'}}))
        self.assertEqual((1, 'missing-key'), (code, json.loads(err)['error']))

    def test_usage(self):
        self.assertEqual(2, run(['frobnicate'])[0])
        self.assertEqual(2, run([])[0])
        self.assertEqual(2, run(['coeff', '--h', '1'])[0])
        self.assertEqual(2, run(['verify', 'unknown'])[0])

    def test_graph_check(self):
        code, _, err = run(['graph-check'], json.dumps(EVEN_REAL_EDGE))
        self.assertEqual(1, code)
        err = json.loads(err)
        self.assertEqual('precondition', err['error'])
        self.assertEqual('real edge degree odd', err['precondition'])
        graph = dict(EVEN_REAL_EDGE, edges=[{'kind': 'real', 'degree': 1, 'ends': [0, 0]}])
        code, out, _ = run(['graph-check'], json.dumps(graph))
        self.assertEqual(0, code)
        doc = json.loads(out)
        self.assertEqual((0, 1), (doc['genus'], doc['degree']))
        self.assertTrue(doc['congruence']['holds'])

    def test_graph_check_seeds(self):
        code, out, _ = run(['graph-check', '--seeds', '1..50', '--bounds', 'max_n=7,max_k=2'])
        self.assertEqual(0, code)
        self.assertEqual({'passed': 50, 'failed': 0, 'first_counterexample': None}, json.loads(out))
        self.assertEqual(1, run(['graph-check', '--seeds', '1..5', '--bounds', 'depth=1'])[0])
        code, out, err = run(['graph-check', '--seeds', '5..1'])
        self.assertEqual((1, ''), (code, out))
        self.assertEqual('invalid-input', json.loads(err)['error'])

    def test_verify(self):
        code, out, _ = run(['verify', 'relspin-mod8'])
        self.assertEqual(0, code)
        doc = json.loads(out)
        self.assertTrue(doc['holds'])
        self.assertEqual(17, doc['reports'][0]['grid_size'])
        self.assertEqual(1, run(['verify'])[0])

    def test_verify_all(self):
        code, out, _ = run(['verify', '--all'])
        self.assertEqual(0, code)
        self.assertTrue(all(r['holds'] for r in json.loads(out)['reports']))

    def test_schema(self):
        for kind, title in (('graph', 'DecoratedGraph'), ('invariants', 'InvariantVector'),
                            ('report', 'IdentityReport')):
            code, out, _ = run(['schema', kind])
            self.assertEqual(0, code)
            self.assertEqual(title, json.loads(out)['title'])

    def test_deterministic(self):
        commands = [
            (['coeff', '--h', '3', '--c1b', '-4', '--g', '2', '--conv', 'sin'], ''),
            (['dim', '--g', '2', '--ell', '0', '--n', '5', '--c1b', '2'], ''),
            (['sign', 'e-node-prp', '--params', 'variant=e3,g=1,c1B=2'], ''),
            (['invert'], json.dumps(GW_DOC)),
            (['graph-check', '--seeds', '1..20'], ''),
            (['verify', 'doublet-vs-cvc'], ''),
            (['schema', 'graph'], ''),
        ]
        for argv, stdin in commands:
            self.assertEqual(run(argv, stdin), run(argv, stdin), argv)
