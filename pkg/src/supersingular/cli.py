"""Command-line interface: classify, structure, enumerate and verify.

Every command prints one JSON document (or a plain table with --table).
Exit codes: 0 success, 1 usage error, 2 mathematical rejection, 3 verification failure.
"""

import argparse
import json
import sys

from .arith import IntPoly, is_prime
from .oracle_ec import MAX_Q as EC_MAX_Q, REPORT_SCHEMA, sweep_verify
from .orders import verify_order_corpus, verify_zpi_bridge
from .structure import (enumerate_classes, local_structure_at_2, module_structure_descriptor,
                        rational_point_structures)
from .weil import (Exceptional, MultiplicityError, NotElementaryError, NotSupersingularError,
                   WeilNumber, parse_frobenius, simple_class, verify_roundtrip)

EXIT_OK, EXIT_USAGE, EXIT_REJECTED, EXIT_FAILED = 0, 1, 2, 3
MAX_D = 8
MAX_ROUNDTRIP_P = 50
MAX_ROUNDTRIP_M = 30
JSON_SAFE = 2**53


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


# rendering -----------------------------------------------------------------

def _render(x):
    """JSON-safe tree: ints at or above 2^53 in absolute value become decimal strings."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= JSON_SAFE else x
    if isinstance(x, dict):
        return {str(k): _render(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_render(v) for v in x]
    if isinstance(x, Exceptional):
        return x.value
    raise TypeError(f'cannot render {type(x).__name__}')


def dumps(doc):
    return json.dumps(_render(doc), sort_keys=True, indent=2)


def class_record(cls):
    result = rational_point_structures(cls)
    if result.unique is not None:
        structures = [{'a': cls.e, 'b': 0, 'invariant_factors': list(result.unique.invariant_factors)}]
    else:
        structures = [{'a': a, 'b': b, 'invariant_factors': list(st.invariant_factors)}
                      for a, b, st in result.family]
    mod = module_structure_descriptor(cls)
    return {
        'p': cls.p, 's': cls.s, 'q': cls.q, 'g_coeffs': list(cls.g.coeffs), 'e': cls.e,
        'd': cls.d, 'm': cls.m, 'supersingular': True, 'exceptional': cls.exceptional.value,
        'structures': structures,
        'module': {'branch': mod.branch, 'e': mod.e, 'ab_pairs': [list(ab) for ab in mod.ab_pairs],
                   'kernel_bound': mod.kernel_bound, 'notes': mod.notes},
    }


def _table(doc):
    lines = []
    records = doc.get('records')
    if records is not None:
        lines.append(f"{'g':<36} {'e':>2} {'d':>2} {'m':>4} {'exceptional':<11} structures")
        for r in records:
            lines.append(_record_row(r))
    elif 'record' in doc:
        lines.append(_record_row(doc['record']))
        lines.append(doc['record']['module']['notes'])
    elif 'error' in doc:
        lines.append(f"rejected ({doc['error']['type']}): {doc['error']['message']}")
    else:
        for key in sorted(doc):
            val = doc[key]
            if isinstance(val, (dict, list)):
                val = json.dumps(_render(val), sort_keys=True)
                if len(val) > 100:
                    val = val[:97] + '...'
            lines.append(f'{key}: {val}')
    return '\n'.join(lines)


def _record_row(r):
    g = str(IntPoly(r['g_coeffs']))
    sts = '; '.join(' x '.join(f'Z/{n}' for n in s['invariant_factors']) or '0'
                    for s in r['structures'])
    return f"{g:<36} {r['e']:>2} {r['d']:>2} {r['m']:>4} {r['exceptional']:<11} {sts}"


def _emit(doc, args):
    doc = dict(doc, schema=REPORT_SCHEMA)
    print(_table(doc) if args.table else dumps(doc))


# input parsing -------------------------------------------------------------

def parse_poly(text):
    try:
        coeffs = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f'polynomial must be a list of integers like [3,0,1], got {text!r}')
    if (not isinstance(coeffs, list) or not coeffs
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs)):
        raise UsageError(f'polynomial must be a non-empty list of integers, got {text!r}')
    f = IntPoly(coeffs)
    if f.degree < 1 or not f.is_monic():
        raise UsageError(f'polynomial {f} must be monic of positive degree')
    return f


def parse_weil(text):
    fields = {}
    for part in text.split(','):
        key, sep, val = part.partition('=')
        if not sep or key.strip() not in ('m', 'nu') or key.strip() in fields:
            raise UsageError(f'Weil input must look like m=<int>,nu=<int>, got {text!r}')
        try:
            fields[key.strip()] = int(val)
        except ValueError:
            raise UsageError(f'not an integer: {val!r}')
    if set(fields) != {'m', 'nu'}:
        raise UsageError(f'Weil input must give both m and nu, got {text!r}')
    return fields['m'], fields['nu']


def _check_field(args):
    if not is_prime(args.p):
        raise UsageError(f'--p {args.p} is not prime')
    if args.s < 1:
        raise UsageError('--s must be positive')


def _resolve_class(args):
    _check_field(args)
    if args.poly is not None:
        return parse_frobenius(parse_poly(args.poly), args.p, args.s)
    m, nu = parse_weil(args.weil)
    try:
        w = WeilNumber(args.p, args.s, m, nu)
    except ValueError as exc:
        raise UsageError(str(exc))
    return simple_class(w)


# commands ------------------------------------------------------------------

def cmd_classify(args):
    _emit({'kind': 'class', 'record': class_record(_resolve_class(args))}, args)
    return EXIT_OK


def cmd_structure(args):
    cls = _resolve_class(args)
    rec = class_record(cls)
    loc = local_structure_at_2(cls)
    _emit({'kind': 'structure', 'record': rec,
           'local_2': {'exceptional': loc.exceptional,
                       'options': [list(o.invariant_factors) for o in loc.options]}}, args)
    return EXIT_OK


def cmd_enumerate(args):
    _check_field(args)
    if not 1 <= args.d_max <= MAX_D:
        raise UsageError(f'--d-max must lie in [1, {MAX_D}]')
    records = [class_record(c) for c in enumerate_classes(args.p, args.s, args.d_max)]
    _emit({'kind': 'enumeration', 'p': args.p, 's': args.s, 'd_max': args.d_max,
           'records': records}, args)
    return EXIT_OK


def _int_list(text):
    try:
        vals = sorted({int(x) for x in text.split(',')})
    except ValueError:
        raise UsageError(f'expected a comma-separated list of integers, got {text!r}')
    if not vals or vals[0] < 1:
        raise UsageError(f'values must be positive: {text!r}')
    return vals


def cmd_verify(args):
    if args.suite == 'ec':
        s_set = _int_list(args.s)
        primes = [p for p in range(2, args.p_max + 1) if is_prime(p)]
        if not primes:
            raise UsageError('--p-max must be at least 2')
        if primes[-1]**s_set[-1] > EC_MAX_Q:
            raise UsageError(f'{primes[-1]}^{s_set[-1]} exceeds the brute-force bound q <= {EC_MAX_Q}')
        if args.jobs < 1 or args.samples < 1:
            raise UsageError('--jobs and --samples must be positive')
        report = sweep_verify(args.p_max, s_set, args.samples, args.seed, args.jobs)
    elif args.suite == 'g2':
        from .oracle_g2 import SEARCH_PRIMES, search_exceptional_g2
        if args.p not in SEARCH_PRIMES:
            raise UsageError(f'--p must be one of {SEARCH_PRIMES}')
        report = dict(search_exceptional_g2(args.p, not args.hits_only), suite='g2')
    elif args.suite == 'orders':
        corpus = verify_order_corpus()
        bridge = verify_zpi_bridge()
        report = {'suite': 'orders', 'corpus': corpus, 'bridge': bridge,
                  'passed': corpus['passed'] and bridge['passed']}
    else:
        if not 2 <= args.p_max <= MAX_ROUNDTRIP_P or not 1 <= args.m_max <= MAX_ROUNDTRIP_M:
            raise UsageError(f'need 2 <= --p-max <= {MAX_ROUNDTRIP_P} and 1 <= --m-max <= {MAX_ROUNDTRIP_M}')
        if not 1 <= args.s_max <= 4:
            raise UsageError('need 1 <= --s-max <= 4')
        primes = [p for p in range(2, args.p_max + 1) if is_prime(p)]
        report = verify_roundtrip(primes, range(1, args.s_max + 1), args.m_max)
    _emit(dict(report, kind='verification'), args)
    return EXIT_OK if report['passed'] else EXIT_FAILED


# parser --------------------------------------------------------------------

def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument('--json', dest='table', action='store_false', default=argparse.SUPPRESS,
                       help='machine-readable JSON output (default)')
    group.add_argument('--table', dest='table', action='store_true', default=argparse.SUPPRESS,
                       help='human-readable output')

    parser = _Parser(prog='supersingular', parents=[fmt],
                     description='Group structures of elementary supersingular abelian varieties.')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    def field_args(p):
        p.add_argument('--p', type=int, required=True, help='characteristic')
        p.add_argument('--s', type=int, default=1, help='q = p^s (default 1)')

    for name, helptext in (('classify', 'isogeny class record of a Frobenius polynomial or Weil number'),
                           ('structure', 'possible groups of rational points')):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument('--poly', help='ascending coefficients, e.g. [3,0,1]')
        src.add_argument('--weil', help='m=<int>,nu=<int>')
        field_args(p)

    p = sub.add_parser('enumerate', parents=[fmt], help='all classes of dimension <= d-max')
    field_args(p)
    p.add_argument('--d-max', type=int, default=1)

    p = sub.add_parser('verify', parents=[fmt], help='run a verification suite')
    suites = p.add_subparsers(dest='suite', required=True, parser_class=_Parser)
    ec = suites.add_parser('ec', parents=[fmt], help='elliptic-curve sweep')
    ec.add_argument('--p-max', type=int, default=13)
    ec.add_argument('--s', default='1', help='comma-separated extension degrees')
    ec.add_argument('--samples', type=int, default=2000, help='curves per field above q = 50')
    ec.add_argument('--seed', type=int, default=0)
    ec.add_argument('--jobs', type=int, default=1)
    g2 = suites.add_parser('g2', parents=[fmt], help='genus-2 search for the type2 class')
    g2.add_argument('--p', type=int, default=5)
    g2.add_argument('--hits-only', action='store_true',
                    help='skip checking the other supersingular Jacobians met in the scan')
    suites.add_parser('orders', parents=[fmt], help='order-theory cross-validation')
    rt = suites.add_parser('roundtrip', parents=[fmt], help='Weil number round trip')
    rt.add_argument('--p-max', type=int, default=13)
    rt.add_argument('--s-max', type=int, default=2)
    rt.add_argument('--m-max', type=int, default=24)
    return parser


COMMANDS = {'classify': cmd_classify, 'structure': cmd_structure,
            'enumerate': cmd_enumerate, 'verify': cmd_verify}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    # the format flags share one action across subparsers, so the default is applied here
    if not hasattr(args, 'table'):
        args.table = False
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f'supersingular: error: {exc}', file=sys.stderr)
        return EXIT_USAGE
    except (NotSupersingularError, NotElementaryError, MultiplicityError) as exc:
        kind = {NotSupersingularError: 'not supersingular', NotElementaryError: 'not elementary',
                MultiplicityError: 'bad multiplicity'}[type(exc)]
        print(f'supersingular: {kind}: {exc}', file=sys.stderr)
        _emit({'kind': 'rejection', 'error': {'type': kind, 'message': str(exc)}}, args)
        return EXIT_REJECTED


if __name__ == '__main__':
    sys.exit(main())
