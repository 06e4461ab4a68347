'''Command line front end: ``sigma7 <subcommand> ...`` or ``python -m sigma7 ...``.

Exit codes: 0 success, 1 parse or validation error, 2 single suspension requested outside
its range, 3 verification failure.
'''
import argparse
import json
import sys

from sigma7.abelian import localize_away_from_2
from sigma7.checker import verify_homology, fuzz_verify
from sigma7.corpus import load_corpus, run_corpus
from sigma7.decompose import decompose, stage, suspend_through_bundles
from sigma7.exceptions import NeedsDoubleSuspension
from sigma7.invariants import validate
from sigma7.reduce import ReductionVector, canonical_form
from sigma7.tables import pi_moore, pi_sphere, smash_moore, smash_citation, maps_from_moore, table_entries
from sigma7.wedge import parse_wedge

EXIT_OK, EXIT_INPUT, EXIT_DOUBLE, EXIT_VERIFY = 0, 1, 2, 3

class _Parser(argparse.ArgumentParser):
    def error(self, message): #argparse would exit with 2, which is reserved
        self.print_usage(sys.stderr)
        print(f'{self.prog}: error: {message}', file=sys.stderr)
        sys.exit(EXIT_INPUT)

def _ints(text, n=None):
    try:
        out = [int(x) for x in text.split(',')]
    except ValueError:
        raise ValueError(f'expected comma separated integers, got {text!r}')
    if n is not None and len(out)!=n:
        raise ValueError(f'expected {n} comma separated integers, got {text!r}')
    return out

def _read_descriptor(path):
    if path=='-':
        return validate(json.load(sys.stdin))
    with open(path) as f:
        return validate(json.load(f))

def _emit(obj, fmt):
    if fmt=='json':
        print(json.dumps(obj, indent=1))
    else:
        print(obj)

def cmd_decompose(args):
    result = decompose(_read_descriptor(args.input), args.suspensions)
    _emit(result.to_dict() if args.format=='json' else result.render(), args.format)
    return EXIT_OK

def cmd_stage(args):
    w = stage(_read_descriptor(args.input), args.level)
    _emit(w.to_json() if args.format=='json' else w.render(), args.format)
    return EXIT_OK

def cmd_suspend(args):
    w = suspend_through_bundles(parse_wedge(args.wedge), args.times)
    _emit(w.to_json() if args.format=='json' else w.render(), args.format)
    return EXIT_OK

def cmd_verify(args):
    desc = _read_descriptor(args.input)
    result = decompose(desc, args.suspensions)
    report = verify_homology(desc, result)
    if args.format=='json':
        rows = [{'degree':k, 'expected':str(e), 'computed':str(c), 'ok':ok} for k,e,c,ok in report.rows]
        _emit({'pass':report.passed, 'wedge':result.render(), 'rows':rows, 'trace':report.trace}, 'json')
    else:
        print(result.render())
        print(report.table())
    return EXIT_OK if report.passed else EXIT_VERIFY

def cmd_reduce(args):
    v = ReductionVector(_ints(args.entries))
    form, witness = canonical_form(v, witness=True)
    print(form)
    for move in witness:
        print(move)
    return EXIT_OK

def cmd_tables(args):
    if args.table=='pi':
        n, p, e = _ints(args.moore, 3)
        entry = pi_moore(n, p, e, args.degree)
        print(entry)
        print(entry.citation)
    elif args.table=='sphere':
        entry = pi_sphere(args.n, args.degree)
        print(entry)
        print(entry.citation)
    elif args.table=='smash':
        m, p, r = _ints(args.left, 3)
        n, q, s = _ints(args.right, 3)
        print(smash_moore(m, p, r, n, q, s))
        print(smash_citation(p, q))
    elif args.table=='maps':
        group = localize_away_from_2(json.loads(args.group))
        target = parse_wedge(args.target)
        if len(target)!=1:
            raise ValueError(f'target must be a single sphere or Moore space, got {args.target!r}')
        result = maps_from_moore(args.source, group, target[0])
        print(result)
        if result.certificate_null_on_homology:
            print('maps trivial on homology are null-homotopic')
        for cite in result.citations:
            print(cite)
    else:
        for pattern, cite in table_entries():
            print(f'{pattern}: {cite}')
    return EXIT_OK

def cmd_corpus(args):
    entries = load_corpus(args.file)
    if args.action=='list':
        for entry in entries:
            levels = ','.join(str(k) for k in sorted(entry.expected))
            print(f'{entry.name} [{levels}] {entry.citation}')
        return EXIT_OK
    results = run_corpus(entries)
    failed = [r for r in results if not r[-1]]
    for entry, k, text, got, ok in results:
        print(f'{"ok  " if ok else "FAIL"} {entry.name} [{k}] {got}' + ('' if ok else f' (expected {text})'))
    print(f'{len(results)-len(failed)}/{len(results)} golden cases pass')
    return EXIT_VERIFY if failed else EXIT_OK

def cmd_fuzz(args):
    summary = fuzz_verify(budget=args.budget, seed=args.seed, verbose=args.verbose)
    for desc, reason in summary['failures']:
        print(f'{reason}: {desc}')
    return EXIT_VERIFY if summary['failures'] else EXIT_OK

def build_parser():
    parser = _Parser(prog='sigma7', description='Suspension splittings of simply connected closed 7-manifolds away from 2')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('decompose', help='decompose the (double) suspension of a descriptor')
    p.add_argument('--input', required=True, help='descriptor JSON file, - for stdin')
    p.add_argument('--suspensions', type=int, choices=[1, 2], default=1)
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser('stage', help='suspension of the homology skeleton M_(level)')
    p.add_argument('--input', required=True)
    p.add_argument('--level', type=int, choices=[3, 4, 5], required=True)
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.set_defaults(func=cmd_stage)

    p = sub.add_parser('suspend', help='suspend a wedge given as text; bundle atoms M(rho,3^nu) are split on the way')
    p.add_argument('--wedge', required=True, help='e.g. "S^3 v M(1,9)"')
    p.add_argument('--times', type=int, default=1)
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.set_defaults(func=cmd_suspend)

    p = sub.add_parser('verify', help='decompose and check the homology of the result')
    p.add_argument('--input', required=True)
    p.add_argument('--suspensions', type=int, choices=[1, 2], default=1)
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('reduce-vector', help='canonical form of a Z/3 attaching vector with its witness moves')
    p.add_argument('--entries', required=True, help='comma separated entries, e.g. 0,1,2,1')
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser('tables', help='homotopy group tables')
    tables = p.add_subparsers(dest='table', required=True)
    t = tables.add_parser('pi', help='pi_k(P^n(p^e))')
    t.add_argument('--moore', required=True, help='n,p,e')
    t.add_argument('--degree', type=int, required=True)
    t = tables.add_parser('sphere', help='pi_k(S^n)')
    t.add_argument('--n', type=int, required=True)
    t.add_argument('--degree', type=int, required=True)
    t = tables.add_parser('smash', help='smash product of two Moore spaces')
    t.add_argument('--left', required=True, help='m,p,r')
    t.add_argument('--right', required=True, help='n,q,s')
    t = tables.add_parser('maps', help='[P^n(A), X] from the universal coefficient sequence')
    t.add_argument('--source', type=int, required=True, help='n of P^n(A)')
    t.add_argument('--group', required=True, help='A as JSON, e.g. \'{"torsion": [[3, 2]]}\' or 45')
    t.add_argument('--target', required=True, help='a sphere or Moore space, e.g. S^4 or P^5(9)')
    tables.add_parser('list', help='list the table entries with citations')
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser('corpus', help='golden worked cases')
    p.add_argument('action', choices=['list', 'run'])
    p.add_argument('--file', default=None, help='corpus JSON file (default: the bundled cases)')
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser('fuzz', help='verify random descriptors')
    p.add_argument('--budget', type=int, default=500)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--verbose', type=int, default=1)
    p.set_defaults(func=cmd_fuzz)
    return parser

def run(argv=None):
    '''Run the CLI on ``argv`` (defaults to ``sys.argv[1:]``) and return the exit code.'''
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NeedsDoubleSuspension as err:
        print(json.dumps({'error':'NeedsDoubleSuspension', 'reason':err.reason, 'message':str(err)}), file=sys.stderr)
        return EXIT_DOUBLE
    except (ValueError, OSError) as err:
        print(f'sigma7: error: {err}', file=sys.stderr)
        return EXIT_INPUT

def main():
    sys.exit(run())

if __name__=='__main__':
    main()
