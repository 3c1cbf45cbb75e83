#!/usr/bin/env python3

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional, Tuple

from src.config import DEFAULT_CONFIG, SUITES, Config
from src.convex import CONVEX, MODES, hull_finite, homogenized_matrix, member_conv_stringent
from src.errors import ParseError, PreconditionError
from src.fourier_motzkin import (FarkasCertificate, eliminate, farkas, feasible_strict, verify_certificate)
from src.halfspace import (CLOSED, KINDS, OPEN, closed_hs_separate_sign, enumerate_open_hs_containing,
                           halfspace_points, open_hs_separate, query, stringent_decomposition_check)
from src.hemispace import kakutani_separate
from src.oracle import oracle_hull, run_suite
from src.parsing import (format_system, load_system, parse_affine_form, parse_instance, parse_point,
                         parse_points, resolve_table)
from src.plot import plot_grid
from src.points import sorted_points
from src.tables import load_table
from src.utils import dump_json, print_error, setup_logging
from src.validation import Validator

logger = logging.getLogger('hyperconvex')

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SUITE_FAILED = 2


class Hyperconvex:
    """One method per subcommand; each returns the JSON-ready result and an exit code"""

    def __init__(self, verbose: bool = False, validator: Validator = None):
        self.verbose = verbose
        self.validator = validator or Validator(verbose)

    def hull(self, args) -> Tuple[Dict, int]:
        f = parse_instance(args.hyperfield)
        T = parse_points(args.points, f)
        if args.oracle:
            points = sorted_points(list(oracle_hull(T, args.mode)))
        else:
            points = hull_finite(T, args.mode, args.include_zero, field=f, dim=args.d).sorted()
        return {'hyperfield': f.key, 'mode': args.mode, 'count': len(points),
                'points': [str(p) for p in points]}, EXIT_OK

    def member(self, args) -> Tuple[Dict, int]:
        f = parse_instance(args.hyperfield)
        T = parse_points(args.points, f)
        q = parse_point(args.point, f)
        if args.verify:
            cert = FarkasCertificate.from_dict(f, _read_json(args.verify)['certificate'])
            return self._verified(verify_certificate(homogenized_matrix(T, q), cert))
        if f.finite:
            return {'hyperfield': f.key, 'status': 'member' if q in hull_finite(T, field=f, dim=q.dim)
                    else 'not-member'}, EXIT_OK
        result = member_conv_stringent(T, q, args.try_row_orders)
        return {'hyperfield': f.key, **result.to_dict()}, EXIT_OK

    def separate(self, args) -> Tuple[Dict, int]:
        f = parse_instance(args.hyperfield)
        T = parse_points(args.points, f)
        p = parse_point(args.point, f)
        if args.closed:
            phi = closed_hs_separate_sign(T, p)
        else:
            phi = open_hs_separate(T, p, args.try_row_orders)
        return {'hyperfield': f.key, 'kind': CLOSED if args.closed else OPEN, 'form': str(phi)}, EXIT_OK

    def halfspace(self, args) -> Tuple[Dict, int]:
        f = parse_instance(args.hyperfield)
        if args.containing is not None:
            T = parse_points(args.containing, f)
            forms = enumerate_open_hs_containing(T, f, args.d, args.include_constant)
            return {'hyperfield': f.key, 'forms': [str(phi) for phi in forms]}, EXIT_OK
        if args.form is None:
            raise ParseError("halfspace needs --form or --containing")
        phi = parse_affine_form(args.form, f, args.d)
        if args.decomposition:
            return {'hyperfield': f.key, **stringent_decomposition_check(phi).to_dict()}, EXIT_OK
        if args.point is not None:
            p = parse_point(args.point, f)
            return {'hyperfield': f.key, 'form': str(phi), 'point': str(p), 'query': args.query,
                    'inside': query(phi, p, args.query)}, EXIT_OK
        points = sorted_points(halfspace_points(phi, args.query))
        return {'hyperfield': f.key, 'form': str(phi), 'query': args.query,
                'points': [str(p) for p in points]}, EXIT_OK

    def kakutani(self, args) -> Tuple[Dict, int]:
        f = parse_instance(args.hyperfield)
        A = parse_points(args.a, f) if args.a else []
        B = parse_points(args.b, f) if args.b else []
        X = kakutani_separate(A, B, f, args.d)
        return X.to_dict(), EXIT_OK

    def fm(self, args) -> Tuple[Dict, int]:
        M = load_system(args.system)
        f = M.field
        if args.verify:
            cert = FarkasCertificate.from_dict(f, _read_json(args.verify)['certificate'])
            return self._verified(verify_certificate(M, cert))
        if args.eliminate is not None:
            trace = eliminate(M, args.eliminate)
            result = trace[-1].result if trace else M
            return {'hyperfield': f.key, 'eliminated': len(trace), 'generic': all(s.generic for s in trace),
                    'system': format_system(result) if result.n else None}, EXIT_OK
        if args.feasible:
            return {'hyperfield': f.key, 'feasible': feasible_strict(M)}, EXIT_OK
        cert = farkas(M, args.try_row_orders)
        return {'hyperfield': f.key, 'certificate': cert.to_dict()}, EXIT_OK

    def check_axioms(self, args) -> Tuple[Dict, int]:
        t = load_table(resolve_table(args.table))
        report = self.validator.check_hyperfield_axioms(t)
        data = report.to_dict()
        if report.passed:
            data['orderings'] = [sorted(t.format_elem(t.elem(i)) for i in P) for P in self.validator.orderings(t)]
            data['stringent'] = self.validator.is_stringent(t)
        return data, EXIT_OK if report.passed else EXIT_ERROR

    def suite(self, args) -> Tuple[Dict, int]:
        config = Config(args)
        logger.debug("Config: %s", config.__dict__)
        f = parse_instance(config.hyperfield)
        options = {'try_row_orders': config.try_row_orders} if args.name == 'farkas' else {}
        report = run_suite(args.name, f, config.d, config.seed, config.trials, config.jobs, **options)
        return report.to_dict(config.timing), EXIT_OK if report.passed else EXIT_SUITE_FAILED

    def plot(self, args) -> Tuple[Dict, int]:
        f = parse_instance(args.hyperfield)
        sets = []
        for item in args.set or []:
            if '=' not in item:
                raise ParseError(f"Sets are given as NAME=POINTS, got {item!r}")
            name, text = item.split('=', 1)
            sets.append((name.strip(), parse_points(text, f) if text.strip() else []))
        if args.hull:
            if not sets:
                raise PreconditionError("--hull needs a set to take the hull of")
            name, points = sets[0]
            sets.append((f"hull({name})", hull_finite(points, field=f, dim=2).sorted()))
        plot_grid(f, sets, args.svg, args.title or '')
        return {'hyperfield': f.key, 'svg': args.svg, 'sets': [name for name, _ in sets]}, EXIT_OK

    def _verified(self, ok: bool) -> Tuple[Dict, int]:
        return {'verified': ok}, EXIT_OK if ok else EXIT_ERROR


def _read_json(path: str) -> Dict:
    try:
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"Cannot read certificate {path}: {e}")


def parse_args(argv: Optional[List[str]] = None):
    parser = argparse.ArgumentParser(description='Convexity over hyperfields')
    parser.add_argument('-v', '--verbose', action='store_true', help='Verbose output')
    parser.add_argument('--output', help='Also write the JSON result to this file')
    sub = parser.add_subparsers(dest='command', required=True)

    def instance(p, required=True):
        p.add_argument('--hyperfield', required=required, help='Instance: S, K, H5, Q, T@Q, TR@Q, QxZ, table:<path>')

    p = sub.add_parser('hull', help='Convex or conic hull over a finite hyperfield')
    instance(p)
    p.add_argument('--points', required=True, help="Points separated by ';'")
    p.add_argument('--mode', choices=MODES, default=CONVEX, help='Hull kind')
    p.add_argument('--include-zero', action='store_true', help='Add the origin to a conic hull')
    p.add_argument('--oracle', action='store_true', help='Use the brute-force combination oracle')
    p.add_argument('--d', type=int, help='Dimension, needed when no points are given')

    p = sub.add_parser('member', help='Hull membership with a Farkas certificate')
    instance(p)
    p.add_argument('--points', required=True, help="Points separated by ';'")
    p.add_argument('--point', required=True, help='Query point')
    p.add_argument('--try-row-orders', action='store_true', help='Search row orders on non-generic input')
    p.add_argument('--verify', help='Replay a certificate from an earlier member result')

    p = sub.add_parser('separate', help='Separate a point from a set by a halfspace')
    instance(p)
    p.add_argument('--points', required=True, help="Points separated by ';'")
    p.add_argument('--point', required=True, help='Point to separate')
    p.add_argument('--closed', action='store_true', help='Closed halfspace instead of open')
    p.add_argument('--try-row-orders', action='store_true', help='Search row orders on non-generic input')

    p = sub.add_parser('halfspace', help='Halfspace queries and enumeration')
    instance(p)
    p.add_argument('--form', help='Affine form, e.g. "X1 + X2 + -1"')
    p.add_argument('--point', help='Point to test')
    p.add_argument('--query', choices=KINDS, default=OPEN, help='Open, closed or variety')
    p.add_argument('--containing', help='List every open halfspace containing these points')
    p.add_argument('--include-constant', action='store_true', help='Keep constant forms when listing')
    p.add_argument('--decomposition', action='store_true', help='Check closed = open plus variety')
    p.add_argument('--d', type=int, help='Dimension')

    p = sub.add_parser('kakutani', help='Hemispace separating two disjoint convex sets')
    instance(p)
    p.add_argument('--a', help="First set, points separated by ';'")
    p.add_argument('--b', help="Second set, points separated by ';'")
    p.add_argument('--d', type=int, required=True, help='Dimension')

    p = sub.add_parser('fm', help='Fourier-Motzkin elimination on a system file')
    p.add_argument('system', help='System file')
    group = p.add_mutually_exclusive_group()
    group.add_argument('--eliminate', type=int, help='Eliminate this many trailing variables')
    group.add_argument('--feasible', action='store_true', help='Decide strict feasibility')
    group.add_argument('--farkas', action='store_true', help='Kernel or separator certificate (default)')
    group.add_argument('--verify', help='Replay a certificate from an earlier fm result')
    p.add_argument('--try-row-orders', action='store_true', help='Search row orders on non-generic input')

    p = sub.add_parser('check-axioms', help='Check a table file against the hyperfield axioms')
    p.add_argument('table', help='Table file (.hf)')

    p = sub.add_parser('suite', help='Run a theorem suite')
    p.add_argument('--name', choices=SUITES, required=True, help='Suite')
    p.add_argument('--config', default=DEFAULT_CONFIG, help='Config file path')
    instance(p, required=False)
    p.add_argument('--d', type=int, help='Dimension')
    p.add_argument('--seed', type=int, help='PRNG seed (overrides HYPERCONVEX_SEED)')
    p.add_argument('--trials', type=int, help='Sampled cases')
    p.add_argument('--jobs', type=int, help='Worker processes')
    p.add_argument('--try-row-orders', action='store_true', default=None, help='Search row orders (farkas)')
    p.add_argument('--timing', action='store_true', default=None, help='Report elapsed time')

    p = sub.add_parser('plot', help='SVG grid of point sets in H^2')
    instance(p)
    p.add_argument('--set', action='append', help="NAME=POINTS, repeatable")
    p.add_argument('--hull', action='store_true', help='Also draw the hull of the first set')
    p.add_argument('--title', help='Figure title')
    p.add_argument('--svg', required=True, help='Output SVG path')
    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    setup_logging(args.verbose)
    app = Hyperconvex(verbose=args.verbose)
    handler = getattr(app, args.command.replace('-', '_'))
    try:
        data, code = handler(args)
    except ValueError as e:
        logger.debug("Command failed", exc_info=True)
        print_error(e)
        return EXIT_ERROR
    print(dump_json(data, getattr(args, 'output', None)))
    return code


if __name__ == '__main__':
    sys.exit(main())
