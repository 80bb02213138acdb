"""Command line front end.

Every command builds a :py:class:`~qzcodes.report.Report` and prints it; the
exit code is 0 only if every check passed.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy

from qzcodes import __version__
from qzcodes.code_store import CodeStore
from qzcodes.common import Convention, GateKind, OutputFormat, ShiftClockLabeling
from qzcodes.config import RunConfig
from qzcodes.converters.generator_matrix import read_generator_file
from qzcodes.cyclotomic import CycInt
from qzcodes.errorbasis import (build_egner, build_shift_clock, index_group, normalize_det, projective_closure,
                                tensor_basis, verify_expansion, verify_nice, verify_orthonormal, verify_very_nice)
from qzcodes.errors import NotSelfDual, QzCodesError
from qzcodes.exactmat import DenseMatrix
from qzcodes.qcode import (PuncturedQuantumCode, build_code, build_decoder, distance_certificate,
                           kl_check_exhaustive, kl_check_fast, sweep, verify_eigenspace)
from qzcodes.report import Report
from qzcodes.standardcodes import StandardCode
from qzcodes.transversal import (error_group_action, logical_cadd, logical_increment, logical_phase,
                                 transversal_fourier, verify_logical_action, verify_logical_commutation)
from qzcodes.zncodes import LinearCodeZn, min_weight

logger = logging.getLogger(__name__)

_SWEEP = re.compile(r'^\s*(weight|all)\s*<=\s*(\d*)\s*(e?)\s*$')


def _modulus(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('expected an integer, got \'{0:s}\''.format(text)) from None
    if value < 2:
        raise argparse.ArgumentTypeError('n must be at least 2, got {0:d}'.format(value))
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('expected an integer, got \'{0:s}\''.format(text)) from None
    if value < 0:
        raise argparse.ArgumentTypeError('expected a non-negative integer, got {0:d}'.format(value))
    return value


def sweep_weight(text: str, e: int) -> int:
    """Maximum error weight of a sweep given as `weight<=e`, `all<=2e` or
    with an explicit number such as `all<=2`"""
    match = _SWEEP.match(text)
    if match is None:
        raise ValueError('sweep must look like \'weight<=e\' or \'all<=2e\', got \'{0:s}\''.format(text))
    factor, symbolic = match.group(2), match.group(3)
    if symbolic:
        return (int(factor) if factor else 1) * e
    if not factor:
        raise ValueError('sweep bound missing in \'{0:s}\''.format(text))
    return int(factor)


def read_classical(source: str, config: RunConfig) -> LinearCodeZn:
    """Generator file path, or the identifier of a standard code"""
    path = Path(source)
    if path.is_file():
        return read_generator_file(path, config)
    try:
        return StandardCode.from_identifier(source).code(config)
    except ValueError:
        raise FileNotFoundError('\'{0:s}\' is neither a generator file nor a standard code'.format(source)) from None


def load_code(args, config: RunConfig) -> PuncturedQuantumCode:
    if getattr(args, 'code', None):
        with CodeStore(args.code, 'r', engine=args.engine, config=config) as store:
            return store.load()
    if not getattr(args, 'c', None):
        raise ValueError('either --code or --c is required')
    c = read_classical(args.c, config)
    d = read_classical(args.d, config) if getattr(args, 'd', None) else None
    return build_code(c, d, Convention.from_identifier(getattr(args, 'convention', 'auto')), config)


def _random_operator(rng: numpy.random.Generator, n: int, config: RunConfig) -> DenseMatrix:
    return DenseMatrix([[CycInt(n, rng.integers(-3, 4, size=n).tolist()) for _ in range(n)] for _ in range(n)], config)


def cmd_basis(args, config: RunConfig, report: Report) -> Report:
    if args.action == 'egner':
        with report.phase('egner'):
            egner = build_egner()
        report.extend(egner.checks)
        report.section('egner', {'group_order': egner.group_order, 'center': len(egner.center),
                                 'representatives': len(egner.basis)})
        return report

    if args.shift_clock is None:
        raise ValueError('basis {0:s} needs --shift-clock n'.format(args.action))
    with report.phase('build'):
        basis = build_shift_clock(args.shift_clock, ShiftClockLabeling(args.labeling))
        single = basis
        for _ in range(args.tensor - 1):
            basis = tensor_basis(basis, single, config)
        if args.normalize_det:
            basis = normalize_det(basis)
    report.section('basis', {'name': basis.name, 'dim': basis.dim, 'size': len(basis), 'labels': basis.labels})

    with report.phase('orthonormal'):
        report.add(verify_orthonormal(basis))
    if args.action == 'build':
        return report

    with report.phase('nice'):
        sc = verify_nice(basis, config)
        group = index_group(sc)
    report.check('nice', True, None, {'abelian': sc.is_abelian()})
    report.extend(check for check in group.checks if check.name != 'abelian')
    report.section('index_group', {'order': group.order, 'abelian': group.abelian})

    very_nice = verify_very_nice(basis, sc, config)
    if args.very_nice:
        report.add(very_nice)
    else:
        report.section('very_nice', very_nice.passed)

    if basis.is_monomial and basis.dim ** 3 <= config.ambient_cap:
        with report.phase('closure'):
            closure = projective_closure(basis)
        report.check('projective quotient = n^2', closure.quotient == basis.dim ** 2, None,
                     {'order': closure.order, 'scalars': closure.scalars})

    if args.expansions:
        rng = numpy.random.default_rng(args.seed)
        with report.phase('expansion'):
            failures = [k for k in range(args.expansions)
                        if not verify_expansion(_random_operator(rng, basis.dim, config), basis, config).passed]
        report.check('expansion of {0:d} random operators'.format(args.expansions), not failures,
                     failures[0] if failures else None)
    return report


def _code_checks(code: PuncturedQuantumCode, args, config: RunConfig, report: Report) -> None:
    with report.phase('eigenspace'):
        eigenspace = verify_eigenspace(code)
    report.extend(eigenspace.checks)
    with report.phase('knill-laflamme'):
        kl = kl_check_exhaustive(code, args.e, config=config) if args.exhaustive else kl_check_fast(code, args.e, config)
    report.add(kl.to_check())
    report.section('lambda_table', kl.lambda_table())
    with report.phase('distance'):
        certificate = distance_certificate(code, args.e, config)
    report.extend(certificate.checks)


def cmd_code(args, config: RunConfig, report: Report) -> Report:
    with report.phase('build'):
        code = load_code(args, config)
    report.section('code', code.to_dict())
    report.section('min_weights', {"C'": min_weight(code.c_prime), "D'": min_weight(code.d_prime)})

    if args.action == 'build':
        report.extend(verify_eigenspace(code).checks)
        if args.out:
            with CodeStore(args.out, 'w', engine=args.engine) as store:
                store.save(code)
        return report

    if args.action == 'check':
        _code_checks(code, args, config, report)
        return report

    if args.action == 'decode-table':
        with report.phase('decoder'):
            decoder = build_decoder(code, args.e, config=config)
        report.check('decoder syndromes', len(decoder) == code.n ** decoder.syndrome_length or decoder.strict, None,
                     {'entries': len(decoder), 'syndromes': code.n ** decoder.syndrome_length})
        report.section('decode_table', [{'syndrome': list(syndrome), 'correction': correction}
                                        for syndrome, correction in sorted(decoder.table.items())])
        return report

    return cmd_simulate(args, config, report, code)


def cmd_simulate(args, config: RunConfig, report: Report, code: Optional[PuncturedQuantumCode] = None) -> Report:
    if code is None:
        with report.phase('build'):
            code = load_code(args, config)
        report.section('code', code.to_dict())
    max_weight = sweep_weight(args.sweep, args.e)
    with report.phase('decoder'):
        decoder = build_decoder(code, args.e, config=config)
    with report.phase('sweep'):
        correctable = sweep(code, decoder, min(max_weight, args.e), config)
        result = sweep(code, decoder, max_weight, config) if max_weight > args.e else correctable
    report.section('sweep', result)

    report.check('recovered every error of weight <= {0:d}'.format(correctable.max_weight),
                 correctable.recovered == correctable.tried, None,
                 {'tried': correctable.tried, 'recovered': correctable.recovered})
    report.check('residuals are logical error indices', result.invalid == 0, None, {'invalid': result.invalid})
    return report


def cmd_transversal(args, config: RunConfig, report: Report) -> Report:
    with report.phase('build'):
        code = load_code(args, config)
    report.section('code', code.to_dict())
    kinds = [kind for kind in GateKind if kind is not GateKind.CUSTOM] if args.gate == 'all' \
        else [GateKind.from_identifier(args.gate)]
    actions = {}
    for kind in kinds:
        with report.phase(kind.value):
            if kind is GateKind.INCREMENT:
                action = verify_logical_action(code, logical_increment(code))
            elif kind is GateKind.PHASE:
                action = verify_logical_action(code, logical_phase(code))
            elif kind is GateKind.FOURIER:
                try:
                    _, action = transversal_fourier(code, config)
                except NotSelfDual:
                    if args.gate != 'all':
                        raise
                    report.section('fourier', 'skipped, C is not self-dual')
                    continue
            else:
                action = verify_logical_action(code, logical_cadd(code))
        report.extend(action.checks)
        actions[kind.value] = action

    if args.gate in ('all', 'increment', 'phase'):
        with report.phase('error group'):
            report.add(verify_logical_commutation(code))
            for a in range(code.n):
                for b in range(code.n):
                    action = error_group_action(code, a, b)
                    report.check('logical E({0:d},{1:d})'.format(a, b), action.passed)
    report.section('logical_actions', actions)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='qzcodes', description='Exact checks of error bases and quantum codes over Z_n')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more logging on stderr (repeatable)')
    parser.add_argument('--format', choices=[f.value for f in OutputFormat], default=None)
    parser.add_argument('--no-timing', action='store_true', help='leave the timing block out of JSON output')
    parser.add_argument('--strict', action='store_true', default=None, help='strict decoder: no fill beyond weight e')
    parser.add_argument('--ambient-cap', type=int, default=None)
    parser.add_argument('--dense-cap', type=int, default=None)
    parser.add_argument('--scan-cap', type=int, default=None)
    parser.add_argument('--kl-table-cap', type=int, default=None)
    commands = parser.add_subparsers(dest='command', required=True)

    basis = commands.add_parser('basis', help='error bases')
    basis.add_argument('action', choices=['build', 'verify', 'egner'])
    basis.add_argument('--shift-clock', type=_modulus, metavar='n')
    basis.add_argument('--labeling', choices=[labeling.value for labeling in ShiftClockLabeling], default='shift')
    basis.add_argument('--tensor', type=int, default=1, metavar='k', help='k-fold tensor power')
    basis.add_argument('--normalize-det', action='store_true')
    basis.add_argument('--very-nice', action='store_true', help='count the very nice check in the verdict')
    basis.add_argument('--expansions', type=_non_negative, default=0, metavar='count')
    basis.add_argument('--seed', type=int, default=0)
    basis.set_defaults(handler=cmd_basis)

    def code_source(sub):
        sub.add_argument('--code', help='stored code written by \'code build --out\'')
        sub.add_argument('--c', help='generator file or standard code name for C')
        sub.add_argument('--d', help='generator file or standard code name for D (default: dual of C)')
        sub.add_argument('--convention', choices=[c.value for c in Convention], default='auto')
        sub.add_argument('--engine', choices=['json', 'file'], default='json')

    code = commands.add_parser('code', help='punctured quantum codes')
    code.add_argument('action', choices=['build', 'check', 'decode-table', 'simulate'])
    code_source(code)
    code.add_argument('--out', help='store the built code here')
    code.add_argument('--e', type=_non_negative, default=1)
    code.add_argument('--exhaustive', action='store_true')
    code.add_argument('--sweep', default='weight<=e')
    code.set_defaults(handler=cmd_code)

    simulate = commands.add_parser('simulate', help='decode every low weight error')
    code_source(simulate)
    simulate.add_argument('--e', type=_non_negative, default=1)
    simulate.add_argument('--sweep', default='weight<=e')
    simulate.set_defaults(handler=cmd_simulate)

    transversal = commands.add_parser('transversal', help='transversal logical gates')
    transversal.add_argument('action', choices=['verify'])
    code_source(transversal)
    transversal.add_argument('--gate', choices=[k.value for k in GateKind if k is not GateKind.CUSTOM] + ['all'],
                             default='all')
    transversal.set_defaults(handler=cmd_transversal)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')

    try:
        config = RunConfig.from_env().replace(
            ambient_cap=args.ambient_cap, dense_dim_cap=args.dense_cap, scan_cap=args.scan_cap,
            kl_table_cap=args.kl_table_cap, strict_decoder=args.strict,
            output_format=None if args.format is None else OutputFormat.from_identifier(args.format))
        report = args.handler(args, config, Report(__version__, argv))
    except (QzCodesError, ValueError, TypeError, OSError) as error:
        parser.exit(2, '{0:s}: error: {1!s}\n'.format(parser.prog, error))

    if config.output_format is OutputFormat.TEXT:
        print(report.to_text())
    else:
        print(report.to_json(include_timing=not args.no_timing))
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
