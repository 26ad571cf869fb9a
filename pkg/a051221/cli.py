"""Command-line front end for the A051221 completeness certifier.

Subcommands:
    verify        certify a candidate range and write the JSON certificate
    example       print the full exclusion trace of one candidate
    known         write the known values as "index value" lines
    oracle-check  search representations 10^x - y^2 = c directly
    audit         re-derive a certificate file and run the oracle over it

Results go to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import NoReturn

from a051221 import __version__
from a051221.core.exact_arith import MAX_ORACLE_EXPONENT
from a051221.core.exceptions import A051221InvariantError, A051221ValidationError
from a051221.core.json_utils import load_document
from a051221.known.values import known_set, oracle_scan
from a051221.recurrence.engine import seeds
from a051221.recurrence.models import arithmetic_progression
from a051221.verifier.enums import ExitStatus
from a051221.verifier.models import CandidateCertificate, VerificationReport, VerifierConfig
from a051221.verifier.runner import Verifier, audit_report, cross_check, exclude_candidate

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)-15s | %(levelname)-8s | %(message)s'
TRACE_LIST_LIMIT = 64

_DEFAULTS = VerifierConfig()


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors map to the invalid-configuration exit code."""

    def error(self, message: str) -> NoReturn:
        raise A051221ValidationError(f'{self.prog}: {message}')


def _prime_list(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(part) for part in text.split(',') if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f'not a comma-separated prime list: {text!r}') from exc
    if not primes:
        raise argparse.ArgumentTypeError('the prime list is empty')
    return primes


def _config_from(args: argparse.Namespace) -> VerifierConfig:
    config = VerifierConfig(
        value_min      = args.min,
        value_bound    = args.max,
        known_x_max    = args.x_max,
        modulus_n      = args.modulus,
        prime_list     = args.primes,
        oracle_x_limit = args.oracle_x_max,
    )
    config.validate()
    return config


# ── Commands ─────────────────────────────────────────────────────


def cmd_verify(args: argparse.Namespace) -> ExitStatus:
    """Certify the configured range, cross-check it, and write the certificate."""
    config = _config_from(args)
    with Verifier(config, jobs=args.jobs) as verifier:
        report = verifier.verify_range()
        consistent = verifier.cross_check(report)

    if args.out is not None:
        Path(args.out).write_text(report.to_json(), encoding='utf-8')
        logger.info('certificate written to %s', args.out)

    print(report.summary())
    for pair in report.inconclusive_pairs:
        print(f'inconclusive: c={pair.c} pair {pair}')

    if not consistent:
        return ExitStatus.INVARIANT_VIOLATION
    if not report.is_complete:
        return ExitStatus.INCONCLUSIVE
    return ExitStatus.COMPLETE


def format_trace(cert: CandidateCertificate, config: VerifierConfig) -> list[str]:
    """Render the exclusion trace of one candidate as stable text lines."""
    lines = [f'c = {cert.c}', f'fundamental pairs: {len(cert.pairs)}']
    if cert.vacuous:
        lines.append('vacuous: no fundamental pairs')

    for pc in cert.pairs:
        pair = pc.pair
        lines.append(f'pair {pair}')
        t0, t1 = seeds(pair.a, pair.b)
        lines.append(f'  seeds: t0 = {t0}, t1 = {t1}')
        if len(pc.primes_tried) > 1:
            lines.append(f'  primes tried: {", ".join(str(p) for p in pc.primes_tried)}')
        lines.append(f'  prime: {pc.prime_used} (subgroup order {pc.subgroup_order})')
        lines.append(
            f'  joint period mod ({config.modulus_n}, {pc.prime_used}): {pc.joint_period}'
        )
        positions = _describe_positions(pc.zero_positions, pc.joint_period)
        lines.append(f'  zero hits: {pc.zero_hit_count}, k = {positions}')
        lines.append(f'  residues: {_join_capped(pc.residues)}')
        lines.append(f'  verdict: {"excluded" if pc.excluded else "inconclusive"}')

    lines.append(f'c = {cert.c}: {"excluded" if cert.excluded else "inconclusive"}')
    return lines


def _describe_positions(positions: Sequence[int], period: int) -> str:
    progression = arithmetic_progression(positions, period)
    if progression is not None:
        offset, step = progression
        return f'{offset} (mod {step})'
    return _join_capped(positions)


def _join_capped(values: Sequence[int]) -> str:
    if not values:
        return 'none'
    text = ', '.join(str(v) for v in values[:TRACE_LIST_LIMIT])
    if len(values) > TRACE_LIST_LIMIT:
        text += ', ...'
    return text


def cmd_example(args: argparse.Namespace) -> ExitStatus:
    """Print the exclusion trace of a single candidate."""
    config = _config_from(args)
    c = args.c
    lowest = max(config.value_min, 1)
    if not lowest <= c <= config.value_bound:
        raise A051221ValidationError(
            f'c={c} lies outside the candidate range [{lowest}, {config.value_bound}]'
        )

    if c in known_set(config.known_x_max, config.value_bound):
        witness = oracle_scan(c, config.known_x_max)
        detail = f' (10^{witness.x} - {witness.y}^2)' if witness is not None else ''
        raise A051221ValidationError(f'c={c} is in the known set{detail}; nothing to exclude')

    cert = exclude_candidate(c, config)
    for line in format_trace(cert, config):
        print(line)
    return ExitStatus.COMPLETE if cert.excluded else ExitStatus.INCONCLUSIVE


def cmd_known(args: argparse.Namespace) -> ExitStatus:
    """Write the known set in b-file layout."""
    values = known_set(args.x_max, args.max)
    text = '\n'.join(values.to_bfile_lines(args.offset)) + '\n'
    if args.out is not None:
        Path(args.out).write_text(text, encoding='utf-8')
        logger.info('%d known values written to %s', len(values), args.out)
    else:
        sys.stdout.write(text)
    return ExitStatus.COMPLETE


def cmd_oracle_check(args: argparse.Namespace) -> ExitStatus:
    """Search direct representations for one value or a range."""
    if args.c is not None:
        values = range(args.c, args.c + 1)
    else:
        values = range(args.min, args.max + 1)

    for c in values:
        representation = oracle_scan(c, args.x_max)
        if representation is None:
            print(f'c={c}: no representation with x <= {args.x_max}')
        else:
            print(f'c={c}: x={representation.x} y={representation.y}')
    return ExitStatus.COMPLETE


def cmd_audit(args: argparse.Namespace) -> ExitStatus:
    """Re-derive a certificate file and cross-check it with the oracle."""
    text = Path(args.certificate).read_text(encoding='utf-8')
    report = VerificationReport.from_dict(load_document(text))
    problems = audit_report(report)
    consistent = cross_check(report, report.config)

    for problem in problems:
        print(f'discrepancy: {problem}')
    print(f'audit: {len(problems)} discrepancies, oracle {"clean" if consistent else "FAILED"}')

    if problems or not consistent:
        return ExitStatus.INVARIANT_VIOLATION
    if not report.is_complete:
        return ExitStatus.INCONCLUSIVE
    return ExitStatus.COMPLETE


# ── Parser ───────────────────────────────────────────────────────


def _add_proof_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--min', type=int, default=_DEFAULTS.value_min,
                        help='smallest candidate value (default: %(default)s)')
    parser.add_argument('--max', type=int, default=_DEFAULTS.value_bound,
                        help='largest candidate value (default: %(default)s)')
    parser.add_argument('--x-max', type=int, default=_DEFAULTS.known_x_max,
                        help='exponent cap of the known set (default: %(default)s)')
    parser.add_argument('--modulus', type=int, default=_DEFAULTS.modulus_n,
                        help='zero-hit modulus N = 10^d (default: %(default)s)')
    parser.add_argument('--primes', type=_prime_list, default=_DEFAULTS.prime_list,
                        help='comma-separated primes, tried in order (default: 160001,1601)')
    parser.add_argument('--oracle-x-max', type=int, default=_DEFAULTS.oracle_x_limit,
                        help='exponent cap of the oracle cross-check (default: %(default)s)')


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-q', '--quiet', action='store_true', help='only log warnings')
    verbosity.add_argument('-v', '--verbose', action='store_true', help='log debug output')

    parser = _Parser(
        prog        = 'a051221',
        description = 'Certify the completeness of OEIS A051221 (10^x - y^2) on a value range.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', parents=[common], help='certify a candidate range')
    _add_proof_flags(verify)
    verify.add_argument('--out', type=Path, default=None, help='certificate JSON path')
    verify.add_argument('--jobs', type=int, default=1, help='worker processes (default: 1)')
    verify.set_defaults(func=cmd_verify)

    example = commands.add_parser('example', parents=[common], help='trace one candidate')
    _add_proof_flags(example)
    example.add_argument('--c', type=int, required=True, help='the candidate value')
    example.set_defaults(func=cmd_example)

    known = commands.add_parser('known', parents=[common], help='write the known list')
    known.add_argument('--x-max', type=int, default=_DEFAULTS.known_x_max)
    known.add_argument('--max', type=int, default=_DEFAULTS.value_bound)
    known.add_argument('--offset', type=int, default=0, help='index of the first line')
    known.add_argument('--out', type=Path, default=None, help='output path (default: stdout)')
    known.set_defaults(func=cmd_known)

    oracle = commands.add_parser('oracle-check', parents=[common],
                                 help='search representations directly')
    oracle.add_argument('--c', type=int, default=None, help='a single value to check')
    oracle.add_argument('--min', type=int, default=0)
    oracle.add_argument('--max', type=int, default=_DEFAULTS.value_bound)
    oracle.add_argument('--x-max', type=int, default=MAX_ORACLE_EXPONENT)
    oracle.set_defaults(func=cmd_oracle_check)

    audit = commands.add_parser('audit', parents=[common], help='re-derive a certificate file')
    audit.add_argument('--certificate', type=Path, required=True)
    audit.set_defaults(func=cmd_audit)

    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.INFO
    if getattr(args, 'quiet', False):
        level = logging.WARNING
    elif getattr(args, 'verbose', False):
        level = logging.DEBUG
    logging.basicConfig(format=LOG_FORMAT, level=level, stream=sys.stderr)
    logging.getLogger('a051221').setLevel(level)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line; returns the process exit status."""
    try:
        args = build_parser().parse_args(argv)
        _configure_logging(args)
        command: Callable[[argparse.Namespace], ExitStatus] = args.func
        return int(command(args))
    except A051221ValidationError as exc:
        print(f'error: {exc.message}', file=sys.stderr)
        return int(ExitStatus.INVALID_CONFIGURATION)
    except A051221InvariantError as exc:
        print(f'internal error: {exc.message}', file=sys.stderr)
        return int(ExitStatus.INVARIANT_VIOLATION)
    except OSError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return int(ExitStatus.INVALID_CONFIGURATION)
