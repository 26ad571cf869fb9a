"""Orchestration of the completeness proof over a candidate range.

Provides Verifier, the primary interface for running, cross-checking and
auditing a verification, and module-level functions for single steps.

The argument, per candidate c outside the known set:
    - even x >= 8 never reach [0, 2000], since 10^x - y^2 >= 2*10^(x/2) - 1;
    - an odd x = 2u + 1 solution gives 10 t^2 - s^2 = c with t = 10^u;
    - every such (s, t) is a unit multiple of a fundamental pair, up to sign
      and conjugation, so t = t_k = +-10^u for some pair and some k;
    - u >= d forces t_k == 0 mod 10^d, and +-10^u mod p lies in the signed
      power subgroup; a pair none of whose zero hits lands in the subgroup
      therefore never produces such t.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any

from a051221.core.exact_arith import build_signed_subgroup
from a051221.core.exceptions import A051221ValidationError
from a051221.known.models import KnownSet
from a051221.known.values import even_exponent_min, known_set, oracle_scan
from a051221.pell.models import FundamentalPair
from a051221.pell.reduction import fundamental_pairs
from a051221.recurrence.engine import scan_joint
from a051221.verifier.enums import CounterexampleKind
from a051221.verifier.models import (
    ZERO_SAMPLE_LIMIT,
    CandidateCertificate,
    Counterexample,
    PairCertificate,
    VerificationReport,
    VerifierConfig,
)

logger = logging.getLogger(__name__)

# Even exponents checked above the known cap by the dismissal argument.
EVEN_EXPONENT_SPAN = 5


def exclude_pair(pair: FundamentalPair, config: VerifierConfig) -> PairCertificate:
    """Try each configured prime in order until one excludes the pair.

    Returns:
        The certificate for the first excluding prime, or the inconclusive
        certificate (excluded == False) for the last prime tried.
    """
    if not config.prime_list:
        raise A051221ValidationError('at least one prime is required')

    tried: list[int] = []
    certificate: PairCertificate | None = None
    for prime in config.prime_list:
        tried.append(prime)
        scan = scan_joint(pair.a, pair.b, config.modulus_n, prime)
        subgroup = build_signed_subgroup(prime)
        residues = tuple(scan.residues)
        certificate = PairCertificate(
            pair           = pair,
            prime_used     = prime,
            joint_period   = scan.joint_period,
            zero_hit_count = len(scan.hits),
            zero_positions = tuple(scan.zero_positions),
            residues       = residues,
            subgroup_order = subgroup.order,
            excluded       = not any(residue in subgroup for residue in residues),
            primes_tried   = tuple(tried),
        )
        if certificate.excluded:
            if len(tried) > 1:
                logger.info('pair %s of c=%d excluded by fallback prime %d', pair, pair.c, prime)
            return certificate
        logger.debug('pair %s of c=%d: zero hit inside the subgroup mod %d', pair, pair.c, prime)

    logger.warning('pair %s of c=%d is inconclusive for primes %s', pair, pair.c, tried)
    assert certificate is not None
    return certificate


def exclude_candidate(c: int, config: VerifierConfig) -> CandidateCertificate:
    """Certify that c has no representation 10^x - y^2 with x above the known cap.

    Raises:
        A051221ValidationError: If c lies outside [1, config.value_bound].
    """
    if not 1 <= c <= config.value_bound:
        raise A051221ValidationError(f'candidate {c} outside [1, {config.value_bound}]')

    pairs = fundamental_pairs(c)
    if not pairs:
        return CandidateCertificate(c=c, vacuous=True, excluded=True)

    certificates = tuple(exclude_pair(pair, config) for pair in pairs)
    return CandidateCertificate(
        c        = c,
        pairs    = certificates,
        vacuous  = False,
        excluded = all(cert.excluded for cert in certificates),
    )


def even_exponent_bounds(config: VerifierConfig) -> list[tuple[int, int]]:
    """Check that even exponents above the known cap cannot reach the range.

    Raises:
        A051221ValidationError: If some even x in the checked span has
            2*10^(x/2) - 1 <= value_bound.
    """
    bounds = []
    first = config.known_x_max + 1
    for x in range(first, first + EVEN_EXPONENT_SPAN):
        if x % 2 or x < 2:
            continue
        smallest = even_exponent_min(x)
        if smallest <= config.value_bound:
            raise A051221ValidationError(
                f'even exponent x={x} reaches {smallest} <= {config.value_bound}; '
                'raise the known exponent cap'
            )
        bounds.append((x, smallest))
    return bounds


def candidates(config: VerifierConfig, known: KnownSet) -> list[int]:
    """Values in [value_min, value_bound] outside the known set, ascending."""
    return [c for c in range(config.value_min, config.value_bound + 1) if c not in known]


def find_counterexamples(
    report: VerificationReport,
    config: VerifierConfig,
) -> list[Counterexample]:
    """Run the independent oracle against every claim in a report."""
    witnesses = []
    for cert in report.certificates:
        if not cert.excluded:
            continue
        representation = oracle_scan(cert.c, config.oracle_x_limit)
        if representation is not None:
            witnesses.append(Counterexample(
                c              = cert.c,
                kind           = CounterexampleKind.EXCLUDED_BUT_REPRESENTED,
                representation = representation,
            ))

    for value in known_set(config.known_x_max, config.value_bound):
        if oracle_scan(value, config.known_x_max) is None:
            witnesses.append(Counterexample(
                c    = value,
                kind = CounterexampleKind.KNOWN_BUT_UNREPRESENTED,
            ))
    return witnesses


def cross_check(report: VerificationReport, config: VerifierConfig) -> bool:
    """True iff the oracle finds no representation contradicting the report."""
    witnesses = find_counterexamples(report, config)
    for witness in witnesses:
        logger.error('oracle counterexample: %s', witness)
    return not witnesses


def audit_report(report: VerificationReport) -> list[str]:
    """Re-derive every certificate in a report and list the discrepancies.

    Every recorded field is compared with a fresh derivation: the even
    exponent bounds, the candidate list, each pair certificate (primes tried,
    joint period, zero positions, residues, subgroup order, verdict) and the
    report-level fallback and inconclusive lists. An empty list means the
    report is exactly what a fresh run produces.

    Raises:
        A051221ValidationError: If the stored configuration is invalid.
    """
    config = report.config
    config.validate()
    problems: list[str] = []

    bounds = even_exponent_bounds(config)
    if list(report.even_exponent_bounds) != bounds:
        problems.append(
            f'even exponent bounds {list(report.even_exponent_bounds)}, recomputed {bounds}'
        )

    known = known_set(config.known_x_max, config.value_bound)
    if len(known) != report.known_set_size:
        problems.append(f'known set size {report.known_set_size}, recomputed {len(known)}')

    expected = candidates(config, known)
    listed = [cert.c for cert in report.certificates]
    if listed != expected:
        problems.append('candidate list differs from the complement of the known set')
    if report.candidates_checked != len(expected):
        problems.append(
            f'candidates_checked {report.candidates_checked}, recomputed {len(expected)}'
        )

    fallback: list[tuple[int, int]] = []
    inconclusive: list[tuple[int, int]] = []
    for cert in report.certificates:
        candidate_problems, fresh = _audit_candidate(cert, config)
        problems.extend(candidate_problems)
        fallback.extend(pc.pair.key for pc in fresh if pc.used_fallback)
        inconclusive.extend(pc.pair.key for pc in fresh if pc.inconclusive)

    if [pair.key for pair in report.fallback_pairs] != fallback:
        problems.append(f'fallback pairs differ, recomputed {fallback}')
    if [pair.key for pair in report.inconclusive_pairs] != inconclusive:
        problems.append(f'inconclusive pairs differ, recomputed {inconclusive}')
    return problems


def _audit_candidate(
    cert: CandidateCertificate,
    config: VerifierConfig,
) -> tuple[list[str], list[PairCertificate]]:
    """Compare one candidate certificate with a fresh one; also return the fresh pairs."""
    problems = []
    c = cert.c
    pairs = fundamental_pairs(c) if c >= 1 else []
    fresh = [exclude_pair(pair, config) for pair in pairs]

    if cert.vacuous != (not pairs):
        problems.append(f'c={c}: vacuous flag is wrong')
    if cert.excluded != all(pc.excluded for pc in fresh):
        problems.append(f'c={c}: excluded flag is wrong')
    if [p.key for p in pairs] != [pc.pair.key for pc in cert.pairs]:
        problems.append(f'c={c}: pair list differs from enumeration')
        return problems, fresh

    for stored, derived in zip(cert.pairs, fresh):
        label = f'c={c} pair {stored.pair}'
        if stored.primes_tried != derived.primes_tried or stored.prime_used != derived.prime_used:
            problems.append(
                f'{label}: primes tried {list(stored.primes_tried)} ending at '
                f'{stored.prime_used}, recomputed {list(derived.primes_tried)}'
            )
            continue
        if stored.joint_period != derived.joint_period:
            problems.append(
                f'{label}: joint period {stored.joint_period}, recomputed {derived.joint_period}'
            )
        if stored.zero_hit_count != derived.zero_hit_count or stored.residues != derived.residues:
            problems.append(f'{label}: zero hits or residues differ')
        if not _positions_agree(stored.zero_positions, derived.zero_positions):
            problems.append(f'{label}: zero positions differ')
        if stored.subgroup_order != derived.subgroup_order:
            problems.append(f'{label}: subgroup order differs')
        if stored.excluded != derived.excluded:
            problems.append(f'{label}: excluded flag is wrong')
    return problems, fresh


def _positions_agree(stored: Sequence[int], derived: Sequence[int]) -> bool:
    # A certificate read from JSON may hold only the capped explicit prefix.
    shown = len(stored)
    if shown not in (len(derived), min(len(derived), ZERO_SAMPLE_LIMIT)):
        return False
    return list(stored) == list(derived[:shown])


class Verifier:
    """Runs the proof for one configuration.

    With jobs > 1 candidates are certified in a process pool; results are
    merged in candidate order, so reports do not depend on scheduling.

    Args:
        config: The verification parameters (validated on construction).
        jobs: Degree of parallelism, at least 1.
    """

    def __init__(
        self,
        config: VerifierConfig | None = None,
        jobs: int = 1,
    ) -> None:
        self._config = config if config is not None else VerifierConfig()
        self._config.validate()
        if jobs < 1:
            raise A051221ValidationError(f'jobs must be at least 1, got {jobs}')
        self._jobs = jobs
        self._executor: ProcessPoolExecutor | None = None

    @property
    def config(self) -> VerifierConfig:
        return self._config

    # ── Proof steps ─────────────────────────────────────────────

    def known(self) -> KnownSet:
        """The known set T(known_x_max) on [0, value_bound]."""
        return known_set(self._config.known_x_max, self._config.value_bound)

    def exclude_candidate(self, c: int) -> CandidateCertificate:
        return exclude_candidate(c, self._config)

    def verify_range(self) -> VerificationReport:
        """Certify every candidate of the configured range.

        Raises:
            A051221ValidationError: If the even-exponent dismissal does not cover the range.
        """
        config = self._config
        bounds = even_exponent_bounds(config)
        known = self.known()
        todo = candidates(config, known)
        logger.info(
            'certifying %d candidates in [%d, %d] (%d known values, %d job(s))',
            len(todo), config.value_min, config.value_bound, len(known), self._jobs,
        )

        certificates = self._map_candidates(todo)

        fallback = [pc.pair for cert in certificates for pc in cert.pairs if pc.used_fallback]
        inconclusive = [pair for cert in certificates for pair in cert.inconclusive_pairs]
        report = VerificationReport(
            config               = config,
            known_set_size       = len(known),
            candidates_checked   = len(todo),
            certificates         = tuple(certificates),
            fallback_pairs       = tuple(fallback),
            inconclusive_pairs   = tuple(inconclusive),
            even_exponent_bounds = tuple(bounds),
        )
        logger.info(report.summary())
        return report

    # ── Audits ──────────────────────────────────────────────────

    def find_counterexamples(self, report: VerificationReport) -> list[Counterexample]:
        return find_counterexamples(report, self._config)

    def cross_check(self, report: VerificationReport) -> bool:
        return cross_check(report, self._config)

    def audit(self, report: VerificationReport) -> list[str]:
        return audit_report(report)

    # ── Internal helpers ────────────────────────────────────────

    def _map_candidates(self, todo: list[int]) -> list[CandidateCertificate]:
        if self._jobs == 1 or len(todo) < 2:
            return [exclude_candidate(c, self._config) for c in todo]

        if self._executor is None:
            self._executor = ProcessPoolExecutor(max_workers=self._jobs)
        futures = {
            self._executor.submit(exclude_candidate, c, self._config): index
            for index, c in enumerate(todo)
        }

        # One write-once slot per candidate, filled in completion order.
        slots: list[CandidateCertificate | None] = [None] * len(todo)
        for future in as_completed(futures):
            slots[futures[future]] = future.result()
        return [cert for cert in slots if cert is not None]

    def close(self) -> None:
        """Shut down the worker pool, if one was started."""
        if self._executor is not None:
            self._executor.shutdown()
            self._executor = None

    def __enter__(self) -> Verifier:
        return self

    def __exit__(self, *args: Any) -> None:
        self.close()


def verify_range(config: VerifierConfig | None = None, jobs: int = 1) -> VerificationReport:
    """Run a complete verification for config (default parameters if omitted)."""
    with Verifier(config, jobs=jobs) as verifier:
        return verifier.verify_range()
