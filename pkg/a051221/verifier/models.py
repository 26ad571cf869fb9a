"""Data models for verifier configuration, certificates and reports.

All models are plain dataclasses that serialize to and from the
certificate JSON document.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from a051221.core.exact_arith import MAX_ORACLE_EXPONENT, validate_prime
from a051221.core.exceptions import A051221ValidationError
from a051221.core.json_utils import (
    dump_document,
    get_bool,
    get_int,
    get_int_list,
    get_object_list,
)
from a051221.known.models import Representation
from a051221.pell.models import FundamentalPair
from a051221.recurrence.models import arithmetic_progression
from a051221.verifier.enums import CounterexampleKind

# Explicit zero-position lists in certificates are capped at this length.
ZERO_SAMPLE_LIMIT = 64


def decimal_exponent(n: int) -> int | None:
    """Return d with n == 10**d, or None when n is not a power of ten."""
    if n < 1:
        return None
    d = 0
    while n % 10 == 0:
        n //= 10
        d += 1
    return d if n == 1 else None


@dataclass(frozen=True)
class VerifierConfig:
    """Parameters of a verification run.

    Attributes:
        value_min: Smallest candidate value checked.
        value_bound: Largest candidate value checked (inclusive).
        known_x_max: Exponent cap of the brute-forced known set.
        modulus_n: The zero-hit modulus N = 10^d.
        prime_list: Primes tried in order for the subgroup test.
        oracle_x_limit: Exponent cap of the independent oracle cross-check.
    """

    value_min: int = 0
    value_bound: int = 2000
    known_x_max: int = 7
    modulus_n: int = 10_000
    prime_list: tuple[int, ...] = (160001, 1601)
    oracle_x_limit: int = MAX_ORACLE_EXPONENT

    @property
    def zero_digits(self) -> int:
        """d with N = 10^d; a zero hit forces t = +-10^u to have u >= d."""
        digits = decimal_exponent(self.modulus_n)
        if digits is None:
            raise A051221ValidationError(f'modulus N={self.modulus_n} is not a power of ten')
        return digits

    def validate(self) -> None:
        """Check every configuration invariant.

        Odd exponents x = 2u + 1 above known_x_max need u >= d for the
        zero-hit test to apply, so d may not exceed (known_x_max + 1) // 2.

        Raises:
            A051221ValidationError: On the first violated invariant.
        """
        if self.value_min < 0 or self.value_bound < self.value_min:
            raise A051221ValidationError(
                f'candidate range [{self.value_min}, {self.value_bound}] is empty or negative'
            )
        if self.known_x_max < 0:
            raise A051221ValidationError(f'known_x_max must be >= 0, got {self.known_x_max}')

        digits = self.zero_digits
        if digits < 1:
            raise A051221ValidationError('modulus N must be 10^d with d >= 1')
        if digits > (self.known_x_max + 1) // 2:
            raise A051221ValidationError(
                f'N=10^{digits} leaves odd exponents above {self.known_x_max} '
                f'with u < {digits} uncovered; lower N or raise the exponent cap'
            )

        if not self.prime_list:
            raise A051221ValidationError('at least one prime is required')
        for prime in self.prime_list:
            validate_prime(prime)

        if not self.known_x_max <= self.oracle_x_limit <= MAX_ORACLE_EXPONENT:
            raise A051221ValidationError(
                f'oracle exponent cap must lie in [{self.known_x_max}, {MAX_ORACLE_EXPONENT}], '
                f'got {self.oracle_x_limit}'
            )

    def to_dict(self) -> dict[str, Any]:
        return {
            'value_min':      self.value_min,
            'value_bound':    self.value_bound,
            'known_x_max':    self.known_x_max,
            'modulus_N':      self.modulus_n,
            'prime_list':     list(self.prime_list),
            'oracle_x_limit': self.oracle_x_limit,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerifierConfig:
        defaults = cls()
        return cls(
            value_min      = get_int(data, 'value_min', defaults.value_min),
            value_bound    = get_int(data, 'value_bound', defaults.value_bound),
            known_x_max    = get_int(data, 'known_x_max', defaults.known_x_max),
            modulus_n      = get_int(data, 'modulus_N', defaults.modulus_n),
            prime_list     = tuple(get_int_list(data, 'prime_list')) or defaults.prime_list,
            oracle_x_limit = get_int(data, 'oracle_x_limit', defaults.oracle_x_limit),
        )


@dataclass(frozen=True)
class PairCertificate:
    """Evidence that a pair admits no t_k = +-10^u with u >= d.

    A certificate with excluded == False is the inconclusive result: it
    records the last prime tried, whose subgroup met a residue.

    Attributes:
        pair: The fundamental pair.
        prime_used: The prime whose subgroup test is recorded.
        joint_period: Joint period of t_k mod N and mod prime_used.
        zero_hit_count: Number of k in one joint period with t_k == 0 mod N.
        zero_positions: Those k, ascending (possibly truncated when read from JSON).
        residues: t_k mod prime_used at those k, ascending k.
        subgroup_order: Size of {+-10^m mod prime_used}.
        excluded: True iff no residue lies in the subgroup.
        primes_tried: Every prime attempted, in order.
    """

    pair: FundamentalPair
    prime_used: int
    joint_period: int
    zero_hit_count: int
    zero_positions: tuple[int, ...]
    residues: tuple[int, ...]
    subgroup_order: int
    excluded: bool
    primes_tried: tuple[int, ...] = ()

    @property
    def inconclusive(self) -> bool:
        return not self.excluded

    @property
    def used_fallback(self) -> bool:
        """Excluded, but only by a prime after the first one tried."""
        return self.excluded and len(self.primes_tried) > 1

    def zero_positions_sample(self) -> dict[str, int] | list[int]:
        """Residue-class description of the hits, or an explicit capped list."""
        progression = arithmetic_progression(self.zero_positions, self.joint_period)
        if progression is not None and len(self.zero_positions) == self.zero_hit_count:
            offset, step = progression
            return {'offset': offset, 'modulus': step}
        return list(self.zero_positions[:ZERO_SAMPLE_LIMIT])

    def to_dict(self) -> dict[str, Any]:
        return {
            'a':                     self.pair.a,
            'b':                     self.pair.b,
            'prime':                 self.prime_used,
            'primes_tried':          list(self.primes_tried),
            'joint_period':          self.joint_period,
            'zero_hit_count':        self.zero_hit_count,
            'zero_positions_sample': self.zero_positions_sample(),
            'residues':              list(self.residues),
            'subgroup_order':        self.subgroup_order,
            'excluded':              self.excluded,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any], c: int) -> PairCertificate:
        joint_period = get_int(data, 'joint_period')
        sample = data.get('zero_positions_sample', [])
        if isinstance(sample, dict):
            step = get_int(sample, 'modulus')
            if step < 1:
                raise A051221ValidationError(f'zero position modulus must be positive, got {step}')
            positions = tuple(range(get_int(sample, 'offset'), joint_period, step))
        else:
            positions = tuple(get_int_list(data, 'zero_positions_sample'))

        prime = get_int(data, 'prime')
        return cls(
            pair           = FundamentalPair.from_dict(data, c),
            prime_used     = prime,
            joint_period   = joint_period,
            zero_hit_count = get_int(data, 'zero_hit_count', len(positions)),
            zero_positions = positions,
            residues       = tuple(get_int_list(data, 'residues')),
            subgroup_order = get_int(data, 'subgroup_order'),
            excluded       = get_bool(data, 'excluded'),
            primes_tried   = tuple(get_int_list(data, 'primes_tried')) or (prime,),
        )


@dataclass(frozen=True)
class CandidateCertificate:
    """Evidence that a candidate c has no representation beyond the known exponents.

    Attributes:
        c: The candidate value.
        pairs: One certificate per fundamental pair, sorted by b.
        vacuous: True when c has no fundamental pairs at all.
        excluded: vacuous, or every pair certificate excluded.
    """

    c: int
    pairs: tuple[PairCertificate, ...] = ()
    vacuous: bool = False
    excluded: bool = False

    @property
    def inconclusive_pairs(self) -> list[FundamentalPair]:
        return [cert.pair for cert in self.pairs if cert.inconclusive]

    def to_dict(self) -> dict[str, Any]:
        return {
            'c':        self.c,
            'vacuous':  self.vacuous,
            'excluded': self.excluded,
            'pairs':    [cert.to_dict() for cert in self.pairs],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CandidateCertificate:
        c = get_int(data, 'c')
        pairs = tuple(PairCertificate.from_dict(p, c) for p in get_object_list(data, 'pairs'))
        return cls(
            c        = c,
            pairs    = pairs,
            vacuous  = get_bool(data, 'vacuous'),
            excluded = get_bool(data, 'excluded'),
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a full range verification.

    Attributes:
        config: The configuration the run used.
        known_set_size: Size of the known set on [0, value_bound].
        candidates_checked: Number of candidates, i.e. range size minus known values in it.
        certificates: One certificate per candidate, ascending c.
        fallback_pairs: Pairs excluded only by a prime after the first.
        inconclusive_pairs: Pairs no configured prime could exclude.
        even_exponent_bounds: (x, smallest positive 10^x - y^2) for the dismissed even x.
    """

    config: VerifierConfig
    known_set_size: int
    candidates_checked: int
    certificates: tuple[CandidateCertificate, ...] = ()
    fallback_pairs: tuple[FundamentalPair, ...] = ()
    inconclusive_pairs: tuple[FundamentalPair, ...] = ()
    even_exponent_bounds: tuple[tuple[int, int], ...] = ()

    @property
    def is_complete(self) -> bool:
        """Whether every candidate is excluded."""
        return all(cert.excluded for cert in self.certificates)

    @property
    def excluded_count(self) -> int:
        return sum(1 for cert in self.certificates if cert.excluded)

    @property
    def claim(self) -> str:
        cfg = self.config
        return (
            f'no value of 10^x - y^2 in [{cfg.value_min}, {cfg.value_bound}] '
            f'outside T({cfg.known_x_max}) for any x >= {cfg.known_x_max + 1}'
        )

    def summary(self) -> str:
        """One-line human summary."""
        fallback = ' '.join(str(pair) for pair in self.fallback_pairs) or 'none'
        inconclusive = len(self.certificates) - self.excluded_count
        return (
            f'checked {self.candidates_checked} candidates: {self.excluded_count} excluded, '
            f'{inconclusive} inconclusive; fallback pairs: {fallback}'
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            'claim':                self.claim,
            'complete':             self.is_complete,
            'config':               self.config.to_dict(),
            'known_set_size':       self.known_set_size,
            'candidates_checked':   self.candidates_checked,
            'even_exponent_bounds': [
                {'x': x, 'min_value': value} for x, value in self.even_exponent_bounds
            ],
            'candidates':           [cert.to_dict() for cert in self.certificates],
            'fallback_pairs':       [[pair.a, pair.b] for pair in self.fallback_pairs],
            'inconclusive_pairs':   [[pair.a, pair.b] for pair in self.inconclusive_pairs],
        }

    def to_json(self) -> str:
        return dump_document(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerificationReport:
        certificates = tuple(
            CandidateCertificate.from_dict(item) for item in get_object_list(data, 'candidates')
        )
        owners = {cert.pair.key: cert.pair for cand in certificates for cert in cand.pairs}

        def _pairs(key: str) -> tuple[FundamentalPair, ...]:
            raw = data.get(key, [])
            if not isinstance(raw, list):
                raise A051221ValidationError(f'field {key!r} must be a list of [a, b]')
            pairs = []
            for item in raw:
                if not isinstance(item, list) or len(item) != 2:
                    raise A051221ValidationError(f'field {key!r} holds a malformed pair {item!r}')
                a, b = item
                pairs.append(owners.get((a, b), FundamentalPair(a=a, b=b, c=10 * b * b - a * a)))
            return tuple(pairs)

        bounds = tuple(
            (get_int(item, 'x'), get_int(item, 'min_value'))
            for item in get_object_list(data, 'even_exponent_bounds')
        )
        config_data = data.get('config', {})
        if not isinstance(config_data, dict):
            raise A051221ValidationError("field 'config' must be an object")

        return cls(
            config               = VerifierConfig.from_dict(config_data),
            known_set_size       = get_int(data, 'known_set_size'),
            candidates_checked   = get_int(data, 'candidates_checked'),
            certificates         = certificates,
            fallback_pairs       = _pairs('fallback_pairs'),
            inconclusive_pairs   = _pairs('inconclusive_pairs'),
            even_exponent_bounds = bounds,
        )


@dataclass(frozen=True)
class Counterexample:
    """An oracle witness contradicting a report.

    Attributes:
        c: The value concerned.
        kind: Which claim the witness contradicts.
        representation: The witness (x, y), when one exists.
    """

    c: int
    kind: CounterexampleKind
    representation: Representation | None = None

    def __str__(self) -> str:
        if self.representation is None:
            return f'c={self.c}: known value without a representation'
        rep = self.representation
        return f'c={self.c}: excluded but 10^{rep.x} - {rep.y}^2 = {self.c}'

