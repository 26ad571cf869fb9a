"""Completeness certifier for OEIS A051221, the values 10^x - y^2."""

__version__ = '1.0.0'
__author__ = 'a051221-certify contributors'

from a051221.core.enums import Ordering
from a051221.core.exact_arith import (
    MAX_ORACLE_EXPONENT,
    UNIT,
    UNIT_INVERSE,
    QuadInt,
    SignedPowerSubgroup,
    build_signed_subgroup,
    isqrt,
    mod_pow,
    perfect_square_root,
    quad_compare,
    quad_mul,
    quad_pow,
    unit_power,
)
from a051221.core.exceptions import (
    A051221Error,
    A051221InvariantError,
    A051221PrimeError,
    A051221ValidationError,
    A051221WidthError,
)
from a051221.known.models import KnownSet, Representation
from a051221.known.values import (
    even_exponent_min,
    known_set,
    known_set_stabilizes,
    oracle_scan,
)
from a051221.pell.models import FundamentalPair, ReductionResult
from a051221.pell.reduction import fundamental_pairs, in_reduction_box, reduce_solution
from a051221.recurrence.engine import (
    exact_t,
    joint_zero_residues,
    scan_joint,
    sequence_mod,
    zero_positions,
)
from a051221.recurrence.models import JointZeroScan, ResidueSequence, ZeroHitProfile
from a051221.verifier.enums import CounterexampleKind, ExitStatus
from a051221.verifier.models import (
    CandidateCertificate,
    Counterexample,
    PairCertificate,
    VerificationReport,
    VerifierConfig,
)
from a051221.verifier.runner import (
    Verifier,
    audit_report,
    cross_check,
    exclude_candidate,
    exclude_pair,
    find_counterexamples,
    verify_range,
)

__all__ = [
    'Verifier',
    'VerifierConfig',
    'verify_range',
    'exclude_candidate',
    'exclude_pair',
    'cross_check',
    'find_counterexamples',
    'audit_report',
    'QuadInt',
    'UNIT',
    'UNIT_INVERSE',
    'MAX_ORACLE_EXPONENT',
    'Ordering',
    'SignedPowerSubgroup',
    'isqrt',
    'perfect_square_root',
    'quad_mul',
    'quad_pow',
    'unit_power',
    'quad_compare',
    'mod_pow',
    'build_signed_subgroup',
    'KnownSet',
    'Representation',
    'known_set',
    'known_set_stabilizes',
    'even_exponent_min',
    'oracle_scan',
    'FundamentalPair',
    'ReductionResult',
    'fundamental_pairs',
    'in_reduction_box',
    'reduce_solution',
    'ResidueSequence',
    'ZeroHitProfile',
    'JointZeroScan',
    'sequence_mod',
    'zero_positions',
    'scan_joint',
    'joint_zero_residues',
    'exact_t',
    'PairCertificate',
    'CandidateCertificate',
    'VerificationReport',
    'Counterexample',
    'CounterexampleKind',
    'ExitStatus',
    'A051221Error',
    'A051221ValidationError',
    'A051221PrimeError',
    'A051221WidthError',
    'A051221InvariantError',
]
