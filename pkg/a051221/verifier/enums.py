"""Enumeration types for the verifier and its command-line front end."""

from __future__ import annotations

from enum import IntEnum


class ExitStatus(IntEnum):
    """Process exit codes of the a051221 command."""

    COMPLETE = 0
    """
    Every candidate was excluded (or the command succeeded).
    """

    INCONCLUSIVE = 2
    """
    Some pair stayed inconclusive for every configured prime.
    """

    INVALID_CONFIGURATION = 3
    """
    Flags or inputs violate the configuration contract; no work was done.
    """

    INVARIANT_VIOLATION = 4
    """
    An internal invariant failed, or an audit found a discrepancy.
    """


class CounterexampleKind(IntEnum):
    """What the representation oracle contradicted."""

    EXCLUDED_BUT_REPRESENTED = 1
    """
    A candidate reported as excluded has a representation 10^x - y^2.
    """

    KNOWN_BUT_UNREPRESENTED = 2
    """
    A known value has no representation within the known exponent cap.
    """
