"""Shared fixtures."""

import os

import pytest

from a051221.verifier.models import VerifierConfig
from a051221.verifier.runner import verify_range


def _jobs():
    return max(1, min(4, os.cpu_count() or 1))


@pytest.fixture(scope='session')
def small_config():
    return VerifierConfig(value_bound=50)


@pytest.fixture(scope='session')
def small_report(small_config):
    return verify_range(small_config)


@pytest.fixture(scope='session')
def full_report():
    return verify_range(VerifierConfig(), jobs=_jobs())


@pytest.fixture(scope='session')
def first_prime_only_report():
    return verify_range(VerifierConfig(prime_list=(160001,)), jobs=_jobs())


@pytest.fixture(scope='session')
def fallback_report():
    return verify_range(VerifierConfig(value_min=150, value_bound=160))
