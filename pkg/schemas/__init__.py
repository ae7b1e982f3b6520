"""Schemas package for benchmark configuration and result records."""

from schemas.trial import TrialConfig, TrialRecord, NtSummary, BenchReport
from schemas.selftest import SelftestConfig, SuiteResult, SelftestReport

__all__ = [
    "TrialConfig",
    "TrialRecord",
    "NtSummary",
    "BenchReport",
    "SelftestConfig",
    "SuiteResult",
    "SelftestReport",
]
