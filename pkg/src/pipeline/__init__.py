"""Pipeline module - check suites, their runner and the CLI commands."""

from src.pipeline.orchestrator import (
    CLI, CheckCase, CaseOutcome, RunReport, CheckRunner,
    PASS, FAIL, HYPOTHESIS_FAILED, ERROR, SKIPPED,
)
from src.pipeline.suites import SUITES, SUITE_NAMES, build_suite
from src.pipeline.commands import (
    COMPUTE_KINDS, ORACLE_NAMES, Target, load_target, family_report, compute_report, oracle_report,
)
from src.pipeline.render import render_table

__all__ = [
    'CLI', 'CheckCase', 'CaseOutcome', 'RunReport', 'CheckRunner',
    'PASS', 'FAIL', 'HYPOTHESIS_FAILED', 'ERROR', 'SKIPPED',
    'SUITES', 'SUITE_NAMES', 'build_suite',
    'COMPUTE_KINDS', 'ORACLE_NAMES', 'Target', 'load_target', 'family_report', 'compute_report', 'oracle_report',
    'render_table',
]
