"""
Check Orchestrator

LEARNING: Pipeline pattern, one runner for many independent checks

What this does:
- Collects the cases of a suite (see suites.py)
- Runs each case, sorting the outcome into pass / fail / hypothesis_failed /
  error, and skips cases above the size limit
- Aggregates outcomes in case order, whatever order the workers finish in
- Packs everything into a RunReport for the CLI
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from src.config import Settings, get_settings
from src.exceptions import HypothesisError, PosetTopError
from src.identities import IdentityCheck, jsonable

# Set up module logger
logger = logging.getLogger(__name__)

CLI = "python -m src.main"  # prefix of every reproducing command

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_FAILED = "hypothesis_failed"
ERROR = "error"
SKIPPED = "skipped"

STATUS_EMOJI = {PASS: "✅", FAIL: "❌", HYPOTHESIS_FAILED: "⚠️ ", ERROR: "❌", SKIPPED: "⏭️ "}


@dataclass
class CheckCase:
    """
    One reproducible check.

    Attributes:
        suite: Suite name (families, identities, ...)
        name: Case name, unique within the suite
        command: CLI line that recomputes the interesting side
        run: Computes both sides and returns an IdentityCheck
        size: Instance size compared against --max-size (0 = always run)
    """
    suite: str
    name: str
    command: str
    run: Callable[[], IdentityCheck]
    size: int = 0


@dataclass
class CaseOutcome:
    suite: str
    name: str
    status: str
    command: str
    lhs: Any = None
    rhs: Any = None
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self, timing: bool = False) -> Dict:
        out = {
            "suite": self.suite,
            "name": self.name,
            "status": self.status,
            "command": self.command,
            "detail": self.detail,
        }
        if self.status in (FAIL, ERROR):
            out["lhs"] = jsonable(self.lhs)
            out["rhs"] = jsonable(self.rhs)
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class RunReport:
    """
    Result of one CLI run.

    Wall time is measured but left out of to_dict() unless asked for, so
    identical inputs give identical JSON.
    """
    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    outputs: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0
    exact: bool = True

    def to_dict(self, timing: bool = False) -> Dict:
        out = {
            "command": self.command,
            "parameters": jsonable(self.parameters),
            "outputs": jsonable(self.outputs),
            "exact": self.exact,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


class CheckRunner:
    """
    Runs the cases of a check suite.

    LEARNING POINT:
    - Orchestrator pattern: the runner manages flow, the suites hold the math
    - A HypothesisError means a theorem does not apply to the instance; it is
      reported, never counted as a failure
    - Workers may finish in any order; outcomes are stored by case index
    """

    def __init__(self, suite: str = "all", max_size: Optional[int] = None, jobs: int = 1,
                 verbose: bool = True, settings: Optional[Settings] = None):
        """
        Args:
            suite: Suite name, see suites.SUITE_NAMES
            max_size: Skip cases larger than this (default from settings)
            jobs: Worker threads
            verbose: Print progress lines
            settings: Configuration (default: get_settings())

        Raises:
            PosetTopError: For an unknown suite name
        """
        from src.pipeline.suites import build_suite

        self.settings = settings or get_settings()
        self.suite = suite
        self.max_size = max_size if max_size is not None else self.settings.check_max_size
        self.jobs = max(1, jobs)
        self.verbose = verbose
        self.cases = build_suite(suite, self.max_size, self.settings)
        logger.info("Check runner for suite %s: %d cases, max size %d", suite, len(self.cases), self.max_size)

    def _print(self, text: str) -> None:
        if self.verbose:
            print(text)

    def run_case(self, case: CheckCase) -> CaseOutcome:
        """Run one case and classify it."""
        if case.size > self.max_size:
            return CaseOutcome(case.suite, case.name, SKIPPED, case.command,
                               detail=f"size {case.size} > {self.max_size}")
        started = time.perf_counter()
        try:
            check = case.run()
            status = PASS if check.holds else FAIL
            outcome = CaseOutcome(case.suite, case.name, status, case.command,
                                  lhs=check.lhs, rhs=check.rhs, detail=check.detail)
        except HypothesisError as e:
            logger.warning("Hypothesis not met in %s/%s: %s", case.suite, case.name, e.message)
            outcome = CaseOutcome(case.suite, case.name, HYPOTHESIS_FAILED, case.command, detail=e.message)
        except PosetTopError as e:
            outcome = CaseOutcome(case.suite, case.name, ERROR, case.command, detail=str(e))
        except Exception as e:
            logger.exception("Check %s/%s crashed", case.suite, case.name)
            outcome = CaseOutcome(case.suite, case.name, ERROR, case.command,
                                  detail=f"unexpected {type(e).__name__}: {e}")
        outcome.seconds = time.perf_counter() - started
        return outcome

    def run(self) -> Dict:
        """
        Execute every case of the suite.

        Returns:
            Dictionary with outcomes, counts and the overall status
            ('passed' or 'failed')
        """
        self._print("=" * 60)
        self._print(f"posettop check: {self.suite} (max size {self.max_size})")
        self._print("=" * 60)

        started = time.perf_counter()
        if self.jobs == 1:
            outcomes = [self.run_case(case) for case in self.cases]
        else:
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                outcomes = list(pool.map(self.run_case, self.cases))

        current_suite = None
        for outcome in outcomes:
            if outcome.suite != current_suite:
                current_suite = outcome.suite
                self._print(f"\n[{current_suite}]")
            line = f"   {STATUS_EMOJI[outcome.status]} {outcome.name}"
            if outcome.status in (FAIL, ERROR, HYPOTHESIS_FAILED):
                line += f"  ({outcome.detail})\n      reproduce: {outcome.command}"
            self._print(line)

        counts = {status: 0 for status in (PASS, FAIL, HYPOTHESIS_FAILED, ERROR, SKIPPED)}
        for outcome in outcomes:
            counts[outcome.status] += 1
        status = "failed" if counts[FAIL] or counts[ERROR] else "passed"
        results = {
            "suite": self.suite,
            "max_size": self.max_size,
            "counts": counts,
            "outcomes": outcomes,
            "status": status,
            "wall_time": time.perf_counter() - started,
        }

        self._print("\n" + "=" * 60)
        self._print(f"Check run: {status} ({counts[PASS]} passed, {counts[FAIL]} failed, "
                    f"{counts[ERROR]} errors, {counts[HYPOTHESIS_FAILED]} not applicable, "
                    f"{counts[SKIPPED]} skipped)")
        self._print("=" * 60)
        logger.info("Suite %s finished: %s", self.suite, counts)
        return results

    def report(self, results: Dict, timing: bool = False) -> RunReport:
        """Pack run() results for the CLI, listing every case that did not pass."""
        outcomes: List[CaseOutcome] = results["outcomes"]
        outputs = {
            "counts": results["counts"],
            "status": results["status"],
            "cases": [o.to_dict(timing) for o in outcomes if o.status != SKIPPED],
        }
        return RunReport(
            command=f"{CLI} check {self.suite} --max-size {self.max_size}",
            parameters={"suite": self.suite, "max_size": self.max_size},
            outputs=outputs,
            wall_time=results["wall_time"],
        )
