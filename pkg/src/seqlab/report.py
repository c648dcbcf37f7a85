"""Result containers shared by all checks and the CLI report rendering."""

import json
from dataclasses import dataclass, field
from typing import Optional

PASS = "pass"
FAIL = "fail"


@dataclass
class CheckResult:
    """Outcome of one named check over an index range.

    counterexamples holds (n, detail) pairs; an empty list means the check
    held everywhere it looked. elapsed_ms is wall time and is the only field
    allowed to differ between otherwise identical runs.
    """

    name: str
    lo: int
    hi: int
    status: str
    counterexamples: list[tuple[int, str]] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "range": {"lo": self.lo, "hi": self.hi},
            "status": self.status,
            "counterexamples": [
                {"n": n, "detail": detail} for n, detail in self.counterexamples
            ],
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class VerifyConfig:
    """Knobs for a verification sweep.

    checks=None means every registered check. seed feeds only the randomized
    algebraic-identity sampling; all other checks are deterministic.
    """

    max_n: int = 1000
    prime_limit: int = 97
    series_order: int = 600
    oracle_max: int = 10
    checks: Optional[list[str]] = None
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "prime_limit": self.prime_limit,
            "series_order": self.series_order,
            "oracle_max": self.oracle_max,
            "checks": self.checks,
            "seed": self.seed,
        }


@dataclass
class ReportDocument:
    tool_version: str
    config: VerifyConfig
    results: list[CheckResult]

    @property
    def aggregate(self) -> str:
        return PASS if all(r.passed for r in self.results) else FAIL

    def to_json(self) -> str:
        doc = {
            "tool_version": self.tool_version,
            "config": self.config.to_dict(),
            "results": [r.to_dict() for r in self.results],
            "aggregate": self.aggregate,
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            lines.append(
                f"{'PASS' if r.passed else 'FAIL'} {r.name} [{r.lo},{r.hi}] ({r.elapsed_ms} ms)"
            )
            for n, detail in r.counterexamples:
                lines.append(f"    n={n}: {detail}")
        lines.append(f"aggregate: {self.aggregate}")
        return "\n".join(lines) + "\n"
