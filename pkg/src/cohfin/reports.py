"""Structured pass/fail records for law checks.

Every check returns a LawReport instead of a bare boolean so the CLI and the
service can emit machine-readable evidence, including the counterexample
witness when a law fails and the finite thresholds the check was run at.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class LawReport:
    law: str
    params: dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    witness: Optional[dict[str, Any]] = None

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "law": self.law,
            "params": self.params,
            "pass": self.passed,
            "witness": self.witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def suite_report(suite: str, params: dict[str, Any],
                 results: list[LawReport]) -> dict[str, Any]:
    """Aggregate report emitted by every service endpoint / CLI subcommand."""
    return {
        "suite": suite,
        "params": params,
        "results": [r.to_json_dict() for r in results],
        "pass": all(r.passed for r in results),
    }
