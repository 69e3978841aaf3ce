"""Registry of fully assembled scenarios.

Each entry bundles evidence variants, machines, an action family, and
the expected verdict of every registered check.  ``build_registry``
assembles them (optionally with parameter overrides); building a
scenario runs its evidence self-consistency audit, so a malformed
scenario fails at load, not at check time.
"""

from __future__ import annotations

from typing import Any, Mapping, Optional

from ..checkers import DEFAULT_SEEDS
from ..kernel import DEFAULT_BUDGET
from .base import (
    CHECK_KINDS,
    FAILS,
    HOLDS,
    HYPOTHESIS_VIOLATED,
    Scenario,
    ScenarioCheck,
    ScenarioError,
    run_check,
)
from . import (
    decommit,
    deniable,
    hashfile,
    hybrid,
    otp_table,
    password,
    twofactor,
    unknown_goal,
)

BUILDERS = {
    "password": password,
    "deniable": deniable,
    "hybrid": hybrid,
    "twofactor": twofactor,
    "hash": hashfile,
    "decommit": decommit,
    "otp-table": otp_table,
    "unknown-goal": unknown_goal,
}


class UnknownParameterError(ScenarioError):
    pass


def scenario_names() -> tuple[str, ...]:
    return tuple(BUILDERS)


def build_scenario(name: str, params: Optional[Mapping[str, Any]] = None) -> Scenario:
    module = BUILDERS.get(name)
    if module is None:
        raise ScenarioError(f"unknown scenario {name!r}")
    if params:
        unknown = sorted(set(params) - set(module.DEFAULTS))
        if unknown:
            raise UnknownParameterError(
                f"scenario {name!r} has no parameters {unknown}; "
                f"known parameters: {sorted(module.DEFAULTS)}"
            )
    return module.build(params)


def build_registry(
    overrides: Optional[Mapping[str, Mapping[str, Any]]] = None,
) -> dict[str, Scenario]:
    overrides = overrides or {}
    unknown = sorted(set(overrides) - set(BUILDERS))
    if unknown:
        raise UnknownParameterError(f"overrides name unknown scenarios {unknown}")
    return {
        name: build_scenario(name, overrides.get(name)) for name in BUILDERS
    }


def audit_registry(
    registry: Mapping[str, Scenario],
    seeds: tuple[int, ...] = DEFAULT_SEEDS,
    budget: int = DEFAULT_BUDGET,
) -> list[dict[str, Any]]:
    """Run every scenario's every registered check; one row per check,
    with the re-derived verdict next to the expectation."""
    rows: list[dict[str, Any]] = []
    for name, scenario in registry.items():
        for check in scenario.checks:
            verdict, report = run_check(scenario, check, seeds, budget)
            rows.append(
                {
                    "scenario": name,
                    "check": check.kind,
                    "evidence": check.evidence,
                    "verdict": verdict,
                    "expected": check.expected,
                    "match": verdict == check.expected,
                    "citation": check.citation,
                    "report": report,
                }
            )
    return rows


__all__ = [
    "BUILDERS",
    "CHECK_KINDS",
    "FAILS",
    "HOLDS",
    "HYPOTHESIS_VIOLATED",
    "Scenario",
    "ScenarioCheck",
    "ScenarioError",
    "UnknownParameterError",
    "audit_registry",
    "build_registry",
    "build_scenario",
    "run_check",
    "scenario_names",
]
