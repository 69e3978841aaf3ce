"""Scenario bundles and the check runner shared by tests and the CLI.

A scenario packages everything one compelled-act fact pattern needs:
its evidence variants (a weak/strong chain where the fact pattern has
one), the verifier, exemplar, target, and post-processor, the declared
family of candidate actions, and the expected verdict of every check it
registers.  Each expected verdict carries a self-contained statement of
the claim it encodes, which the reports surface as the ``citation``.

``run_check`` re-derives a verdict from scratch; the registry audit
compares it against the scenario's expectation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..checkers import (
    ActionFamily,
    CheckReport,
    CheckVerdict,
    DEFAULT_SEEDS,
    HypothesisViolatedError,
    check_conformity,
    check_demonstrability,
    check_entailment,
    check_monotonicity,
    probe_random_target,
    probe_unknown_goal,
)
from ..evidence import Evidence, audit as audit_evidence
from ..kernel import DEFAULT_BUDGET, Machine

CHECK_KINDS = (
    "demonstrability",
    "conformity",
    "entailment",
    "counterexample",
    "monotonicity",
    "probe-unknown-goal",
    "probe-random",
)

HOLDS = CheckVerdict.HOLDS.value
FAILS = CheckVerdict.FAILS.value
HYPOTHESIS_VIOLATED = "HypothesisViolated"


class ScenarioError(Exception):
    pass


@dataclass
class ScenarioCheck:
    """One registered check with its expected verdict.

    Role fields default to the scenario's primary bundle; a check that
    needs its own verifier, family, target, and so on overrides them.
    """

    kind: str
    evidence: str
    expected: str
    citation: str
    verifier: Optional[Machine] = None
    exemplar: Optional[Machine] = None
    target: Optional[Machine] = None
    post: Optional[Machine] = None
    family: Optional[ActionFamily] = None
    candidates: tuple[tuple[str, Machine], ...] = ()
    languages: Optional[dict[str, frozenset]] = None
    edge: Optional[tuple[str, str]] = None  # (weaker key, stronger key)

    @property
    def id(self) -> str:
        return f"{self.kind}/{self.evidence}"


@dataclass
class Scenario:
    name: str
    title: str
    evidences: dict[str, Evidence]
    verifier: Machine
    exemplar: Machine
    target: Machine
    post_processor: Machine
    action_family: ActionFamily
    checks: list[ScenarioCheck] = field(default_factory=list)
    edges: list[tuple[str, str]] = field(default_factory=list)  # (weaker, stronger)

    def __post_init__(self):
        ids = [check.id for check in self.checks]
        if len(set(ids)) != len(ids):
            raise ScenarioError(f"scenario {self.name!r} registers duplicate checks")
        for check in self.checks:
            if check.kind not in CHECK_KINDS:
                raise ScenarioError(f"unknown check kind {check.kind!r}")
            if check.kind == "monotonicity":
                if check.edge is None or not all(
                    key in self.evidences for key in check.edge
                ):
                    raise ScenarioError(
                        f"check {check.id!r} needs an edge over known evidences"
                    )
            elif check.evidence not in self.evidences:
                raise ScenarioError(
                    f"check {check.id!r} names unknown evidence {check.evidence!r}"
                )
        problems: list[str] = []
        for evidence in self.evidences.values():
            problems.extend(audit_evidence(evidence))
        if problems:
            raise ScenarioError(
                f"scenario {self.name!r} fails its evidence audit: " + "; ".join(problems)
            )

    def find_check(self, kind: str, evidence: Optional[str]) -> ScenarioCheck:
        matching = [c for c in self.checks if c.kind == kind]
        if evidence is not None:
            matching = [c for c in matching if c.evidence == evidence]
        if not matching:
            raise ScenarioError(
                f"scenario {self.name!r} registers no check {kind!r}"
                + (f" on evidence {evidence!r}" if evidence else "")
            )
        return matching[0]

    def expected_map(self) -> dict[str, tuple[str, str]]:
        return {check.id: (check.expected, check.citation) for check in self.checks}


def run_check(
    scenario: Scenario,
    check: ScenarioCheck,
    seeds: tuple[int, ...] = DEFAULT_SEEDS,
    budget: int = DEFAULT_BUDGET,
) -> tuple[str, Optional[CheckReport]]:
    """Execute one registered check and return (verdict string, report)."""
    verifier = check.verifier or scenario.verifier
    exemplar = check.exemplar or scenario.exemplar
    target = check.target or scenario.target
    post = check.post or scenario.post_processor
    family = check.family or scenario.action_family

    if check.kind == "monotonicity":
        weaker_key, stronger_key = check.edge
        report = check_monotonicity(
            verifier,
            exemplar,
            scenario.evidences[weaker_key],
            scenario.evidences[stronger_key],
            seeds,
            budget,
        )
        return report.verdict.value, report

    evidence = scenario.evidences[check.evidence]

    if check.kind == "demonstrability":
        report = check_demonstrability(verifier, exemplar, evidence, seeds, budget)
        return report.verdict.value, report

    if check.kind == "conformity":
        cells = 0
        for label, world in evidence.worlds:
            cells += len(seeds)
            if not check_conformity(verifier, exemplar, world, seeds, budget):
                report = CheckReport(
                    verdict=CheckVerdict.FAILS,
                    cells_checked=cells,
                    notes=(f"exemplar does not conform in world {label!r}",),
                )
                return FAILS, report
        return HOLDS, CheckReport(verdict=CheckVerdict.HOLDS, cells_checked=cells)

    if check.kind in ("entailment", "counterexample"):
        report = check_entailment(
            verifier, target, post, evidence, family, seeds, budget
        )
        return report.verdict.value, report

    if check.kind == "probe-unknown-goal":
        try:
            report = probe_unknown_goal(
                verifier,
                evidence,
                target,
                check.candidates,
                family,
                seeds,
                budget,
                languages=check.languages,
            )
        except HypothesisViolatedError as exc:
            return HYPOTHESIS_VIOLATED, CheckReport(
                verdict=CheckVerdict.FAILS, notes=(str(exc),)
            )
        return report.verdict.value, report

    if check.kind == "probe-random":
        try:
            report = probe_random_target(
                verifier, evidence, target, check.candidates, family, seeds, budget
            )
        except HypothesisViolatedError as exc:
            return HYPOTHESIS_VIOLATED, CheckReport(
                verdict=CheckVerdict.FAILS, notes=(str(exc),)
            )
        return report.verdict.value, report

    raise ScenarioError(f"unknown check kind {check.kind!r}")
