"""Registered verification scenarios and the runner."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .registry import DISPLAYS, SCENARIOS
from .runner import (
    ERROR,
    FAIL,
    PASS,
    Check,
    CheckResult,
    Report,
    Scenario,
    UnknownScenarioError,
    run_checks,
)

REGISTRY: dict[str, Scenario] = {s.name: s for s in SCENARIOS}


def get_scenario(name: str) -> Scenario:
    """Look up by full name (``S05-extrasym-specialise``) or short id (``S05``)."""
    if name in REGISTRY:
        return REGISTRY[name]
    for s in SCENARIOS:
        if s.name.split("-", 1)[0] == name:
            return s
    raise UnknownScenarioError(name)


def run_scenario(name: str, workspace_override: str | None = None) -> Report:
    return run_checks(get_scenario(name), workspace_override)


def run_all(names=None, jobs: int | None = 1, scenarios=None) -> list[Report]:
    """Run scenarios and return reports in registration order.

    ``scenarios`` replaces the registry (an empty sequence gives no reports).
    """
    if scenarios is None:
        scenarios = SCENARIOS if names is None else [get_scenario(n) for n in names]
    scenarios = list(scenarios)
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(scenarios) <= 1:
        return [run_checks(s) for s in scenarios]
    with ProcessPoolExecutor(max_workers=min(jobs, len(scenarios))) as pool:
        return list(pool.map(run_checks, scenarios))


def mutated_workspace(scenario: Scenario) -> str:
    """The scenario's workspace with its designated sign flipped."""
    from ..dsl import flip_sign, workspace_sign_sites

    kind, name, index = scenario.mutation
    text = scenario.workspace_text()
    sites = workspace_sign_sites(text, kind, name)
    return flip_sign(text, sites[index])


__all__ = [
    "DISPLAYS", "ERROR", "FAIL", "PASS", "REGISTRY", "SCENARIOS", "Check", "CheckResult", "Report",
    "Scenario", "UnknownScenarioError", "get_scenario", "mutated_workspace", "run_all", "run_scenario",
]
