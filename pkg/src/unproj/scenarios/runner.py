"""Scenario plumbing: checks, reports, budgets and the fallback ladder."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Sequence

from ..dsl import Workspace, parse
from ..groebner import buchberger, is_member, normal_form
from ..ring import Polynomial

PASS, FAIL, ERROR = "PASS", "FAIL", "ERROR"
WITNESS_TERMS = 20


class CheckFailed(Exception):
    """Wrong answer; the message is the witness."""


class BudgetExceeded(Exception):
    pass


class UnknownScenarioError(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown scenario {self.name!r}"


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    status: str
    millis: int = field(default=0, compare=False)
    witness: str | None = None
    detail: str | None = None


@dataclass(frozen=True)
class Report:
    scenario: str
    description: str
    checks: tuple[CheckResult, ...]

    @property
    def status(self) -> str:
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return FAIL
        if ERROR in statuses:
            return ERROR
        return PASS

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def millis(self) -> int:
        return sum(c.millis for c in self.checks)

    def render(self) -> str:
        """Plain text without timings, so identical runs give identical bytes."""
        lines = [f"{self.scenario}: {self.status}", f"  {self.description}"]
        for c in self.checks:
            lines.append(f"  [{c.status}] {c.name} ({c.anchor})")
            if c.detail:
                lines.append(f"      {c.detail}")
            if c.witness:
                lines.append(f"      witness: {c.witness}")
        return "\n".join(lines)


class Context:
    """What a check sees: the parsed workspace, its text and the deadline."""

    def __init__(self, text: str, deadline: float):
        self.text = text
        self.ws: Workspace = parse(text)
        self.deadline = deadline
        self.state: dict = {}

    def tick(self) -> None:
        if time.monotonic() > self.deadline:
            raise BudgetExceeded("scenario budget exceeded")


CheckFn = Callable[[Context], "str | None"]


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    run: CheckFn
    displays: tuple[str, ...] = ()


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    workspace: str  # file name under workspaces/
    checks: tuple[Check, ...]
    budget: float = 10.0
    # (statement kind, statement name, sign-site index) corrupted by the mutation test
    mutation: tuple[str, str, int] = ("ideal", "", 0)

    def workspace_text(self) -> str:
        return resources.files(__package__).joinpath("workspaces", self.workspace).read_text()

    @property
    def displays(self) -> set[str]:
        return {d for c in self.checks for d in c.displays}


def run_checks(scenario: Scenario, text: str | None = None) -> Report:
    text = scenario.workspace_text() if text is None else text
    start = time.monotonic()
    deadline = start + scenario.budget
    results = []
    try:
        ctx = Context(text, deadline)
    except Exception as exc:  # parse error: every check errors out
        msg = f"{type(exc).__name__}: {exc}"
        for chk in scenario.checks:
            results.append(CheckResult(chk.name, chk.anchor, ERROR, 0, None, msg))
        return Report(scenario.name, scenario.description, tuple(results))
    for chk in scenario.checks:
        t0 = time.monotonic()
        status, witness, detail = PASS, None, None
        try:
            ctx.tick()
            detail = chk.run(ctx)
        except CheckFailed as exc:
            status, witness = FAIL, str(exc)
        except BudgetExceeded as exc:
            status, detail = ERROR, str(exc)
        except Exception as exc:
            status, detail = ERROR, f"{type(exc).__name__}: {exc}"
        if status == PASS and time.monotonic() > deadline:
            status, detail = ERROR, "scenario budget exceeded"
        millis = int(round((time.monotonic() - t0) * 1000))
        results.append(CheckResult(chk.name, chk.anchor, status, millis, witness, detail))
    return Report(scenario.name, scenario.description, tuple(results))


# -- helpers used by the check definitions ---------------------------------

def show(p: Polynomial, limit: int = WITNESS_TERMS) -> str:
    """A polynomial truncated to ``limit`` terms."""
    if len(p) <= limit:
        return str(p)
    head = Polynomial.from_terms(p.ring, p.terms[:limit])
    return f"{head} + ... ({len(p) - limit} more terms)"


def expect(cond: bool, witness: str) -> None:
    if not cond:
        raise CheckFailed(witness)


def nonzero(ps) -> list[Polynomial]:
    return [p for p in ps if not p.is_zero()]


def canonical_set(ps) -> set[Polynomial]:
    return {p.canonical_sign() for p in ps if not p.is_zero()}


def expect_same_set(got, expected, what: str = "polynomials") -> None:
    g, e = canonical_set(got), canonical_set(expected)
    extra = sorted(map(str, g - e))
    missing = sorted(map(str, e - g))
    if extra or missing:
        parts = []
        if extra:
            parts.append(f"unexpected {what}: {extra[0]}")
        if missing:
            parts.append(f"missing {what}: {missing[0]}")
        raise CheckFailed("; ".join(parts))


def ideal_witness(left: Sequence[Polynomial], right: Sequence[Polynomial]) -> str | None:
    """None when the ideals agree, else a generator of one outside the other."""
    for a, b, label in ((left, right, "left"), (right, left, "right")):
        if not b:
            for g in a:
                if not g.is_zero():
                    return f"{label} generator {show(g)} is not in the zero ideal"
            continue
        G = buchberger(list(b))
        for g in a:
            r = normal_form(g, G)
            if not r.is_zero():
                return f"{label} generator {show(g)} has normal form {show(r)}"
    return None


def expect_ideals_equal(left, right) -> None:
    w = ideal_witness(nonzero(left), nonzero(right))
    if w is not None:
        raise CheckFailed(w)


def expect_member(p: Polynomial, ideal: Sequence[Polynomial]) -> None:
    if not is_member(p, list(ideal)):
        r = normal_form(p, buchberger(list(ideal)))
        raise CheckFailed(f"{show(p)} has normal form {show(r)}")


Level = tuple[str, Callable[[], "tuple[bool, str]"]]


def ladder(ctx: Context, levels: Sequence[Level]) -> str:
    """Try ``levels`` in order; report the first that passes.

    Each level returns ``(ok, note)``; the notes of failed levels make up the
    witness when nothing passes.
    """
    notes = []
    for name, attempt in levels:
        ctx.tick()
        ok, note = attempt()
        if ok:
            return f"level: {name}" + (f"; {note}" if note else "")
        notes.append(f"{name}: {note}")
    raise CheckFailed("no level passed; " + " | ".join(notes))
