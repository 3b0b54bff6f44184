import pytest

from unproj.dsl import parse
from unproj.scenarios import (
    DISPLAYS,
    ERROR,
    FAIL,
    PASS,
    REGISTRY,
    SCENARIOS,
    UnknownScenarioError,
    get_scenario,
    mutated_workspace,
    run_all,
    run_scenario,
)
from unproj.scenarios.runner import WITNESS_TERMS, Check, CheckFailed, Scenario, ladder, run_checks, show

EXPECTED_FAILURES = {"S17-elliptic-tom"}


@pytest.fixture(scope="module")
def reports():
    return run_all()


def test_registry_shape():
    assert len(SCENARIOS) == 19
    assert [s.name[:3] for s in SCENARIOS] == [f"S{k:02d}" for k in range(1, 20)]
    for s in SCENARIOS:
        assert s.checks and s.description
        assert all(c.anchor for c in s.checks), s.name
        parse(s.workspace_text())


def test_every_display_is_covered():
    covered = set().union(*(s.displays for s in SCENARIOS))
    assert covered == set(DISPLAYS)


def test_budgets():
    budgets = {s.name[:3]: s.budget for s in SCENARIOS}
    assert budgets["S03"] == 60 and budgets["S15"] == 120 and budgets["S17"] == 120
    assert all(b >= 10 for b in budgets.values())


def test_lookup():
    assert get_scenario("S05") is REGISTRY["S05-extrasym-specialise"]
    with pytest.raises(UnknownScenarioError):
        get_scenario("no-such")
    with pytest.raises(KeyError):
        run_scenario("no-such")


def test_expected_statuses(reports):
    assert [r.scenario for r in reports] == [s.name for s in SCENARIOS]
    for r in reports:
        want = FAIL if r.scenario in EXPECTED_FAILURES else PASS
        assert r.status == want, r.render()


def test_named_examples():
    assert run_scenario("S05-extrasym-specialise").passed
    assert run_scenario("S14-base-space").passed


def test_failures_carry_witnesses(reports):
    for r in reports:
        for c in r.checks:
            if c.status == FAIL:
                assert c.witness
            if c.status == PASS:
                assert c.witness is None


def test_empty_registry():
    assert run_all(scenarios=[]) == []


def test_determinism(reports):
    again = run_all()
    assert [r.render() for r in again] == [r.render() for r in reports]
    assert again == reports
    parallel = run_all(jobs=4)
    assert [r.render() for r in parallel] == [r.render() for r in reports]


@pytest.mark.parametrize("scenario", SCENARIOS, ids=[s.name for s in SCENARIOS])
def test_mutation_flips_the_scenario(scenario, reports):
    text = mutated_workspace(scenario)
    assert text != scenario.workspace_text()
    baseline = next(r for r in reports if r.scenario == scenario.name)
    mutated = run_scenario(scenario.name, text)
    assert mutated.status == FAIL, mutated.render()
    newly_failed = [
        m.name for b, m in zip(baseline.checks, mutated.checks) if b.status == PASS and m.status == FAIL
    ]
    assert newly_failed, mutated.render()


def test_mutation_leaves_other_scenarios_alone(reports):
    # the S10 corruption only feeds S10; every other scenario reads its own workspace
    s10 = get_scenario("S10")
    mutated = run_scenario(s10.name, mutated_workspace(s10))
    assert mutated.status == FAIL
    others = [r for r in reports if r.scenario != s10.name]
    assert all(r.status == (FAIL if r.scenario in EXPECTED_FAILURES else PASS) for r in others)
    assert all(c.witness for c in mutated.checks if c.status == FAIL)


def test_parse_error_makes_every_check_error():
    s = get_scenario("S02")
    rep = run_scenario(s.name, "ring a : weights 1;\npoly P = a +")
    assert rep.status == ERROR
    assert all(c.status == ERROR and "DslError" in c.detail for c in rep.checks)


def test_exceptions_and_budget():
    def boom(ctx):
        raise ZeroDivisionError("x")

    def wrong(ctx):
        raise CheckFailed("witness text")

    def slow(ctx):
        while True:
            ctx.tick()

    s = Scenario("T-test", "test", "S02-colon-identity.usr",
                 (Check("boom", "a", boom), Check("wrong", "b", wrong), Check("slow", "c", slow)), budget=0.2)
    rep = run_checks(s)
    assert [c.status for c in rep.checks] == [ERROR, FAIL, ERROR]
    assert rep.checks[1].witness == "witness text"
    assert "budget" in rep.checks[2].detail
    assert rep.status == FAIL


def test_ladder_reports_the_level():
    s = Scenario("T-ladder", "test", "S02-colon-identity.usr", (
        Check("lad", "a", lambda ctx: ladder(ctx, [("strong", lambda: (False, "no")),
                                                     ("weak", lambda: (True, "ok"))])),
        Check("none", "b", lambda ctx: ladder(ctx, [("only", lambda: (False, "nope"))])),
    ))
    rep = run_checks(s)
    assert rep.checks[0].status == PASS and rep.checks[0].detail == "level: weak; ok"
    assert rep.checks[1].status == FAIL and "only: nope" in rep.checks[1].witness


def test_recorded_levels(reports):
    by_name = {r.scenario: r for r in reports}
    details = [c.detail or "" for c in by_name["S12-s3-cube"].checks]
    assert any(d.startswith("level: polynomial") for d in details)
    details = [c.detail or "" for c in by_name["S15-components"].checks]
    assert any(d.startswith("level: sign-normalized") and "unproj4" in d for d in details)


def test_witness_truncation():
    ws = parse("ring a b : weights 1 1; poly P = (a + b)^30;")
    text = show(ws.poly("P"))
    assert "more terms" in text
    assert text.count("*") < 5 * WITNESS_TERMS
