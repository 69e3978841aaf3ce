from __future__ import annotations

import pytest

from foregone.checkers import (
    ActionFamily,
    CheckVerdict,
    HypothesisViolatedError,
    PreconditionViolatedError,
    check_conformity,
    check_demonstrability,
    check_entailment,
    check_monotonicity,
    entailment_cell_outputs,
    probe_random_target,
    probe_unknown_goal,
    search_entailment_counterexample,
)
from foregone.evidence import restrict_to
from foregone.kernel import Machine, execute, run_post, run_target, snapshot, with_seed
from foregone.values import render_value, same_value
from foregone.scenarios.common import (
    accept_any_verifier,
    do_nothing_action,
    first_message_post,
    fixed_output_post,
)
from foregone.scenarios.password import (
    build_evidences,
    decrypt_target,
    device_reading_post,
    duress_action,
    exemplar_action,
    retry_action,
    unlocked_verifier,
)
from foregone.scenarios.unknown_goal import (
    build_evidences as build_goal_evidences,
    coin_target,
    flip_and_send_action,
    location_target,
    state_location_action,
)

SEEDS = (0, 1, 2, 3)

PARAMS = {
    "pwd": b"hunter2",
    "message": b"tax-records",
    "alt_pwd": b"cats123",
    "alt_message": b"ledger-2019",
    "duress_pwd": b"d00rbell",
    "replacement": b"cat-pictures",
}

GOAL_PARAMS = {
    "place_a": b"Boston",
    "place_b": b"Paris",
    "secret_a": b"\x11",
    "secret_b": b"\x22",
    "pinned_coin": b"\x42",
}


@pytest.fixture(scope="module")
def pwd_evidence():
    return build_evidences(PARAMS)


@pytest.fixture(scope="module")
def goal_evidence():
    return build_goal_evidences(GOAL_PARAMS)


# --- conformity -----------------------------------------------------------------


def test_exemplar_conforms_in_the_basic_world(pwd_evidence):
    world = pwd_evidence["weak"].world("locked-basic")
    assert check_conformity(unlocked_verifier(), exemplar_action(), world, SEEDS)


def test_doing_nothing_does_not_conform(pwd_evidence):
    world = pwd_evidence["weak"].world("locked-basic")
    assert not check_conformity(unlocked_verifier(), do_nothing_action(), world, SEEDS)


def test_duress_conforms_exactly_where_the_device_is_deniable(pwd_evidence):
    weak = pwd_evidence["weak"]
    duress = duress_action(b"cat-pictures")
    assert check_conformity(unlocked_verifier(), duress, weak.world("deniable"), SEEDS)
    assert not check_conformity(
        unlocked_verifier(), duress, weak.world("locked-basic"), SEEDS
    )


# --- demonstrability --------------------------------------------------------------


def test_demonstrability_holds_on_the_weak_evidence(pwd_evidence):
    report = check_demonstrability(
        unlocked_verifier(), exemplar_action(), pwd_evidence["weak"], SEEDS
    )
    assert report.verdict is CheckVerdict.HOLDS
    assert report.counterexample is None
    assert report.cells_checked == len(pwd_evidence["weak"].worlds) * len(SEEDS)


def test_demonstrability_fails_on_star_with_a_silence_witness(pwd_evidence):
    report = check_demonstrability(
        unlocked_verifier(), exemplar_action(), pwd_evidence["star"], SEEDS
    )
    assert report.verdict is CheckVerdict.FAILS
    cell = report.counterexample
    assert cell.world == "silent-respondent"
    assert "absent" in cell.got
    # replay: the exemplar's respondent call really does yield nothing
    world = with_seed(pwd_evidence["star"].world(cell.world), cell.seed)
    result = execute(unlocked_verifier(), exemplar_action(), world)
    respondent_calls = result.transcript.calls_to(world.respondent.id)
    assert respondent_calls and render_value(respondent_calls[0].output) == "absent"


# --- entailment -------------------------------------------------------------------


def family_with_duress():
    return ActionFamily(
        actions=(
            ("enter-password", exemplar_action()),
            ("retry-after-typo", retry_action()),
            ("use-duress-password", duress_action(b"cat-pictures")),
        ),
        exemplar_label="enter-password",
    )


def test_entailment_holds_under_the_exact_shape_evidence(pwd_evidence):
    report = check_entailment(
        unlocked_verifier(),
        decrypt_target(),
        device_reading_post(),
        pwd_evidence["strong"],
        family_with_duress(),
        SEEDS,
    )
    assert report.verdict is CheckVerdict.HOLDS
    # the duress action is outside the quantifier in every strong world
    assert set(report.skipped) == {
        ("locked-basic", "use-duress-password"),
        ("locked-alt", "use-duress-password"),
    }
    conforming_actions = 2
    assert report.cells_checked == len(pwd_evidence["strong"].worlds) * (
        conforming_actions * len(SEEDS)
    )


def test_entailment_fails_on_weak_with_the_duress_cell(pwd_evidence):
    report = check_entailment(
        unlocked_verifier(),
        decrypt_target(),
        device_reading_post(),
        pwd_evidence["weak"],
        family_with_duress(),
        SEEDS,
    )
    assert report.verdict is CheckVerdict.FAILS
    cell = report.counterexample
    assert (cell.world, cell.action, cell.seed) == ("deniable", "use-duress-password", 0)
    assert cell.got == render_value(b"cat-pictures")
    assert cell.expected == render_value(b"tax-records")


def test_counterexamples_are_replayable(pwd_evidence):
    report = check_entailment(
        unlocked_verifier(),
        decrypt_target(),
        device_reading_post(),
        pwd_evidence["weak"],
        family_with_duress(),
        SEEDS,
    )
    cell = report.counterexample
    world = pwd_evidence["weak"].world(cell.world)
    action = dict(family_with_duress().actions)[cell.action]
    expected, got, _steps = entailment_cell_outputs(
        unlocked_verifier(), decrypt_target(), device_reading_post(), world, action, cell.seed
    )
    assert render_value(expected) == cell.expected
    assert render_value(got) == cell.got
    assert not same_value(expected, got)


def test_counterexample_selection_is_deterministic(pwd_evidence):
    first = search_entailment_counterexample(
        unlocked_verifier(),
        decrypt_target(),
        device_reading_post(),
        pwd_evidence["weak"],
        family_with_duress(),
        SEEDS,
    )
    second = search_entailment_counterexample(
        unlocked_verifier(),
        decrypt_target(),
        device_reading_post(),
        pwd_evidence["weak"],
        family_with_duress(),
        SEEDS,
    )
    assert first == second


def test_no_counterexample_under_the_exact_shape_evidence(pwd_evidence):
    assert (
        search_entailment_counterexample(
            unlocked_verifier(),
            decrypt_target(),
            device_reading_post(),
            pwd_evidence["strong"],
            family_with_duress(),
            SEEDS,
        )
        is None
    )


def _spinning_post() -> Machine:
    def spin(ctx, _arg):
        total = 0
        while True:
            total += ctx.tape.read_bit()

    return Machine(id="brute-force-everything", methods={"run": spin})


def test_post_processor_budget_exhaustion_fails_the_cell(pwd_evidence):
    report = check_entailment(
        unlocked_verifier(),
        decrypt_target(),
        _spinning_post(),
        pwd_evidence["strong"],
        ActionFamily(
            actions=(("enter-password", exemplar_action()),),
            exemplar_label="enter-password",
        ),
        SEEDS,
        budget=500,
    )
    assert report.verdict is CheckVerdict.FAILS
    assert report.counterexample.got == "budget-exceeded"


# --- monotonicity -----------------------------------------------------------------


def test_monotonicity_holds_along_the_declared_edge(pwd_evidence):
    report = check_monotonicity(
        unlocked_verifier(),
        exemplar_action(),
        pwd_evidence["weak"],
        pwd_evidence["strong"],
        SEEDS,
    )
    assert report.verdict is CheckVerdict.HOLDS


def test_monotonicity_requires_a_genuine_strengthening(pwd_evidence):
    with pytest.raises(PreconditionViolatedError):
        check_monotonicity(
            unlocked_verifier(),
            exemplar_action(),
            pwd_evidence["strong"],
            pwd_evidence["weak"],  # superset, not subset
            SEEDS,
        )


def test_monotonicity_over_sampled_subfamilies(pwd_evidence):
    weak = pwd_evidence["weak"]
    labels = weak.labels()
    for keep_outer in (labels, labels[:2], labels[1:]):
        outer = restrict_to(weak, keep_outer)
        for keep_inner in (keep_outer, keep_outer[:1]):
            inner = restrict_to(weak, keep_inner)
            report = check_monotonicity(
                unlocked_verifier(), exemplar_action(), outer, inner, SEEDS
            )
            assert report.verdict is CheckVerdict.HOLDS


# --- impossibility probes -----------------------------------------------------------


def whereabouts_family():
    return ActionFamily(
        actions=(("state-a-location", state_location_action()),),
        exemplar_label="state-a-location",
    )


def candidate_posts():
    return (
        ("echo-first-message", first_message_post()),
        ("fixed-boston", fixed_output_post("fixed-boston", b"Boston")),
        ("fixed-tokyo", fixed_output_post("fixed-tokyo", b"Tokyo")),
    )


def test_unknown_goal_probe_defeats_every_candidate(goal_evidence):
    report = probe_unknown_goal(
        accept_any_verifier(),
        goal_evidence["whereabouts"],
        location_target(),
        candidate_posts(),
        whereabouts_family(),
        SEEDS,
    )
    assert report.verdict is CheckVerdict.HOLDS
    assert len(report.witnesses) == len(candidate_posts())
    # each witness replays: the stand-in run really does disagree with the target
    posts = dict(candidate_posts())
    evidence = goal_evidence["whereabouts"]
    from foregone.kernel import emulate_with_respondent

    stand_in = emulate_with_respondent(
        state_location_action(), evidence.worlds[0][1].respondent
    )
    for (label, post) in candidate_posts():
        witness = report.witnesses[[l for l, _ in candidate_posts()].index(label)]
        world = with_seed(evidence.world(witness.world), witness.seed)
        run = execute(accept_any_verifier(), stand_in, snapshot(world))
        got = run_post(post, run.post_world, run.transcript)
        expected = run_target(location_target(), snapshot(world))
        assert render_value(got) == witness.got
        assert render_value(expected) == witness.expected
        assert not same_value(got, expected)


def test_unknown_goal_probe_gates_on_a_common_element(goal_evidence):
    languages = {
        "was-in-boston": frozenset({b"Boston", b"Springfield"}),
        "was-in-paris": frozenset({b"Paris", b"Springfield"}),
    }
    with pytest.raises(HypothesisViolatedError):
        probe_unknown_goal(
            accept_any_verifier(),
            goal_evidence["whereabouts"],
            location_target(),
            candidate_posts(),
            whereabouts_family(),
            SEEDS,
            languages=languages,
        )


def test_unknown_goal_probe_gates_on_a_single_respondent(goal_evidence):
    narrowed = restrict_to(goal_evidence["whereabouts"], ("was-in-boston",))
    with pytest.raises(HypothesisViolatedError):
        probe_unknown_goal(
            accept_any_verifier(),
            narrowed,
            location_target(),
            candidate_posts(),
            whereabouts_family(),
            SEEDS,
        )


def test_unknown_goal_probe_requires_declared_languages(goal_evidence):
    with pytest.raises(PreconditionViolatedError):
        probe_unknown_goal(
            accept_any_verifier(),
            goal_evidence["coin"],  # declares no languages
            location_target(),
            candidate_posts(),
            whereabouts_family(),
            SEEDS,
        )


def coin_family():
    return ActionFamily(
        actions=(("flip-and-send", flip_and_send_action()),),
        exemplar_label="flip-and-send",
    )


def test_random_target_probe_defeats_every_candidate(goal_evidence):
    candidates = (
        ("echo-first-message", first_message_post()),
        ("fixed-heads", fixed_output_post("fixed-heads", b"heads")),
        ("fixed-tails", fixed_output_post("fixed-tails", b"tails")),
    )
    report = probe_random_target(
        accept_any_verifier(),
        goal_evidence["coin"],
        coin_target(),
        candidates,
        coin_family(),
        tuple(range(12)),
    )
    assert report.verdict is CheckVerdict.HOLDS
    assert len(report.witnesses) == len(candidates)


def test_random_target_probe_gates_on_singleton_support(goal_evidence):
    constant = fixed_output_post("always-the-same", b"same")
    constant = Machine(
        id="announce-a-constant", state=dict(constant.state), methods=dict(constant.methods)
    )
    with pytest.raises(HypothesisViolatedError):
        probe_random_target(
            accept_any_verifier(),
            goal_evidence["coin"],
            constant,
            (("echo-first-message", first_message_post()),),
            coin_family(),
            SEEDS,
        )


def test_action_family_validates_its_exemplar():
    with pytest.raises(Exception):
        ActionFamily(actions=(("a", do_nothing_action()),), exemplar_label="missing")
