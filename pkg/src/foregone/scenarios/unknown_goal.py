"""Goals the government cannot check: the impossibility playground.

Three fact patterns drive the two probes.

Whereabouts: the evidence says the respondent can state where she was,
but nothing constrains the answer.  Consistent minds carry disjoint
answer sets, so whatever a candidate recovery outputs, some consistent
world's answer set excludes it: the verifier would have to accept a
made-up answer.

Coin flip: a target that announces a fresh coin cannot be recovered
from any performance, because pinning the performance's coins cannot
pin the target's.

Commitments to an unverifiable secret: committing with fresh coins
falls to the randomized-target probe (a hiding scheme's commitment
moves with the coins); committing with pinned coins falls to the
unknown-goal probe when the scheme is binding (each secret admits its
own small set of openable commitments, and the sets are disjoint).
With the equivocable scheme instead, every commitment opens to every
secret, the answer sets all coincide, and the unknown-goal hypothesis
collapses -- the probe reports that rather than a verdict.
"""

from __future__ import annotations

from typing import Any, Mapping, Optional

from ..checkers import ActionFamily
from ..evidence import Assertion, Evidence
from ..kernel import Machine, Nature, World
from ..refinement import ProbeSpec
from ..tapes import RandomnessAssignment
from ..toy_crypto import SCHEMES, byte_domain
from ..values import ABSENT
from .base import HOLDS, HYPOTHESIS_VIOLATED, Scenario, ScenarioCheck
from .common import (
    accept_any_verifier,
    first_message_post,
    fixed_output_post,
    mind,
)

DEFAULTS: dict[str, Any] = {
    "place_a": b"Boston",
    "place_b": b"Paris",
    "secret_a": b"\x11",
    "secret_b": b"\x22",
    "pinned_coin": b"\x42",
}


# --- targets and exemplars ------------------------------------------------------


def _state_location_run(ctx, _arg):
    answer = ctx.respondent.call("x")
    if answer is ABSENT:
        return ABSENT
    ctx.send(answer)
    return ABSENT


def state_location_action() -> Machine:
    return Machine(id="state-a-location", methods={"run": _state_location_run})


def _location_target_run(ctx, _arg):
    answer = ctx.respondent.call("x")
    return None if answer is ABSENT else answer


def location_target() -> Machine:
    return Machine(id="disclose-location", methods={"run": _location_target_run})


def _coin_target_run(ctx, _arg):
    return b"heads" if ctx.tape.read_bit() == 0 else b"tails"


def coin_target() -> Machine:
    return Machine(id="announce-coin-flip", methods={"run": _coin_target_run})


def _flip_and_send_run(ctx, _arg):
    ctx.send(b"heads" if ctx.tape.read_bit() == 0 else b"tails")
    return ABSENT


def flip_and_send_action() -> Machine:
    return Machine(id="flip-and-send", methods={"run": _flip_and_send_run})


def _fresh_commit_target_run(ctx, _arg):
    secret = ctx.respondent.call("x")
    if secret is ABSENT:
        return None
    coins = ctx.tape.read_bytes(len(secret))
    return SCHEMES[ctx.state["scheme"]].commit(secret, coins)[0]


def fresh_commit_target(scheme_name: str) -> Machine:
    return Machine(
        id="commit-with-fresh-coins",
        state={"scheme": scheme_name},
        methods={"run": _fresh_commit_target_run},
    )


def _pinned_commit_target_run(ctx, _arg):
    secret = ctx.respondent.call("x")
    if secret is ABSENT:
        return None
    return SCHEMES[ctx.state["scheme"]].commit(secret, ctx.state["coin"])[0]


def pinned_commit_target(scheme_name: str, coin: bytes) -> Machine:
    return Machine(
        id="commit-with-pinned-coins",
        state={"scheme": scheme_name, "coin": coin},
        methods={"run": _pinned_commit_target_run},
    )


def _send_commitment_run(ctx, _arg):
    secret = ctx.respondent.call("x")
    if secret is ABSENT:
        return ABSENT
    ctx.send(SCHEMES[ctx.state["scheme"]].commit(secret, ctx.state["coin"])[0])
    return ABSENT


def send_commitment_action(scheme_name: str, coin: bytes) -> Machine:
    return Machine(
        id="send-a-commitment",
        state={"scheme": scheme_name, "coin": coin},
        methods={"run": _send_commitment_run},
    )


# --- evidence -------------------------------------------------------------------


def _single_respondent_world(respondent: Machine) -> World:
    return World(
        nature=Nature(),
        respondent=respondent,
        assignment=RandomnessAssignment(0),
    )


def build_evidences(params: Mapping[str, Any]) -> dict[str, Evidence]:
    probe = ProbeSpec(depth=1, alphabet=(None,))
    whereabouts = Evidence(
        name="whereabouts-last-night",
        assertions=(
            Assertion(
                id="respondent-can-state-location",
                text="the respondent's mind yields some statement of where"
                " she was; nothing constrains which",
            ),
        ),
        worlds=(
            (
                "was-in-boston",
                _single_respondent_world(mind("traveler", x=params["place_a"])),
            ),
            (
                "was-in-paris",
                _single_respondent_world(mind("traveler", x=params["place_b"])),
            ),
        ),
        probe=probe,
        languages={
            "was-in-boston": frozenset({params["place_a"]}),
            "was-in-paris": frozenset({params["place_b"]}),
        },
    )
    coin = Evidence(
        name="a-coin-to-flip",
        assertions=(
            Assertion(
                id="respondent-can-flip",
                text="the respondent can flip a coin and announce the result",
            ),
        ),
        worlds=(
            ("coin-flipper", _single_respondent_world(mind("bystander", x=b"ok"))),
        ),
        probe=probe,
    )
    commitment = Evidence(
        name="unverifiable-committed-secret",
        assertions=(
            Assertion(
                id="respondent-holds-secret",
                text="the respondent's mind yields a secret the government"
                " cannot verify",
            ),
        ),
        worlds=(
            (
                "holder-a",
                _single_respondent_world(mind("holder", x=params["secret_a"])),
            ),
            (
                "holder-b",
                _single_respondent_world(mind("holder", x=params["secret_b"])),
            ),
        ),
        probe=probe,
    )
    return {"whereabouts": whereabouts, "coin": coin, "commitment": commitment}


def build(params: Optional[Mapping[str, Any]] = None) -> Scenario:
    merged = dict(DEFAULTS)
    merged.update(params or {})
    evidences = build_evidences(merged)
    place_a = merged["place_a"]
    secret_a = merged["secret_a"]
    secret_b = merged["secret_b"]
    coin = merged["pinned_coin"]

    whereabouts_family = ActionFamily(
        actions=(("state-a-location", state_location_action()),),
        exemplar_label="state-a-location",
    )
    coin_family = ActionFamily(
        actions=(("flip-and-send", flip_and_send_action()),),
        exemplar_label="flip-and-send",
    )
    commit_family = ActionFamily(
        actions=(("send-a-commitment", send_commitment_action("xor-pad", coin)),),
        exemplar_label="send-a-commitment",
    )
    pinned_family = ActionFamily(
        actions=(("send-a-commitment", send_commitment_action("transparent", coin)),),
        exemplar_label="send-a-commitment",
    )

    secrets = (secret_a, secret_b)
    transparent_languages = {
        "holder-a": SCHEMES["transparent"].openable_commitments(
            secret_a, secrets, byte_domain()
        ),
        "holder-b": SCHEMES["transparent"].openable_commitments(
            secret_b, secrets, byte_domain()
        ),
    }
    equivocable_languages = {
        "holder-a": SCHEMES["xor-pad"].openable_commitments(
            secret_a, secrets, byte_domain()
        ),
        "holder-b": SCHEMES["xor-pad"].openable_commitments(
            secret_b, secrets, byte_domain()
        ),
    }

    def guesses(value: bytes) -> tuple[tuple[str, Machine], ...]:
        return (
            ("echo-first-message", first_message_post()),
            ("fixed-guess", fixed_output_post("fixed-guess", value)),
            ("always-zero", fixed_output_post("always-zero", b"\x00")),
        )

    evidences["commitment-pinned"] = evidences["commitment"]
    evidences["commitment-pinned-equivocable"] = evidences["commitment"]

    checks = [
        ScenarioCheck(
            kind="probe-unknown-goal",
            evidence="whereabouts",
            expected=HOLDS,
            target=location_target(),
            family=whereabouts_family,
            candidates=guesses(place_a)
            + (("fixed-elsewhere", fixed_output_post("fixed-elsewhere", b"Tokyo")),),
            citation="The government cannot check where she was, so any"
            " candidate recovery lands outside some consistent answer set"
            " -- the verifier must accept a made-up answer.",
        ),
        ScenarioCheck(
            kind="probe-random",
            evidence="coin",
            expected=HOLDS,
            target=coin_target(),
            family=coin_family,
            candidates=guesses(b"heads")
            + (("fixed-tails", fixed_output_post("fixed-tails", b"tails")),),
            citation="A fresh coin announcement cannot be recovered: pinning"
            " the performance's coins cannot pin the target's.",
        ),
        ScenarioCheck(
            kind="probe-random",
            evidence="commitment",
            expected=HOLDS,
            target=fresh_commit_target("xor-pad"),
            family=commit_family,
            candidates=guesses(secret_a),
            citation="A fresh commitment to an unverifiable secret moves"
            " with its coins; no recovery tracks it.",
        ),
        ScenarioCheck(
            kind="probe-unknown-goal",
            evidence="commitment-pinned",
            expected=HOLDS,
            target=pinned_commit_target("transparent", coin),
            family=pinned_family,
            candidates=guesses(
                SCHEMES["transparent"].commit(secret_a, coin)[0]
            ),
            languages=transparent_languages,
            citation="With a binding scheme and pinned coins, each secret"
            " admits its own openable commitments and the sets are disjoint,"
            " so no candidate recovery survives.",
        ),
        ScenarioCheck(
            kind="probe-unknown-goal",
            evidence="commitment-pinned-equivocable",
            expected=HYPOTHESIS_VIOLATED,
            target=pinned_commit_target("xor-pad", coin),
            family=commit_family,
            candidates=guesses(secret_a),
            languages=equivocable_languages,
            citation="Under the equivocable scheme every commitment opens to"
            " every secret: the answer sets coincide and the unknown-goal"
            " hypothesis collapses.",
        ),
    ]

    return Scenario(
        name="unknown-goal",
        title="unverifiable goals and randomized targets",
        evidences=evidences,
        verifier=accept_any_verifier(),
        exemplar=state_location_action(),
        target=location_target(),
        post_processor=first_message_post(),
        action_family=whereabouts_family,
        checks=checks,
        edges=[],
    )
