"""Producing a file checked against its published digest.

The respondent's mind discloses where the wanted file lives; the
verifier accepts whatever byte string hashes to the published digest.
With an injective toy hash, an accepted performance can only ever carry
the file itself, so recovery holds exactly.  With a hash carrying a
documented collision, a performance that sends the collision partner is
accepted too, and the defeating cell shows two distinct outputs with
equal digests -- the dichotomy the digest check leaves open.
"""

from __future__ import annotations

from typing import Any, Mapping, Optional

from ..checkers import ActionFamily
from ..evidence import Assertion, Evidence
from ..kernel import Machine, Nature, World, read_only_store
from ..refinement import ProbeSpec
from ..tapes import RandomnessAssignment
from ..toy_crypto import HashSpec, make_colliding_hash, make_injective_hash
from ..values import ABSENT, Location
from .base import FAILS, HOLDS, Scenario, ScenarioCheck
from .common import first_message_post, mind, send_fixed_action

FILE_LOCATION = 4
ALT_FILE_LOCATION = 6

DEFAULTS: dict[str, Any] = {
    "file": b"q3-report",
    "collision_partner": b"shadow-q3",
}

HASHES: dict[str, HashSpec] = {}


def _register(spec: HashSpec) -> HashSpec:
    HASHES[spec.name] = spec
    return spec


def _verifier_run(ctx, _arg):
    produced = ctx.receive()
    if produced is ABSENT or not isinstance(produced, bytes):
        return False
    digest = HASHES[ctx.state["hash"]].evaluate(produced)
    return digest == ctx.state["digest"]


def digest_verifier(hash_name: str, digest: bytes) -> Machine:
    """Accepts iff the produced bytes hash to the published digest."""
    return Machine(
        id="digest-check",
        state={"hash": hash_name, "digest": digest},
        methods={"run": _verifier_run},
    )


def _produce_run(ctx, _arg):
    where = ctx.respondent.call("find_file")
    if where is ABSENT:
        return ABSENT
    ctx.send(ctx.nature(where).call("read"))
    return ABSENT


def produce_file_action() -> Machine:
    return Machine(id="produce-located-file", methods={"run": _produce_run})


def _chatty_run(ctx, _arg):
    where = ctx.respondent.call("find_file")
    if where is ABSENT:
        return ABSENT
    ctx.send(ctx.nature(where).call("read"))
    ctx.send(b"that is everything")
    return ABSENT


def chatty_action() -> Machine:
    return Machine(id="produce-and-comment", methods={"run": _chatty_run})


def _target_run(ctx, _arg):
    where = ctx.respondent.call("find_file")
    if where is ABSENT:
        return None
    return ctx.nature(where).call("read")


def file_target() -> Machine:
    return Machine(id="produce-the-file", methods={"run": _target_run})


def _world(file_location: int, content: bytes) -> World:
    return World(
        nature=Nature(
            slots={file_location: read_only_store("file-store", content)},
            read_only=frozenset({file_location}),
        ),
        respondent=mind("knows-file-location", find_file=Location(file_location)),
        assignment=RandomnessAssignment(0),
    )


def _file_matches_digest(hash_name: str, digest: bytes):
    def check(world: World) -> bool:
        where = world.respondent.state["find_file"]
        content = world.nature.slots[where.index].state["value"]
        return HASHES[hash_name].evaluate(content) == digest

    return check


def _specs(params: Mapping[str, Any]) -> tuple[HashSpec, HashSpec]:
    file_content = params["file"]
    partner = params["collision_partner"]
    injective = _register(make_injective_hash(extra_domain=(file_content, partner)))
    colliding = _register(make_colliding_hash(file_content, partner))
    return injective, colliding


def build_evidences(params: Mapping[str, Any]) -> dict[str, Evidence]:
    file_content = params["file"]
    partner = params["collision_partner"]
    injective, colliding = _specs(params)
    probe = ProbeSpec(depth=1, alphabet=(None,))

    injective_evidence = Evidence(
        name="file-with-digest",
        assertions=(
            Assertion(
                id="respondent-locates-file",
                text="the respondent's mind yields the file's location",
            ),
            Assertion(
                id="file-matches-digest",
                text="the located file hashes to the published digest",
                holds_in=_file_matches_digest(
                    injective.name, injective.evaluate(file_content)
                ),
            ),
        ),
        worlds=(
            ("archive", _world(FILE_LOCATION, file_content)),
            ("archive-alt-slot", _world(ALT_FILE_LOCATION, file_content)),
        ),
        probe=probe,
        partial_specs={},
    )
    colliding_evidence = Evidence(
        name="file-with-colliding-digest",
        assertions=(
            Assertion(
                id="respondent-locates-file",
                text="the respondent's mind yields the file's location",
            ),
            Assertion(
                id="file-matches-digest",
                text="the located file hashes to the published digest",
                holds_in=_file_matches_digest(
                    colliding.name, colliding.evaluate(file_content)
                ),
            ),
        ),
        worlds=(
            ("true-file", _world(FILE_LOCATION, file_content)),
            ("collision-partner-file", _world(FILE_LOCATION, partner)),
        ),
        probe=probe,
        partial_specs={},
    )
    return {"injective": injective_evidence, "colliding": colliding_evidence}


def build(params: Optional[Mapping[str, Any]] = None) -> Scenario:
    merged = dict(DEFAULTS)
    merged.update(params or {})
    evidences = build_evidences(merged)
    file_content = merged["file"]
    injective, colliding = _specs(merged)

    exemplar = produce_file_action()
    injective_family = ActionFamily(
        actions=(
            ("produce-located-file", exemplar),
            ("produce-and-comment", chatty_action()),
            ("send-memorized-file", send_fixed_action("send-memorized-file", file_content)),
        ),
        exemplar_label="produce-located-file",
    )
    colliding_family = ActionFamily(
        actions=(
            ("produce-located-file", exemplar),
            (
                "send-collision-partner",
                send_fixed_action("send-collision-partner", file_content),
            ),
        ),
        exemplar_label="produce-located-file",
    )

    checks = [
        ScenarioCheck(
            kind="demonstrability",
            evidence="injective",
            expected=HOLDS,
            verifier=digest_verifier(
                injective.name, injective.evaluate(file_content)
            ),
            citation="Producing the located file passes the digest check in"
            " every consistent world.",
        ),
        ScenarioCheck(
            kind="entailment",
            evidence="injective",
            expected=HOLDS,
            verifier=digest_verifier(
                injective.name, injective.evaluate(file_content)
            ),
            family=injective_family,
            citation="An injective digest pins the preimage down, so an"
            " accepted performance can only carry the file itself.",
        ),
        ScenarioCheck(
            kind="demonstrability",
            evidence="colliding",
            expected=HOLDS,
            verifier=digest_verifier(
                colliding.name, colliding.evaluate(file_content)
            ),
            citation="Producing the located file passes the digest check"
            " whether or not the hash has collisions.",
        ),
        ScenarioCheck(
            kind="counterexample",
            evidence="colliding",
            expected=FAILS,
            verifier=digest_verifier(
                colliding.name, colliding.evaluate(file_content)
            ),
            family=colliding_family,
            citation="With a known collision, an accepted performance may"
            " carry the collision partner: the outputs differ while their"
            " digests agree.",
        ),
        ScenarioCheck(
            kind="entailment",
            evidence="colliding",
            expected=FAILS,
            verifier=digest_verifier(
                colliding.name, colliding.evaluate(file_content)
            ),
            family=colliding_family,
            citation="The digest check recovers either the file or a"
            " collision partner; nothing in the evidence rules the partner"
            " out.",
        ),
    ]

    return Scenario(
        name="hash",
        title="file production checked by digest",
        evidences=evidences,
        verifier=digest_verifier(injective.name, injective.evaluate(file_content)),
        exemplar=exemplar,
        target=file_target(),
        post_processor=first_message_post("produced-bytes"),
        action_family=injective_family,
        checks=checks,
        edges=[],
    )
