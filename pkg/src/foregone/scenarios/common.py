"""Machine builders shared across scenarios.

Method functions live at module level so that two independently built
copies of the same machine compare structurally equal; every parameter
a machine depends on sits in its state, never in a closure.
"""

from __future__ import annotations

from typing import Any

from ..kernel import Machine
from ..values import ABSENT


# --- generic method bodies -------------------------------------------------


def _disclose(ctx, _arg):
    """Return the state variable named like the invoked method."""
    return ctx.state[ctx.method]


def _halt(ctx, _arg):
    return ABSENT


def _accept(ctx, _arg):
    return True


def _do_nothing(ctx, _arg):
    return ABSENT


def _send_stored_message(ctx, _arg):
    ctx.send(ctx.state["message"])
    return ABSENT


def _post_fixed(ctx, _arg):
    return ctx.state["value"]


def _post_first_message(ctx, _arg):
    messages = ctx.messages
    return messages[0] if messages else None


def _post_read_location(ctx, _arg):
    return ctx.nature(ctx.state["location"]).call("read")


# --- builders ---------------------------------------------------------------


def mind(machine_id: str, **contents: Any) -> Machine:
    """A respondent: each named method discloses one stored value."""
    return Machine(
        id=machine_id,
        state=dict(contents),
        methods={name: _disclose for name in contents},
    )


def silent_mind(machine_id: str, *method_names: str) -> Machine:
    """A respondent whose methods exist but halt without output."""
    return Machine(
        id=machine_id,
        state={},
        methods={name: _halt for name in method_names},
    )


def accept_any_verifier() -> Machine:
    """The trivial verifier: accepts every performance."""
    return Machine(id="accept-any-performance", methods={"run": _accept})


def do_nothing_action() -> Machine:
    return Machine(id="do-nothing", methods={"run": _do_nothing})


def send_fixed_action(machine_id: str, message: Any) -> Machine:
    """Sends one hardcoded message to the verifier."""
    return Machine(
        id=machine_id, state={"message": message}, methods={"run": _send_stored_message}
    )


def fixed_output_post(machine_id: str, value: Any) -> Machine:
    """Post-processor that ignores everything and returns a constant."""
    return Machine(id=machine_id, state={"value": value}, methods={"run": _post_fixed})


def first_message_post(machine_id: str = "echo-first-message") -> Machine:
    """Post-processor returning the first value the action sent (⊥ if none)."""
    return Machine(id=machine_id, methods={"run": _post_first_message})


def read_location_post(machine_id: str, location: int) -> Machine:
    """Post-processor that reads one nature location after the interaction."""
    return Machine(
        id=machine_id, state={"location": location}, methods={"run": _post_read_location}
    )
