"""Deterministic execution engine for interacting stateful machines.

The moving parts:

  * ``Machine``  -- a named bundle of state and methods.  A method is a
    plain function ``fn(ctx, argument) -> value | ABSENT`` that reads and
    writes ``ctx.state``, draws coins from ``ctx.tape``, and reaches other
    machines through the capability handles on ``ctx``.
  * ``Nature``   -- the outside world: a location-indexed collection of
    machines, some of which are read-only stores.
  * ``World``    -- a snapshot pairing nature with a respondent machine
    and a randomness assignment.  Worlds deep-copy cleanly; a snapshot
    shares no mutable state with the original.
  * ``execute`` -- the two-phase run of a verifier against an action.
    Phase one runs the action to completion with oracle access to nature
    and the respondent, buffering everything it sends toward the
    verifier.  Phase two runs the verifier, which consumes the buffered
    messages in order and queries nature.  The verifier's final output
    fixes the verdict.

Access rules are enforced by construction: the respondent is reachable
only from the action phase.  A verifier that tries to reach the
respondent sees a no-such-method outcome, and the attempt is recorded
in the transcript.

Everything is deterministic given (world, machines, budget, seed): two
runs over snapshots of the same world produce bitwise identical
transcripts and post-worlds.  Method code must keep its mutable data in
``ctx.state`` (never in captured closures) for that guarantee to hold.

The step budget charges method invocations, messages, and tape reads.
A method body that loops forever while touching none of those is
outside the model; scenario machines always interleave their work with
charged operations.

A note on outputs: ``None`` is the null value ⊥ and counts as output.
A method that produces nothing must ``return ABSENT`` explicitly.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Optional

from .tapes import RandomnessAssignment, ZeroTape
from .values import ABSENT, NO_SUCH_METHOD, Location, is_value, render_value

DEFAULT_BUDGET = 100_000

MethodFn = Callable[["MethodContext", Any], Any]


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------


class KernelError(Exception):
    """Base class for execution-engine failures."""


class NoSuchMethodError(KernelError):
    """A call named a method the target machine does not define (or a
    non-read call reached a read-only location)."""

    def __init__(self, machine_id: str, method: str):
        super().__init__(f"machine {machine_id!r} has no method {method!r}")
        self.machine_id = machine_id
        self.method = method


class BudgetExceededError(KernelError):
    """The per-execution step counter ran out."""


class AbsentOutputError(KernelError):
    """A target action halted without producing a value."""


class AccessViolationError(KernelError):
    """Machine code asked for a capability its role does not have.

    This signals a bug in scenario wiring, not a doctrine event, so it
    is kept distinct from ``NoSuchMethodError``.
    """


class MalformedValueError(KernelError):
    """A method returned something outside the value algebra."""


# ---------------------------------------------------------------------------
# Machines, nature, worlds
# ---------------------------------------------------------------------------


@dataclass
class Machine:
    """A stateful machine: identifier, variable store, and method table.

    Two machines are structurally identical when they share an id, equal
    state, and the same method functions per name.  Scenario builders
    keep method functions at module level so that independently built
    copies of a machine compare equal.

    ``force_zero_tape`` pins the machine's coins to all zeros.
    ``emulated_respondent`` replaces the machine's view of the
    respondent with a private emulated copy (used by the impossibility
    probes).
    """

    id: str
    state: dict[str, Any] = field(default_factory=dict)
    methods: dict[str, MethodFn] = field(default_factory=dict)
    force_zero_tape: bool = False
    emulated_respondent: Optional["Machine"] = None

    def method_names(self) -> tuple[str, ...]:
        return tuple(sorted(self.methods))


@dataclass
class Nature:
    """Location-indexed machines plus the set of read-only locations.

    A read-only location answers only ``read()`` and its state is never
    mutated; any other call yields a no-such-method outcome.
    """

    slots: dict[int, Machine] = field(default_factory=dict)
    read_only: frozenset[int] = frozenset()

    def at(self, location: int | Location) -> Machine:
        index = location.index if isinstance(location, Location) else location
        try:
            return self.slots[index]
        except KeyError:
            raise NoSuchMethodError(f"nature[{index}]", "<missing>") from None


@dataclass
class World:
    """Nature, a respondent, and one randomness assignment."""

    nature: Nature
    respondent: Machine
    assignment: RandomnessAssignment


def snapshot(world: World) -> World:
    """Deep copy sharing no mutable state; tape cursors are preserved."""
    return copy.deepcopy(world)


def with_seed(world: World, seed: int) -> World:
    """Snapshot of ``world`` under a fresh assignment for ``seed``."""
    fresh = snapshot(world)
    fresh.assignment = RandomnessAssignment(seed)
    return fresh


def same_world_content(a: World, b: World) -> bool:
    """Structural identity of (nature, respondent); tapes are ignored.

    This is the membership notion for evidence families: what the
    government asserts is the shape of nature and of the respondent's
    mind, not a coin sequence.
    """
    return a.nature == b.nature and a.respondent == b.respondent


# ---------------------------------------------------------------------------
# Transcripts
# ---------------------------------------------------------------------------


class Verdict(Enum):
    ACCEPT = "Accept"
    REJECT = "Reject"
    BUDGET = "Budget"


@dataclass(frozen=True)
class CallEvent:
    caller: str
    callee: str
    method: str
    argument: Any
    output: Any  # value, ABSENT, or NO_SUCH_METHOD

    def render(self) -> str:
        return (
            f"{self.caller} -> {self.callee}.{self.method}"
            f"({render_value(self.argument)}) = {render_value(self.output)}"
        )


@dataclass
class Transcript:
    """Ordered record of one execution: calls, messages, verdict."""

    events: list[CallEvent] = field(default_factory=list)
    messages_to_verifier: list[Any] = field(default_factory=list)
    verdict: Optional[Verdict] = None

    def set_verdict(self, verdict: Verdict) -> None:
        if self.verdict is not None:
            raise KernelError("verdict already set")
        self.verdict = verdict

    def calls_to(self, machine_id: str) -> list[CallEvent]:
        return [e for e in self.events if e.callee == machine_id]


@dataclass
class ExecutionResult:
    transcript: Transcript
    post_world: World
    steps_used: int


# ---------------------------------------------------------------------------
# Method contexts and capability proxies
# ---------------------------------------------------------------------------

_ROLE_ACTION = "action"
_ROLE_VERIFIER = "verifier"
_ROLE_TARGET = "target"
_ROLE_POST = "post"
_ROLE_NATURE = "nature"
_ROLE_RESPONDENT = "respondent"

# capabilities: (nature, respondent, send, receive, messages)
_CAPS = {
    _ROLE_ACTION: ("nature", "respondent", "send"),
    _ROLE_VERIFIER: ("nature", "receive"),
    _ROLE_TARGET: ("nature", "respondent"),
    _ROLE_POST: ("nature", "messages"),
    _ROLE_NATURE: ("nature",),
    _ROLE_RESPONDENT: (),
}


class MachineProxy:
    """Callable handle on another machine, routed through the engine so
    that every call is recorded and charged against the budget."""

    def __init__(self, engine: "_Engine", caller_id: str, machine: Machine):
        self._engine = engine
        self._caller_id = caller_id
        self._machine = machine

    def call(self, method: str, argument: Any = None) -> Any:
        return self._engine.invoke(self._caller_id, self._machine, method, argument)


class _RefusingRespondentProxy:
    """Stands in for the respondent in verifier context: every call is
    recorded as a no-such-method event and refused."""

    def __init__(self, engine: "_Engine", caller_id: str, respondent_id: str):
        self._engine = engine
        self._caller_id = caller_id
        self._respondent_id = respondent_id

    def call(self, method: str, argument: Any = None) -> Any:
        self._engine.record_refusal(
            self._caller_id, self._respondent_id, method, argument
        )
        raise NoSuchMethodError(self._respondent_id, method)


class _ChargingTape:
    """Tape view that charges the execution budget per read, so a machine
    cannot draw unbounded randomness for free."""

    def __init__(self, engine: "_Engine", inner):
        self._engine = engine
        self._inner = inner

    def read_bytes(self, n: int) -> bytes:
        self._engine.charge()
        return self._inner.read_bytes(n)

    def read_bit(self) -> int:
        self._engine.charge()
        return self._inner.read_bit()

    def read_below(self, bound: int) -> int:
        self._engine.charge()
        return self._inner.read_below(bound)


class MethodContext:
    """What a running method sees: its state, its tape, the name it was
    invoked under, and whatever capability handles its role grants."""

    def __init__(self, engine: "_Engine", machine: Machine, role: str, method: str):
        self._engine = engine
        self._machine = machine
        self._role = role
        self.method = method
        self.state = machine.state

    @property
    def tape(self) -> _ChargingTape:
        if self._machine.force_zero_tape:
            return _ChargingTape(self._engine, ZeroTape())
        return _ChargingTape(
            self._engine, self._engine.world.assignment.tape_for(self._machine.id)
        )

    def _require(self, capability: str) -> None:
        if capability not in _CAPS[self._role]:
            raise AccessViolationError(
                f"{self._role} machine {self._machine.id!r} has no "
                f"{capability!r} capability"
            )

    def nature(self, location: int | Location) -> MachineProxy:
        self._require("nature")
        return MachineProxy(
            self._engine, self._machine.id, self._engine.world.nature.at(location)
        )

    @property
    def respondent(self):
        if self._machine.emulated_respondent is not None:
            return MachineProxy(
                self._engine, self._machine.id, self._machine.emulated_respondent
            )
        if self._role == _ROLE_VERIFIER:
            return _RefusingRespondentProxy(
                self._engine, self._machine.id, self._engine.world.respondent.id
            )
        self._require("respondent")
        return MachineProxy(
            self._engine, self._machine.id, self._engine.world.respondent
        )

    def send(self, value: Any) -> None:
        self._require("send")
        if not is_value(value):
            raise MalformedValueError(f"cannot send non-value {value!r}")
        self._engine.charge()
        self._engine.transcript.messages_to_verifier.append(value)

    def receive(self) -> Any:
        """Next buffered message, or ABSENT when none remain."""
        self._require("receive")
        return self._engine.next_message()

    @property
    def messages(self) -> tuple[Any, ...]:
        self._require("messages")
        return tuple(self._engine.transcript.messages_to_verifier)


# ---------------------------------------------------------------------------
# The engine
# ---------------------------------------------------------------------------


class _Engine:
    def __init__(self, world: World, budget: int):
        self.world = world
        self.budget = budget
        self.steps = 0
        self.transcript = Transcript()
        self._cursor = 0  # verifier's position in the message buffer
        self._roles: dict[int, str] = {}
        self._read_only_ids = {
            id(world.nature.slots[loc])
            for loc in world.nature.read_only
            if loc in world.nature.slots
        }
        self._roles[id(world.respondent)] = _ROLE_RESPONDENT

    def cast(self, machine: Machine, role: str) -> None:
        self._roles[id(machine)] = role
        if machine.emulated_respondent is not None:
            self._roles[id(machine.emulated_respondent)] = _ROLE_RESPONDENT

    def role_of(self, machine: Machine) -> str:
        return self._roles.get(id(machine), _ROLE_NATURE)

    def charge(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceededError(f"step budget of {self.budget} exhausted")

    def next_message(self) -> Any:
        buffer = self.transcript.messages_to_verifier
        if self._cursor >= len(buffer):
            return ABSENT
        value = buffer[self._cursor]
        self._cursor += 1
        return value

    def record_refusal(self, caller: str, callee: str, method: str, argument) -> None:
        self.transcript.events.append(
            CallEvent(caller, callee, method, argument, NO_SUCH_METHOD)
        )

    def invoke(self, caller_id: str, machine: Machine, method: str, argument) -> Any:
        self.charge()
        read_only = id(machine) in self._read_only_ids
        fn = machine.methods.get(method)
        if fn is None or (read_only and method != "read"):
            self.record_refusal(caller_id, machine.id, method, argument)
            raise NoSuchMethodError(machine.id, method)
        ctx = MethodContext(self, machine, self.role_of(machine), method)
        output = fn(ctx, argument)
        if output is not ABSENT and not is_value(output):
            raise MalformedValueError(
                f"{machine.id}.{method} returned non-value {output!r}"
            )
        self.transcript.events.append(
            CallEvent(caller_id, machine.id, method, argument, output)
        )
        return output


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def execute(
    verifier: Machine,
    action: Machine,
    world: World,
    budget: int = DEFAULT_BUDGET,
) -> ExecutionResult:
    """Two-phase run of ``verifier`` against ``action`` in ``world``.

    ``world`` is mutated in place and returned as the post-world; pass a
    snapshot to keep the original.  The verifier and action are driven
    through their ``run`` methods on private copies, so calling code can
    reuse the same machine objects across cells.

    Verdicts: the verifier's output ``True`` means accept, anything else
    (including ⊥ or no output) rejects.  Exhausting the budget yields
    the non-accepting ``Budget`` verdict; a no-such-method outcome that
    the acting machine does not survive yields ``Reject`` with the
    attempt recorded.
    """
    engine = _Engine(world, budget)
    acting = copy.deepcopy(action)
    checking = copy.deepcopy(verifier)
    engine.cast(acting, _ROLE_ACTION)
    engine.cast(checking, _ROLE_VERIFIER)

    verdict: Optional[Verdict] = None
    try:
        engine.invoke("execution", acting, "run", None)
    except NoSuchMethodError:
        verdict = Verdict.REJECT
    except BudgetExceededError:
        verdict = Verdict.BUDGET

    if verdict is None:
        try:
            output = engine.invoke("execution", checking, "run", None)
            verdict = Verdict.ACCEPT if output is True else Verdict.REJECT
        except NoSuchMethodError:
            verdict = Verdict.REJECT
        except BudgetExceededError:
            verdict = Verdict.BUDGET

    engine.transcript.set_verdict(verdict)
    return ExecutionResult(engine.transcript, world, engine.steps)


def run_target(target: Machine, world: World, budget: int = DEFAULT_BUDGET) -> Any:
    """Run a target action to completion and return its output value.

    The target has oracle access to nature and the respondent and draws
    from its own tape under the world's assignment.  A target that
    produces no output is an error.
    """
    engine = _Engine(world, budget)
    acting = copy.deepcopy(target)
    engine.cast(acting, _ROLE_TARGET)
    output = engine.invoke("execution", acting, "run", None)
    if output is ABSENT:
        raise AbsentOutputError(f"target {target.id!r} produced no output")
    return output


def run_post(
    post: Machine,
    post_world: World,
    transcript: Transcript,
    budget: int = DEFAULT_BUDGET,
) -> Any:
    """Run a post-processor over the post-execution world and transcript.

    The post-processor sees nature as the interaction left it plus the
    message log; it has no respondent access.
    """
    engine = _Engine(post_world, budget)
    engine.transcript.messages_to_verifier.extend(transcript.messages_to_verifier)
    processing = copy.deepcopy(post)
    engine.cast(processing, _ROLE_POST)
    return engine.invoke("execution", processing, "run", None)


class DirectInvoker:
    """Drives machines one call at a time, outside any execution.

    Used by probes and tests that need sequential stateful invocations
    ("call prompt, then call read") against a machine as such.  Calls
    mutate the machine object that is passed in.
    """

    def __init__(
        self,
        world: Optional[World] = None,
        budget: int = DEFAULT_BUDGET,
        seed: int = 0,
    ):
        if world is None:
            world = World(
                nature=Nature(),
                respondent=Machine(id="bench-respondent"),
                assignment=RandomnessAssignment(seed),
            )
        self._engine = _Engine(world, budget)

    def invoke(self, machine: Machine, method: str, argument: Any = None) -> Any:
        return self._engine.invoke("bench", machine, method, argument)


def invoke_method(
    machine: Machine,
    method: str,
    argument: Any = None,
    *,
    world: Optional[World] = None,
    budget: int = DEFAULT_BUDGET,
) -> Any:
    """One-shot direct invocation; state updates commit to ``machine``."""
    return DirectInvoker(world=world, budget=budget).invoke(machine, method, argument)


# ---------------------------------------------------------------------------
# Machine constructors used across scenarios and probes
# ---------------------------------------------------------------------------


def _read_stored(ctx, _arg):
    return ctx.state["value"]


def read_only_store(machine_id: str, value: Any) -> Machine:
    """A store machine whose single method ``read()`` returns a fixed value."""
    if not is_value(value):
        raise MalformedValueError(f"stored content must be a value, got {value!r}")
    return Machine(id=machine_id, state={"value": value}, methods={"read": _read_stored})


def emulate_with_respondent(action: Machine, respondent: Machine) -> Machine:
    """The action that runs ``action``'s code against a private emulated
    copy of ``respondent`` instead of the world's actual respondent.

    The real respondent receives no calls at all, so the execution (and
    anything computed from it) is independent of who the respondent is.
    """
    stand_in = copy.deepcopy(respondent)
    stand_in.id = f"emulated:{respondent.id}"
    return Machine(
        id=f"{action.id}+emulating-{respondent.id}",
        state=copy.deepcopy(action.state),
        methods=dict(action.methods),
        force_zero_tape=action.force_zero_tape,
        emulated_respondent=stand_in,
    )


def with_zero_tape(action: Machine) -> Machine:
    """Copy of ``action`` with its randomness tape pinned to all zeros."""
    pinned = copy.deepcopy(action)
    pinned.id = f"{action.id}+zero-coins"
    pinned.force_zero_tape = True
    return pinned
