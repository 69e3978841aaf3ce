from __future__ import annotations

import pytest

from foregone.refinement import (
    ProbeSpec,
    bounded_equivalent,
    bounded_implements,
    distinguishing_probe,
    replay_probe,
)
from foregone.scenarios.hybrid import plain_store, writable_store
from foregone.scenarios.password import deniable_device, password_device

ALPHABET = (b"cats", None)
PWD_ALPHABET = (b"hunter2", b"wrong-guess", None)


def test_plain_store_partially_specifies_the_writable_store():
    assert bounded_implements(plain_store(b"alpha"), writable_store(b"alpha"), 3, ALPHABET)


def test_writable_store_is_not_specified_by_the_plain_store():
    # method-superset violated: the plain store lacks write
    assert not bounded_implements(
        writable_store(b"alpha"), plain_store(b"alpha"), 3, ALPHABET
    )


def test_store_variants_are_not_equivalent():
    assert not bounded_equivalent(plain_store(b"alpha"), writable_store(b"alpha"), 3, ALPHABET)


def test_password_device_partially_specifies_the_deniable_device():
    plain = password_device(b"hunter2", b"tax-records")
    deniable = deniable_device(b"hunter2", b"d00rbell", b"tax-records")
    assert bounded_implements(plain, deniable, 3, PWD_ALPHABET)


def test_deniable_device_is_not_equivalent_to_the_plain_device():
    plain = password_device(b"hunter2", b"tax-records")
    deniable = deniable_device(b"hunter2", b"d00rbell", b"tax-records")
    duress_alphabet = PWD_ALPHABET + ((b"d00rbell", b"cats"),)
    assert not bounded_equivalent(plain, deniable, 3, duress_alphabet)


def test_equivalence_of_independent_copies():
    assert bounded_equivalent(
        password_device(b"hunter2", b"m"), password_device(b"hunter2", b"m"), 3, PWD_ALPHABET
    )


def test_implements_is_reflexive():
    for machine in (plain_store(b"x"), password_device(b"p", b"m")):
        assert bounded_implements(machine, machine, 2, ALPHABET)


def test_implements_is_transitive_at_fixed_bounds():
    a = plain_store(b"alpha")
    b = writable_store(b"alpha")

    def wipe(ctx, _arg):
        ctx.state["content"] = b""
        return None

    c = writable_store(b"alpha")
    c = type(c)(id="wipeable-store", state=dict(c.state), methods={**c.methods, "wipe": wipe})
    assert bounded_implements(a, b, 2, ALPHABET)
    assert bounded_implements(b, c, 2, ALPHABET)
    assert bounded_implements(a, c, 2, ALPHABET)


def test_behavioral_divergence_is_caught_not_just_method_sets():
    honest = plain_store(b"alpha")
    gaslight = plain_store(b"alpha")

    def moody_read(ctx, _arg):
        ctx.state["reads"] = ctx.state.get("reads", 0) + 1
        return ctx.state["content"] if ctx.state["reads"] < 2 else b"gone"

    gaslight = type(gaslight)(
        id="moody-store", state=dict(gaslight.state), methods={"read": moody_read}
    )
    # first read agrees; only a stateful two-call probe separates them
    assert bounded_implements(honest, gaslight, 1, ALPHABET)
    assert not bounded_implements(honest, gaslight, 2, ALPHABET)


def test_a_false_answer_carries_a_replayable_witness():
    honest = plain_store(b"alpha")
    writable = writable_store(b"alpha")
    probe = distinguishing_probe(writable, honest, 2, ALPHABET)
    assert probe is not None
    left = replay_probe(writable, probe)
    right = replay_probe(honest, probe)
    assert left != right


def test_falsehood_is_monotone_in_depth():
    honest = plain_store(b"alpha")

    def moody_read(ctx, _arg):
        ctx.state["reads"] = ctx.state.get("reads", 0) + 1
        return ctx.state["content"] if ctx.state["reads"] < 3 else b"gone"

    moody = type(honest)(
        id="moody-store", state=dict(honest.state), methods={"read": moody_read}
    )
    assert bounded_implements(honest, moody, 2, ALPHABET)
    for depth in (3, 4, 5):
        assert not bounded_implements(honest, moody, depth, ALPHABET)


def test_probe_spec_validates_bounds():
    with pytest.raises(ValueError):
        ProbeSpec(depth=0, alphabet=(None,))
    with pytest.raises(ValueError):
        ProbeSpec(depth=1, alphabet=())
