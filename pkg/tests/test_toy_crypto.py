from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from foregone.toy_crypto import (
    SCHEMES,
    BindingClass,
    DomainExceededError,
    LengthMismatchError,
    byte_domain,
    complement,
    hiding_profile,
    make_colliding_hash,
    make_injective_hash,
    otp,
    small_byte_domain,
)


# --- one-time pad ---------------------------------------------------------------


@given(st.binary(min_size=0, max_size=8))
def test_otp_is_an_involution(message):
    key = bytes((i * 37 + 11) % 256 for i in range(len(message)))
    assert otp(key, otp(key, message)) == message


def test_all_zero_pad_is_the_identity():
    assert otp(b"\x00\x00\x00", b"abc") == b"abc"


def test_all_ones_pad_is_the_complement():
    assert otp(b"\xff\xff\xff", b"abc") == complement(b"abc")


def test_otp_rejects_mismatched_lengths():
    with pytest.raises(LengthMismatchError):
        otp(b"\x00", b"ab")


# --- hashes ---------------------------------------------------------------------


def test_injective_hash_survives_the_exhaustive_sweep():
    spec = make_injective_hash(extra_domain=(b"q3-report", b"shadow-q3"))
    assert spec.declared_injective
    assert spec.injectivity_witness() is None


def test_colliding_hash_exposes_exactly_its_documented_pair():
    spec = make_colliding_hash(b"q3-report", b"shadow-q3")
    assert spec.evaluate(b"q3-report") == spec.evaluate(b"shadow-q3")
    witness = spec.injectivity_witness()
    assert witness is not None
    assert set(witness) == {b"q3-report", b"shadow-q3"}


def test_hash_preserves_length_and_permutes_bytes():
    spec = make_injective_hash()
    assert len(spec.evaluate(b"abcdef")) == 6
    images = {spec.evaluate(bytes([i])) for i in range(256)}
    assert len(images) == 256


# --- commitments ----------------------------------------------------------------


@pytest.mark.parametrize("scheme_name", ["transparent", "xor-pad"])
def test_correctness_clause_exhaustively(scheme_name):
    scheme = SCHEMES[scheme_name]
    for x in small_byte_domain():
        for r in small_byte_domain():
            c, d = scheme.commit(x, r)
            assert scheme.check(c, d, x)


def test_transparent_scheme_passes_the_double_opening_sweep():
    witness = SCHEMES["transparent"].double_opening_witness(
        byte_domain(), small_byte_domain()
    )
    assert witness is None
    assert SCHEMES["transparent"].binding_class is BindingClass.PERFECTLY_BINDING


def test_xor_pad_scheme_fails_binding_with_a_verified_witness():
    scheme = SCHEMES["xor-pad"]
    witness = scheme.double_opening_witness(byte_domain(), small_byte_domain())
    assert witness is not None
    x, xp, d, dp, c = witness
    assert x != xp
    assert scheme.check(c, d, x)
    assert scheme.check(c, dp, xp)
    assert scheme.binding_class is BindingClass.EQUIVOCABLE


def test_xor_pad_equivocates_to_every_message():
    scheme = SCHEMES["xor-pad"]
    c, _ = scheme.commit(b"\x5a", b"\x33")
    for target in byte_domain():
        opening = scheme.equivocate(c, target)
        assert scheme.check(c, opening, target)


def test_transparent_openings_reject_other_messages():
    scheme = SCHEMES["transparent"]
    c, d = scheme.commit(b"\x10", b"\x01")
    for other in byte_domain():
        if other != b"\x10":
            assert not scheme.check(c, d, other)


def test_xor_pad_hiding_profile_is_message_independent():
    profile = hiding_profile(SCHEMES["xor-pad"], (b"\x00", b"\x7f", b"\xff"), byte_domain())
    histograms = {tuple(sorted(counts.values())) for counts in profile.values()}
    assert histograms == {tuple([1] * 256)}  # uniform for every message


def test_transparent_commitments_are_not_hiding():
    profile = hiding_profile(SCHEMES["transparent"], (b"\x00", b"\x01"), small_byte_domain())
    assert profile[b"\x00"] != profile[b"\x01"]


def test_openable_commitments_drive_the_language_construction():
    secrets = (b"\x11", b"\x22")
    transparent = SCHEMES["transparent"]
    xor_pad = SCHEMES["xor-pad"]
    t_a = transparent.openable_commitments(b"\x11", secrets, byte_domain())
    t_b = transparent.openable_commitments(b"\x22", secrets, byte_domain())
    assert t_a and t_b and not (t_a & t_b)
    e_a = xor_pad.openable_commitments(b"\x11", secrets, byte_domain())
    e_b = xor_pad.openable_commitments(b"\x22", secrets, byte_domain())
    assert e_a == e_b and e_a  # every commitment opens to every secret


def test_transparent_commit_rejects_oversized_inputs():
    with pytest.raises(DomainExceededError):
        SCHEMES["transparent"].commit(b"123456789", b"r")
