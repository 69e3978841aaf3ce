"""Seeded randomness tapes.

Every machine taking part in a check reads random bits from its own
tape.  A tape is a deterministic bit stream derived from
``(seed, stream id)`` by hashing, so:

  * the same (seed, id) always yields the same stream, and
  * two branches of a check that share an assignment observe bitwise
    identical tapes per machine, even though they run different code.

Assignments track how far into each stream a machine has read.  A deep
copy of an assignment therefore replays every stream from exactly the
same point, which is what makes snapshot-and-compare checks exact.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

_MASK64 = (1 << 64) - 1
_BLOCK = 32  # sha256 digest size


def _block(seed: int, stream_id: str, index: int) -> bytes:
    material = f"{seed}|{stream_id}|{index}".encode("utf-8")
    return hashlib.sha256(material).digest()


@dataclass
class RandomnessAssignment:
    """One setting of every machine's randomness tape.

    ``offsets`` records consumed prefix lengths per stream id and is the
    only mutable part; copying a world deep-copies it, so the copy and
    the original advance independently but identically.
    """

    seed: int
    offsets: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        self.seed = self.seed & _MASK64

    def tape_for(self, stream_id: str) -> "TapeReader":
        return TapeReader(self, stream_id)


class TapeReader:
    """Cursor over one machine's bit stream within an assignment."""

    def __init__(self, assignment: RandomnessAssignment, stream_id: str):
        self._assignment = assignment
        self._stream_id = stream_id

    def read_bytes(self, n: int) -> bytes:
        if n < 0:
            raise ValueError("cannot read a negative number of bytes")
        pos = self._assignment.offsets.get(self._stream_id, 0)
        out = bytearray()
        while len(out) < n:
            block_index, skip = divmod(pos + len(out), _BLOCK)
            chunk = _block(self._assignment.seed, self._stream_id, block_index)
            out.extend(chunk[skip : skip + (n - len(out))])
        self._assignment.offsets[self._stream_id] = pos + n
        return bytes(out)

    def read_bit(self) -> int:
        return self.read_bytes(1)[0] & 1

    def read_below(self, bound: int) -> int:
        """Uniform draw from [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        nbytes = (bound.bit_length() + 7) // 8
        limit = (256**nbytes // bound) * bound
        while True:
            draw = int.from_bytes(self.read_bytes(nbytes), "big")
            if draw < limit:
                return draw % bound


class ZeroTape:
    """A tape that is all zeros; used to pin an action's coins."""

    def read_bytes(self, n: int) -> bytes:
        if n < 0:
            raise ValueError("cannot read a negative number of bytes")
        return b"\x00" * n

    def read_bit(self) -> int:
        return 0

    def read_below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return 0
