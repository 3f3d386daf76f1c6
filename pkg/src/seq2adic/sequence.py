"""Generalized binary sequences of order 2 over Z_pq.

One period s_0 .. s_{pq-1} is built from the partition of Z_pq into
{0}, the nonzero multiples of p, the nonzero multiples of q, and the units:

    s_i = 0                        if i = 0 or i is a nonzero multiple of q
    s_i = 1                        if i is a nonzero multiple of p
    s_i = (1 - (i/p)(i/q)) / 2     if gcd(i, pq) = 1
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .numtheory import PrimePair, jacobi


class ResidueClass(enum.Enum):
    ZERO = "zero"
    MULT_OF_P = "mult_of_p"
    MULT_OF_Q = "mult_of_q"
    UNIT = "unit"


def classify(i: int, pair: PrimePair) -> ResidueClass:
    if not 0 <= i < pair.n:
        raise ValueError(f"index {i} outside [0, {pair.n - 1}]")
    if i == 0:
        return ResidueClass.ZERO
    if i % pair.p == 0:
        return ResidueClass.MULT_OF_P
    if i % pair.q == 0:
        return ResidueClass.MULT_OF_Q
    return ResidueClass.UNIT


@dataclass(frozen=True)
class BinarySequence:
    """One period of a binary sequence, s_0 first.

    ``pair`` is None for sequences that do not come from the family; those
    are still accepted by the definitional complexity oracle.
    """

    bits: tuple[int, ...]
    pair: Optional[PrimePair] = None

    def __post_init__(self) -> None:
        if not self.bits:
            raise ValueError("a sequence needs at least one bit per period")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")
        if self.pair is not None and len(self.bits) != self.pair.n:
            raise ValueError(f"period {len(self.bits)} does not match pq = {self.pair.n}")

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def from_bits(cls, bits: Iterable[int], pair: Optional[PrimePair] = None) -> BinarySequence:
        return cls(tuple(int(b) for b in bits), pair)

    @classmethod
    def from_bitstring(cls, text: str, pair: Optional[PrimePair] = None) -> BinarySequence:
        if set(text) - {"0", "1"}:
            raise ValueError("bitstring may contain only '0' and '1'")
        return cls(tuple(1 if c == "1" else 0 for c in text), pair)

    def to_bitstring(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    def to_bytes(self) -> bytes:
        # s_{8j+k} lands in bit k of byte j; the last byte is zero-padded on top.
        out = bytearray((self.n + 7) // 8)
        for i, b in enumerate(self.bits):
            if b:
                out[i >> 3] |= 1 << (i & 7)
        return bytes(out)

    def to_hex(self) -> str:
        return self.to_bytes().hex()


def generate(pair: PrimePair) -> BinarySequence:
    p, q = pair.p, pair.q
    bits = []
    for i in range(pair.n):
        if i % q == 0:
            # covers i = 0 as well
            bits.append(0)
        elif i % p == 0:
            bits.append(1)
        else:
            bits.append((1 - jacobi(i, p) * jacobi(i, q)) // 2)
    return BinarySequence(tuple(bits), pair)


def ones_count(seq: BinarySequence) -> int:
    return sum(seq.bits)


def expected_ones(pair: PrimePair) -> int:
    """Closed-form weight: (q-1) from the multiples of p plus half the units."""
    return (pair.q - 1) + (pair.p - 1) * (pair.q - 1) // 2
