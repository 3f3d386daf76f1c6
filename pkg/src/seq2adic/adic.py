"""2-adic complexity of the order-2 generalized sequences.

Two routes to the same number:

* the definitional route: reduce S(2) = sum s_i 2^i and take
  gcd(S(2), 2^n - 1) directly;
* the closed form: d = gcd((q-1)_o, 2^p-1) * gcd((p+1)_o, 2^q-1).

The Gauss sums G_p, G_q and the congruence for 2*S(2) that links the two
routes are also exposed so the verify module can check each step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .numtheory import PrimePair, gcd, jacobi, mersenne, odd_part
from .sequence import BinarySequence, generate


@dataclass(frozen=True)
class MersenneRing:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ring exponent must be positive, got {self.n}")

    @property
    def modulus(self) -> int:
        return mersenne(self.n)

    def reduce(self, x: int) -> int:
        return x % self.modulus

    def quotient(self, k: int) -> int:
        """(2^n - 1) / (2^k - 1), which is exact whenever k | n."""
        divisor = mersenne(k)
        quo, rem = divmod(self.modulus, divisor)
        if rem:
            raise ArithmeticError(f"2^{k}-1 does not divide 2^{self.n}-1")
        return quo


@dataclass(frozen=True)
class GaussSums:
    """G_p and G_q reduced into [0, 2^pq - 2]; raw signed values kept too."""

    g_p: int
    g_q: int
    raw_g_p: int
    raw_g_q: int


@dataclass(frozen=True)
class ComplexityReport:
    n: int
    s2: int
    d: int
    c2_bits: float
    is_max: bool
    pair: Optional[PrimePair] = None
    d1: Optional[int] = None
    d2: Optional[int] = None
    d3: Optional[int] = None
    closed_d1: Optional[int] = None
    closed_d2: Optional[int] = None

    @property
    def exact(self) -> tuple[int, int]:
        """(n, d): compare these, not c2_bits, when exactness matters."""
        return self.n, self.d


def complexity_bits(n: int, d: int) -> float:
    """log2((2^n - 1) / d) for d dividing 2^n - 1."""
    quo, rem = divmod(mersenne(n), d)
    if rem:
        raise ArithmeticError(f"{d} does not divide 2^{n}-1")
    # math.log2 handles arbitrarily large ints to within an ulp
    return math.log2(quo)


def s_of_two(seq: Union[BinarySequence, Sequence[int]]) -> int:
    bits = seq.bits if isinstance(seq, BinarySequence) else seq
    # bits[i] is the coefficient of 2^i, so the MSB is the last bit
    return int("".join("1" if b else "0" for b in reversed(bits)) or "0", 2)


def definitional_complexity(seq: Union[BinarySequence, Sequence[int]]) -> ComplexityReport:
    """Oracle: gcd(S(2), 2^n - 1) straight from the bits.

    Works for any binary sequence. The all-zero sequence gets
    d = 2^n - 1 and complexity 0 (gcd(0, m) = m).
    """
    if not isinstance(seq, BinarySequence):
        seq = BinarySequence.from_bits(seq)
    s2 = s_of_two(seq)
    d = gcd(s2, mersenne(seq.n))
    return ComplexityReport(
        n=seq.n, s2=s2, d=d, c2_bits=complexity_bits(seq.n, d), is_max=d == 1, pair=seq.pair
    )


def gauss_sums(pair: PrimePair) -> GaussSums:
    p, q = pair.p, pair.q
    raw_g_p = sum(jacobi(j * q, p) << (j * q) for j in range(1, p))
    raw_g_q = sum(jacobi(i * p, q) << (i * p) for i in range(1, q))
    m = mersenne(pair.n)
    return GaussSums(g_p=raw_g_p % m, g_q=raw_g_q % m, raw_g_p=raw_g_p, raw_g_q=raw_g_q)


def closed_form(pair: PrimePair) -> tuple[int, int, float]:
    """(closed_d1, closed_d2, c2_bits) from the odd parts of q-1 and p+1."""
    p, q = pair.p, pair.q
    d1 = gcd(odd_part(q - 1), mersenne(p))
    d2 = gcd(odd_part(p + 1), mersenne(q))
    return d1, d2, complexity_bits(pair.n, d1 * d2)


def shortcut_conditions(pair: PrimePair) -> tuple[bool, bool]:
    """Flags for the cases where d1 (resp. d2) is forced to be 1.

    Odd parts are odd, so ``(q-1)_o < 2p+1`` and ``(q-1)_o <= 2p-1`` coincide.
    """
    p, q = pair.p, pair.q
    return odd_part(q - 1) <= 2 * p - 1, odd_part(p + 1) <= 2 * q - 1


def lower_bound(pair: PrimePair) -> float:
    p, q = pair.p, pair.q
    worst = max(odd_part(q - 1), odd_part(p + 1))
    return math.log2(mersenne(pair.n)) - math.log2(worst)


def eq2_lhs_rhs(pair: PrimePair, s2: Optional[int] = None,
                sums: Optional[GaussSums] = None) -> tuple[int, int]:
    """Both sides of 2 S(2) = Q_p - Q_q - 1 - G_p G_q  (mod 2^pq - 1).

    Q_p = (2^pq-1)/(2^p-1) and Q_q = (2^pq-1)/(2^q-1) are exact integers.
    """
    ring = MersenneRing(pair.n)
    if s2 is None:
        s2 = s_of_two(generate(pair))
    if sums is None:
        sums = gauss_sums(pair)
    qp, qq = ring.quotient(pair.p), ring.quotient(pair.q)
    lhs = ring.reduce(2 * s2)
    rhs = ring.reduce(qp - qq - 1 - sums.g_p * sums.g_q)
    return lhs, rhs


def analyze(pair: PrimePair) -> ComplexityReport:
    seq = generate(pair)
    s2 = s_of_two(seq)
    ring = MersenneRing(pair.n)
    mp, mq = mersenne(pair.p), mersenne(pair.q)
    cofactor, rem = divmod(ring.modulus, mp * mq)
    assert rem == 0
    d = gcd(s2, ring.modulus)
    closed_d1, closed_d2, _ = closed_form(pair)
    return ComplexityReport(
        n=pair.n,
        s2=s2,
        d=d,
        c2_bits=complexity_bits(pair.n, d),
        is_max=d == 1,
        pair=pair,
        d1=gcd(s2, mp),
        d2=gcd(s2, mq),
        d3=gcd(s2, cofactor),
        closed_d1=closed_d1,
        closed_d2=closed_d2,
    )
