"""Exact integer number theory: primality, Legendre symbols, odd parts, gcd,
and canonical residues modulo Mersenne numbers.

Everything here works on Python ints and is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Miller-Rabin with the first twelve prime bases is exact below 3.3e24;
# we only promise (and accept) the 64-bit range.
PRIME_LIMIT = 1 << 64
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class RangeExceededError(ValueError):
    """Raised when a primality query falls outside the range we decide exactly."""


class InvalidPairError(ValueError):
    """Raised when (p, q) is not a pair of distinct odd primes."""


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    if n < 0:
        raise ValueError(f"is_prime expects a nonnegative integer, got {n}")
    if n >= PRIME_LIMIT:
        raise RangeExceededError(f"range exceeded: {n} is not below 2**64")
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, by reciprocity descent."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    t = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1}; p must be an odd prime."""
    _require_odd_prime(p)
    return jacobi(a, p)


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion. Slower; kept as a cross-check."""
    _require_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def neg_one_symbol(p: int) -> int:
    """(-1/p) = (-1)^((p-1)/2)."""
    _require_odd_prime(p)
    return 1 if p % 4 == 1 else -1


def odd_part(m: int) -> int:
    """The odd m' with m = 2^a * m'."""
    if m <= 0:
        raise ValueError(f"odd part is defined for positive integers, got {m}")
    return m >> ((m & -m).bit_length() - 1)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def mersenne(n: int) -> int:
    """2^n - 1."""
    if n < 1:
        raise ValueError(f"Mersenne exponent must be positive, got {n}")
    return (1 << n) - 1


def mod_mersenne(x: int, n: int) -> int:
    """Canonical representative of x modulo 2^n - 1, in [0, 2^n - 2]."""
    return x % mersenne(n)


@dataclass(frozen=True)
class PrimePair:
    """Ordered pair of distinct odd primes. Order matters: the sequence is
    not symmetric in p and q."""

    p: int
    q: int

    def __post_init__(self) -> None:
        for name, v in (("p", self.p), ("q", self.q)):
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidPairError(f"{name} must be an integer")
            try:
                ok = v > 2 and is_prime(v)
            except RangeExceededError:
                raise InvalidPairError(f"{name} exceeds the supported prime range (2**64)") from None
            if not ok:
                raise InvalidPairError(f"{name} must be an odd prime")
        if self.p == self.q:
            raise InvalidPairError("p and q must be distinct")

    @property
    def n(self) -> int:
        return self.p * self.q

    def swapped(self) -> PrimePair:
        return PrimePair(self.q, self.p)
