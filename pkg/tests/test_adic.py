import math

import mpmath
import pytest

from seq2adic.adic import (
    MersenneRing,
    analyze,
    closed_form,
    complexity_bits,
    definitional_complexity,
    eq2_lhs_rhs,
    gauss_sums,
    lower_bound,
    s_of_two,
    shortcut_conditions,
)
from seq2adic.numtheory import PrimePair, is_prime, odd_part
from seq2adic.sequence import BinarySequence, generate

mpmath.mp.dps = 60


def pairs(limit):
    primes = [k for k in range(3, limit // 3 + 1) if is_prime(k)]
    return [PrimePair(p, q) for p in primes for q in primes if p != q and p * q <= limit]


PAIRS = pairs(1200)


def exact_bits(n, d):
    return mpmath.log(mpmath.mpf(2 ** n - 1), 2) - mpmath.log(mpmath.mpf(d), 2)


def test_ring_quotients():
    ring = MersenneRing(15)
    assert ring.modulus == 32767
    assert ring.quotient(3) == 4681 and ring.quotient(5) == 1057
    with pytest.raises(ArithmeticError):
        ring.quotient(4)
    with pytest.raises(ValueError):
        MersenneRing(0)


def test_s_of_two_three_five():
    expected = sum(2 ** k for k in (3, 6, 7, 9, 11, 12, 13, 14))
    assert expected == 31432
    assert s_of_two(generate(PrimePair(3, 5))) == 31432


@pytest.mark.parametrize("bits, expected", [((0,) * 9, 0), ((1, 0, 0), 1), ((0, 1, 1), 6)])
def test_s_of_two_small(bits, expected):
    assert s_of_two(bits) == expected
    assert s_of_two(BinarySequence(bits)) == expected


def test_definitional_three_five():
    rep = definitional_complexity(generate(PrimePair(3, 5)))
    assert rep.d == 1 and rep.is_max
    assert rep.c2_bits == pytest.approx(math.log2(32767), abs=1e-12)
    assert rep.closed_d1 is None and rep.closed_d2 is None
    assert rep.exact == (15, 1)


def test_definitional_all_ones_and_zeros():
    ones = definitional_complexity([1] * 10)
    assert ones.d == 1023 and ones.c2_bits == 0.0 and not ones.is_max
    zeros = definitional_complexity([0] * 10)
    assert zeros.s2 == 0 and zeros.d == 1023 and zeros.c2_bits == 0.0


def test_definitional_three_twenty_nine():
    assert definitional_complexity(generate(PrimePair(3, 29))).d == 7


def test_gauss_sums_three_five():
    gs = gauss_sums(PrimePair(3, 5))
    assert gs.raw_g_q == -2 ** 3 + 2 ** 6 + 2 ** 9 - 2 ** 12 == -3528
    assert gs.g_q == 29239
    assert gs.raw_g_p == -32 + 1024 and gs.g_p == 992
    assert gs.g_p % 31 == 0 and gs.g_q % 7 == 0


def brute_gauss(pair):
    """Gauss sums by Euler's criterion, reduced by repeated subtraction
    of the modulus rather than %."""
    from seq2adic.numtheory import legendre_euler

    m = 2 ** pair.n - 1
    gp = sum(legendre_euler(j * pair.q, pair.p) * 2 ** (j * pair.q) for j in range(1, pair.p))
    gq = sum(legendre_euler(i * pair.p, pair.q) * 2 ** (i * pair.p) for i in range(1, pair.q))
    out = []
    for g in (gp, gq):
        while g < 0:
            g += m
        while g >= m:
            g -= m
        out.append(g)
    return tuple(out)


@pytest.mark.parametrize("pair", pairs(400), ids=str)
def test_gauss_sums_match_brute_force(pair):
    gs = gauss_sums(pair)
    assert (gs.g_p, gs.g_q) == brute_gauss(pair)


@pytest.mark.parametrize("pair", PAIRS, ids=str)
def test_gauss_sum_lemmas(pair):
    p, q = pair.p, pair.q
    m = 2 ** pair.n - 1
    gs = gauss_sums(pair)
    qp, qq = m // (2 ** p - 1), m // (2 ** q - 1)
    assert gs.g_p % (2 ** q - 1) == 0
    assert gs.g_q % (2 ** p - 1) == 0
    sign_p = 1 if p % 4 == 1 else -1
    sign_q = 1 if q % 4 == 1 else -1
    assert (gs.g_p ** 2 - sign_p * (p - qq)) % m == 0
    assert (gs.g_q ** 2 - sign_q * (q - qp)) % m == 0


@pytest.mark.parametrize("p, q, expected", [(3, 5, (1, 1)), (3, 29, (7, 1)), (13, 3, (1, 7))])
def test_closed_form_examples(p, q, expected):
    d1, d2, c2 = closed_form(PrimePair(p, q))
    assert (d1, d2) == expected
    assert c2 == pytest.approx(float(exact_bits(p * q, d1 * d2)), abs=1e-9)


@pytest.mark.parametrize("p, q, expected", [(3, 5, (True, True)), (3, 29, (False, True)), (13, 3, (True, False))])
def test_shortcut_examples(p, q, expected):
    assert shortcut_conditions(PrimePair(p, q)) == expected


@pytest.mark.parametrize("pair", PAIRS, ids=str)
def test_shortcut_predicates_agree_and_force_one(pair):
    p, q = pair.p, pair.q
    f1, f2 = shortcut_conditions(pair)
    # strict "< 2p+1" form and the "<= 2p-1" form are the same predicate on odd numbers
    assert f1 == (odd_part(q - 1) < 2 * p + 1)
    assert f2 == (odd_part(p + 1) < 2 * q + 1)
    d1, d2, _ = closed_form(pair)
    if f1:
        assert d1 == 1
    if f2:
        assert d2 == 1


def test_lower_bound_examples():
    assert lower_bound(PrimePair(3, 5)) == pytest.approx(math.log2(32767), abs=1e-12)
    assert lower_bound(PrimePair(3, 29)) == pytest.approx(float(exact_bits(87, 7)), abs=1e-9)


def test_eq2_three_five():
    pair = PrimePair(3, 5)
    assert (2 * 31432) % 32767 == 30097
    assert (4681 - 1057 - 1) == 3623 and (992 * 29239) % 32767 == 6293
    assert (3623 - 6293) % 32767 == 30097
    assert eq2_lhs_rhs(pair) == (30097, 30097)


def test_eq2_uses_supplied_s2():
    lhs, rhs = eq2_lhs_rhs(PrimePair(3, 5), s2=1)
    assert lhs == 2 and rhs == 30097


@pytest.mark.parametrize("pair", PAIRS, ids=str)
def test_eq2_and_lemma3_congruences(pair):
    p, q = pair.p, pair.q
    lhs, rhs = eq2_lhs_rhs(pair)
    assert lhs == rhs
    s2 = s_of_two(generate(pair))
    assert (2 * s2 - (q - 1)) % (2 ** p - 1) == 0
    assert (2 * s2 + (p + 1)) % (2 ** q - 1) == 0
    # S(2) recovered from 2 S(2) through the inverse of 2, which is 2^(n-1)
    m = 2 ** pair.n - 1
    assert lhs * 2 ** (pair.n - 1) % m == s2 % m


@pytest.mark.parametrize("p, q, d, d1, d2", [(3, 5, 1, 1, 1), (3, 29, 7, 7, 1), (13, 3, 7, 1, 7)])
def test_analyze_examples(p, q, d, d1, d2):
    rep = analyze(PrimePair(p, q))
    assert (rep.d, rep.d1, rep.d2, rep.d3) == (d, d1, d2, 1)
    assert rep.is_max == (d == 1)
    assert (rep.closed_d1, rep.closed_d2) == (d1, d2)


@pytest.mark.parametrize("pair", PAIRS, ids=str)
def test_analyze_invariants(pair):
    rep = analyze(pair)
    oracle = definitional_complexity(generate(pair))
    assert rep.d == oracle.d and rep.s2 == oracle.s2
    assert rep.d == rep.closed_d1 * rep.closed_d2 and rep.d3 == 1
    assert rep.d == rep.d1 * rep.d2 * rep.d3
    for part in (rep.d1, rep.d2, rep.d3):
        assert rep.d % part == 0
    assert math.gcd(rep.d, pair.n) == 1
    assert min(rep.closed_d1, rep.closed_d2) == 1
    assert abs(rep.c2_bits - float(exact_bits(rep.n, rep.d))) <= 1e-9


def test_complexity_bits_requires_divisor():
    with pytest.raises(ArithmeticError):
        complexity_bits(15, 2)
