import math
import random

import pytest

from functorsion.padic import (
    Composition,
    TorsionInterval,
    ValuationResult,
    carries,
    compositions,
    decomposition_exists,
    digit_sum,
    factorial_valuation,
    is_prime,
    multinomial,
    multinomial_gcd,
    multinomial_gcd_valuation,
    primes_upto,
    torsion_interval,
    valuation,
)


# ---------------------------------------------------------------- oracles


def powers_of(p, bound):
    out = []
    q = 1
    while q <= bound:
        out.append(q)
        q *= p
    return out


def sums_of_d_powers(p, bound, d):
    """All integers <= bound expressible as a sum of exactly d powers of p.

    Raw enumeration over nondecreasing tuples of powers; the independent
    oracle for decomposition_exists and torsion_interval.
    """
    reachable = {0}
    for _ in range(d):
        reachable = {
            t + q for t in reachable for q in powers_of(p, bound - t)
        }
    return {t for t in reachable if t <= bound}


def floor_sum_factorial_valuation(p, s):
    total = 0
    q = p
    while q <= s:
        total += s // q
        q *= p
    return total


# ------------------------------------------------------------ primitives


def test_is_prime_small():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_upto(13) == [2, 3, 5, 7, 11, 13]


def test_digit_sum_examples():
    assert digit_sum(2, 6) == 2
    assert digit_sum(3, 5) == 3
    for p in (2, 3, 5, 7):
        for r in range(5):
            assert digit_sum(p, p**r) == 1
    assert digit_sum(5, 0) == 0


def test_digit_sum_rejects_nonprime():
    with pytest.raises(ValueError):
        digit_sum(4, 10)
    with pytest.raises(ValueError):
        digit_sum(1, 10)


def test_valuation_examples():
    assert valuation(2, 24) == 3
    assert valuation(3, 24) == 1
    assert valuation(5, 24) == 0
    with pytest.raises(ValueError):
        valuation(2, 0)


def test_carries_examples():
    assert carries(2, 2, 2) == 1  # = valuation(2, C(4,2)) = valuation(2, 6)
    assert carries(2, 1, 1) == 1
    for p in (2, 3, 5):
        for b in range(20):
            assert carries(p, 0, b) == 0


def test_carries_equal_binomial_valuation_small():
    # The literal identity, at a scale where the binomial is cheap.
    rng = random.Random(2)
    for _ in range(500):
        p = rng.choice([2, 3, 5, 7, 11, 13])
        a = rng.randrange(0, 2000)
        b = rng.randrange(0, 2000)
        m = multinomial(a + b, (a, b))
        expected = valuation(p, m) if m > 0 else 0
        assert carries(p, a, b) == expected


def test_carries_equal_factorial_valuations_large():
    # Same identity at the 10**6 scale, against the floor-sum oracle;
    # materializing the binomial itself at this size is pointless work.
    rng = random.Random(3)
    for _ in range(10_000):
        p = rng.choice([2, 3, 5, 7, 11, 13])
        a = rng.randrange(0, 10**6 + 1)
        b = rng.randrange(0, 10**6 + 1)
        expected = (
            floor_sum_factorial_valuation(p, a + b)
            - floor_sum_factorial_valuation(p, a)
            - floor_sum_factorial_valuation(p, b)
        )
        assert carries(p, a, b) == expected


def test_factorial_valuation_examples():
    assert factorial_valuation(2, 4) == 3  # 4! = 24 = 2**3 * 3
    assert factorial_valuation(3, 9) == 4
    for p in (2, 3, 5, 7, 11, 13):
        for s in range(p):
            assert factorial_valuation(p, s) == 0


def test_factorial_valuation_matches_floor_sum():
    for p in (2, 3, 5, 7, 11, 13):
        for s in range(201):
            assert factorial_valuation(p, s) == floor_sum_factorial_valuation(p, s)


def test_factorial_valuation_matches_direct():
    for p in (2, 3, 5):
        for s in range(1, 30):
            assert factorial_valuation(p, s) == valuation(p, math.factorial(s))


# ----------------------------------------------- multinomials and compositions


def test_multinomial_examples():
    assert multinomial(4, (2, 1, 1)) == 12
    assert multinomial(4, (1, 1, 1, 1)) == 24
    for s in range(1, 10):
        assert multinomial(s, (s,)) == 1
    assert multinomial(5, Composition((2, 3))) == 10
    assert multinomial(3, (0, 3, 0)) == 1  # zero parts allowed for raw tuples


def test_multinomial_rejects_mismatch():
    with pytest.raises(ValueError):
        multinomial(5, (2, 2))
    with pytest.raises(ValueError):
        multinomial(1, (2, -1))


def test_composition_invariants():
    c = Composition((2, 1, 1))
    assert c.total == 4
    assert len(c) == 3
    with pytest.raises(ValueError):
        Composition((2, 0, 1))
    with pytest.raises(ValueError):
        Composition(())


def test_compositions_enumeration():
    assert [c.parts for c in compositions(4, 3)] == [(2, 1, 1), (1, 2, 1), (1, 1, 2)]
    assert compositions(3, 4) == []
    assert [c.parts for c in compositions(3, 1)] == [(3,)]
    for s in range(1, 9):
        for n in range(1, 9):
            got = compositions(s, n)
            assert len(got) == math.comb(s - 1, n - 1)
            assert all(c.total == s and len(c) == n for c in got)
            tuples = [c.parts for c in got]
            assert tuples == sorted(tuples, reverse=True)  # descending lex
            assert len(set(tuples)) == len(tuples)


# ------------------------------------------------------- the multinomial gcd


def test_multinomial_gcd_examples():
    assert multinomial_gcd(4, 2) == 2  # gcd(4, 6, 4)
    assert multinomial_gcd(4, 3) == 12
    assert multinomial_gcd(4, 4) == 24
    with pytest.raises(ValueError):
        multinomial_gcd(4, 5)


def test_multinomial_gcd_valuation_examples():
    assert multinomial_gcd_valuation(2, 4, 3) == 2
    assert multinomial_gcd_valuation(3, 6, 2) == 0  # digit_sum(3, 6) = 2
    for s in range(1, 30):
        assert multinomial_gcd_valuation(2, s, s) == factorial_valuation(2, s)
    with pytest.raises(ValueError):
        multinomial_gcd_valuation(2, 4, 5)


def test_multinomial_gcd_matches_formula_and_no_stray_primes():
    # Valuation agreement at every prime <= s, plus the equality
    # M = prod(p**formula) which rules out prime factors beyond s.
    for s in range(1, 13):
        for n in range(1, s + 1):
            m = multinomial_gcd(s, n)
            rebuilt = 1
            for p in primes_upto(s):
                e = multinomial_gcd_valuation(p, s, n)
                assert valuation(p, m) == e
                rebuilt *= p**e
            assert m == rebuilt


def test_multinomial_gcd_divisibility_monotone():
    for s in range(1, 13):
        for n in range(1, s + 1):
            for m in range(n, s + 1):
                assert multinomial_gcd(s, m) % multinomial_gcd(s, n) == 0


# -------------------------------------------- interval and decompositions


def test_torsion_interval_examples():
    assert torsion_interval(2, 4).members == (1, 2, 3, 4)
    assert torsion_interval(3, 4).members == (2, 4)
    assert torsion_interval(3, 9).members == (1, 3, 5, 7, 9)


def test_torsion_interval_invariants():
    for p in (2, 3, 5, 7):
        for s in range(1, 40):
            iv = torsion_interval(p, s)
            assert iv.members[0] == digit_sum(p, s)
            assert iv.members[-1] == s
            assert all(m % (p - 1) == s % (p - 1) for m in iv.members)
            assert all(
                b - a == p - 1 for a, b in zip(iv.members, iv.members[1:])
            )


def test_torsion_interval_matches_enumeration_oracle():
    for p in (2, 3, 5):
        for s in (4, 9, 12, 17):
            expected = tuple(
                d for d in range(1, s + 1) if s in sums_of_d_powers(p, s, d)
            )
            assert torsion_interval(p, s).members == expected


def test_decomposition_exists_examples():
    assert decomposition_exists(3, 4, 2) is True  # 4 = 3 + 1
    assert decomposition_exists(3, 4, 3) is False
    for p in (2, 3, 5):
        for s in range(1, 20):
            assert decomposition_exists(p, s, s) is True


def test_decomposition_exists_oracle_and_interval_equivalence():
    for p in (2, 3, 5):
        for s in range(1, 31):
            iv = torsion_interval(p, s)
            for d in range(1, s + 1):
                via_dp = decomposition_exists(p, s, d)
                assert via_dp == (s in sums_of_d_powers(p, s, d))
                assert via_dp == (d in iv)


# ----------------------------------------------------------------- types


def test_valuation_result_validation():
    r = ValuationResult(3, 2)
    assert (r.prime, r.exponent) == (3, 2)
    with pytest.raises(ValueError):
        ValuationResult(4, 1)
    with pytest.raises(ValueError):
        ValuationResult(3, -1)


def test_torsion_interval_type_is_iterable():
    iv = torsion_interval(3, 9)
    assert list(iv) == [1, 3, 5, 7, 9]
    assert isinstance(iv, TorsionInterval)
    assert 5 in iv and 2 not in iv
