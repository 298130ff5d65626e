"""Tests for primality tests, sieves, multiplicative functions, Fermat
factorization, and prime splitting in quadratic fields."""

import math
import random

import pytest

from ntzeros import (
    carmichael,
    decompose_prime_ideal,
    euler_criterion_test,
    fermat_factor,
    fermat_test,
    fermat_test_random,
    is_prime_trial,
    lucas_lehmer,
    sieve_eratosthenes,
    totient_sieve,
)
from ntzeros.errors import NoSolution, NotCoprime, NotPrime, NotSquarefree
from ntzeros.primes import Verdict


def reference_primes(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for i in range(2, limit + 1):
        if flags[i]:
            for j in range(i * i, limit + 1, i):
                flags[j] = False
    return [i for i in range(limit + 1) if flags[i]]


def test_is_prime_trial_verdicts():
    assert is_prime_trial(2).verdict == Verdict.PRIME
    assert is_prime_trial(97).is_prime
    res = is_prime_trial(91)
    assert res.verdict == Verdict.COMPOSITE
    assert res.witness == 7
    assert not is_prime_trial(1).is_prime
    assert not is_prime_trial(0).is_prime


def test_is_prime_trial_matches_sieve():
    primes = set(reference_primes(2000))
    for n in range(0, 2000):
        res = is_prime_trial(n)
        assert res.is_prime == (n in primes)
        if not res.is_prime and n >= 4 and n not in primes:
            # Witness is the smallest prime factor.
            assert res.witness is not None
            assert n % res.witness == 0
            assert is_prime_trial(res.witness).is_prime


def test_fermat_test_composite_with_witness():
    res = fermat_test(21, [2])
    assert res.verdict == Verdict.COMPOSITE
    assert res.witness == 2
    assert pow(2, 20, 21) != 1


def test_fermat_test_probable_prime():
    res = fermat_test(97, [2, 3, 5])
    assert res.verdict == Verdict.PROBABLE_PRIME
    assert res.witness is None


def test_fermat_test_never_rejects_primes():
    for p in reference_primes(500):
        if p <= 3:
            continue
        bases = [b for b in (2, 3, 5, 7) if b < p - 1]
        assert fermat_test(p, bases).verdict == Verdict.PROBABLE_PRIME


def test_fermat_test_carmichael_number_fools_coprime_bases():
    # 561 = 3*11*17 passes every base coprime to it.
    for b in (2, 5, 13, 20):
        assert math.gcd(b, 561) == 1
        assert fermat_test(561, [b]).verdict == Verdict.PROBABLE_PRIME


def test_fermat_test_rejects_bad_bases():
    with pytest.raises(ValueError):
        fermat_test(21, [1])
    with pytest.raises(ValueError):
        fermat_test(21, [21])
    with pytest.raises(ValueError):
        fermat_test(21, [])
    # n-1 is allowed; it squares to 1 so it never witnesses an odd n.
    assert fermat_test(21, [20]).verdict == Verdict.PROBABLE_PRIME


def test_fermat_test_random_deterministic_per_seed():
    a = fermat_test_random(341, rounds=8, seed=5)
    b = fermat_test_random(341, rounds=8, seed=5)
    assert a == b
    for p in (101, 997):
        assert fermat_test_random(p, rounds=10, seed=1).verdict == Verdict.PROBABLE_PRIME


def test_euler_criterion_test():
    # 2^((15-1)/2) = 2^7 = 128 = 8 (mod 15), not +-1, so composite.
    res = euler_criterion_test(15, 2)
    assert res.verdict == Verdict.COMPOSITE
    assert res.witness == 2
    assert euler_criterion_test(97, 5).verdict == Verdict.PROBABLE_PRIME
    with pytest.raises(NotCoprime):
        euler_criterion_test(15, 5)


def test_euler_criterion_never_rejects_odd_primes():
    for p in reference_primes(10000):
        if p < 5:
            continue
        assert euler_criterion_test(p, 2).verdict == Verdict.PROBABLE_PRIME


def test_lucas_lehmer_known_exponents():
    # Mersenne primes for p in {2, 3, 5, 7, 13, 17, 19}; composite for 11, 23.
    for p in (2, 3, 5, 7, 13, 17, 19, 31):
        assert lucas_lehmer(p).verdict == Verdict.PRIME, p
    for p in (11, 23, 29):
        assert lucas_lehmer(p).verdict == Verdict.COMPOSITE, p
    with pytest.raises(NotPrime):
        lucas_lehmer(4)


def test_sieve_matches_reference():
    assert sieve_eratosthenes(1) == []
    assert sieve_eratosthenes(2) == [2]
    assert sieve_eratosthenes(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert sieve_eratosthenes(10**5) == reference_primes(10**5)
    assert sieve_eratosthenes(0) == []


def test_totient_sieve_values():
    phi = totient_sieve(100)
    assert phi[1] == 1
    assert phi[2] == 1
    assert phi[9] == 6
    assert phi[10] == 4
    assert phi[97] == 96
    assert phi[100] == 40


def test_totient_sieve_matches_gcd_count():
    phi = totient_sieve(300)
    for n in range(1, 301):
        direct = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert phi[n] == direct, n


def test_carmichael_known_values():
    assert carmichael(1) == 1
    assert carmichael(2) == 1
    assert carmichael(4) == 2
    assert carmichael(8) == 2
    assert carmichael(16) == 4
    assert carmichael(15) == 4
    assert carmichael(561) == 80
    assert carmichael(35) == 12


def test_carmichael_universal_exponent_scan():
    # lambda(n) is the smallest e with a^e = 1 (mod n) for every unit a.
    # n = 1 is skipped: pow(a, e, 1) is 0 by convention, the group is trivial.
    for n in range(2, 501):
        lam = carmichael(n)
        units = [a for a in range(1, n + 1) if math.gcd(a, n) == 1]
        assert all(pow(a, lam, n) == 1 for a in units)
        smallest = next(
            e
            for e in range(1, lam + 1)
            if all(pow(a, e, n) == 1 for a in units)
        )
        assert lam == smallest, n


def test_fermat_factor_known():
    assert fermat_factor(5959) == (59, 101)
    assert fermat_factor(9) == (3, 3)
    a, b = fermat_factor(1003)  # 17 * 59
    assert a * b == 1003 and 1 < a <= b


def test_fermat_factor_properties():
    rng = random.Random(2)
    odd_primes = [p for p in reference_primes(300) if p % 2 == 1]
    for _ in range(100):
        p = rng.choice(odd_primes)
        q = rng.choice(odd_primes)
        n = p * q
        if n < 9:
            continue
        a, b = fermat_factor(n)
        assert a * b == n
        assert 1 < a <= b < n


def test_fermat_factor_rejects_bad_input():
    with pytest.raises(ValueError):
        fermat_factor(100)  # even
    with pytest.raises(NoSolution):
        fermat_factor(97)  # prime input has no nontrivial split
    with pytest.raises(ValueError):
        fermat_factor(7)


def test_decompose_prime_ideal_known():
    res = decompose_prime_ideal(5, 3)
    assert res.kind.value == "inert"
    assert res.discriminant == 5
    assert decompose_prime_ideal(5, 5).kind.value == "ramified"
    assert decompose_prime_ideal(5, 11).kind.value == "split"
    assert decompose_prime_ideal(-1, 5).kind.value == "split"
    assert decompose_prime_ideal(-1, 3).kind.value == "inert"
    assert decompose_prime_ideal(2, 7).kind.value == "split"
    assert decompose_prime_ideal(3, 5).discriminant == 12


def test_decompose_prime_ideal_residue_enumeration():
    for d in range(-30, 31):
        if d in (0, 1):
            continue
        # Skip non-squarefree d.
        if any(d % (k * k) == 0 for k in range(2, int(abs(d) ** 0.5) + 1)):
            continue
        disc = d if d % 4 == 1 else 4 * d
        for p in reference_primes(97):
            if p == 2:
                continue
            res = decompose_prime_ideal(d, p)
            assert res.discriminant == disc
            if disc % p == 0:
                expected = "ramified"
            elif any((x * x - disc) % p == 0 for x in range(p)):
                expected = "split"
            else:
                expected = "inert"
            assert res.kind.value == expected, (d, p)


def test_decompose_prime_ideal_rejects_bad_input():
    with pytest.raises(NotSquarefree):
        decompose_prime_ideal(12, 5)
    with pytest.raises(ValueError):
        decompose_prime_ideal(5, 2)
    with pytest.raises(NotPrime):
        decompose_prime_ideal(5, 9)
    with pytest.raises(ValueError):
        decompose_prime_ideal(1, 5)
