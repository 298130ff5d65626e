"""Primality testing, sieves, multiplicative functions, and factor hunting."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from math import gcd, isqrt, lcm

from .arith import pow_mod
from .errors import NoSolution, NotCoprime, NotPrime, NotSquarefree


class Verdict(Enum):
    PRIME = "prime"
    COMPOSITE = "not prime"
    PROBABLE_PRIME = "probably prime"


@dataclass(frozen=True)
class PrimalityVerdict:
    """Outcome of a primality test.

    `witness` is the base or factor that proved compositeness, when one
    exists; deterministic tests emit PRIME, probabilistic ones only
    PROBABLE_PRIME.
    """

    verdict: Verdict
    witness: int | None = None

    @property
    def is_prime(self) -> bool:
        return self.verdict is Verdict.PRIME


class IdealKind(Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class IdealDecomposition:
    kind: IdealKind
    discriminant: int


def is_prime_trial(n: int) -> PrimalityVerdict:
    """Deterministic trial division up to sqrt(n).

    n < 2 is reported as composite by convention, with no witness. Composite
    n >= 4 carries its smallest prime factor as witness.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n < 2:
        return PrimalityVerdict(Verdict.COMPOSITE)
    d = 2
    while d * d <= n:
        if n % d == 0:
            return PrimalityVerdict(Verdict.COMPOSITE, witness=d)
        d += 1 if d == 2 else 2
    return PrimalityVerdict(Verdict.PRIME)


def euler_criterion_test(n: int, a: int) -> PrimalityVerdict:
    """Euler probable-prime test: a^((n-1)/2) must be +-1 mod n when n is prime.

    Requires odd n >= 3 and gcd(a, n) = 1.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    a %= n
    if gcd(a, n) != 1:
        raise NotCoprime(f"base {a} shares a factor with {n}")
    r = pow_mod(a, (n - 1) // 2, n)
    if r != 1 and r != n - 1:
        return PrimalityVerdict(Verdict.COMPOSITE, witness=a)
    return PrimalityVerdict(Verdict.PROBABLE_PRIME)


def fermat_test(n: int, bases: list[int]) -> PrimalityVerdict:
    """Fermat test: b^(n-1) = 1 (mod n) for each base, else composite.

    A base sharing a factor with n also proves compositeness. Requires
    n > 3 and bases b with 1 < b < n.
    """
    if n <= 3:
        raise ValueError(f"n must be > 3, got {n}")
    if not bases:
        raise ValueError("need at least one base")
    for b in bases:
        if not 1 < b < n:
            raise ValueError(f"base {b} out of range for n = {n}")
        if gcd(b, n) != 1:
            return PrimalityVerdict(Verdict.COMPOSITE, witness=b)
        if pow_mod(b, n - 1, n) != 1:
            return PrimalityVerdict(Verdict.COMPOSITE, witness=b)
    return PrimalityVerdict(Verdict.PROBABLE_PRIME)


def fermat_test_random(n: int, rounds: int, seed: int) -> PrimalityVerdict:
    """Fermat test on `rounds` bases drawn uniformly from [2, n-2], seeded."""
    if n <= 4:
        raise ValueError(f"n must be > 4 for random bases, got {n}")
    rng = random.Random(seed)
    bases = [rng.randrange(2, n - 1) for _ in range(rounds)]
    return fermat_test(n, bases)


def lucas_lehmer(p: int) -> PrimalityVerdict:
    """Lucas-Lehmer test of the Mersenne number 2**p - 1 for prime p.

    s_0 = 4, s_{k+1} = s_k**2 - 2 (mod 2**p - 1); prime iff s_{p-2} = 0.
    """
    if not is_prime_trial(p).is_prime:
        raise NotPrime(f"exponent {p} must be prime")
    if p == 2:
        return PrimalityVerdict(Verdict.PRIME)  # 2**2 - 1 = 3
    m = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = (s * s - 2) % m
    if s == 0:
        return PrimalityVerdict(Verdict.PRIME)
    return PrimalityVerdict(Verdict.COMPOSITE)


def sieve_eratosthenes(limit: int) -> list[int]:
    """All primes <= limit. Multiples of each prime p are struck from p*p up."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i in range(2, limit + 1) if flags[i]]


def totient_sieve(limit: int) -> list[int]:
    """Euler phi for 0..limit via a smallest-prime-factor sieve.

    phi(0) is set to 0 by convention; phi(1) = 1.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for k in range(p * p, limit + 1, p):
                if spf[k] == k:
                    spf[k] = p
    phi = [0] * (limit + 1)
    if limit >= 1:
        phi[1] = 1
    for k in range(2, limit + 1):
        p = spf[k]
        m = k // p
        # multiplicative step: phi(k) = phi(m) * p if p | m else phi(m) * (p - 1)
        phi[k] = phi[m] * p if m % p == 0 else phi[m] * (p - 1)
    return phi


def carmichael(n: int) -> int:
    """Carmichael function: the exponent of the group (Z/nZ)*.

    lambda(2) = 1, lambda(4) = 2, lambda(2^k) = 2^(k-2) for k >= 3,
    lambda(p^k) = p^(k-1)(p-1) for odd p, combined by lcm.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    parts = []
    for p, e in _factorize(n):
        if p == 2:
            parts.append(1 if e == 1 else 2 if e == 2 else 1 << (e - 2))
        else:
            parts.append(p ** (e - 1) * (p - 1))
    return lcm(*parts)


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def fermat_factor(n: int) -> tuple[int, int]:
    """Fermat's difference-of-squares factorization of an odd composite.

    Walks a from ceil(sqrt(n)) until a*a - n is a perfect square, then
    returns (a - b, a + b) with the smaller factor first.

    Raises:
        NoSolution: if n is prime (only the trivial 1 * n remains).
    """
    if n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    if n < 9:
        raise ValueError(f"n must be >= 9, got {n}")
    if is_prime_trial(n).is_prime:
        raise NoSolution(f"{n} is prime; no nontrivial factorization")
    a = isqrt(n)
    if a * a < n:
        a += 1
    while True:
        diff = a * a - n
        b = isqrt(diff)
        if b * b == diff:
            return (a - b, a + b)
        a += 1


def decompose_prime_ideal(d: int, p: int) -> IdealDecomposition:
    """Decomposition of an odd prime p in the quadratic field Q(sqrt(d)).

    The field discriminant is d when d = 1 (mod 4), else 4d. p ramifies iff
    p divides the discriminant, splits iff the discriminant is a nonzero
    square mod p (Euler's criterion), and is inert otherwise.

    Raises:
        NotSquarefree: if d has a square factor.
        NotPrime: if p is not prime.
    """
    if d in (0, 1):
        raise ValueError(f"d must not be 0 or 1, got {d}")
    for q, e in _factorize(abs(d)):
        if e > 1:
            raise NotSquarefree(f"d = {d} is divisible by {q}**2")
    if p == 2:
        raise ValueError("p must be an odd prime")
    if not is_prime_trial(p).is_prime:
        raise NotPrime(f"p must be prime, got {p}")
    disc = d if d % 4 == 1 else 4 * d
    if disc % p == 0:
        return IdealDecomposition(IdealKind.RAMIFIED, disc)
    if pow_mod(disc % p, (p - 1) // 2, p) == 1:
        return IdealDecomposition(IdealKind.SPLIT, disc)
    return IdealDecomposition(IdealKind.INERT, disc)
