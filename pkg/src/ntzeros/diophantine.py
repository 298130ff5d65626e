"""Continued fractions, Pell equations, and classical representation problems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple

from .errors import NoSolution, PerfectSquare, ZeroPolynomial


@dataclass(frozen=True)
class CFExpansion:
    """Periodic continued fraction of sqrt(d): [a0; period repeating]."""

    a0: int
    period: tuple[int, ...]


class Convergent(NamedTuple):
    p: int
    q: int


class PellSolution(NamedTuple):
    x: int
    y: int


class TwoSquares(NamedTuple):
    """Witness for N = x**2 + y**2 with x >= y >= 0, or representable=False."""

    representable: bool
    x: int | None
    y: int | None


def cf_expand_sqrt(d: int) -> CFExpansion:
    """Continued-fraction expansion of sqrt(d) for nonsquare d >= 2.

    Iterates the quadratic-surd state (m, den): m' = den*a - m,
    den' = (d - m'^2)/den, a' = floor((a0 + m')/den'). The period ends when
    a state recurs.

    Raises:
        PerfectSquare: if d is a perfect square.
    """
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise PerfectSquare(f"{d} = {a0}**2 has a rational square root")
    period: list[int] = []
    m, den, a = 0, 1, a0
    seen: set[tuple[int, int]] = set()
    while True:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        if (m, den) in seen:
            break
        seen.add((m, den))
        period.append(a)
    return CFExpansion(a0, tuple(period))


def convergents(expansion: CFExpansion, count: int) -> list[Convergent]:
    """First `count` convergents p_k/q_k of the expansion (k = 0 gives a0/1).

    Uses p_k = a_k*p_{k-1} + p_{k-2}, q_k = a_k*q_{k-1} + q_{k-2} with seeds
    p_{-2} = 0, p_{-1} = 1, q_{-2} = 1, q_{-1} = 0, cycling the period as needed.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    p_prev2, p_prev = 0, 1
    q_prev2, q_prev = 1, 0
    out: list[Convergent] = []
    for k in range(count):
        a = expansion.a0 if k == 0 else expansion.period[(k - 1) % len(expansion.period)]
        p = a * p_prev + p_prev2
        q = a * q_prev + q_prev2
        out.append(Convergent(p, q))
        p_prev2, p_prev = p_prev, p
        q_prev2, q_prev = q_prev, q
    return out


def pell_fundamental(d: int) -> PellSolution:
    """Fundamental solution of x**2 - d*y**2 = 1 for nonsquare d >= 2.

    Reads the solution off the convergent at the end of the period of
    sqrt(d), traversing the period twice when its length is odd. The result
    is verified by substitution before returning.
    """
    expansion = cf_expand_sqrt(d)
    length = len(expansion.period)
    k = length if length % 2 == 0 else 2 * length
    x, y = convergents(expansion, k)[-1]
    if x * x - d * y * y != 1:
        raise AssertionError(f"pell witness failed for d={d}: ({x}, {y})")
    return PellSolution(x, y)


def zeckendorf(n: int) -> list[int]:
    """Decompose n >= 1 into non-consecutive Fibonacci numbers, largest first."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    fibs = [1, 2]
    while fibs[-1] < n:
        fibs.append(fibs[-1] + fibs[-2])
    parts: list[int] = []
    remaining = n
    for f in reversed(fibs):
        if f <= remaining:
            parts.append(f)
            remaining -= f
    assert remaining == 0
    return parts


def egyptian_greedy(p: int, q: int) -> list[int]:
    """Greedy unit-fraction expansion of p/q with 0 < p/q < 1.

    Each step takes the largest unit fraction 1/ceil(q/p); returns the
    strictly increasing list of denominators.
    """
    if q < 1 or p < 1 or p >= q:
        raise ValueError(f"need 0 < p/q < 1, got {p}/{q}")
    denominators: list[int] = []
    while p:
        d = -(-q // p)  # ceil(q/p)
        denominators.append(d)
        p, q = p * d - q, q * d
        if p:
            g = gcd(p, q)
            p, q = p // g, q // g
    return denominators


def rational_roots(coeffs: list[int]) -> list[Fraction]:
    """All rational roots of a polynomial with integer coefficients.

    `coeffs` lists coefficients in ascending degree order, matching PolyInt,
    so [6, -5, 1] is x^2 - 5x + 6. Candidates p/q with p dividing the
    constant term and q dividing the leading coefficient are checked by
    exact evaluation; roots are returned ascending, without multiplicity.

    Raises:
        ZeroPolynomial: if every coefficient is zero.
    """
    if not coeffs or all(c == 0 for c in coeffs):
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    roots: set[Fraction] = set()
    # factor out x^k: each stripped power contributes the root 0
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low:
        roots.add(Fraction(0))
        coeffs = coeffs[low:]
    if len(coeffs) > 1:
        a0, an = abs(coeffs[0]), abs(coeffs[-1])
        for num in _divisors(a0):
            for den in _divisors(an):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if _poly_eval_fraction(coeffs, cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            out.append(k)
            if k != n // k:
                out.append(n // k)
    return out


def _poly_eval_fraction(coeffs: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def two_squares_decompose(n: int) -> TwoSquares:
    """Decide whether n is a sum of two squares and produce a witness.

    n >= 1 is representable iff every prime = 3 (mod 4) divides n to an even
    power. The witness is assembled by composing per-prime representations
    with (a*c + b*d, a*d - b*c) and returned with x >= y >= 0.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    factors = _factorize(n)
    for p, e in factors:
        if p % 4 == 3 and e % 2:
            return TwoSquares(False, None, None)
    x, y = 0, 1  # 1 = 0^2 + 1^2
    for p, e in factors:
        if p % 4 == 3:
            scale = p ** (e // 2)
            x, y = x * scale, y * scale
        else:
            a, b = _prime_two_squares(p)
            for _ in range(e):
                x, y = abs(x * a + y * b), abs(x * b - y * a)
                if x > y:
                    x, y = y, x
    if x < y:
        x, y = y, x
    assert x * x + y * y == n
    return TwoSquares(True, x, y)


def _factorize(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization, ascending primes."""
    out: list[tuple[int, int]] = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _prime_two_squares(p: int) -> tuple[int, int]:
    """Representation (a, b), a <= b, of a prime p = 2 or p = 1 (mod 4)."""
    for a in range(isqrt(p // 2) + 1):
        b = isqrt(p - a * a)
        if a * a + b * b == p:
            return a, b
    raise NoSolution(f"prime {p} is not a sum of two squares")
