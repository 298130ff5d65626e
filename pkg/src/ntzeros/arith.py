"""Euclidean arithmetic: gcds, Bezout coefficients, congruences, CRT.

All functions work on Python ints (arbitrary precision). Inputs declared as
naturals are validated to be >= 0.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import NoSolution, NotCoprime, NotInvertible


class ExtGcdResult(NamedTuple):
    g: int
    x: int
    y: int


class CongruenceSolution(NamedTuple):
    """Solutions of a*x = b (mod n): x = base (mod modulus), `count` classes mod n."""

    base: int
    modulus: int
    count: int


def _check_natural(value: int, name: str) -> None:
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


def gcd_euclid(a: int, b: int) -> int:
    """Greatest common divisor by repeated remainder. gcd(0, 0) = 0."""
    _check_natural(a, "a")
    _check_natural(b, "b")
    while b:
        a, b = b, a % b
    return a


def gcd_binary(a: int, b: int) -> int:
    """Stein's gcd: factors of two stripped with shifts, odd parts subtracted."""
    _check_natural(a, "a")
    _check_natural(b, "b")
    if a == 0:
        return b
    if b == 0:
        return a
    shift = ((a | b) & -(a | b)).bit_length() - 1  # common power of two
    a >>= (a & -a).bit_length() - 1
    while b:
        b >>= (b & -b).bit_length() - 1
        if a > b:
            a, b = b, a
        b -= a
    return a << shift


def ext_gcd(a: int, b: int) -> ExtGcdResult:
    """Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    _check_natural(a, "a")
    _check_natural(b, "b")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return ExtGcdResult(old_r, old_s, old_t)


def mod_inverse(a: int, n: int) -> int:
    """Inverse of a modulo n, in [0, n). Raises NotInvertible if gcd(a, n) > 1."""
    _check_natural(a, "a")
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    g, x, _ = ext_gcd(a % n, n)
    if g != 1:
        raise NotInvertible(f"{a} has no inverse mod {n}: gcd = {g}")
    return x % n


def solve_linear_congruence(a: int, b: int, n: int) -> CongruenceSolution:
    """Solve a*x = b (mod n).

    With g = gcd(a, n): solvable iff g | b, and then the solutions form a
    single class mod n/g, i.e. g distinct classes mod n.

    Raises:
        NoSolution: if g does not divide b.
    """
    _check_natural(a, "a")
    _check_natural(b, "b")
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    g = gcd_euclid(a % n if a else 0, n)
    if b % g:
        raise NoSolution(f"{a}x = {b} (mod {n}) has no solution: gcd {g} does not divide {b}")
    n_red = n // g
    if n_red == 1:
        return CongruenceSolution(0, 1, g)
    inv = mod_inverse((a // g) % n_red, n_red)
    base = (inv * ((b // g) % n_red)) % n_red
    return CongruenceSolution(base, n_red, g)


def crt(residues: list[int], moduli: list[int]) -> int:
    """Chinese Remainder Theorem for pairwise coprime moduli.

    Returns the unique x in [0, prod(moduli)) with x = r_i (mod m_i).

    Raises:
        NotCoprime: if two moduli share a factor.
    """
    if len(residues) != len(moduli):
        raise ValueError(f"got {len(residues)} residues but {len(moduli)} moduli")
    if not moduli:
        raise ValueError("need at least one congruence")
    for m in moduli:
        if m < 1:
            raise ValueError(f"moduli must be >= 1, got {m}")
    x, m_all = 0, 1
    for r, m in zip(residues, moduli):
        g, p, _ = ext_gcd(m_all % m, m)
        if g != 1:
            raise NotCoprime(f"moduli are not pairwise coprime near modulus {m}")
        # combine x (mod m_all) with r (mod m): t = (r - x) * inv(m_all) mod m
        t = (p * (r - x)) % m
        x = (x + m_all * t) % (m_all * m)
        m_all *= m
    return x


def pow_mod(base: int, exp: int, mod: int) -> int:
    """Square-and-multiply modular exponentiation: base**exp mod `mod`."""
    _check_natural(base, "base")
    _check_natural(exp, "exp")
    if mod < 1:
        raise ValueError(f"modulus must be >= 1, got {mod}")
    result = 1 % mod
    b = base % mod
    while exp:
        if exp & 1:
            result = result * b % mod
        b = b * b % mod
        exp >>= 1
    return result
