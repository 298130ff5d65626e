"""Hensel lifting, primitive roots, modular square roots, discrete logs."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import ext_gcd, mod_inverse, pow_mod
from .errors import NoSolution, NonResidue, NotARoot, NotPrime, SingularRoot


@dataclass(frozen=True)
class PolyInt:
    """Integer polynomial, coefficients in ascending degree order."""

    coeffs: tuple[int, ...]

    def __call__(self, x: int, mod: int | None = None) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
            if mod is not None:
                acc %= mod
        return acc

    def derivative(self) -> "PolyInt":
        return PolyInt(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))


def _require_prime(p: int, name: str = "p") -> None:
    if p < 2:
        raise NotPrime(f"{name} must be prime, got {p}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise NotPrime(f"{name} must be prime, got {p} = {d} * {p // d}")
        d += 1 if d == 2 else 2


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def hensel_lift(f: PolyInt, p: int, a: int) -> int:
    """Lift a simple root a of f mod p to the unique root mod p**2.

    Uses b = a - f(a) * f'(a)^(-1) mod p**2.

    Raises:
        NotARoot: if f(a) != 0 (mod p).
        SingularRoot: if f'(a) = 0 (mod p), so the simple-root lift fails.
    """
    _require_prime(p)
    if f(a, p) != 0:
        raise NotARoot(f"f({a}) = {f(a)} is not 0 mod {p}")
    p2 = p * p
    deriv = f.derivative()(a, p2)
    if deriv % p == 0:
        raise SingularRoot(f"f'({a}) = 0 mod {p}; root is not simple")
    return (a - f(a, p2) * mod_inverse(deriv, p2)) % p2


def primitive_root(p: int) -> int:
    """Smallest primitive root mod prime p.

    g is primitive iff g^((p-1)/q) != 1 (mod p) for every prime q | p - 1.
    """
    _require_prime(p)
    if p == 2:
        return 1
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow_mod(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise NoSolution(f"no primitive root below {p}")  # unreachable for prime p


def sqrt_mod(a: int, p: int) -> tuple[int, int]:
    """Both square roots of a modulo an odd prime p, as (smaller, larger).

    Applies the a^((p+1)/4) shortcut when p = 3 (mod 4) and the Tonelli-Shanks
    procedure otherwise. sqrt_mod(0, p) = (0, 0).

    Raises:
        NonResidue: if a is a quadratic non-residue mod p.
    """
    _require_prime(p)
    if p == 2:
        raise ValueError("p must be an odd prime")
    a %= p
    if a == 0:
        return (0, 0)
    if pow_mod(a, (p - 1) // 2, p) != 1:
        raise NonResidue(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        x = pow_mod(a, (p + 1) // 4, p)
    else:
        x = _tonelli_shanks(a, p)
    return (x, p - x) if x <= p - x else (p - x, x)


def _tonelli_shanks(a: int, p: int) -> int:
    """One square root of the residue a mod p, for p = 1 (mod 4)."""
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow_mod(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c = s, pow_mod(z, q, p)
    t, r = pow_mod(a, q, p), pow_mod(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow_mod(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def discrete_log_bsgs(g: int, h: int, p: int) -> int:
    """Smallest x >= 0 with g**x = h (mod p), by baby-step giant-step.

    Intended for g a primitive root mod p (then every 1 <= h < p is hit).
    Uses m = ceil(sqrt(p - 1)) baby steps and at most m + 1 giant steps.

    Raises:
        NoSolution: if no exponent below p - 1 works.
    """
    x, _ = _bsgs_counted(g, h, p)
    return x


def _bsgs_counted(g: int, h: int, p: int) -> tuple[int, int]:
    """BSGS plus the number of modular multiplications spent (for cost probes)."""
    _require_prime(p)
    g %= p
    h %= p
    if h == 0 or g == 0:
        raise ValueError("g and h must be nonzero mod p")
    muls = 0
    if p == 2:
        return (0, muls) if h == 1 else (1, muls)
    m = 1 + isqrt(p - 2)  # ceil(sqrt(p - 1))
    baby: dict[int, int] = {}
    val = 1
    for j in range(m):
        baby.setdefault(val, j)
        val = val * g % p
        muls += 1
    # giant factor g^(-m): invert, then square-and-multiply
    g_inv = mod_inverse(g, p)
    factor, b, e = 1, g_inv, m
    while e:
        if e & 1:
            factor = factor * b % p
            muls += 1
        b = b * b % p
        muls += 1
        e >>= 1
    gamma = h
    for i in range(m + 1):
        j = baby.get(gamma)
        if j is not None:
            return i * m + j, muls
        gamma = gamma * factor % p
        muls += 1
    raise NoSolution(f"{h} is not a power of {g} mod {p}")


def discrete_log_naive(g: int, h: int, p: int) -> int:
    """Smallest x >= 0 with g**x = h (mod p), by scanning successive powers."""
    _require_prime(p)
    g %= p
    h %= p
    if h == 0 or g == 0:
        raise ValueError("g and h must be nonzero mod p")
    val = 1
    for x in range(p - 1):
        if val == h:
            return x
        val = val * g % p
    raise NoSolution(f"{h} is not a power of {g} mod {p}")
