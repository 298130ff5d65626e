"""Short-Weierstrass elliptic curve arithmetic over F_p, and RSA key setup."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import gcd_euclid, mod_inverse
from .errors import NotCoprime, NotPrime, PointNotOnCurve
from .primes import is_prime_trial


@dataclass(frozen=True)
class CurveParams:
    """y^2 = x^3 + a*x + b over F_p, p an odd prime.

    Singular curves (4a^3 + 27b^2 = 0 mod p) are accepted: the chord and
    tangent formulas below are valid on the smooth locus, which is closed
    under them, and the catalogued reference curve a=2, b=3, p=11 happens
    to be singular. Operating on the singular point itself is rejected.
    """

    a: int
    b: int
    p: int

    def __post_init__(self) -> None:
        if self.p == 2 or not is_prime_trial(self.p).is_prime:
            raise NotPrime(f"p must be an odd prime, got {self.p}")

    @property
    def is_singular(self) -> bool:
        return (4 * self.a**3 + 27 * self.b**2) % self.p == 0


@dataclass(frozen=True)
class ECPoint:
    """Affine point or the point at infinity (x = y = None)."""

    x: int | None
    y: int | None

    @classmethod
    def infinity(cls) -> "ECPoint":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None


def _check_on_curve(point: ECPoint, curve: CurveParams) -> None:
    if point.is_infinity:
        return
    x, y, p = point.x, point.y, curve.p
    if not (0 <= x < p and 0 <= y < p):
        raise PointNotOnCurve(f"({x}, {y}) is not reduced mod {p}")
    if (y * y - (x * x * x + curve.a * x + curve.b)) % p:
        raise PointNotOnCurve(f"({x}, {y}) does not satisfy the curve equation")
    # Both partial derivatives vanishing marks the singular point of a
    # singular curve; it is not a group element.
    if (2 * y) % p == 0 and (3 * x * x + curve.a) % p == 0:
        raise PointNotOnCurve(f"({x}, {y}) is a singular point of the curve")


def ec_double(point: ECPoint, curve: CurveParams) -> ECPoint:
    """2P via the tangent line; returns infinity when y = 0 or P is infinity."""
    _check_on_curve(point, curve)
    if point.is_infinity or point.y == 0:
        return ECPoint.infinity()
    p = curve.p
    lam = (3 * point.x * point.x + curve.a) * mod_inverse(2 * point.y, p) % p
    x3 = (lam * lam - 2 * point.x) % p
    y3 = (lam * (point.x - x3) - point.y) % p
    return ECPoint(x3, y3)


def ec_add(p1: ECPoint, p2: ECPoint, curve: CurveParams) -> ECPoint:
    """Chord-and-tangent group law."""
    _check_on_curve(p1, curve)
    _check_on_curve(p2, curve)
    if p1.is_infinity:
        return p2
    if p2.is_infinity:
        return p1
    p = curve.p
    if p1.x == p2.x:
        if (p1.y + p2.y) % p == 0:
            return ECPoint.infinity()  # P + (-P), covers equal points with y = 0
        return ec_double(p1, curve)
    lam = (p2.y - p1.y) * mod_inverse((p2.x - p1.x) % p, p) % p
    x3 = (lam * lam - p1.x - p2.x) % p
    y3 = (lam * (p1.x - x3) - p1.y) % p
    return ECPoint(x3, y3)


def ec_scalar_mul(k: int, point: ECPoint, curve: CurveParams) -> ECPoint:
    """k*P by double-and-add, k >= 0. 0*P is the point at infinity."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _check_on_curve(point, curve)
    result = ECPoint.infinity()
    addend = point
    while k:
        if k & 1:
            result = ec_add(result, addend, curve)
        addend = ec_double(addend, curve)
        k >>= 1
    return result


@dataclass(frozen=True)
class RsaKey:
    n: int
    e: int
    d: int
    p: int
    q: int
    phi: int


def rsa_keygen_from_primes(p: int, q: int, e: int) -> RsaKey:
    """RSA key from chosen primes: d = e^(-1) mod phi(n).

    Raises:
        NotPrime: if p or q is composite.
        NotCoprime: if gcd(e, phi) != 1.
    """
    for value, name in ((p, "p"), (q, "q")):
        if not is_prime_trial(value).is_prime:
            raise NotPrime(f"{name} must be prime, got {value}")
    if p == q:
        raise ValueError("p and q must be distinct")
    if e < 2:
        raise ValueError(f"e must be >= 2, got {e}")
    phi = (p - 1) * (q - 1)
    if gcd_euclid(e, phi) != 1:
        raise NotCoprime(f"e = {e} shares a factor with phi = {phi}")
    d = mod_inverse(e, phi)
    return RsaKey(n=p * q, e=e, d=d, p=p, q=q, phi=phi)


def rsa_keygen_random(bits: int, e: int, seed: int) -> RsaKey:
    """RSA key with two distinct seeded random primes of the given bit size.

    Candidates are odd, have the top bit set, and are checked with trial
    division, so sizes beyond ~40 bits per prime get slow. Primes whose
    p - 1 shares a factor with e are rejected and redrawn.
    """
    if not 8 <= bits <= 64:
        raise ValueError(f"bits must be in [8, 64], got {bits}")
    rng = random.Random(seed)
    primes: list[int] = []
    while len(primes) < 2:
        cand = rng.randrange(1 << (bits - 1), 1 << bits) | 1
        if cand in primes:
            continue
        if gcd_euclid(e, cand - 1) != 1:
            continue
        if is_prime_trial(cand).is_prime:
            primes.append(cand)
    return rsa_keygen_from_primes(primes[0], primes[1], e)
