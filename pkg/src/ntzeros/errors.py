"""Exception types shared across the number-theory modules.

Plain argument validation (wrong sign, wrong length, out-of-range) raises
ValueError directly; the classes below mark mathematical outcomes a caller
may want to catch separately.
"""


class NumberTheoryError(ValueError):
    """Base class for arithmetic failure modes."""


class NotInvertible(NumberTheoryError):
    """The element shares a factor with the modulus."""


class NoSolution(NumberTheoryError):
    """The equation has no solution over the given domain."""


class NotCoprime(NumberTheoryError):
    """Arguments required to be coprime are not."""


class PerfectSquare(NumberTheoryError):
    """d is a perfect square, so sqrt(d) is rational."""


class ZeroPolynomial(NumberTheoryError):
    """The zero polynomial has no meaningful root set."""


class NotARoot(NumberTheoryError):
    """The given value is not a root modulo p."""


class SingularRoot(NumberTheoryError):
    """f'(a) vanishes mod p, so the lift is not unique."""


class NonResidue(NumberTheoryError):
    """a is a quadratic non-residue modulo p."""


class NotPrime(NumberTheoryError):
    """An argument required to be prime is composite (or < 2)."""


class NotSquarefree(NumberTheoryError):
    """d must be squarefree."""


class PointNotOnCurve(NumberTheoryError):
    """The affine point does not satisfy the curve equation."""
