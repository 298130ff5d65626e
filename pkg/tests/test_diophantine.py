"""Tests for continued fractions, Pell, Zeckendorf, Egyptian fractions,
rational roots, and sums of two squares."""

import math
from fractions import Fraction

import pytest

from ntzeros import (
    cf_expand_sqrt,
    convergents,
    egyptian_greedy,
    pell_fundamental,
    rational_roots,
    two_squares_decompose,
    zeckendorf,
)
from ntzeros.errors import PerfectSquare


def test_cf_expand_known_periods():
    assert cf_expand_sqrt(2).a0 == 1
    assert cf_expand_sqrt(2).period == (2,)
    assert cf_expand_sqrt(3).period == (1, 2)
    assert cf_expand_sqrt(7).period == (1, 1, 1, 4)
    assert cf_expand_sqrt(13).period == (1, 1, 1, 1, 6)
    exp19 = cf_expand_sqrt(19)
    assert (exp19.a0, exp19.period) == (4, (2, 1, 3, 1, 2, 8))


def test_cf_expand_rejects_squares():
    for d in (4, 9, 10000):
        with pytest.raises(PerfectSquare):
            cf_expand_sqrt(d)
    for d in (0, 1):
        with pytest.raises(ValueError):
            cf_expand_sqrt(d)


def test_cf_period_structure():
    # The period of sqrt(d) always ends with 2*a0, and the partial
    # quotients before it form a palindrome.
    for d in range(2, 200):
        if math.isqrt(d) ** 2 == d:
            continue
        exp = cf_expand_sqrt(d)
        assert exp.a0 == math.isqrt(d)
        assert exp.period[-1] == 2 * exp.a0
        body = exp.period[:-1]
        assert body == body[::-1]


def test_convergents_lowest_terms_and_alternation():
    for d in (2, 3, 7, 13, 19, 31, 61):
        exp = cf_expand_sqrt(d)
        convs = convergents(exp, 12)
        root = math.sqrt(d)
        signs = []
        for c in convs:
            assert math.gcd(c.p, c.q) == 1
            signs.append(1 if c.p / c.q > root else -1)
        # Convergents straddle the irrational target alternately.
        for a, b in zip(signs, signs[1:]):
            assert a != b


def test_convergents_recurrence():
    exp = cf_expand_sqrt(7)
    convs = convergents(exp, 8)
    # First convergent is a0/1.
    assert (convs[0].p, convs[0].q) == (2, 1)
    terms = [exp.a0] + list(exp.period * 3)
    for i in range(2, 8):
        a = terms[i]
        assert convs[i].p == a * convs[i - 1].p + convs[i - 2].p
        assert convs[i].q == a * convs[i - 1].q + convs[i - 2].q


def test_pell_reference_values():
    assert pell_fundamental(3) == (2, 1)
    assert pell_fundamental(2) == (3, 2)
    assert pell_fundamental(5) == (9, 4)
    # Classic large fundamental solution.
    assert pell_fundamental(61) == (1766319049, 226153980)


def test_pell_brute_scan():
    for d in range(2, 51):
        if math.isqrt(d) ** 2 == d:
            continue
        x, y = pell_fundamental(d)
        assert x * x - d * y * y == 1
        assert y >= 1
        # No smaller y works, so this is the fundamental solution.
        for yy in range(1, y):
            xx2 = 1 + d * yy * yy
            assert math.isqrt(xx2) ** 2 != xx2


def test_pell_rejects_squares():
    with pytest.raises(PerfectSquare):
        pell_fundamental(16)


def test_zeckendorf_known_values():
    assert zeckendorf(100) == [89, 8, 3]
    assert zeckendorf(1) == [1]
    assert zeckendorf(2) == [2]
    assert zeckendorf(4) == [3, 1]
    assert zeckendorf(12) == [8, 3, 1]


def test_zeckendorf_properties():
    fibs = [1, 2]
    while fibs[-1] < 10**6:
        fibs.append(fibs[-1] + fibs[-2])
    fib_set = set(fibs)
    index = {f: i for i, f in enumerate(fibs)}
    for n in range(1, 2000):
        parts = zeckendorf(n)
        assert sum(parts) == n
        assert parts == sorted(parts, reverse=True)
        assert all(f in fib_set for f in parts)
        # Non-consecutive Fibonacci numbers.
        idxs = [index[f] for f in parts]
        for a, b in zip(idxs, idxs[1:]):
            assert a - b >= 2


def test_zeckendorf_rejects_nonpositive():
    with pytest.raises(ValueError):
        zeckendorf(0)


def test_egyptian_greedy_known():
    assert egyptian_greedy(5, 6) == [2, 3]
    assert egyptian_greedy(2, 3) == [2, 6]
    assert egyptian_greedy(3, 7) == [3, 11, 231]
    assert egyptian_greedy(1, 2) == [2]


def test_egyptian_greedy_properties():
    for q in range(2, 30):
        for p in range(1, q):
            dens = egyptian_greedy(p, q)
            assert sum(Fraction(1, d) for d in dens) == Fraction(p, q)
            # Strictly increasing denominators, hence distinct unit fractions.
            assert all(a < b for a, b in zip(dens, dens[1:]))


def test_egyptian_greedy_rejects_improper():
    with pytest.raises(ValueError):
        egyptian_greedy(3, 2)
    with pytest.raises(ValueError):
        egyptian_greedy(0, 5)


def test_rational_roots_known():
    # Coefficients ascend by degree: 6 - 11x - 3x^2 + 2x^3 has roots
    # 3, -2, and 1/2.
    roots = rational_roots([6, -11, -3, 2])
    assert roots == sorted([Fraction(-2), Fraction(1, 2), Fraction(3)])
    # 1 + x^2 has none; 3 - x^3 has none either.
    assert rational_roots([1, 0, 1]) == []
    assert rational_roots([-3, 0, 0, 1]) == []
    # 6 - 5x + x^2 = (x-2)(x-3).
    assert rational_roots([6, -5, 1]) == [Fraction(2), Fraction(3)]
    # -4 + 2x.
    assert rational_roots([-4, 2]) == [Fraction(2)]


def test_rational_roots_zero_root_and_scaling():
    # -x + x^3 = x(x-1)(x+1).
    assert rational_roots([0, -1, 0, 1]) == [Fraction(-1), Fraction(0), Fraction(1)]
    # Scaling all coefficients does not change the roots.
    assert rational_roots([18, -33, -9, 6]) == rational_roots([6, -11, -3, 2])


def test_rational_roots_verified_by_evaluation():
    polys = [
        [-6, 11, -6, 1],
        [-9, 0, 4],
        [1, 1, 1, 3],
        [15, 28, -27, -28, 12],
    ]
    for coeffs in polys:
        for r in rational_roots(coeffs):
            acc = Fraction(0)
            for c in reversed(coeffs):
                acc = acc * r + c
            assert acc == 0


def test_rational_roots_rejects_zero_polynomial():
    from ntzeros.errors import ZeroPolynomial

    with pytest.raises(ZeroPolynomial):
        rational_roots([0, 0])
    with pytest.raises(ValueError):
        rational_roots([])


def test_two_squares_reference_values():
    res = two_squares_decompose(130)
    assert res.representable
    assert (res.x, res.y) == (11, 3)
    assert two_squares_decompose(2) == (True, 1, 1)
    assert two_squares_decompose(25) == (True, 5, 0)
    assert not two_squares_decompose(21).representable


def test_two_squares_brute_scan():
    representable = set()
    for a in range(0, 101):
        for b in range(a, 101):
            representable.add(a * a + b * b)
    for n in range(1, 5001):
        res = two_squares_decompose(n)
        if n in representable:
            assert res.representable, n
            assert res.x * res.x + res.y * res.y == n
            assert res.x >= res.y >= 0
        else:
            assert not res.representable, n
            assert res.x is None and res.y is None


def test_two_squares_rejects_nonpositive():
    with pytest.raises(ValueError):
        two_squares_decompose(0)
