import random

import pytest

from mpart.polysum import IntPolynomial, binom_int


def brute_sum(p, lo, hi):
    return sum(p.eval(x) for x in range(lo, hi + 1))


def test_binom_int_matches_table():
    assert binom_int(4, 2) == 6
    assert binom_int(3, 5) == 0
    assert binom_int(-1, 3) == -1
    assert binom_int(-2, 2) == 3
    with pytest.raises(ValueError):
        binom_int(3, -1)


def test_eval_examples():
    assert IntPolynomial((1,)).eval(5) == 1
    assert IntPolynomial((2, 4)).eval(3) == 14
    assert IntPolynomial((0, 0, 1)).eval(4) == 6


def test_canonical_form():
    assert IntPolynomial.from_coeffs([2, 4, 0, 0]).coeffs == (2, 4)
    assert IntPolynomial.from_coeffs([0, 0]).coeffs == (0,)
    assert IntPolynomial.from_coeffs([]).coeffs == (0,)
    with pytest.raises(ValueError):
        IntPolynomial((1, 0))
    with pytest.raises(ValueError):
        IntPolynomial(())


def test_prefix_sum_examples():
    assert IntPolynomial((1,)).prefix_sum().coeffs == (1, 1)
    q = IntPolynomial((2, 4)).prefix_sum()
    assert q.eval(2) == 18  # 2 + 6 + 10
    zero = IntPolynomial((0,))
    assert zero.prefix_sum().coeffs == (0,)


def test_prefix_sum_vanishes_left_of_zero():
    for coeffs in [(1,), (2, 4), (5, -3, 7), (0, 0, 0, 2)]:
        q = IntPolynomial.from_coeffs(coeffs).prefix_sum()
        assert q.eval(-1) == 0


def test_compose_affine_examples():
    # r(k) = 4k + 1 from p(x) = x
    assert IntPolynomial((0, 1)).compose_affine(4, 1).coeffs == (1, 4)
    assert IntPolynomial((1,)).compose_affine(7, 3).coeffs == (1,)
    # r(k) = C(2k, 2), checked at k = 3
    r = IntPolynomial((0, 0, 1)).compose_affine(2, 0)
    assert [r.eval(k) for k in range(4)] == [0, 1, 6, 15]


def test_sum_range_examples():
    assert IntPolynomial((1,)).sum_range(0, 17) == 18
    assert IntPolynomial((2, 4)).sum_range(0, 3) == 32  # 2 + 6 + 10 + 14
    assert IntPolynomial((2, 4)).sum_range(1, 0) == 0
    assert IntPolynomial((5, 1)).sum_range(0, -1) == 0
    with pytest.raises(ValueError):
        IntPolynomial((1,)).sum_range(1, -1)
    with pytest.raises(ValueError):
        IntPolynomial((1,)).sum_range(2, 5)


def test_prefix_sum_equals_literal_sum():
    rng = random.Random(20240)
    for _ in range(60):
        degree = rng.randrange(0, 9)
        p = IntPolynomial.from_coeffs(
            [rng.randint(-9, 9) for _ in range(degree + 1)]
        )
        q = p.prefix_sum()
        for upper in (0, 1, 7, 50):
            assert q.eval(upper) == brute_sum(p, 0, upper)


def test_compose_affine_pointwise():
    rng = random.Random(77)
    for _ in range(60):
        degree = rng.randrange(0, 7)
        p = IntPolynomial.from_coeffs(
            [rng.randint(-9, 9) for _ in range(degree + 1)]
        )
        a = rng.randrange(1, 6)
        b = rng.randrange(-1, 8)
        r = p.compose_affine(a, b)
        for k in range(21):
            assert r.eval(k) == p.eval(a * k + b)


def test_degree_bookkeeping():
    rng = random.Random(3)
    for _ in range(40):
        degree = rng.randrange(0, 8)
        coeffs = [rng.randint(-5, 5) for _ in range(degree)] + [rng.randint(1, 5)]
        p = IntPolynomial.from_coeffs(coeffs)
        assert p.prefix_sum().degree == p.degree + 1
        assert p.compose_affine(rng.randrange(1, 5), rng.randrange(-1, 5)).degree == p.degree


def test_operations_stay_integral():
    # six chained prefix-sum + substitution rounds against literal sums
    steps = [(3, -1), (3, 0), (3, 1), (3, 2), (2, -1), (2, 3)]
    p = IntPolynomial((1,))
    values = [1] * 6000
    for a, b in steps:
        prefix = [0]
        for v in values:
            prefix.append(prefix[-1] + v)
        k_max = (len(values) - 1 - b) // a
        values = [prefix[a * k + b + 1] for k in range(k_max + 1)]
        p = p.prefix_sum().compose_affine(a, b)
        assert all(isinstance(c, int) for c in p.coeffs)
        # 8 matching points pin down a polynomial of degree <= 7
        assert [p.eval(k) for k in range(8)] == values[:8]
