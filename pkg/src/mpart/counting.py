"""Counting m-ary partitions and their gap-free variants.

b(m, n), the number of partitions of n into powers of m, is computed four
independent ways:

  * ``count_b_nested``     -- literal chained summation over the digit bounds;
  * ``count_b_poly``       -- the same sum collapsed level by level into an
                              integer-valued polynomial (fast for any n);
  * ``count_b_recurrence`` -- the coefficient recurrence
                              b(n) = b(n-1) + [m | n] * b(n/m);
  * ``count_b_gf``         -- coefficients of prod_k 1/(1 - q**(m**k)).

c(m, n), the number of gap-free partitions (every power below the largest
part occurs), is computed by literal summation and by the polynomial route;
the partitions module counts both families by brute-force enumeration.

Counts at n = 0 are defined as 1 (the empty partition) throughout.
"""

from __future__ import annotations

from .budgets import LoopBudgetExceeded, loop_budget
from .polysum import IntPolynomial
from .radix import BaseRepr, to_base
from . import kernels

# Largest n for which the O(n) recurrence is used to pre-estimate the
# innermost step count of a literal summation; the polynomial count is
# used beyond.  Resource guard only: results never depend on it.
_ESTIMATE_BY_RECURRENCE_MAX = 2 * 10**6


def chi_vector(r: BaseRepr) -> tuple[int, ...]:
    """(chi_1, ..., chi_j) with chi_i = 0 where digit alpha_{i-1} is
    positive and 1 where it is zero; empty for single-digit numbers."""
    return tuple(0 if d > 0 else 1 for d in r.digits[:-1])


def recurrence_table(m: int, upto: int) -> list[int]:
    """b(m, 0..upto) from the recurrence b(n) = b(n-1) + [m | n]*b(n/m)."""
    if m < 2:
        raise ValueError(f"base must be >= 2, got {m}")
    if upto < 0:
        raise ValueError(f"upto must be nonnegative, got {upto}")
    b = [1] * (upto + 1)
    for i in range(1, upto + 1):
        b[i] = b[i - 1] + (b[i // m] if i % m == 0 else 0)
    return b


def count_b_recurrence(m: int, n: int) -> int:
    return recurrence_table(m, n)[n]


def count_b_gf(m: int, upto: int) -> list[int]:
    """Coefficients 0..upto of prod_k 1/(1 - q**(m**k)); each factor is a
    prefix-sum pass with stride m**k over the coefficient array."""
    if m < 2:
        raise ValueError(f"base must be >= 2, got {m}")
    if upto < 0:
        raise ValueError(f"upto must be nonnegative, got {upto}")
    coeffs = [1] + [0] * upto
    stride = 1
    while stride <= upto:
        for i in range(stride, upto + 1):
            coeffs[i] += coeffs[i - stride]
        stride *= m
    return coeffs


def count_b_poly(m: int, n: int) -> int:
    """Chained summation over the digit bounds, collapsed level by level:
    g_0 = 1 and g_t(k) = sum of g_{t-1} over [0, alpha_t + m*k], each level
    one prefix sum plus one affine substitution in the binomial basis."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    alpha = to_base(m, n).digits
    j = len(alpha) - 1
    if j == 0:
        return 1
    g = IntPolynomial.constant(1)
    for t in range(1, j):
        g = g.prefix_sum().compose_affine(m, alpha[t])
    return g.sum_range(0, alpha[j])


def _b_leaf_estimate(m: int, n: int) -> int:
    if n <= _ESTIMATE_BY_RECURRENCE_MAX:
        return count_b_recurrence(m, n)
    return count_b_poly(m, n)


def count_b_nested(m: int, n: int, budget: int | None = None) -> int:
    """Literal evaluation of the chained sums over k_j..k_1.

    The innermost step count equals the answer itself, so the step budget
    is checked up front (against the recurrence count, or the polynomial
    count for very large n) and again inside the walker.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    cap = loop_budget(budget)
    alpha = to_base(m, n).digits
    if len(alpha) == 1:
        return 1
    estimate = _b_leaf_estimate(m, n)
    if estimate > cap:
        raise LoopBudgetExceeded(
            f"nested summation for base {m}, n={n} needs {estimate} innermost "
            f"steps (budget {cap}); use count_b_poly"
        )
    count = kernels.nested_sum_b(m, alpha, cap)
    if count < 0:
        raise LoopBudgetExceeded(
            f"nested summation for base {m}, n={n} exceeded budget {cap}"
        )
    return count


def _strata_tops(m: int, n: int, j: int) -> list[int]:
    return [n // m**r - 1 for r in range(1, j + 1)]


def _prefix_shift_valid(m: int, alpha, chi) -> bool:
    """Whether every inner sum's upper bound stays >= its lower bound - 1
    over the ranges actually iterated, so prefix-sum differences telescope.

    With hi = alpha_t - 1 + m*k and k >= chi_{t+1} this always holds
    (alpha_t = 0 forces chi_{t+1} = 1, so hi >= m - 1), but the polynomial
    route checks rather than trusts the argument.
    """
    j = len(alpha) - 1
    for t in range(1, j):
        if alpha[t] - 1 + m * chi[t] < chi[t - 1] - 1:
            return False
    return True


def count_c_poly(m: int, n: int) -> int:
    """Gap-free count: 1 plus, per stratum r (largest part m**r), the
    chained sums with lower bounds chi collapsed polynomially.

    The level polynomials h_t do not depend on the stratum, so each level
    is built once: h_t(k) = S_t(alpha_t - 1 + m*k) - S_t(chi_t - 1) with
    S_t the prefix sum of h_{t-1}.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    alpha = to_base(m, n).digits
    j = len(alpha) - 1
    if j == 0:
        return 1
    chi = chi_vector(to_base(m, n))
    if not _prefix_shift_valid(m, alpha, chi):
        # unreachable per the argument above; literal summation as backstop
        tops = _strata_tops(m, n, j)
        count = kernels.nested_sum_c(m, alpha, chi, tops, loop_budget(None))
        if count < 0:
            raise LoopBudgetExceeded(
                f"literal fallback for base {m}, n={n} exceeded the loop budget"
            )
        return 1 + count
    total = 1
    h = IntPolynomial.constant(1)
    for r in range(1, j + 1):
        top = n // m**r - 1
        lo = chi[r - 1]
        if top >= lo:
            total += h.sum_range(lo, top)
        if r < j:
            s = h.prefix_sum()
            shifted = s.compose_affine(m, alpha[r] - 1)
            const = s.eval(lo - 1)
            h = IntPolynomial.from_coeffs(
                (shifted.coeffs[0] - const,) + shifted.coeffs[1:]
            )
    return total


def count_c_nested(m: int, n: int, budget: int | None = None) -> int:
    """Literal evaluation of the gap-free strata sums.

    Innermost steps total one less than the answer; the budget pre-check
    uses the plain partition count as an upper bound (gap-free partitions
    are a subset), keeping the guard independent of both gap-free routes.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    cap = loop_budget(budget)
    alpha = to_base(m, n).digits
    j = len(alpha) - 1
    if j == 0:
        return 1
    estimate = _b_leaf_estimate(m, n)
    if estimate > cap:
        raise LoopBudgetExceeded(
            f"nested summation for base {m}, n={n} could need up to {estimate} "
            f"innermost steps (budget {cap}); use count_c_poly"
        )
    chi = chi_vector(to_base(m, n))
    tops = _strata_tops(m, n, j)
    count = kernels.nested_sum_c(m, alpha, chi, tops, cap)
    if count < 0:
        raise LoopBudgetExceeded(
            f"nested summation for base {m}, n={n} exceeded budget {cap}"
        )
    return 1 + count
