"""Integer-valued polynomials in the binomial (Newton) basis.

A coefficient vector (c_0, ..., c_d) represents p(x) = sum_i c_i * C(x, i).
Polynomials with integer coefficients in this basis take integer values at
every integer x, and the three operations needed to evaluate chained
lattice-point sums -- prefix sums, affine substitution of the argument, and
bounded range sums -- all stay in exact integer arithmetic:

  * prefix sums are a coefficient shift, by C(0, i) + ... + C(N, i) = C(N+1, i+1);
  * affine substitution is a forward-difference interpolation from d+1 values;
  * a range sum is a difference of two prefix-sum evaluations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def binom_int(x: int, k: int) -> int:
    """C(x, k) for any integer x and k >= 0, generalized to negative x via
    C(x, k) = (-1)**k * C(k - x - 1, k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if x < 0:
        sign = -1 if k % 2 else 1
        return sign * math.comb(k - x - 1, k)
    return math.comb(x, k)


@dataclass(frozen=True)
class IntPolynomial:
    """coeffs[i] multiplies C(x, i); canonical form has no trailing zero
    coefficient (the zero polynomial is the single coefficient (0,))."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("coefficient vector must not be empty")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("top coefficient must be nonzero in canonical form")

    @classmethod
    def from_coeffs(cls, coeffs) -> IntPolynomial:
        """Build a polynomial, stripping trailing zero coefficients."""
        c = list(coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return cls(tuple(c) if c else (0,))

    @classmethod
    def constant(cls, value: int) -> IntPolynomial:
        return cls((value,))

    @property
    def degree(self) -> int:
        """Formal degree; the zero polynomial degenerates to 0."""
        return len(self.coeffs) - 1

    def eval(self, x: int) -> int:
        """Exact value sum_i coeffs[i] * C(x, i) at any integer x."""
        total = self.coeffs[0]
        row = 1
        for i in range(1, len(self.coeffs)):
            row = row * (x - i + 1) // i
            total += self.coeffs[i] * row
        return total

    def prefix_sum(self) -> IntPolynomial:
        """The polynomial q with q(N) = sum_{x=0}^{N} p(x); q(-1) = 0.

        C(x, i) summed over x = 0..N gives C(N+1, i+1), and rebasing from
        N+1 to N splits it as C(N, i+1) + C(N, i); so coefficient c_i of p
        contributes c_i to both coefficients i and i+1 of q.
        """
        out = [0] * (len(self.coeffs) + 1)
        for i, c in enumerate(self.coeffs):
            out[i] += c
            out[i + 1] += c
        return IntPolynomial.from_coeffs(out)

    def compose_affine(self, a: int, b: int) -> IntPolynomial:
        """The polynomial r with r(k) = p(a*k + b), exactly.

        Computed by Newton forward differences from the d+1 values
        p(b), p(a+b), ..., p(a*d+b); exact by uniqueness of degree-d
        interpolation.
        """
        if a < 1:
            raise ValueError("stride a must be positive")
        d = self.degree
        work = [self.eval(a * k + b) for k in range(d + 1)]
        coeffs = []
        for _ in range(d + 1):
            coeffs.append(work[0])
            work = [work[i + 1] - work[i] for i in range(len(work) - 1)]
        return IntPolynomial.from_coeffs(coeffs)

    def sum_range(self, lo: int, hi: int) -> int:
        """sum_{x=lo}^{hi} p(x) with lo in {0, 1}; hi = lo - 1 is the empty sum."""
        if lo not in (0, 1):
            raise ValueError(f"lower bound must be 0 or 1, got {lo}")
        if hi < lo - 1:
            raise ValueError(f"range [{lo}, {hi}] is below the structurally empty range")
        q = self.prefix_sum()
        return q.eval(hi) - q.eval(lo - 1)
