"""Residue predictions for partition counts at multiples of the base.

Appending a zero digit to n turns every level of the chained partition
count into a full residue cycle mod m, which collapses the counts of
b(m, m*n) and c(m, m*n) to digit expressions in the digits of n.  The
functions here evaluate those digit expressions; verifying them against
exact counts is the job of the callers (CLI ``verify``/``congruence``).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .counting import chi_vector, recurrence_table
from .radix import BaseRepr


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"residue {self.value} not in [0, {self.modulus})")


def b_mod_product(r: BaseRepr) -> Residue:
    """b(m, m*n) mod m as the digit product prod_i (alpha_i + 1)."""
    return Residue(prod(d + 1 for d in r.digits) % r.m, r.m)


def c_mod_formula(r: BaseRepr) -> Residue:
    """c(m, m*n) mod m as
    alpha_0 + (alpha_0 - 1) * sum_i prod_{k<=i} (alpha_k - chi_k)."""
    alpha = r.digits
    chi = chi_vector(r)
    total = 0
    term = 1
    for i in range(1, len(alpha)):
        term *= alpha[i] - chi[i - 1]
        total += term
    return Residue((alpha[0] + (alpha[0] - 1) * total) % r.m, r.m)


def afs_c_mod(r: BaseRepr) -> Residue:
    """c(m, m*n) mod m in the lowest-nonzero-digit form.

    With ell the index of the lowest nonzero digit and
    T = sum_{i>ell} alpha_{ell+1} * ... * alpha_i (terms vanish past the
    top digit), the residue is alpha_ell + (alpha_ell - 1)*T for even ell
    and 1 - alpha_ell - (alpha_ell - 1)*T for odd ell.  Equivalent to
    c_mod_formula for every digit vector.
    """
    alpha = r.digits
    if all(d == 0 for d in alpha):
        raise ValueError("defined for representations of positive integers only")
    ell = next(i for i, d in enumerate(alpha) if d)
    tail = 0
    term = 1
    for i in range(ell + 1, len(alpha)):
        term *= alpha[i]
        tail += term
    a = alpha[ell]
    if ell % 2 == 0:
        value = a + (a - 1) * tail
    else:
        value = 1 - a - (a - 1) * tail
    return Residue(value % r.m, r.m)


def churchhouse_check(k: int, n: int) -> tuple[bool, bool]:
    """Check the two classical congruences for the binary partition count:

        b(2, 4**(k+1) * n) == b(2, 4**k * n)      (mod 2**(3k+2))
        b(2, 2 * 4**k * n) == b(2, 4**k * n / 2)  (mod 2**(3k))

    computed with exact big-integer counts from the recurrence table.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    table = recurrence_table(2, 4 ** (k + 1) * n)
    first = (table[4 ** (k + 1) * n] - table[4**k * n]) % 2 ** (3 * k + 2) == 0
    second = (table[2 * 4**k * n] - table[4**k * n // 2]) % 2 ** (3 * k) == 0
    return first, second
