"""Base-m digit representations of nonnegative integers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class BaseRepr:
    """Digit vector of an integer in base m, least-significant digit first.

    ``digits[i]`` is the coefficient of ``m**i``.  The top digit is nonzero,
    except that 0 is represented by the single digit ``(0,)``.
    """

    m: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"base must be >= 2, got {self.m}")
        if not self.digits:
            raise ValueError("digit vector must not be empty")
        for d in self.digits:
            if not 0 <= d < self.m:
                raise ValueError(f"digit {d} out of range [0, {self.m})")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("most significant digit must be nonzero")

    @property
    def j(self) -> int:
        """Index of the most significant digit."""
        return len(self.digits) - 1

    @property
    def value(self) -> int:
        return from_base(self)

    def msb_first(self) -> tuple[int, ...]:
        """Digits in display order, most significant first."""
        return tuple(reversed(self.digits))


@lru_cache(maxsize=1 << 16)
def to_base(m: int, n: int) -> BaseRepr:
    """Base-m digits of n (least significant first).

    Cached: representations are immutable and requested repeatedly by the
    sequence-map and counting layers.
    """
    if m < 2:
        raise ValueError(f"base must be >= 2, got {m}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    digits = []
    while True:
        n, d = divmod(n, m)
        digits.append(d)
        if n == 0:
            break
    return BaseRepr(m, tuple(digits))


def from_base(r: BaseRepr) -> int:
    """Reconstruct the integer a digit vector represents."""
    n = 0
    for d in reversed(r.digits):
        n = n * r.m + d
    return n


def shift_up(r: BaseRepr) -> BaseRepr:
    """Digits of m*n given the digits of n >= 1 (appends a zero ones digit)."""
    if r.digits == (0,):
        raise ValueError("shift_up is only defined for positive integers")
    return BaseRepr(r.m, (0,) + r.digits)
