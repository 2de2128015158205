"""Progressions u_k = u0 + k*r with gcd(u0, r) = 1, and the threshold index k_n.

Exact numbers are plain Python objects: ``int`` for naturals (arbitrary
precision) and :class:`fractions.Fraction` for ratios, which is always kept in
lowest terms with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Union

from .errors import InvalidInputError, NotCoprimeError

Ratio = Fraction
Exact = Union[int, Fraction]


def _natural(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise InvalidInputError(f"{name} must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class Progression:
    u0: int
    r: int

    def __post_init__(self):
        _natural("u0", self.u0)
        _natural("r", self.r)
        if self.u0 == 0:
            raise InvalidInputError("u0 must be >= 1")
        if self.r == 0:
            raise InvalidInputError("r must be >= 1")
        g = gcd(self.u0, self.r)
        if g != 1:
            raise NotCoprimeError(self.u0, self.r, g)

    @classmethod
    def _unchecked(cls, u0: int, r: int) -> "Progression":
        # Skips the coprimality check. Only for probes and oracle tests that
        # must reproduce arithmetic outside the (u0, r) = 1 hypothesis.
        p = object.__new__(cls)
        object.__setattr__(p, "u0", u0)
        object.__setattr__(p, "r", r)
        return p

    @property
    def coprime(self) -> bool:
        return gcd(self.u0, self.r) == 1

    def term(self, k: int) -> int:
        return self.u0 + k * self.r

    def terms(self, start: int, stop: int) -> Iterator[int]:
        """Yield u_start, ..., u_stop (inclusive)."""
        u = self.term(start)
        for _ in range(start, stop + 1):
            yield u
            u += self.r


def new_progression(u0: int, r: int) -> Progression:
    return Progression(u0, r)


def term(p: Progression, k: int) -> int:
    return p.term(_natural("k", k))


def threshold_index(p: Progression, n: int) -> int:
    """k_n = max(0, floor((n - u0) / (r + 1)) + 1), defined for n >= 1."""
    _natural("n", n)
    if n == 0:
        raise InvalidInputError("threshold index is defined only for n >= 1")
    # Integer floor division rounds toward -inf, which is the exact floor of
    # the signed rational (n - u0) / (r + 1).
    return max(0, (n - p.u0) // (p.r + 1) + 1)


def divides(y: Exact, x: Exact) -> bool:
    """True when x = y * z for some integer z; y and x may be rationals."""
    if y == 0:
        return x == 0
    return Fraction(x) / Fraction(y) % 1 == 0


def as_ratio(numerator: int, denominator: int = 1) -> Fraction:
    if denominator < 1:
        raise InvalidInputError("ratio denominator must be >= 1")
    return Fraction(numerator, denominator)
