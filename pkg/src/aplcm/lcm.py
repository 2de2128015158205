"""Exact L_{n,k}, C_{n,k} and the integer cofactor A_{n,k} with L = A * C."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, prod
from typing import Iterable, Iterator

from .core import Progression
from .errors import InternalContradiction, InvalidInputError


@dataclass(frozen=True)
class Decomposition:
    l: int
    c: Fraction
    a: int

    def __post_init__(self):
        if self.a < 1 or self.a * self.c.numerator != self.l * self.c.denominator:
            raise InternalContradiction(
                f"inconsistent decomposition: L={self.l}, C={self.c}, A={self.a}"
            )


def _check_range(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise InvalidInputError(f"n and k must be nonnegative (n={n}, k={k})")
    if k > n:
        raise InvalidInputError(f"k={k} exceeds n={n}")


def lcm_fold(values: Iterable[int]) -> int:
    acc = 1
    for v in values:
        acc = acc // gcd(acc, v) * v
    return acc


def prefix_lcms(p: Progression, n: int) -> Iterator[int]:
    """Yield L_0, L_1, ..., L_n, each from one extra fold step."""
    acc = 1
    for u in p.terms(0, n):
        acc = acc // gcd(acc, u) * u
        yield acc


def lcm_range(p: Progression, n: int, k: int = 0) -> int:
    """L_{n,k} = lcm(u_k, ..., u_n), folded in ascending k."""
    _check_range(n, k)
    return lcm_fold(p.terms(k, n))


def _raw_lcm_range(u0: int, r: int, n: int, k: int = 0) -> int:
    # Unvalidated entry point for oracle tests (e.g. the non-coprime 2, 4, ..., 18).
    return lcm_range(Progression._unchecked(u0, r), n, k)


def term_product(p: Progression, n: int, k: int) -> int:
    return prod(p.terms(k, n))


def c_value(p: Progression, n: int, k: int = 0) -> Fraction:
    """C_{n,k} = (u_k ... u_n) / (n - k)!, reduced once at the end."""
    _check_range(n, k)
    return Fraction(term_product(p, n, k), factorial(n - k))


def _cofactor(l: int, num: int, den: int, n: int, k: int) -> int:
    a, rem = divmod(den * l, num)
    if rem or a < 1:
        raise InternalContradiction(
            f"A_{{n,k}} is not a positive integer for n={n}, k={k}: "
            f"L={l}, C={num}/{den}"
        )
    return a


def a_value(p: Progression, n: int, k: int = 0) -> int:
    """A_{n,k} = (n - k)! * L_{n,k} / (u_k ... u_n)."""
    _check_range(n, k)
    return _cofactor(lcm_range(p, n, k), term_product(p, n, k), factorial(n - k), n, k)


def decompose(p: Progression, n: int, k: int = 0) -> Decomposition:
    _check_range(n, k)
    l = lcm_range(p, n, k)
    c = c_value(p, n, k)
    a = _cofactor(l, c.numerator, c.denominator, n, k)
    return Decomposition(l, c, a)
