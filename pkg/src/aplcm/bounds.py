"""Lower bounds u0 * r^e * (r+1)^n on L_n and the hypotheses under which they hold.

Three families share the same shape and differ only in the exponent e:

* ``HongYang(alpha)``: e = alpha, valid when n > r^alpha.
* ``Main(alpha, a)``: e = alpha + a - 2, valid when alpha, r >= a and n >= 2*alpha*r.
* ``Corollary(alpha, beta, a)``: e = alpha + beta + a - 2, valid when
  alpha, r >= a and n >= 2*(alpha + beta + a - 2)*r.

All values are exact integers; nothing here goes through logarithms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import Progression
from .errors import InvalidInputError


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidInputError(msg)


@dataclass(frozen=True)
class HongYang:
    alpha: int

    def __post_init__(self):
        _require(self.alpha >= 1, f"HongYang needs alpha >= 1, got {self.alpha}")

    @property
    def exponent(self) -> int:
        return self.alpha

    @property
    def label(self) -> str:
        return f"HongYang(alpha={self.alpha})"


@dataclass(frozen=True)
class Main:
    alpha: int
    a: int

    def __post_init__(self):
        _require(self.a >= 2, f"Main needs a >= 2, got {self.a}")
        _require(self.alpha >= 1, f"Main needs alpha >= 1, got {self.alpha}")

    @property
    def exponent(self) -> int:
        return self.alpha + self.a - 2

    @property
    def label(self) -> str:
        return f"Main(alpha={self.alpha},a={self.a})"


@dataclass(frozen=True)
class Corollary:
    alpha: int
    beta: int
    a: int

    def __post_init__(self):
        _require(self.a >= 2, f"Corollary needs a >= 2, got {self.a}")
        _require(self.beta >= 1, f"Corollary needs beta >= 1, got {self.beta}")
        _require(self.alpha >= 1, f"Corollary needs alpha >= 1, got {self.alpha}")

    @property
    def exponent(self) -> int:
        return self.alpha + self.beta + self.a - 2

    @property
    def label(self) -> str:
        return f"Corollary(alpha={self.alpha},beta={self.beta},a={self.a})"


BoundKind = Union[HongYang, Main, Corollary]


def check_parameters(r: int, kind: BoundKind) -> None:
    """Raise unless alpha >= a and r >= a (Main and Corollary only)."""
    if isinstance(kind, (Main, Corollary)):
        _require(kind.alpha >= kind.a, f"{kind.label}: alpha must be >= a")
        _require(r >= kind.a, f"{kind.label}: r={r} must be >= a")


def raw_bound(u0: int, r: int, n: int, exponent: int) -> int:
    return u0 * r**exponent * (r + 1) ** n


def bound_value(p: Progression, n: int, kind: BoundKind) -> int:
    check_parameters(p.r, kind)
    return raw_bound(p.u0, p.r, n, kind.exponent)


def linear_threshold(r: int, kind: Union[Main, Corollary]) -> int:
    """Smallest n admitted by the linear hypothesis: 2 * (e - a + 2) * r."""
    if isinstance(kind, Main):
        return 2 * kind.alpha * r
    return 2 * (kind.alpha + kind.beta + kind.a - 2) * r


def hypothesis_holds(p: Progression, n: int, kind: BoundKind) -> bool:
    if isinstance(kind, HongYang):
        return n > p.r**kind.alpha
    return kind.alpha >= kind.a and p.r >= kind.a and n >= linear_threshold(p.r, kind)


def corollary_dominates(alpha: int, beta: int, a: int, r: int) -> bool:
    """Whether r^alpha + 1 >= 2*(alpha + beta + a - 2)*r.

    When true, n > r^alpha alone already puts n in the range covered by the
    linear hypothesis with exponent alpha + beta + a - 2.
    """
    return r**alpha + 1 >= 2 * (alpha + beta + a - 2) * r
