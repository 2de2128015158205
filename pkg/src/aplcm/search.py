"""Boundary counterexamples to the Hong-Yang bound at n = r^alpha.

For most (alpha, r) with alpha, r >= 2 we have 2*alpha*r <= r^alpha, so the
linear hypothesis n >= 2*alpha*r already covers n = r^alpha and no
counterexample can exist there. Only the *tight* pairs, where
2*alpha*r >= r^alpha + 1, need a search; for each, u0 runs over 1..n-1 coprime
to r (for u0 >= n we get n - k_n > alpha*r directly, so the bound holds).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Set, Tuple

from .bounds import HongYang, raw_bound
from .core import Progression
from .errors import InvalidInputError
from .lcm import lcm_range
from .parallel import parallel_map

DEFAULT_ALPHA_MAX = 10
DEFAULT_R_MAX = 10


class NonCoprimeWarning(UserWarning):
    pass


@dataclass(frozen=True, order=True)
class Counterexample:
    u0: int
    r: int
    alpha: int
    n: int
    l_n: int
    bound: int
    coprime: bool = True

    def __post_init__(self):
        if not self.l_n < self.bound:
            raise InvalidInputError(f"not a counterexample: L_n={self.l_n} >= bound={self.bound}")

    @property
    def on_boundary(self) -> bool:
        return self.n == self.r**self.alpha


def tight_pairs(alpha_max: int = DEFAULT_ALPHA_MAX, r_max: int = DEFAULT_R_MAX) -> Set[Tuple[int, int]]:
    """All (alpha, r) in [2, alpha_max] x [2, r_max] with 2*alpha*r >= r^alpha + 1."""
    if alpha_max < 2 or r_max < 2:
        raise InvalidInputError("alpha_max and r_max must be >= 2")
    return {
        (alpha, r)
        for alpha in range(2, alpha_max + 1)
        for r in range(2, r_max + 1)
        if 2 * alpha * r >= r**alpha + 1
    }


def _evaluate(args: Tuple[int, int, int, int]) -> Optional[Counterexample]:
    u0, r, alpha, n = args
    p = Progression._unchecked(u0, r)
    l_n = lcm_range(p, n, 0)
    bound = raw_bound(u0, r, n, HongYang(alpha).exponent)
    if l_n < bound:
        return Counterexample(u0, r, alpha, n, l_n, bound, coprime=p.coprime)
    return None


def _candidates(alpha: int, r: int) -> List[Tuple[int, int, int, int]]:
    n = r**alpha
    return [(u0, r, alpha, n) for u0 in range(1, n) if gcd(u0, r) == 1]


def counterexample_search(alpha: int, r: int, workers: Optional[int] = None) -> List[Counterexample]:
    if alpha < 2 or r < 2:
        raise InvalidInputError("counterexample search needs alpha, r >= 2")
    found = parallel_map(_evaluate, _candidates(alpha, r), workers)
    return sorted(c for c in found if c is not None)


def full_search(
    alpha_max: int = DEFAULT_ALPHA_MAX,
    r_max: int = DEFAULT_R_MAX,
    workers: Optional[int] = None,
) -> List[Counterexample]:
    tasks = [t for alpha, r in sorted(tight_pairs(alpha_max, r_max)) for t in _candidates(alpha, r)]
    found = parallel_map(_evaluate, tasks, workers)
    return sorted(c for c in found if c is not None)


def probe(u0: int, r: int, alpha: int, n: int) -> Optional[Counterexample]:
    """Compare L_n with u0 * r^alpha * (r+1)^n at one point.

    Non-coprime (u0, r) is allowed so the arithmetic can still be inspected;
    such input emits :class:`NonCoprimeWarning` and any record comes back
    with ``coprime=False``.
    """
    if u0 < 1 or r < 1 or alpha < 1 or n < 0:
        raise InvalidInputError("probe needs u0, r, alpha >= 1 and n >= 0")
    if gcd(u0, r) != 1:
        warnings.warn(
            f"gcd(u0={u0}, r={r}) = {gcd(u0, r)}: invalid per the coprimality hypothesis",
            NonCoprimeWarning,
            stacklevel=2,
        )
    return _evaluate((u0, r, alpha, n))
