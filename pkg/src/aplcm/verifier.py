"""Instance checks for each lemma, inequality and theorem, plus parameter sweeps.

Every check returns a :class:`VerificationRecord` whose ``witnesses`` hold every
exact quantity entering the checked relation, so a record can be re-checked
without recomputing anything. Calling a check outside its hypotheses raises
:class:`~aplcm.errors.HypothesisError`; ``holds=False`` is reserved for a
genuine failure of the claim on admissible input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import factorial, gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .bounds import (
    BoundKind,
    Corollary,
    HongYang,
    Main,
    bound_value,
    corollary_dominates,
    hypothesis_holds,
    linear_threshold,
)
from .core import Progression, threshold_index
from .errors import HypothesisError, InvalidInputError
from .lcm import c_value, decompose, lcm_range
from .parallel import parallel_map

Witness = Union[int, Fraction, str]


class Claim(str, Enum):
    LEMMA21 = "lemma21"
    LEMMA22 = "lemma22"
    LEMMA31 = "lemma31"
    INEQ3 = "ineq3"
    INEQ5 = "ineq5"
    DIVISIBILITY = "divisibility"
    THEOREM11 = "theorem11"
    THEOREM12 = "theorem12"
    COROLLARY31 = "corollary31"


_CLAIM_ORDER = {c: i for i, c in enumerate(Claim)}
PARAM_ORDER = ("u0", "r", "alpha", "a", "beta", "n", "k")


@dataclass(frozen=True)
class VerificationRecord:
    claim: Claim
    params: Dict[str, int]
    holds: bool
    witnesses: Dict[str, Witness] = field(default_factory=dict)

    def sort_key(self) -> Tuple[int, ...]:
        return (_CLAIM_ORDER[self.claim],) + tuple(self.params.get(k, -1) for k in PARAM_ORDER)


def _main_kind(p: Progression, n: int, alpha: int, a: int) -> Main:
    try:
        kind = Main(alpha, a)
    except InvalidInputError as e:
        raise HypothesisError(str(e)) from None
    if not hypothesis_holds(p, n, kind):
        raise HypothesisError(
            f"need alpha, r >= a >= 2 and n >= 2*alpha*r; got u0={p.u0}, r={p.r}, "
            f"n={n}, alpha={alpha}, a={a}"
        )
    return kind


def check_lemma_2_1(p: Progression, n: int, k: int = 0) -> VerificationRecord:
    """C_{n,k} divides L_{n,k}, i.e. A_{n,k} = L_{n,k} / C_{n,k} is an integer >= 1.

    k = 0 is the lemma proper; other k cover the integrality behind L = A * C.
    An integrality failure raises InternalContradiction from the engine.
    """
    if not 0 <= k <= n:
        raise HypothesisError(f"need 0 <= k <= n, got n={n}, k={k}")
    d = decompose(p, n, k)
    return VerificationRecord(
        Claim.LEMMA21,
        {"u0": p.u0, "r": p.r, "n": n, "k": k},
        d.a >= 1,
        {"L_{n,k}": d.l, "C_{n,k}": d.c, "A_{n,k}": d.a},
    )


def check_lemma_2_2(p: Progression, n: int) -> VerificationRecord:
    if n < 1:
        raise HypothesisError("Lemma 2.2 chain needs n >= 1")
    kn = threshold_index(p, n)
    ln = lcm_range(p, n, 0)
    lnk = lcm_range(p, n, kn)
    cnk = c_value(p, n, kn)
    floor = p.u0 * (p.r + 1) ** n
    holds = ln >= lnk and lnk >= cnk and cnk >= floor
    return VerificationRecord(
        Claim.LEMMA22,
        {"u0": p.u0, "r": p.r, "n": n},
        holds,
        {"L_n": ln, "k_n": kn, "L_{n,k_n}": lnk, "C_{n,k_n}": cnk, "u0*(r+1)^n": floor},
    )


def _ineq5_witnesses(r: int, alpha: int, a: int) -> Dict[str, Witness]:
    return {
        "ineq4_value": (2 * alpha * r - 1) - (r + 1) * (alpha + a - 2),
        "ineq4_floor": 2 * (r - a) + 1,
        "ineq5_lhs": Fraction(2 * alpha * r - 1, r + 1),
        "ineq5_rhs": alpha + a - 2,
    }


def _ineq5_holds(w: Dict[str, Witness]) -> bool:
    return w["ineq4_value"] >= w["ineq4_floor"] > 0 and w["ineq5_lhs"] > w["ineq5_rhs"]


def _ineq3_witnesses(n: int, kn: int, r: int, alpha: int) -> Dict[str, Witness]:
    return {
        "k_n_upper": Fraction(n + r, r + 1),
        "ineq3_lower": Fraction((n - 1) * r, r + 1),
        "ineq3_floor": Fraction((2 * alpha * r - 1) * r, r + 1),
    }


def _ineq3_holds(n: int, kn: int, w: Dict[str, Witness]) -> bool:
    return kn <= w["k_n_upper"] and n - kn >= w["ineq3_lower"] >= w["ineq3_floor"]


def check_lemma_3_1(p: Progression, n: int, alpha: int, a: int) -> VerificationRecord:
    """n - k_n > (alpha + a - 2) * r, with the proof's case split recorded."""
    _main_kind(p, n, alpha, a)
    r = p.r
    kn = threshold_index(p, n)
    rhs = (alpha + a - 2) * r
    w: Dict[str, Witness] = {"k_n": kn, "n-k_n": n - kn, "(alpha+a-2)*r": rhs}
    holds = n - kn > rhs
    if n > p.u0:
        w["branch"] = "n>u0"
        w.update(_ineq3_witnesses(n, kn, r, alpha))
        w.update(_ineq5_witnesses(r, alpha, a))
        holds = holds and _ineq3_holds(n, kn, w) and _ineq5_holds(w)
    else:
        w["branch"] = "n<=u0"
        w["2*alpha*r-1"] = 2 * alpha * r - 1
        holds = holds and kn <= 1 and n - kn >= n - 1 >= w["2*alpha*r-1"] > rhs
    return VerificationRecord(
        Claim.LEMMA31, {"u0": p.u0, "r": r, "alpha": alpha, "a": a, "n": n}, holds, w
    )


def check_inequality_3(p: Progression, n: int, alpha: int, a: int) -> VerificationRecord:
    """n - k_n >= (n-1)r/(r+1) >= (2*alpha*r - 1)r/(r+1), in the n > u0 branch."""
    _main_kind(p, n, alpha, a)
    if n <= p.u0:
        raise HypothesisError(f"inequality (3) is the n > u0 branch; got n={n}, u0={p.u0}")
    kn = threshold_index(p, n)
    w: Dict[str, Witness] = {"k_n": kn, "n-k_n": n - kn}
    w.update(_ineq3_witnesses(n, kn, p.r, alpha))
    return VerificationRecord(
        Claim.INEQ3,
        {"u0": p.u0, "r": p.r, "alpha": alpha, "a": a, "n": n},
        _ineq3_holds(n, kn, w),
        w,
    )


def check_inequality_5(alpha: int, r: int, a: int) -> VerificationRecord:
    """(2*alpha*r - 1)/(r+1) > alpha + a - 2, via the chain ending in 2(r-a)+1 > 0."""
    if not (a >= 2 and alpha >= a and r >= a):
        raise HypothesisError(f"need alpha, r >= a >= 2; got alpha={alpha}, r={r}, a={a}")
    w = _ineq5_witnesses(r, alpha, a)
    return VerificationRecord(Claim.INEQ5, {"r": r, "alpha": alpha, "a": a}, _ineq5_holds(w), w)


def check_divisibility_step(p: Progression, n: int, alpha: int, a: int) -> VerificationRecord:
    """r^(alpha+a-2) divides both (n - k_n)! and A_{n,k_n}."""
    kind = _main_kind(p, n, alpha, a)
    kn = threshold_index(p, n)
    d = decompose(p, n, kn)
    fact = factorial(n - kn)
    re = p.r**kind.exponent
    b, b_rem = divmod(fact, re)
    w: Dict[str, Witness] = {
        "k_n": kn,
        "(n-k_n)!": fact,
        "r^(alpha+a-2)": re,
        "B_n": Fraction(fact, re),
        "A_{n,k_n}": d.a,
    }
    holds = b_rem == 0 and d.a % re == 0
    return VerificationRecord(
        Claim.DIVISIBILITY, {"u0": p.u0, "r": p.r, "alpha": alpha, "a": a, "n": n}, holds, w
    )


def _kind_params(kind: BoundKind) -> Dict[str, int]:
    out = {"alpha": kind.alpha}
    if isinstance(kind, (Main, Corollary)):
        out["a"] = kind.a
    if isinstance(kind, Corollary):
        out["beta"] = kind.beta
    return out


def check_theorem(p: Progression, n: int, kind: BoundKind) -> VerificationRecord:
    """L_n >= u0 * r^e * (r+1)^n under the hypothesis attached to ``kind``."""
    if not hypothesis_holds(p, n, kind):
        raise HypothesisError(f"{kind.label} hypothesis fails for u0={p.u0}, r={p.r}, n={n}")
    bound = bound_value(p, n, kind)
    ln = lcm_range(p, n, 0)
    claim = {HongYang: Claim.THEOREM11, Main: Claim.THEOREM12, Corollary: Claim.COROLLARY31}[type(kind)]
    params = {"u0": p.u0, "r": p.r, "n": n, **_kind_params(kind)}
    return VerificationRecord(
        claim, params, ln >= bound, {"L_n": ln, "bound": bound, "exponent": kind.exponent}
    )


def check_corollary(p: Progression, n: int, alpha: int, beta: int, a: int) -> VerificationRecord:
    """For a dominating (alpha, r), n > r^alpha gives L_n >= u0 r^(alpha+beta+a-2) (r+1)^n."""
    try:
        kind = Corollary(alpha, beta, a)
    except InvalidInputError as e:
        raise HypothesisError(str(e)) from None
    r = p.r
    if not (alpha >= a and r >= a):
        raise HypothesisError(f"need alpha, r >= a; got alpha={alpha}, r={r}, a={a}")
    if not corollary_dominates(alpha, beta, a, r):
        raise HypothesisError(f"(alpha={alpha}, r={r}) is not covered for beta={beta}, a={a}")
    if not n > r**alpha:
        raise HypothesisError(f"need n > r^alpha = {r**alpha}, got n={n}")
    threshold = linear_threshold(r, kind)
    ln = lcm_range(p, n, 0)
    bound = bound_value(p, n, kind)
    w: Dict[str, Witness] = {
        "r^alpha": r**alpha,
        "2*(alpha+beta+a-2)*r": threshold,
        "L_n": ln,
        "bound": bound,
    }
    return VerificationRecord(
        Claim.COROLLARY31,
        {"u0": p.u0, "r": r, "alpha": alpha, "a": a, "beta": beta, "n": n},
        n >= threshold and ln >= bound,
        w,
    )


# --- sweeps -----------------------------------------------------------------


@dataclass(frozen=True)
class SweepRanges:
    """Finite parameter ranges.

    ``k=None`` means every 0 <= k <= n for lemma21. When ``n_extra`` is set,
    claims with a threshold in n (lemma31, ineq3, divisibility, theorem11,
    theorem12, corollary31) use n in [threshold, threshold + n_extra] instead
    of ``n``.
    """

    u0: Sequence[int] = ()
    r: Sequence[int] = ()
    n: Sequence[int] = ()
    alpha: Sequence[int] = ()
    a: Sequence[int] = ()
    beta: Sequence[int] = ()
    k: Optional[Sequence[int]] = None
    n_extra: Optional[int] = None


Task = Tuple[str, Tuple[Tuple[str, int], ...]]


def _progressions(ranges: SweepRanges) -> Iterator[Progression]:
    for u0 in sorted(set(ranges.u0)):
        for r in sorted(set(ranges.r)):
            if u0 >= 1 and r >= 1 and gcd(u0, r) == 1:
                yield Progression(u0, r)


def _ns(ranges: SweepRanges, threshold: int) -> List[int]:
    if ranges.n_extra is not None:
        return list(range(threshold, threshold + ranges.n_extra + 1))
    return sorted(set(ranges.n))


def _tasks(claim: Claim, ranges: SweepRanges) -> Iterator[Dict[str, int]]:
    alphas = sorted(set(ranges.alpha))
    as_ = sorted(set(ranges.a))
    betas = sorted(set(ranges.beta))
    if claim is Claim.INEQ5:
        for r in sorted(set(ranges.r)):
            for alpha in alphas:
                for a in as_:
                    if a >= 2 and alpha >= a and r >= a:
                        yield {"r": r, "alpha": alpha, "a": a}
        return
    for p in _progressions(ranges):
        base = {"u0": p.u0, "r": p.r}
        if claim is Claim.LEMMA21:
            for n in sorted(set(ranges.n)):
                if n < 0:
                    continue
                ks = range(n + 1) if ranges.k is None else sorted(k for k in set(ranges.k) if 0 <= k <= n)
                for k in ks:
                    yield {**base, "n": n, "k": k}
        elif claim is Claim.LEMMA22:
            for n in sorted(set(ranges.n)):
                if n >= 1:
                    yield {**base, "n": n}
        elif claim is Claim.THEOREM11:
            for alpha in alphas:
                if alpha < 1:
                    continue
                for n in _ns(ranges, p.r**alpha + 1):
                    if n > p.r**alpha:
                        yield {**base, "alpha": alpha, "n": n}
        elif claim is Claim.COROLLARY31:
            for alpha in alphas:
                for a in as_:
                    for beta in betas:
                        if not (a >= 2 and beta >= 1 and alpha >= a and p.r >= a):
                            continue
                        if not corollary_dominates(alpha, beta, a, p.r):
                            continue
                        for n in _ns(ranges, p.r**alpha + 1):
                            if n > p.r**alpha:
                                yield {**base, "alpha": alpha, "a": a, "beta": beta, "n": n}
        else:
            for alpha in alphas:
                for a in as_:
                    if not (a >= 2 and alpha >= a and p.r >= a):
                        continue
                    for n in _ns(ranges, 2 * alpha * p.r):
                        if n < 2 * alpha * p.r:
                            continue
                        if claim is Claim.INEQ3 and n <= p.u0:
                            continue
                        yield {**base, "alpha": alpha, "a": a, "n": n}


def run_check(claim: Claim, params: Dict[str, int]) -> VerificationRecord:
    if claim is Claim.INEQ5:
        return check_inequality_5(params["alpha"], params["r"], params["a"])
    p = Progression(params["u0"], params["r"])
    n = params["n"]
    if claim is Claim.LEMMA21:
        return check_lemma_2_1(p, n, params["k"])
    if claim is Claim.LEMMA22:
        return check_lemma_2_2(p, n)
    if claim is Claim.LEMMA31:
        return check_lemma_3_1(p, n, params["alpha"], params["a"])
    if claim is Claim.INEQ3:
        return check_inequality_3(p, n, params["alpha"], params["a"])
    if claim is Claim.DIVISIBILITY:
        return check_divisibility_step(p, n, params["alpha"], params["a"])
    if claim is Claim.THEOREM11:
        return check_theorem(p, n, HongYang(params["alpha"]))
    if claim is Claim.THEOREM12:
        return check_theorem(p, n, Main(params["alpha"], params["a"]))
    return check_corollary(p, n, params["alpha"], params["beta"], params["a"])


def _run_task(task: Task) -> VerificationRecord:
    claim, params = task
    return run_check(Claim(claim), dict(params))


def sweep_tasks(claims: Sequence[Claim], ranges: SweepRanges) -> List[Task]:
    return [
        (claim.value, tuple(params.items()))
        for claim in claims
        for params in _tasks(Claim(claim), ranges)
    ]


def sweep(
    claims: Union[Claim, Sequence[Claim]],
    ranges: SweepRanges,
    workers: Optional[int] = None,
) -> List[VerificationRecord]:
    """Run every admissible check over the Cartesian product of ``ranges``.

    Tuples outside a claim's hypotheses (or with gcd(u0, r) != 1) are skipped.
    Output is sorted by claim then (u0, r, alpha, a, beta, n, k), whatever the
    worker count.
    """
    if isinstance(claims, Claim):
        claims = [claims]
    tasks = sweep_tasks(claims, ranges)
    records = parallel_map(_run_task, tasks, workers)
    records.sort(key=VerificationRecord.sort_key)
    return records
