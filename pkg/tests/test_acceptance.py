"""Exit criteria. One test per criterion; a PASS/FAIL line per test is printed
in the terminal summary (see conftest.py)."""

import io
import random
import time
import warnings
from math import gcd

import pytest

from aplcm import (
    Claim,
    Counterexample,
    HongYang,
    Progression,
    SweepRanges,
    bound_value,
    full_search,
    lcm_range,
    probe,
    sweep,
    tight_pairs,
)
from aplcm.bounds import raw_bound
from aplcm.cli import main
from aplcm.lcm import _raw_lcm_range
from aplcm.search import NonCoprimeWarning
from oracles import lcm_by_prime_exponents, terms, tight_pairs_by_enumeration


def best_time(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return result, best


def timed(fn):
    t0 = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - t0


def test_criterion_01_golden_315_lt_324():
    def compute():
        p = Progression(1, 2)
        return lcm_range(p, 4), bound_value(p, 4, HongYang(2))

    (l4, bound), elapsed = best_time(compute)
    print(f"criterion 1: L_4={l4} bound={bound} in {elapsed * 1e3:.3f} ms")
    assert l4 == 315 and bound == 324 and l4 < bound
    assert elapsed < 1e-3


def test_criterion_02_golden_5040_lt_104976_flagged():
    def compute():
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            ce = probe(2, 2, 3, 8)
        return _raw_lcm_range(2, 2, 8), raw_bound(2, 2, 8, 3), ce, caught

    (l8, bound, ce, caught), elapsed = best_time(compute)
    print(f"criterion 2: L_8={l8} bound={bound} in {elapsed * 1e3:.3f} ms")
    assert l8 == 5040 and bound == 104976 and l8 < bound
    assert ce is not None and not ce.coprime
    assert any(issubclass(w.category, NonCoprimeWarning) for w in caught)
    assert elapsed < 1e-3


def test_criterion_03_search_finds_unique_counterexample():
    found, elapsed = timed(full_search)
    print(f"criterion 3: {found} in {elapsed:.2f} s")
    assert found == [Counterexample(1, 2, 2, 4, 315, 324)]
    assert elapsed < 10


def test_criterion_04_three_tight_pairs():
    pairs, elapsed = timed(lambda: tight_pairs(10, 10))
    oracle = tight_pairs_by_enumeration(10, 10)
    print(f"criterion 4: {sorted(pairs)} in {elapsed * 1e3:.2f} ms")
    assert len(pairs) == 3 and pairs == oracle
    assert elapsed < 1


def test_criterion_05_cofactor_integral():
    ranges = SweepRanges(u0=range(1, 21), r=range(1, 7), n=range(0, 61))
    records, elapsed = timed(lambda: sweep(Claim.LEMMA21, ranges))
    expected = sum(61 * 62 // 2 for u0 in range(1, 21) for r in range(1, 7) if gcd(u0, r) == 1)
    bad = [
        r for r in records
        if not (r.holds and r.witnesses["A_{n,k}"] >= 1
                and r.witnesses["L_{n,k}"] == r.witnesses["C_{n,k}"] * r.witnesses["A_{n,k}"])
    ]
    print(f"criterion 5: {len(records)} instances, {len(bad)} failures in {elapsed:.1f} s")
    assert len(records) == expected
    assert not bad
    assert elapsed < 60


def test_criterion_06_lemma_2_2_chain():
    ranges = SweepRanges(u0=range(1, 31), r=range(1, 6), n=range(1, 101))
    records, elapsed = timed(lambda: sweep(Claim.LEMMA22, ranges))
    failures = sum(not r.holds for r in records)
    print(f"criterion 6: {len(records)} instances, {failures} failures in {elapsed:.1f} s")
    assert len(records) == 100 * sum(1 for u0 in range(1, 31) for r in range(1, 6) if gcd(u0, r) == 1)
    assert failures == 0
    assert elapsed < 120


SWEEP_7 = SweepRanges(u0=range(1, 51), r=range(2, 9), alpha=range(2, 9), a=range(2, 9), n_extra=20)


def _expected_sweep_7_count():
    count = 0
    for r in range(2, 9):
        for alpha in range(2, 9):
            for a in range(2, min(alpha, r) + 1):
                count += 21 * sum(1 for u0 in range(1, 51) if gcd(u0, r) == 1)
    return count


def test_criterion_07_lemma_3_1_and_divisibility():
    records, elapsed = timed(lambda: sweep([Claim.LEMMA31, Claim.DIVISIBILITY], SWEEP_7))
    expected = _expected_sweep_7_count()
    failures = sum(not r.holds for r in records)
    print(f"criterion 7: {len(records)} instances, {failures} failures in {elapsed:.1f} s")
    assert len(records) == 2 * expected
    assert failures == 0
    assert elapsed < 600


def test_criterion_08_theorem_1_2():
    records = sweep(Claim.THEOREM12, SWEEP_7)
    failures = [r for r in records if not r.holds or r.witnesses["L_n"] < r.witnesses["bound"]]
    print(f"criterion 8: {len(records)} instances, {len(failures)} failures")
    assert len(records) == _expected_sweep_7_count()
    assert not failures


def test_criterion_09_fold_matches_prime_exponent_oracle():
    rng = random.Random(0xA9C)
    mismatches = 0
    done = 0
    while done < 10_000:
        r = rng.randint(1, 6)
        u0 = rng.randint(1, 20)
        if gcd(u0, r) != 1:
            continue
        n = rng.randint(0, 60)
        k = rng.randint(0, n)
        if lcm_range(Progression(u0, r), n, k) != lcm_by_prime_exponents(terms(u0, r, n, k)):
            mismatches += 1
        done += 1
    print(f"criterion 9: {done} instances, {mismatches} mismatches")
    assert mismatches == 0


DETERMINISM_COMMANDS = [
    ["verify", "all", "--u0", "1..12", "--r", "1..5", "--n", "0..20", "--alpha", "1..5",
     "--a", "2..4", "--beta", "1..2", "--n-extra", "6", "--format", "csv"],
    ["verify", "lemma31", "--r", "2..8", "--alpha", "2..8", "--a", "2", "--u0", "1..50",
     "--n-extra", "20", "--format", "jsonl"],
    ["search", "--format", "csv"],
    ["search", "--format", "jsonl", "--alpha-max", "6", "--r-max", "6"],
    ["scan", "--u0", "1", "--r", "2", "--alpha", "2", "--a", "2", "--n-max", "60"],
    ["scan", "--u0", "3", "--r", "5", "--alpha", "3", "--a", "3", "--n-max", "60", "--format", "jsonl"],
]


@pytest.mark.parametrize(
    "argv",
    DETERMINISM_COMMANDS,
    ids=["verify-all-csv", "verify-lemma31-jsonl", "search-csv", "search-jsonl", "scan-csv", "scan-jsonl"],
)
def test_criterion_10_output_independent_of_workers(argv, monkeypatch):
    outputs = {}
    for w in ("1", "4"):
        monkeypatch.setenv("WORKERS", w)
        out = io.StringIO()
        code = main(argv, out=out, err=io.StringIO())
        outputs[w] = (code, out.getvalue().encode())
    print(f"criterion 10 [{' '.join(argv[:2])}]: {len(outputs['1'][1])} bytes, identical={outputs['1'] == outputs['4']}")
    assert outputs["1"][0] == 0
    assert outputs["1"][1]
    assert outputs["1"] == outputs["4"]
