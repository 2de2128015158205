"""Command-line front end: ``aplcm {compute,verify,search,scan}``.

Exit codes: 0 success, 1 usage or invalid input, 2 a checked claim failed,
3 internal contradiction (an arithmetic result the theory rules out).
Every exact integer is written as a decimal string and every ratio as "p/q".
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import warnings
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, TextIO

from . import bounds, search, verifier
from .core import Progression, threshold_index
from .errors import InternalContradiction, InvalidInputError
from .lcm import decompose, lcm_range, prefix_lcms

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2
EXIT_CONTRADICTION = 3

FORMATS = ("human", "csv", "jsonl")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


_RANGE_ITEM = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


def parse_range(text: str) -> List[int]:
    """Parse "7", "1..50" (inclusive) or comma-separated mixes like "1..3,9".

    "5..4" is a valid empty range.
    """
    out: List[int] = []
    if not text.strip():
        return out
    for part in text.split(","):
        m = _RANGE_ITEM.match(part)
        if not m:
            raise argparse.ArgumentTypeError(f"malformed range {text!r}")
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) is not None else lo
        out.extend(range(lo, hi + 1))
    return sorted(set(out))


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


class Emitter:
    """Writes rows in one of the three output formats."""

    def __init__(self, fmt: str, out: TextIO, columns: Sequence[str]):
        self.fmt = fmt
        self.out = out
        self.columns = list(columns)
        self._csv = None
        if fmt == "csv":
            self._csv = csv.writer(out, lineterminator="\n")
            self._csv.writerow(self.columns)

    def row(self, values: Dict[str, object], json_obj: Optional[dict] = None) -> None:
        if self.fmt == "csv":
            self._csv.writerow(["" if values.get(c) is None else _fmt(values[c]) for c in self.columns])
        elif self.fmt == "jsonl":
            obj = json_obj if json_obj is not None else {c: _fmt(values[c]) for c in self.columns if values.get(c) is not None}
            self.out.write(json.dumps(obj, separators=(",", ":")) + "\n")
        else:
            parts = [f"{c}={_fmt(values[c])}" for c in self.columns if values.get(c) not in (None, "")]
            self.out.write("  ".join(parts) + "\n")


# --- compute -----------------------------------------------------------------


def cmd_compute(args, out: TextIO) -> int:
    p = Progression(args.u0, args.r)
    if args.n < 0:
        raise InvalidInputError("n must be >= 0")
    k = 0 if args.k is None else args.k
    d = decompose(p, args.n, k)
    kn = threshold_index(p, args.n) if args.n >= 1 else None
    values = {"u0": p.u0, "r": p.r, "n": args.n, "k": k, "L": d.l, "C": d.c, "A": d.a, "k_n": kn}
    Emitter(args.format, out, list(values)).row(values)
    return EXIT_OK


# --- verify ------------------------------------------------------------------

_VERIFY_COLUMNS = ["claim", *verifier.PARAM_ORDER, "holds", "witnesses"]


def _record_json(rec: verifier.VerificationRecord) -> dict:
    return {
        "claim": rec.claim.value,
        "params": {k: _fmt(rec.params[k]) for k in verifier.PARAM_ORDER if k in rec.params},
        "holds": rec.holds,
        "witnesses": {k: _fmt(v) for k, v in rec.witnesses.items()},
    }


def cmd_verify(args, out: TextIO, err: TextIO) -> int:
    claims = list(verifier.Claim) if args.claim == "all" else [verifier.Claim(args.claim)]
    ranges = verifier.SweepRanges(
        u0=args.u0, r=args.r, n=args.n, alpha=args.alpha, a=args.a, beta=args.beta,
        k=args.k, n_extra=args.n_extra,
    )
    records = verifier.sweep(claims, ranges, workers=args.workers)
    em = Emitter(args.format, out, _VERIFY_COLUMNS)
    for rec in records:
        values = {"claim": rec.claim.value, **rec.params, "holds": rec.holds,
                  "witnesses": ";".join(f"{k}={_fmt(v)}" for k, v in rec.witnesses.items())}
        em.row(values, _record_json(rec))
    failed = sum(not rec.holds for rec in records)
    summary = f"checked {len(records)} records: {len(records) - failed} hold, {failed} fail"
    print(summary, file=out if args.format == "human" else err)
    return EXIT_REFUTED if failed else EXIT_OK


# --- search ------------------------------------------------------------------

_SEARCH_COLUMNS = ["type", "alpha", "r", "u0", "n", "l_n", "bound", "violation", "coprime"]


def cmd_search(args, out: TextIO, err: TextIO) -> int:
    em = Emitter(args.format, out, _SEARCH_COLUMNS)
    if args.probe is not None:
        try:
            u0, r, alpha, n = (int(x) for x in args.probe.split(","))
        except ValueError:
            raise UsageError(f"--probe expects u0,r,alpha,n; got {args.probe!r}") from None
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            ce = search.probe(u0, r, alpha, n)
        for w in caught:
            print(f"warning: {w.message}", file=err)
        l_n = lcm_range(Progression._unchecked(u0, r), n, 0)
        bound = bounds.raw_bound(u0, r, n, alpha)
        em.row({"type": "probe", "alpha": alpha, "r": r, "u0": u0, "n": n, "l_n": l_n,
                "bound": bound, "violation": ce is not None, "coprime": gcd(u0, r) == 1})
        return EXIT_OK
    pairs = sorted(search.tight_pairs(args.alpha_max, args.r_max))
    for alpha, r in pairs:
        em.row({"type": "tight_pair", "alpha": alpha, "r": r})
    found = search.full_search(args.alpha_max, args.r_max, workers=args.workers)
    for c in found:
        em.row({"type": "counterexample", "alpha": c.alpha, "r": c.r, "u0": c.u0, "n": c.n,
                "l_n": c.l_n, "bound": c.bound, "violation": True, "coprime": c.coprime})
    summary = f"{len(pairs)} tight pairs, {len(found)} counterexamples"
    print(summary, file=out if args.format == "human" else err)
    return EXIT_OK


# --- scan --------------------------------------------------------------------

_SCAN_COLUMNS = [
    "n", "L_n_bits", "hongyang_bits", "main_bits", "L_ge_hongyang", "L_ge_main",
    "hongyang_hypothesis", "main_hypothesis", "verdict",
]


def scan_rows(p: Progression, alpha: int, a: int, n_max: int) -> Iterable[Dict[str, object]]:
    hy = bounds.HongYang(alpha)
    main = bounds.Main(alpha, a)
    for n, l_n in enumerate(prefix_lcms(p, n_max)):
        if n == 0:
            continue
        hy_bound = bounds.raw_bound(p.u0, p.r, n, hy.exponent)
        main_bound = bounds.raw_bound(p.u0, p.r, n, main.exponent)
        main_hyp = bounds.hypothesis_holds(p, n, main)
        yield {
            "n": n,
            "L_n_bits": l_n.bit_length(),
            "hongyang_bits": hy_bound.bit_length(),
            "main_bits": main_bound.bit_length(),
            "L_ge_hongyang": l_n >= hy_bound,
            "L_ge_main": l_n >= main_bound,
            "hongyang_hypothesis": bounds.hypothesis_holds(p, n, hy),
            "main_hypothesis": main_hyp,
            "verdict": (l_n >= main_bound) if main_hyp else "",
        }


def cmd_scan(args, out: TextIO, err: TextIO) -> int:
    p = Progression(args.u0, args.r)
    em = Emitter(args.format, out, _SCAN_COLUMNS)
    refuted = False
    for row in scan_rows(p, args.alpha, args.a, args.n_max):
        em.row(row)
        refuted = refuted or row["verdict"] is False
    return EXIT_REFUTED if refuted else EXIT_OK


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aplcm", description="LCM of arithmetic progressions and its lower bounds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, default="human"):
        sp.add_argument("--format", choices=FORMATS, default=default)
        sp.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $WORKERS or all cores)")

    c = sub.add_parser("compute", help="L_{n,k}, C_{n,k}, A_{n,k} and k_n")
    c.add_argument("--u0", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int)
    fmt(c)

    v = sub.add_parser("verify", help="check a claim over parameter ranges")
    v.add_argument("claim", choices=[cl.value for cl in verifier.Claim] + ["all"])
    for name in ("u0", "r", "n", "alpha", "a", "beta"):
        v.add_argument(f"--{name}", type=parse_range, default=[], metavar="RANGE")
    v.add_argument("--k", type=parse_range, default=None, metavar="RANGE",
                   help="lemma21 only; default every 0..n")
    v.add_argument("--n-extra", type=int, default=None, metavar="K",
                   help="use n in [threshold, threshold+K] for threshold-anchored claims")
    fmt(v)

    s = sub.add_parser("search", help="boundary counterexamples at n = r^alpha")
    s.add_argument("--alpha-max", type=int, default=search.DEFAULT_ALPHA_MAX)
    s.add_argument("--r-max", type=int, default=search.DEFAULT_R_MAX)
    s.add_argument("--probe", metavar="U0,R,ALPHA,N")
    fmt(s)

    sc = sub.add_parser("scan", help="bit-length growth of L_n against both bounds")
    sc.add_argument("--u0", type=int, required=True)
    sc.add_argument("--r", type=int, required=True)
    sc.add_argument("--alpha", type=int, required=True)
    sc.add_argument("--a", type=int, default=2)
    sc.add_argument("--n-max", type=int, required=True)
    fmt(sc, default="csv")
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.workers is not None and args.workers < 1:
            raise UsageError("--workers must be >= 1")
        if args.command == "compute":
            return cmd_compute(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        if args.command == "search":
            return cmd_search(args, out, err)
        return cmd_scan(args, out, err)
    except InternalContradiction as e:
        print(f"internal contradiction: {e}", file=err)
        return EXIT_CONTRADICTION
    except (InvalidInputError, UsageError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
