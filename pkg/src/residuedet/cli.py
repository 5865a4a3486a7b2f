"""Command-line front end.

Subcommands:

    verify   run claims for a single (p, k)
    sweep    run claims over a prime range, with optional parallelism
    counts   print the curve traces for one (p, k), both backends
    export   convert a JSONL results file to CSV

Exit codes: 0 all PASS/SKIP, 1 FAIL present, 2 usage error, 3 FATAL present.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import reports as rp
from . import sweep as sw
from . import theorem_suite as ts
from .curve_counts import count_naive, curve_counts, family_poly, trace_from_count
from .modular import is_prime

USAGE_ERROR = 2

# Claims that only run when explicitly requested (not tied to a single (p, k)).
_EXPLICIT_ONLY = ("CARLITZ_FMU", "LEMMA_2_1")


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE_ERROR


def _parse_claims(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    names = tuple(name.strip().upper() for name in text.split(",") if name.strip())
    unknown = [n for n in names if n not in ts.CLAIM_IDS]
    if unknown:
        raise ValueError(f"unknown claims {unknown}; valid: {', '.join(ts.CLAIM_IDS)}")
    return names


def _parse_k_filter(text: str | None) -> tuple[int, ...] | None:
    if text is None or text.lower() == "all":
        return None
    return tuple(int(v) for v in text.split(",") if v.strip())


def _validate_pk(p: int, k: int | None, skip_primality: bool) -> str | None:
    if p < 3 or p % 2 == 0:
        return f"{p} is not an odd prime"
    if not skip_primality and not is_prime(p):
        return f"{p} is not prime"
    if k is not None:
        if k < 2:
            return f"k must be >= 2, got {k}"
        if (p - 1) % k != 0:
            return f"k = {k} does not divide p - 1 = {p - 1}"
    return None


def _render_reports(reports: list[ts.CheckReport]) -> str:
    lines = [f"{'claim':<18}{'p':>6}{'k':>5}  {'status':<7}{'ms':>6}  details"]
    for r in reports:
        wit = " ".join(f"{name}={value}" for name, value in sorted(r.witnesses.items()))
        if len(wit) > 70:
            wit = wit[:67] + "..."
        detail = wit if r.reason is None else f"{wit + ' ' if wit else ''}[{r.reason}]"
        lines.append(f"{r.claim:<18}{r.p:>6}{r.k:>5}  {r.status:<7}{r.elapsed_ms:>6}  {detail}")
    return "\n".join(lines)


def _persist(reports: list[ts.CheckReport], out: str | None, fmt: str) -> None:
    if out is None:
        return
    records = [rp.report_to_record(r) for r in reports]
    if fmt == "csv":
        rp.export_csv(records, out)
    else:
        rp.write_jsonl(records, out)


def _auto_claims(p: int, k: int) -> list[tuple[str, int]]:
    """Claims applicable at a single (p, k) when none were requested."""
    selected = []
    for claim in ts.CLAIM_IDS:
        if claim in _EXPLICIT_ONLY:
            continue
        if claim in ("COR_1_I", "COR_1_II", "REMARK_PRIME_LIST") and k != 3:
            continue
        if ts.hypothesis_gap(claim, p, k) is None:
            selected.append((claim, k))
    return selected


def cmd_verify(args) -> int:
    problem = _validate_pk(args.p, args.k, args.skip_primality_check)
    if problem:
        return _fail_usage(problem)
    try:
        requested = _parse_claims(args.claims)
    except ValueError as exc:
        return _fail_usage(str(exc))

    ctx = ts.PrimeContext(args.p, check_primality=False)
    reports: list[ts.CheckReport] = []
    if requested is None:
        for claim, k in _auto_claims(args.p, args.k):
            reports.append(ts.run_claim(ctx, claim, k, seed=args.seed))
    else:
        for claim in requested:
            if claim == "LEMMA_2_1":
                reports.append(ts.verify_lemma_2_1_random(seed=args.seed))
            elif claim == "CARLITZ_FMU":
                reports.extend(
                    ts.run_claim(ctx, claim, mu=mu, seed=args.seed)
                    for mu in ts.CARLITZ_MU_SET
                )
            else:
                reports.append(ts.run_claim(ctx, claim, args.k, seed=args.seed))
    reports.sort(key=sw.report_sort_key)
    print(_render_reports(reports))
    _persist(reports, args.out, args.format)
    return sw.worst_exit_code(reports)


def cmd_sweep(args) -> int:
    try:
        claims = _parse_claims(args.claims) or ts.CLAIM_IDS
        cfg = sw.SweepConfig(
            p_min=args.p_min,
            p_max=args.p_max,
            claims=claims,
            k_filter=_parse_k_filter(args.k),
            jobs=args.jobs,
            seed=args.seed,
            exact_cap=args.exact_cap,
            modp_cap=args.modp_cap,
            bp_cap=args.bp_cap,
            carlitz_cap=args.carlitz_cap,
            check_primality=not args.skip_primality_check,
        )
        cfg.validate()
    except ValueError as exc:
        return _fail_usage(str(exc))

    reports = sw.run_sweep(cfg)
    records = [rp.report_to_record(r) for r in reports]
    if args.out:
        if args.format == "csv":
            rp.export_csv(records, args.out)
        else:
            rp.write_jsonl(records, args.out)
        print(f"wrote {len(records)} records to {args.out}")
    print(rp.format_summary(records))
    return sw.worst_exit_code(reports)


def cmd_counts(args) -> int:
    problem = _validate_pk(args.p, args.k, args.skip_primality_check)
    if problem:
        return _fail_usage(problem)
    p, k = args.p, args.k
    cnt = curve_counts(p, k, check=False)
    families = [("a", cnt.a), ("b", cnt.b)]
    if k % 2 == 1:
        families += [("c", cnt.c), ("d", cnt.d)]
    agree = True
    print(f"p={p} k={k}" + (f" g={cnt.g_used}" if cnt.g_used is not None else ""))
    for family, value in families:
        naive = trace_from_count(count_naive(family_poly(family, p, k, cnt.g_used), p), p)
        ok = naive == value
        agree &= ok
        print(f"  {family}: char-sum {value:>8}  naive {naive:>8}  {'agree' if ok else 'MISMATCH'}")
    if not agree:
        print("backends disagree", file=sys.stderr)
        return 3
    return 0


def cmd_export(args) -> int:
    try:
        records = rp.read_jsonl(args.results)
    except (OSError, ValueError) as exc:
        return _fail_usage(f"cannot read {args.results}: {exc}")
    if args.format != "csv":
        return _fail_usage("export supports --format csv only")
    rp.export_csv(records, args.out)
    print(f"wrote {len(records)} rows to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="residuedet",
        description="Exact verification of power-residue determinant identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_jobs = int(os.environ.get("RESIDUE_DET_JOBS", "1"))

    def common(sp, with_k=True):
        sp.add_argument("--p", type=int, required=True, help="odd prime modulus")
        if with_k:
            sp.add_argument("--k", type=int, required=True, help="divisor of p-1, k >= 2")
        sp.add_argument("--skip-primality-check", action="store_true",
                        help="trust that --p is prime")

    sp = sub.add_parser("verify", help="run claims for a single (p, k)")
    common(sp)
    sp.add_argument("--claims", help="comma-separated claim ids (default: all applicable)")
    sp.add_argument("--seed", type=int, default=ts.DEFAULT_SEED)
    sp.add_argument("--out", help="also write records to this file")
    sp.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="run claims over a prime range")
    sp.add_argument("--p-min", type=int, default=3)
    sp.add_argument("--p-max", type=int, default=sw.DEFAULT_EXACT_CAP)
    sp.add_argument("--k", help="comma-separated k filter (default: all divisors)")
    sp.add_argument("--claims", help="comma-separated claim ids (default: all)")
    sp.add_argument("--jobs", type=int, default=default_jobs,
                    help="worker processes (env RESIDUE_DET_JOBS)")
    sp.add_argument("--seed", type=int, default=ts.DEFAULT_SEED)
    sp.add_argument("--out", help="results file (JSONL appends)")
    sp.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    sp.add_argument("--exact-cap", type=int, default=sw.DEFAULT_EXACT_CAP,
                    help="largest p for exact-determinant claims")
    sp.add_argument("--modp-cap", type=int, default=sw.DEFAULT_MODP_CAP,
                    help="largest p for mod-p claims")
    sp.add_argument("--bp-cap", type=int, default=sw.DEFAULT_BP_CAP,
                    help="largest p for the (p-1)-dimensional inverse matrix claim")
    sp.add_argument("--carlitz-cap", type=int, default=sw.DEFAULT_CARLITZ_CAP,
                    help="largest p for the characteristic-polynomial claim")
    sp.add_argument("--skip-primality-check", action="store_true")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("counts", help="print curve traces from both backends")
    common(sp)
    sp.set_defaults(func=cmd_counts)

    sp = sub.add_parser("export", help="convert a JSONL results file to CSV")
    sp.add_argument("results", help="input JSONL file")
    sp.add_argument("--out", required=True, help="output CSV file")
    sp.add_argument("--format", choices=("csv",), default="csv")
    sp.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
