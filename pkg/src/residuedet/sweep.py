"""Prime-sweep scheduler: run claim checks over a prime range, optionally in parallel.

Work is partitioned per prime so that claims sharing a determinant reuse one
PrimeContext.  Results are merged and sorted by (p, k, claim, mu), which makes
the record set independent of worker count and scheduling order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .theorem_suite import (
    CARLITZ_MU_SET,
    CLAIM_IDS,
    DEFAULT_LEMMA_TRIALS,
    DEFAULT_SEED,
    FATAL,
    CheckReport,
    PrimeContext,
    admissible_k,
    run_claim,
)

# Claims bounded by the exact-determinant cap vs the mod-p cap; the remaining
# two have their own caps (matrix dimension p-1 or exact char-poly cost).
EXACT_CLAIMS = ("THM_A_I", "THM_A_II", "THM_B_I", "THM_B_II", "COR_1_I", "COR_1_II",
                "COR_2", "SUN_S1P")
MODP_CLAIMS = ("THM_C", "REMARK_PRIME_LIST", "SUN_AP")

DEFAULT_EXACT_CAP = 600
DEFAULT_MODP_CAP = 3000
DEFAULT_BP_CAP = 200
DEFAULT_CARLITZ_CAP = 13


@dataclass(frozen=True)
class SweepConfig:
    p_min: int = 3
    p_max: int = DEFAULT_EXACT_CAP
    claims: tuple[str, ...] = CLAIM_IDS
    k_filter: tuple[int, ...] | None = None
    jobs: int = 1
    seed: int = DEFAULT_SEED
    lemma_trials: int = DEFAULT_LEMMA_TRIALS
    exact_cap: int = DEFAULT_EXACT_CAP
    modp_cap: int = DEFAULT_MODP_CAP
    bp_cap: int = DEFAULT_BP_CAP
    carlitz_cap: int = DEFAULT_CARLITZ_CAP
    check_primality: bool = True

    def validate(self) -> None:
        if self.p_min < 3:
            raise ValueError(f"p_min must be >= 3, got {self.p_min}")
        if self.p_max < self.p_min:
            raise ValueError(f"p_max = {self.p_max} is below p_min = {self.p_min}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        unknown = set(self.claims) - set(CLAIM_IDS)
        if unknown:
            raise ValueError(f"unknown claims: {sorted(unknown)}")


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], by sieve."""
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(max(lo, 2), hi + 1) if sieve[i]]


def _claim_cap(claim: str, cfg: SweepConfig) -> int:
    if claim in EXACT_CLAIMS:
        return cfg.exact_cap
    if claim in MODP_CLAIMS:
        return cfg.modp_cap
    if claim == "SUN_BP":
        return cfg.bp_cap
    if claim == "CARLITZ_FMU":
        return cfg.carlitz_cap
    return cfg.p_max


def prime_work_items(cfg: SweepConfig, p: int) -> list[tuple[str, int, int | None]]:
    """The (claim, k, mu) triples to check at p under the config's caps."""
    items: list[tuple[str, int, int | None]] = []
    for claim in cfg.claims:
        if claim == "LEMMA_2_1" or p > _claim_cap(claim, cfg):
            continue
        if claim == "CARLITZ_FMU":
            items.extend((claim, 0, mu) for mu in CARLITZ_MU_SET)
            continue
        for k in admissible_k(claim, p):
            if k > 0 and cfg.k_filter is not None and k not in cfg.k_filter:
                continue
            items.append((claim, k, None))
    return items


def _run_prime_task(args) -> list[CheckReport]:
    cfg, p, items = args
    try:
        ctx = PrimeContext(p, check_primality=cfg.check_primality)
    except ValueError as exc:
        return [CheckReport("THM_A_I", p, 0, FATAL, {}, f"bad prime: {exc}")]
    reports = []
    for claim, k, mu in items:
        try:
            reports.append(run_claim(ctx, claim, k, mu=mu,
                                      seed=cfg.seed, trials=cfg.lemma_trials))
        except Exception as exc:  # keep the sweep going; record the wreckage
            reports.append(CheckReport(claim, p, k, FATAL, {}, f"unhandled: {exc!r}"))
    return reports


def report_sort_key(report: CheckReport):
    return (report.p, report.k, report.claim, report.witnesses.get("mu", 0))


def run_sweep(cfg: SweepConfig) -> list[CheckReport]:
    """Execute the sweep and return reports sorted canonically.

    The sorted report list is a pure function of the config: worker count
    affects scheduling only.
    """
    cfg.validate()
    tasks = []
    for p in primes_in(cfg.p_min, cfg.p_max):
        items = prime_work_items(cfg, p)
        if items:
            tasks.append((cfg, p, items))

    reports: list[CheckReport] = []
    if cfg.jobs == 1:
        for task in tasks:
            reports.extend(_run_prime_task(task))
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            for chunk in pool.map(_run_prime_task, tasks, chunksize=4):
                reports.extend(chunk)

    if "LEMMA_2_1" in cfg.claims:
        reports.append(run_claim(None, "LEMMA_2_1", seed=cfg.seed, trials=cfg.lemma_trials))

    reports.sort(key=report_sort_key)
    return reports


def worst_exit_code(reports: list[CheckReport]) -> int:
    """0 when every report is PASS/SKIP, 1 when FAIL is present, 3 on FATAL."""
    statuses = {r.status for r in reports}
    if FATAL in statuses:
        return 3
    if "FAIL" in statuses:
        return 1
    return 0
