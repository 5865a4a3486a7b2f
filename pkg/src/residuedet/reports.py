"""Serialization of check reports: JSONL records (authoritative) and CSV export.

Record schema (one JSON object per line):

    p           int     prime under test (0 for the global property claim)
    k           int     divisor parameter (0 when the claim has none)
    claim       str     one of theorem_suite.CLAIM_IDS
    status      str     PASS | FAIL | SKIP | FATAL
    witnesses   {str: str}  named integers, decimal-encoded (bigint safe)
    elapsed_ms  int
    g           int     optional: primitive root used
    reason      str     optional: violated hypothesis or failure description

CSV export flattens witnesses into w_<name> columns and truncates values over
40 digits with an overflow marker; the JSONL file stays authoritative.
"""

from __future__ import annotations

import csv
import json

from .theorem_suite import CLAIM_IDS, CheckReport

CSV_DIGIT_LIMIT = 40

_STATUSES = ("PASS", "FAIL", "SKIP", "FATAL")


def report_to_record(report: CheckReport) -> dict:
    rec = {
        "p": report.p,
        "k": report.k,
        "claim": report.claim,
        "status": report.status,
        "witnesses": {name: str(value) for name, value in sorted(report.witnesses.items())},
        "elapsed_ms": report.elapsed_ms,
    }
    if report.g is not None:
        rec["g"] = report.g
    if report.reason is not None:
        rec["reason"] = report.reason
    return rec


def record_to_report(rec: dict) -> CheckReport:
    validate_record(rec)
    return CheckReport(
        claim=rec["claim"],
        p=rec["p"],
        k=rec["k"],
        status=rec["status"],
        witnesses={name: int(value) for name, value in rec["witnesses"].items()},
        reason=rec.get("reason"),
        elapsed_ms=rec["elapsed_ms"],
        g=rec.get("g"),
    )


def validate_record(rec: dict) -> None:
    """Raise ValueError unless rec matches the documented schema."""
    for field, kind in (("p", int), ("k", int), ("claim", str), ("status", str),
                        ("witnesses", dict), ("elapsed_ms", int)):
        if field not in rec:
            raise ValueError(f"record is missing field {field!r}")
        if not isinstance(rec[field], kind):
            raise ValueError(f"field {field!r} must be {kind.__name__}")
    if rec["claim"] not in CLAIM_IDS:
        raise ValueError(f"unknown claim {rec['claim']!r}")
    if rec["status"] not in _STATUSES:
        raise ValueError(f"unknown status {rec['status']!r}")
    for name, value in rec["witnesses"].items():
        if not isinstance(name, str) or not isinstance(value, str):
            raise ValueError("witnesses must map str -> str")
        int(value)  # must parse as a (possibly huge) decimal integer
    if "g" in rec and not isinstance(rec["g"], int):
        raise ValueError("field 'g' must be int")
    if "reason" in rec and not isinstance(rec["reason"], str):
        raise ValueError("field 'reason' must be str")


def record_line(rec: dict) -> str:
    """Canonical single-line encoding (stable key order, no whitespace)."""
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


def canonical_sort_key(rec: dict):
    """(p, k, claim, mu) ordering; mu separates the shifted-circulant records."""
    mu = int(rec["witnesses"].get("mu", "0")) if isinstance(rec.get("witnesses"), dict) else 0
    return (rec["p"], rec["k"], rec["claim"], mu)


def write_jsonl(records: list[dict], path: str, append: bool = True) -> None:
    with open(path, "a" if append else "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(record_line(rec) + "\n")


def read_jsonl(path: str) -> list[dict]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            validate_record(rec)
            records.append(rec)
    return records


def _csv_value(value: str) -> str:
    if len(value.lstrip("-")) > CSV_DIGIT_LIMIT:
        return f"{value[:CSV_DIGIT_LIMIT]}<overflow:{len(value.lstrip('-'))} digits>"
    return value


def export_csv(records: list[dict], path: str) -> None:
    """Flatten records to CSV; witnesses become w_<name> columns."""
    names = sorted({name for rec in records for name in rec["witnesses"]})
    fields = ["p", "k", "claim", "status", "g", "elapsed_ms", "reason"] + [
        f"w_{name}" for name in names
    ]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        for rec in records:
            row = {
                "p": rec["p"],
                "k": rec["k"],
                "claim": rec["claim"],
                "status": rec["status"],
                "g": rec.get("g", ""),
                "elapsed_ms": rec["elapsed_ms"],
                "reason": rec.get("reason", ""),
            }
            for name, value in rec["witnesses"].items():
                row[f"w_{name}"] = _csv_value(value)
            writer.writerow(row)


def summary_counts(records: list[dict]) -> dict[str, dict[str, int]]:
    """Per-claim counts of each status."""
    table: dict[str, dict[str, int]] = {}
    for rec in records:
        row = table.setdefault(rec["claim"], {s: 0 for s in _STATUSES})
        row[rec["status"]] += 1
    return table


def format_summary(records: list[dict]) -> str:
    table = summary_counts(records)
    lines = [f"{'claim':<18}{'PASS':>7}{'FAIL':>7}{'SKIP':>7}{'FATAL':>7}"]
    for claim in CLAIM_IDS:
        if claim not in table:
            continue
        row = table[claim]
        lines.append(
            f"{claim:<18}{row['PASS']:>7}{row['FAIL']:>7}{row['SKIP']:>7}{row['FATAL']:>7}"
        )
    total = {s: sum(row[s] for row in table.values()) for s in _STATUSES}
    lines.append(
        f"{'total':<18}{total['PASS']:>7}{total['FAIL']:>7}{total['SKIP']:>7}{total['FATAL']:>7}"
    )
    return "\n".join(lines)
