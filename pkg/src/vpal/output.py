"""Structured output records and the jsonl/csv/bfile serializers.

Every record is a flat dict with "schema_version" and "kind" keys.  jsonl
streams may mix kinds; csv and bfile require a homogeneous stream.  Integers
are rendered as full decimal strings in every format and floats with repr
precision, so records round-trip losslessly.
"""

import csv
import json

from .anchors import AnchorResult, VerificationReport
from .errors import DomainError, HeterogeneousRecords
from .heuristic import HeuristicReport
from .palindromes import VPalindromeHit

SCHEMA_VERSION = "1"

_CSV_FIELDS = {
    "v_palindrome": ("n", "reversal", "shared_v", "base"),
    "check": ("n", "base", "is_v_palindrome", "reversal", "shared_v"),
    "scalar": ("operation", "operand", "base", "value"),
    "anchor": ("m", "p", "q", "p_status", "p_certainty", "q_status",
               "q_certainty", "meets_floor", "is_candidate"),
    "verification": ("bound", "brute_force_hits", "characterization_hits",
                     "consistent"),
    "heuristic_term": ("n", "C", "probability", "envelope", "partial_sum",
                       "envelope_partial_sum"),
    "heuristic_summary": ("C", "n_start", "N", "partial_sum", "envelope_sum",
                          "tail_bound"),
}

# Field holding the integer a bfile line reports, per kind.
_BFILE_FIELD = {"v_palindrome": "n", "scalar": "value"}


def _record(kind: str, **fields) -> dict:
    rec = {"schema_version": SCHEMA_VERSION, "kind": kind}
    rec.update(fields)
    return rec


def hit_record(hit: VPalindromeHit) -> dict:
    return _record("v_palindrome", n=hit.n, reversal=hit.reversal,
                   shared_v=hit.shared_v, base=hit.base)


def check_record(n: int, base: int, reversal, hit) -> dict:
    return _record(
        "check",
        n=n,
        base=base,
        is_v_palindrome=hit is not None,
        reversal=reversal,
        shared_v=None if hit is None else hit.shared_v,
    )


def scalar_record(operation: str, operand: int, value, base=None) -> dict:
    return _record("scalar", operation=operation, operand=operand,
                   base=base, value=value)


def anchor_record(res: AnchorResult) -> dict:
    return _record(
        "anchor",
        m=res.m,
        p=res.p,
        q=res.q,
        p_status=res.p_verdict.status,
        p_certainty=res.p_verdict.certainty,
        q_status=res.q_verdict.status,
        q_certainty=res.q_verdict.certainty,
        meets_floor=res.meets_floor,
        is_candidate=res.is_candidate,
    )


def verification_record(rep: VerificationReport) -> dict:
    return _record(
        "verification",
        bound=rep.bound,
        brute_force_hits=rep.brute_force_hits,
        characterization_hits=rep.characterization_hits,
        consistent=rep.consistent,
    )


def heuristic_term_record(n: int, C: float, probability: float,
                          envelope: float, partial_sum: float,
                          envelope_partial_sum: float) -> dict:
    return _record("heuristic_term", n=n, C=C, probability=probability,
                   envelope=envelope, partial_sum=partial_sum,
                   envelope_partial_sum=envelope_partial_sum)


def heuristic_summary_record(rep: HeuristicReport) -> dict:
    return _record(
        "heuristic_summary",
        C=rep.C,
        n_start=rep.n_start,
        N=rep.N,
        partial_sum=rep.partial_sum,
        envelope_sum=rep.envelope_sum,
        tail_bound=rep.tail_bound,
    )


def _require_homogeneous(records: list[dict], fmt: str) -> str:
    kinds = {rec.get("kind") for rec in records}
    if len(kinds) > 1:
        raise HeterogeneousRecords(
            f"{fmt} output needs records of a single kind, got {sorted(map(str, kinds))}"
        )
    return next(iter(kinds))


def write_jsonl(records, stream) -> None:
    for rec in records:
        stream.write(json.dumps(rec) + "\n")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return json.dumps(value)


def write_csv(records, stream) -> None:
    records = list(records)
    if not records:
        return
    kind = _require_homogeneous(records, "csv")
    fields = _CSV_FIELDS.get(kind)
    if fields is None:
        raise DomainError(f"no csv layout for records of kind {kind!r}")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(fields)
    for rec in records:
        writer.writerow([_cell(rec.get(f)) for f in fields])


def write_bfile(records, stream) -> None:
    """OEIS b-file lines: "index value", 1-based ascending, newline-terminated."""
    records = list(records)
    if not records:
        return
    kind = _require_homogeneous(records, "bfile")
    field = _BFILE_FIELD.get(kind)
    if field is None:
        raise DomainError(f"records of kind {kind!r} have no bfile value")
    for index, rec in enumerate(records, start=1):
        value = rec.get(field)
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"bfile values must be integers, got {value!r}")
        stream.write(f"{index} {value}\n")


def write_records(records, fmt: str, stream) -> None:
    if fmt == "jsonl":
        write_jsonl(records, stream)
    elif fmt == "csv":
        write_csv(records, stream)
    elif fmt == "bfile":
        write_bfile(records, stream)
    else:
        raise DomainError(f"unknown output format {fmt!r}")


def read_jsonl(stream):
    """Parse a jsonl record stream, validating the schema marker."""
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DomainError(f"line {lineno}: not a json record ({exc})") from exc
        if not isinstance(rec, dict) or "kind" not in rec:
            raise DomainError(f"line {lineno}: not an output record")
        if rec.get("schema_version") != SCHEMA_VERSION:
            raise DomainError(
                f"line {lineno}: unsupported schema_version "
                f"{rec.get('schema_version')!r}"
            )
        yield rec
