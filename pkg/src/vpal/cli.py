"""Command-line front end.

Data goes to stdout, diagnostics to stderr.  The default output format is a
human-readable table; --format switches to jsonl/csv/bfile machine formats.
Exit codes: 0 success, 1 domain error, 2 budget or checkpoint failure.
Configuration precedence is flags > environment (VPAL_THREADS, VPAL_ROUNDS,
VPAL_BUDGET) > defaults.
"""

import argparse
import os
import sys

from . import output
from .anchors import search_anchors, verify_characterization
from .arith import DEFAULT_ROUNDS, v
from .digits import reverse
from .errors import (
    BudgetExceeded,
    CheckpointCorrupt,
    DomainError,
    HeterogeneousRecords,
)
from .heuristic import DEFAULT_C, KahanSum, envelope_term, expected_count
from .palindromes import as_hit, enumerate_v_palindromes, family_nines, family_repeat18

_FORMATS = ("table", "jsonl", "csv", "bfile")


def _env_int(name: str):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"environment variable {name} must be an integer, got {raw!r}")


def _resolve_threads(args) -> int:
    if getattr(args, "threads", None) is not None:
        value = args.threads
    else:
        value = _env_int("VPAL_THREADS")
        if value is None:
            value = os.cpu_count() or 1
    if value < 1:
        raise DomainError(f"thread count must be >= 1, got {value}")
    return value


def _resolve_rounds(args) -> int:
    if getattr(args, "rounds", None) is not None:
        return args.rounds
    value = _env_int("VPAL_ROUNDS")
    return DEFAULT_ROUNDS if value is None else value


def _resolve_budget(args):
    if getattr(args, "budget", None) is not None:
        return args.budget
    return _env_int("VPAL_BUDGET")


def _emit(records, fmt: str, human_lines) -> None:
    """Write records in the machine format, or the prepared human lines."""
    if fmt == "table":
        for line in human_lines:
            print(line)
    else:
        output.write_records(records, fmt, sys.stdout)


def _cmd_v(args) -> int:
    value = v(args.n, _resolve_budget(args))
    _emit([output.scalar_record("v", args.n, value)], args.format, [str(value)])
    return 0


def _cmd_reverse(args) -> int:
    value = reverse(args.n, args.base)
    _emit(
        [output.scalar_record("reverse", args.n, value, base=args.base)],
        args.format,
        [str(value)],
    )
    return 0


def _cmd_check(args) -> int:
    if args.n < 1:
        raise DomainError(f"the predicate is defined for n >= 1, got {args.n}")
    budget = _resolve_budget(args)
    hit = as_hit(args.n, args.base, budget)
    rev = None if args.n % args.base == 0 else reverse(args.n, args.base)
    if hit is not None:
        line = (
            f"{args.n} is a v-palindrome in base {args.base}: "
            f"reversal {hit.reversal}, shared v {hit.shared_v}"
        )
    else:
        line = f"{args.n} is not a v-palindrome in base {args.base}"
    _emit([output.check_record(args.n, args.base, rev, hit)], args.format, [line])
    return 0


def _cmd_enumerate(args) -> int:
    mode = "canonical" if args.canonical else "all"
    hits = enumerate_v_palindromes(
        args.lo, args.hi, base=args.base, mode=mode, workers=_resolve_threads(args)
    )
    if args.format == "table":
        for hit in hits:
            print(hit.n)
    else:
        output.write_records(
            (output.hit_record(h) for h in hits), args.format, sys.stdout
        )
    return 0


def _cmd_family(args) -> int:
    fn = family_nines if args.name == "nines" else family_repeat18
    value = fn(args.k)
    _emit(
        [output.scalar_record(f"family_{args.name}", args.k, value)],
        args.format,
        [str(value)],
    )
    return 0


def _cmd_anchors(args) -> int:
    results = search_anchors(
        args.m_lo,
        args.m_hi,
        rounds=_resolve_rounds(args),
        checkpoint_path=args.checkpoint,
        workers=_resolve_threads(args),
    )
    lines = [
        f"m={r.m} p={r.p} [{r.p_verdict.status}] q={r.q} [{r.q_verdict.status}] "
        f"candidate={'yes' if r.is_candidate else 'no'}"
        for r in results
    ]
    _emit([output.anchor_record(r) for r in results], args.format, lines)
    return 0


def _cmd_verify(args) -> int:
    rep = verify_characterization(
        args.bound, workers=_resolve_threads(args), rounds=_resolve_rounds(args)
    )
    lines = [
        f"bound={rep.bound}",
        f"brute_force_hits={rep.brute_force_hits}",
        f"characterization_hits={rep.characterization_hits}",
        f"consistent={'yes' if rep.consistent else 'no'}",
    ]
    _emit([output.verification_record(rep)], args.format, lines)
    return 0


def _cmd_heuristic(args) -> int:
    C = DEFAULT_C if args.C is None else args.C
    rep = expected_count(args.n_start, args.n_end, C)
    records = []
    partial = KahanSum()
    envelope = KahanSum()
    for n, term in zip(range(rep.n_start, rep.N + 1), rep.terms):
        partial.add(term)
        envelope.add(envelope_term(n, C))
        records.append(
            output.heuristic_term_record(
                n, C, term, envelope_term(n, C), partial.total, envelope.total
            )
        )
    lines = [
        f"n={rec['n']} probability={rec['probability']!r} envelope={rec['envelope']!r}"
        for rec in records
    ]
    lines += [
        f"partial_sum={rep.partial_sum!r}",
        f"envelope_sum={rep.envelope_sum!r}",
        f"tail_bound={rep.tail_bound!r}",
    ]
    if args.format == "jsonl":
        # csv stays homogeneous: the totals ride along in the term rows
        records.append(output.heuristic_summary_record(rep))
    _emit(records, args.format, lines)
    return 0


def _cmd_export(args) -> int:
    source = sys.stdin if args.input is None else open(args.input, encoding="utf-8")
    try:
        records = list(output.read_jsonl(source))
    finally:
        if source is not sys.stdin:
            source.close()
    output.write_records(records, args.format, sys.stdout)
    return 0


def _add_format(parser, choices=_FORMATS):
    parser.add_argument(
        "--format", choices=choices, default="table", help="output format"
    )


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="vpal", description="Arithmetic of v-palindromes."
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("v", help="additive function v of N")
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_v)

    p = sub.add_parser("reverse", help="digit reversal of N")
    p.add_argument("n", type=int)
    p.add_argument("--base", type=int, default=10)
    _add_format(p)
    p.set_defaults(func=_cmd_reverse)

    p = sub.add_parser("check", help="test whether N is a v-palindrome")
    p.add_argument("n", type=int)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--budget", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", help="v-palindromes in a range")
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--base", type=int, default=10)
    p.add_argument(
        "--canonical", action="store_true", help="keep only hits with n < reversal"
    )
    p.add_argument("--threads", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("family", help="member of an infinite family")
    p.add_argument("name", choices=("nines", "repeat18"))
    p.add_argument("--k", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("anchors", help="twin-prime anchor search")
    p.add_argument("--from", dest="m_lo", type=int, required=True)
    p.add_argument("--to", dest="m_hi", type=int, required=True)
    p.add_argument("--rounds", type=int, default=None)
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--threads", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_anchors)

    p = sub.add_parser("verify", help="brute force vs. anchor characterization")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--rounds", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("heuristic", help="expected-count partial sums")
    p.add_argument("--from", dest="n_start", type=int, required=True)
    p.add_argument("--to", dest="n_end", type=int, required=True)
    p.add_argument("--C", type=float, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_heuristic)

    p = sub.add_parser("export", help="convert a jsonl record stream")
    p.add_argument("--format", choices=_FORMATS[1:], required=True)
    p.add_argument("--input", default=None, help="jsonl file (default: stdin)")
    p.set_defaults(func=_cmd_export)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, HeterogeneousRecords) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BudgetExceeded, CheckpointCorrupt) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
