"""Trace-polynomial search and free-subgroup certificates for <x, y | x^3, y^4, w^2>.

Exit codes: 0 success (all checks passed), 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .algebra import snf
from .certify import SUITES, InternalContradiction, analyze, search, verify_suite
from .certify.suites import CORRUPTIONS
from .groups import (
    CosetLimitExceeded,
    PresentationSyntaxError,
    SearchLimitExceeded,
    abelianization,
    low_index_subgroups,
    parse_presentation,
    reidemeister_schreier,
    todd_coxeter,
)
from .report import RunReport, reproduce_all
from .trace import SIG_34, trace_polynomial
from .words import WordSyntaxError, enumerate_words, is_proper_power, parse_word, word_stats


class UsageError(Exception):
    pass


def _word(text: str):
    try:
        return parse_word(text)
    except WordSyntaxError as e:
        raise UsageError(str(e)) from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def read_matrix(text: str) -> tuple[list[list[int]], int]:
    """Integer matrix as JSON (a list of rows, or {"rows": ..., "cols": n}) or as
    whitespace/comma separated rows, one per line."""
    text = text.strip()
    cols = None
    try:
        data = json.loads(text) if text else []
    except json.JSONDecodeError:
        data = [[int(x) for x in line.replace(",", " ").split()] for line in text.splitlines() if line.strip()]
    if isinstance(data, dict):
        cols = data.get("cols")
        data = data.get("rows", [])
    rows = [[int(x) for x in r] for r in data]
    if cols is None:
        if not rows:
            raise UsageError("an empty matrix needs an explicit column count")
        cols = len(rows[0])
    if any(len(r) != cols for r in rows):
        raise UsageError("matrix rows have different lengths")
    return rows, int(cols)


# -- commands -----------------------------------------------------------------------


def cmd_words(args) -> RunReport:
    if args.k is None or args.k < 1:
        raise UsageError("words needs --k N with N >= 1")
    results = []
    for w in enumerate_words(args.k):
        st = word_stats(w)
        results.append({"id": str(w), "word": str(w), "kappa": st.kappa, "mod12": st.mod12})
    return RunReport("words", {"k": args.k}, results)


def cmd_trace(args) -> RunReport:
    if not args.word:
        raise UsageError("trace needs --word W")
    w = _word(args.word)
    rep = trace_polynomial(w, SIG_34).to_json()
    rep["id"] = str(w)
    return RunReport("trace", {"word": str(w)}, [rep])


def cmd_search(args) -> RunReport:
    if args.k is None or args.k < 1 or args.k % 2 == 0:
        raise UsageError("search needs --k N with N odd and positive")
    hits = search(args.k, jobs=args.jobs, witness_path=args.witness_path)
    results = [dict(h.to_json(), id=str(h.word)) for h in hits]
    return RunReport("search", {"k": args.k}, results)


def cmd_analyze(args) -> RunReport:
    if not args.word:
        raise UsageError("analyze needs --word W")
    w = _word(args.word)
    if is_proper_power(w):
        raise UsageError(f"{w} is a proper power")
    v = analyze(w, args.witness_path).to_json()
    v["id"] = str(w)
    return RunReport("analyze", {"word": str(w)}, [v])


def cmd_verify(args) -> RunReport:
    names = args.suite or []
    if not names:
        raise UsageError(f"verify needs --suite S (one of {', '.join(SUITES)}, or all)")
    if "all" in names:
        names = list(SUITES)
    for n in names:
        if n not in SUITES:
            raise UsageError(f"unknown suite {n!r}; choose from {', '.join(SUITES)}")
    results = []
    for n in names:
        for c in verify_suite(n, witness_path=args.witness_path, jobs=args.jobs, corrupt=args.corrupt):
            results.append({"id": f"{n}: {c.name}", "passed": c.passed, "evidence": c.evidence})
    return RunReport("verify", {"suites": names, "corrupt": args.corrupt}, results)


def cmd_cosets(args) -> RunReport:
    if not args.presentation:
        raise UsageError("cosets needs --presentation FILE")
    try:
        p = parse_presentation(_read(args.presentation))
    except PresentationSyntaxError as e:
        raise UsageError(str(e)) from None
    inputs = {"presentation": str(p), "max_index": args.max_index, "max_cosets": args.max_cosets}
    if args.max_index is None:
        t = todd_coxeter(p, (), args.max_cosets)
        results = [{"id": "order", "order": t.index, "table": t.to_json()}]
    else:
        if args.max_index < 1:
            raise UsageError("--max-index must be at least 1")
        results = []
        for i, t in enumerate(low_index_subgroups(p, args.max_index)):
            ab = abelianization(reidemeister_schreier(p, t).presentation)
            results.append({
                "id": f"class-{i}",
                "index": t.index,
                "table": t.to_json(),
                "abelianization": ab.to_json(),
            })
    return RunReport("cosets", inputs, results)


def cmd_snf(args) -> RunReport:
    if not args.matrix:
        raise UsageError("snf needs --matrix FILE")
    try:
        rows, cols = read_matrix(_read(args.matrix))
    except ValueError as e:
        raise UsageError(f"bad matrix: {e}") from None
    s = snf(rows, cols)
    return RunReport("snf", {"rows": rows, "cols": cols}, [dict(s.to_json(), id="structure", group=str(s))])


def cmd_reproduce(args) -> RunReport:
    return reproduce_all(jobs=args.jobs, witness_path=args.witness_path, corrupt=args.corrupt)


COMMANDS = {
    "words": cmd_words,
    "trace": cmd_trace,
    "search": cmd_search,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "cosets": cmd_cosets,
    "snf": cmd_snf,
    "reproduce": cmd_reproduce,
}


HELP = {
    "words": "list canonical words with k syllables",
    "trace": "exact trace polynomial of a word",
    "search": "odd-k search for words whose trace has only roots 0 and √2",
    "analyze": "verdict and rule trail for one word",
    "verify": "run named verification suites",
    "cosets": "coset enumeration or low-index subgroups of a presentation file",
    "snf": "Smith normal form of an integer matrix file",
    "reproduce": "all searches and suites in one report",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tits342", description=__doc__.splitlines()[0], epilog=__doc__.splitlines()[2]
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, help=HELP[name])
        sp.add_argument("--json", action="store_true", help="print the JSON report")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--witness-path", default=None, help="F_2 witness file for the k = 5 endgame")
        if name in ("words", "search"):
            sp.add_argument("--k", type=int)
        if name in ("trace", "analyze"):
            sp.add_argument("--word")
        if name == "verify":
            sp.add_argument("--suite", action="append", help="suite name or 'all'; repeatable")
        if name in ("verify", "reproduce"):
            sp.add_argument("--corrupt", choices=CORRUPTIONS, help=argparse.SUPPRESS)
        if name == "cosets":
            sp.add_argument("--presentation")
            sp.add_argument("--max-index", type=int)
            sp.add_argument("--max-cosets", type=int, default=10**6)
        if name == "snf":
            sp.add_argument("--matrix")
    return parser


def _human(report: RunReport) -> str:
    obj = report.to_json()
    lines = [f"{obj['command']}: {obj['summary']['total']} item(s)"]
    for r in obj["results"]:
        mark = {True: "PASS", False: "FAIL"}.get(r.get("passed"), "-")
        extra = r.get("verdict") or r.get("group") or ""
        if isinstance(extra, dict):
            extra = extra.get("verdict", "")
        lines.append(f"  {mark:4} {r['id']}  {extra}".rstrip())
    s = obj["summary"]
    if any("passed" in r for r in obj["results"]):
        lines.append(f"passed {s['passed']}, failed {s['failed']}")
    for fid in s["failed_ids"]:
        lines.append(f"  failed: {fid}")
    return "\n".join(lines)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"tits342 {args.command}: error: {e}", file=sys.stderr)
        return 2
    except (InternalContradiction, CosetLimitExceeded, SearchLimitExceeded) as e:
        print(f"tits342 {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if args.command != "reproduce":
        report.wall_time = time.perf_counter() - start
    print(report.dumps() if args.json else _human(report))
    return 0 if report.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
