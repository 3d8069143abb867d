"""Command-line entry point: ``jonesid <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .checker import AlphabetCapError, check_identity_j4, check_identity_j5, explain
from .diagram import DEFAULT_MAX_STRANDS, MonoidTable, StrandCapError, enumerate_jones
from .lemmas import verify_lemma
from .oracle import DEFAULT_BUDGET, BudgetExceeded, equivalence_harness, holds, search_separating
from .structure import eggbox_report, green_classes
from .words import IdentitySyntaxError, parse_identity, parse_identity_file

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

MONOIDS = {"j4": 4, "j5": 5}


def load_table(n: int, cache: str | None = None) -> MonoidTable:
    """Build J_n, reading or writing the JSON dump under ``cache`` when given."""
    if cache is None:
        return enumerate_jones(n)
    path = Path(cache) / f"j{n}.json"
    if path.exists():
        return MonoidTable.from_json(path.read_text())
    t = enumerate_jones(n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(t.to_json())
    return t


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj) if as_json else text)


def cmd_elements(args) -> int:
    n = args.n
    if n > DEFAULT_MAX_STRANDS and not args.force:
        raise StrandCapError(f"n={n} exceeds the strand cap {DEFAULT_MAX_STRANDS}; pass --force")
    t = load_table(n, args.cache) if n <= DEFAULT_MAX_STRANDS else enumerate_jones(n, max_strands=n)
    if args.json:
        print(t.to_json())
    else:
        print(len(t))
        for k, d in enumerate(t.elements):
            print(f"{k}\t{d}")
    return EXIT_OK


def cmd_eggbox(args) -> int:
    t = load_table(args.n, args.cache)
    box = eggbox_report(t, green_classes(t))
    _emit(box.to_json_obj(), args.json, box.render(t if args.elements else None))
    return EXIT_OK


def _check_one(identity, t: MonoidTable, n: int, method: str, budget: int) -> tuple[dict, list[str], bool]:
    out: dict = {"identity": str(identity), "monoid": f"j{n}"}
    lines = [str(identity)]
    theorem = oracle = None
    if method in ("theorem", "both"):
        theorem = (check_identity_j5 if n == 5 else check_identity_j4)(identity)
        out["theorem"] = theorem.to_dict()
        if n == 5:
            out["theorem"]["reading"] = theorem.reading
        if theorem.violation is not None:
            lines.append(explain(theorem.violation, identity))
    if method in ("oracle", "both"):
        oracle = holds(t, identity, budget=budget)
        out["oracle"] = oracle.to_dict(t)
        if oracle.counterexample is not None:
            cex = ", ".join(f"{c} -> {t.elements[e]}" for c, e in oracle.counterexample.items())
            lines.append(f"oracle counterexample: {cex}")
        lines.append(f"oracle evaluations: {oracle.evaluations}")
    verdicts = [v.satisfied for v in (theorem,) if v is not None] + [v.holds for v in (oracle,) if v is not None]
    if theorem is not None and oracle is not None and theorem.satisfied != oracle.holds:
        out["discrepancy"] = True
        print(f"DISCREPANCY: theorem and oracle disagree on {identity}", file=sys.stderr)
    ok = all(verdicts)
    out["satisfied"] = ok
    lines.insert(1, "satisfied" if ok else "violated")
    return out, lines, ok


def cmd_check(args) -> int:
    n = MONOIDS[args.monoid]
    if args.file:
        identities = parse_identity_file(Path(args.file).read_text())
    elif args.identity:
        identities = [parse_identity(" ".join(args.identity))]
    else:
        raise IdentitySyntaxError("no identity given", "", 0)
    t = load_table(n, args.cache) if args.method != "theorem" else None
    results, all_ok = [], True
    for identity in identities:
        obj, lines, ok = _check_one(identity, t, n, args.method, args.budget)
        all_ok &= ok
        results.append(obj)
        if not args.json:
            print("\n".join(lines))
    if args.json:
        print(json.dumps(results if args.file else results[0]))
    return EXIT_OK if all_ok else EXIT_VIOLATED


def cmd_verify(args) -> int:
    n = MONOIDS[args.monoid]
    t = load_table(n, args.cache)
    checker = check_identity_j5 if n == 5 else check_identity_j4
    report = equivalence_harness(
        t, checker, letters=args.letters, max_len=args.max_len, mode=args.mode,
        sample_size=args.samples, seed=args.seed, near_fraction=args.near,
        budget=args.budget, threads=args.threads,
    )
    obj = report.to_json_obj(t)
    text = (f"{report.instances} identities, {report.holds_count} hold, {report.fails_count} fail, "
            f"{len(report.discrepancies)} discrepancies")
    for d in report.discrepancies:
        text += f"\n  {d.identity}: theorem {d.checker_verdict.satisfied}, oracle {d.oracle_verdict.holds}"
    _emit(obj, args.json, text)
    return EXIT_OK if not report.discrepancies else EXIT_VIOLATED


def cmd_lemma(args) -> int:
    t = load_table(5, args.cache)
    green = green_classes(t)
    results = verify_lemma("R", t, green, args.max_len) + verify_lemma("L", t, green, args.max_len)
    obj = [
        {"lemma": r.lemma, "family": r.family, "expect_related": r.expect_related,
         "pairs": r.pairs, "related": r.related, "ok": r.ok,
         "example": r.example, "counterexample": r.counterexample}
        for r in results
    ]
    _emit(obj, args.json, "\n".join(r.line() for r in results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_VIOLATED


def cmd_search(args) -> int:
    ta = load_table(MONOIDS[args.a], args.cache)
    tb = load_table(MONOIDS[args.b], args.cache)
    found = search_separating(ta, tb, letters=args.letters, max_len=args.max_len, seed=args.seed,
                              samples=args.samples, budget=args.budget)
    if found is None:
        _emit({"found": False}, args.json, "no separating identity found within the bounds")
        return EXIT_OK
    obj = {"found": True, **found.to_dict(tb)}
    lines = [f"{found.identity} holds in {args.a} and fails in {args.b} (tried {found.tried})"]
    if MONOIDS[args.b] == 5:
        verdict = check_identity_j5(found.identity)
        obj["theorem"] = verdict.to_dict()
        if verdict.violation is not None:
            lines.append(explain(verdict.violation, found.identity))
    _emit(obj, args.json, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jonesid", description="Identities and Green's structure of Jones monoids.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seed=False, threads=False):
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
        sp.add_argument("--cache", metavar="DIR", help="memoize monoid tables as JSON in DIR")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle evaluation budget")
        if seed:
            sp.add_argument("--seed", type=int, default=0)
        if threads:
            sp.add_argument("--threads", type=int, default=1)
        return sp

    sp = common(sub.add_parser("elements", help="list the elements of J_n"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--force", action="store_true", help="allow n above the strand cap")
    sp.set_defaults(func=cmd_elements)

    sp = common(sub.add_parser("eggbox", help="Green's structure of J_n"))
    sp.add_argument("--n", type=int, default=5)
    sp.add_argument("--elements", action="store_true", help="print diagrams inside the grid cells")
    sp.set_defaults(func=cmd_eggbox)

    sp = common(sub.add_parser("check", help="decide an identity in J_4 or J_5"))
    sp.add_argument("identity", nargs="*")
    sp.add_argument("--monoid", choices=sorted(MONOIDS), default="j5")
    sp.add_argument("--method", choices=["theorem", "oracle", "both"], default="theorem")
    sp.add_argument("--file", metavar="PATH")
    sp.set_defaults(func=cmd_check)

    sp = common(sub.add_parser("verify-theorem", help="compare the checker with the oracle"), seed=True, threads=True)
    sp.add_argument("--monoid", choices=sorted(MONOIDS), default="j5")
    sp.add_argument("--letters", type=int, default=2)
    sp.add_argument("--max-len", type=int, default=6)
    sp.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--near", type=float, default=0.5, help="fraction of random pairs built by small edits")
    sp.set_defaults(func=cmd_verify)

    sp = common(sub.add_parser("lemma-check", help="verify the R/L-class lemmas over generator words"),
                threads=True)
    sp.add_argument("--max-len", type=int, default=6)
    sp.set_defaults(func=cmd_lemma)

    sp = common(sub.add_parser("search-separating", help="find an identity of A that fails in B"),
                seed=True, threads=True)
    sp.add_argument("--a", choices=sorted(MONOIDS), default="j4")
    sp.add_argument("--b", choices=sorted(MONOIDS), default="j5")
    sp.add_argument("--letters", type=int, default=3)
    sp.add_argument("--max-len", type=int, default=12)
    sp.add_argument("--samples", type=int, default=200_000)
    sp.set_defaults(func=cmd_search)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (IdentitySyntaxError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, AlphabetCapError, StrandCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
