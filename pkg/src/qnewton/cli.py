"""Command-line interface.

Exit codes: 0 when every predicate holds, 1 when a mathematical
counterexample is found, 2 for usage, input or limit errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from .errors import QNewtonError
from .linext import (
    DEFAULT_MAX_EXTENSIONS,
    LinExt,
    linear_extensions,
    min_maj_extension,
    min_stat_bruteforce,
)
from .newton import newton_polygon, verify_conjecture, verify_main_theorem
from .poset import (
    Poset,
    chain_stats,
    enumerate_posets,
    load_poset,
    naturalize,
    random_poset,
)
from .qehrhart import MAX_LATTICE_N, compute_qehrhart
from .verify import RunReport, VerifyOptions, posets_from_report, verify_many

log = logging.getLogger("qnewton")

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str) -> Poset:
    try:
        return load_poset(Path(path))
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from None
    except (ValueError, QNewtonError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _check_parent(path: str) -> Path:
    p = Path(path)
    if not p.parent.is_dir():
        raise InputError(f"output directory does not exist: {p.parent}")
    return p


def _covers_text(poset: dict) -> str:
    return ",".join(f"{a}<{b}" for a, b in poset["covers"]) or "-"


# -- ehrhart ---------------------------------------------------------------

def cmd_ehrhart(args) -> int:
    p = _load(args.input)
    result = compute_qehrhart(p, args.max_extensions)
    payload = json.dumps(result.to_json(), indent=2)
    if args.output:
        _check_parent(args.output).write_text(payload + "\n")
    print(payload)
    return EXIT_OK


# -- verify ----------------------------------------------------------------

def _corpus(args) -> list[Poset]:
    if args.all is not None:
        return list(enumerate_posets(args.all))
    if args.random is not None:
        count, m, seed = args.random
        if count < 0 or m < 1:
            raise InputError("--random needs COUNT >= 0 and M >= 1")
        prob = Fraction(args.edge_prob)
        return [random_poset(m, prob, seed + i) for i in range(count)]
    if args.replay is not None:
        text = Path(args.replay).read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            data = [json.loads(line) for line in text.splitlines() if line.strip()]
        return posets_from_report(data)
    if args.input is None:
        raise InputError("give a poset file, --all M, --random COUNT M SEED or --replay REPORT")
    return [_load(args.input)]


def _write_report_dir(outdir: Path, reports: list[RunReport]) -> None:
    from . import plotting

    outdir.mkdir(parents=True, exist_ok=True)
    counts: dict[int, dict[str, list[int]]] = {}
    for rep in reports:
        per = counts.setdefault(rep.poset["m"], {})
        for name, ok in rep.checks.items():
            per.setdefault(name, [0, 0])[0 if ok else 1] += 1
        if not rep.passed:
            p = load_poset(rep.poset)
            main = verify_main_theorem(p)
            conj = verify_conjecture(p)
            fig = plotting.render_polygons(outdir / f"counterexample_{rep.index}.svg", [
                {"polygon": main.actual, "support": main.polynomial, "expected": main.expected,
                 "title": "NT(F)"},
                {"polygon": conj.actual, "support": conj.polynomial, "expected": conj.expected,
                 "title": "NT(N)"},
            ])
            rep.artifacts.append(str(fig))
    names = list(reports[0].checks) if reports else []
    lines = ["\t".join(["index", "m", "covers", "passed"] + names)]
    for rep in reports:
        lines.append("\t".join(
            [str(rep.index), str(rep.poset["m"]), _covers_text(rep.poset), str(int(rep.passed))]
            + [str(int(rep.checks[n])) for n in names]
        ))
    (outdir / "summary.tsv").write_text("\n".join(lines) + "\n")
    with open(outdir / "reports.jsonl", "w") as fh:
        for rep in reports:
            fh.write(json.dumps(rep.to_json(), sort_keys=True) + "\n")
    if reports:
        plotting.render_summary(outdir / "summary.png", counts)


def cmd_verify(args) -> int:
    try:
        posets = _corpus(args)
    except OSError as exc:
        raise InputError(str(exc)) from None
    opts = VerifyOptions(max_extensions=args.max_extensions, max_n=args.max_n)
    reports = []
    failures = 0
    for rep in verify_many(posets, opts, jobs=args.jobs):
        reports.append(rep)
        if not rep.passed:
            failures += 1
            log.error("COUNTEREXAMPLE at poset %d: %s", rep.index, ", ".join(rep.failed()))
        if args.json:
            print(json.dumps(rep.to_json(), sort_keys=True))
        else:
            print("\t".join([str(rep.index), str(rep.poset["m"]), _covers_text(rep.poset),
                             "PASS" if rep.passed else "FAIL", ",".join(rep.failed())]))
    if args.report_dir:
        _write_report_dir(Path(args.report_dir), reports)
    print(f"# {len(reports)} posets, {failures} failing", file=sys.stderr)
    return EXIT_COUNTEREXAMPLE if failures else EXIT_OK


# -- newton ----------------------------------------------------------------

def cmd_newton(args) -> int:
    p = _load(args.input)
    svg = _check_parent(args.svg) if args.svg else None
    tsv = _check_parent(args.tsv) if args.tsv else None
    result = compute_qehrhart(p)
    main = verify_main_theorem(p, result.F)
    conj = verify_conjecture(p, result)
    print(f"NT(F)\t{main.actual}\tC({','.join(map(str, main.a))};{main.h})")
    print(f"NT(N)\t{conj.actual}\tC({','.join(map(str, conj.a))};{conj.h})")
    if tsv:
        tsv.write_text(main.actual.to_tsv())
        tsv.with_name(f"{tsv.stem}_N{tsv.suffix}").write_text(conj.actual.to_tsv())
    if svg:
        from . import plotting

        plotting.render_polygons(svg, [
            {"polygon": newton_polygon(result.F), "support": result.F, "title": "NT(F)",
             "expected": main.expected},
            {"polygon": newton_polygon(result.N), "support": result.N, "title": "NT(N)",
             "expected": conj.expected},
        ])
    return EXIT_OK if main.passed and conj.passed else EXIT_COUNTEREXAMPLE


# -- extensions ------------------------------------------------------------

def _runs(pi: LinExt) -> str:
    out, cur = [], [pi.perm[0]]
    for a, b in zip(pi.perm, pi.perm[1:]):
        if a > b:
            cur.append(b)
        else:
            out.append(cur)
            cur = [b]
    out.append(cur)
    sep = "" if len(pi.perm) < 10 else ","
    return " ".join(sep.join(map(str, r)) for r in out)


def cmd_extensions(args) -> int:
    p = _load(args.input)
    print("pi\tDes\tmaj\tdes\tblocks")
    for pi in linear_extensions(p, args.max_extensions):
        des = "{" + ",".join(map(str, sorted(pi.des_set))) + "}"
        print(f"{pi}\t{des}\t{pi.maj}\t{pi.des}\t{_runs(pi)}")
    if args.stats:
        nat = p
        if not p.is_naturally_labeled():
            nat, rl = naturalize(p)
            print(f"# relabeled to a natural labeling: {rl.as_dict()}", file=sys.stderr)
        b = chain_stats(nat).b
        chain_like = nat.is_chain()
        print()
        print("k\tb_sum\tmin\tmin_1<=des<=k\textremal")
        for k in range(p.m + 1):
            low = min_stat_bruteforce(nat, k, max_count=args.max_extensions)
            if k == 0 or chain_like:
                restricted = "-"
            else:
                restricted = str(min_stat_bruteforce(nat, k, True, args.max_extensions))
            pi, _ = min_maj_extension(nat, k)
            print(f"{k}\t{sum(b[:k])}\t{low}\t{restricted}\t{pi}")
    return EXIT_OK


# -- entry point -------------------------------------------------------------

def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QNEWTON_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qnewton",
        description="q-Ehrhart polynomials of order polytopes and their Newton polygons.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--max-extensions", type=int, default=DEFAULT_MAX_EXTENSIONS,
                        help="cap on enumerated linear extensions (default %(default)s)")

    e = sub.add_parser("ehrhart", parents=[budget], help="compute F, N, phi, D and E")
    e.add_argument("input", help="poset JSON file")
    e.add_argument("-o", "--output", help="also write the result JSON here")
    e.set_defaults(func=cmd_ehrhart)

    v = sub.add_parser("verify", parents=[budget], help="check every predicate on a corpus")
    v.add_argument("input", nargs="?", help="poset JSON file")
    src = v.add_mutually_exclusive_group()
    src.add_argument("--all", type=int, metavar="M", help="every labeled poset on M elements")
    src.add_argument("--random", type=int, nargs=3, metavar=("COUNT", "M", "SEED"))
    src.add_argument("--replay", metavar="REPORT", help="rerun the posets of a saved report")
    v.add_argument("--edge-prob", default="1/2", help="edge probability for --random")
    v.add_argument("--max-n", type=int, default=MAX_LATTICE_N,
                   help="largest dilation for lattice-point counts (default %(default)s)")
    v.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="worker processes (default $QNEWTON_JOBS or 1)")
    v.add_argument("--json", action="store_true", help="emit JSON lines instead of TSV")
    v.add_argument("--report-dir", help="write summary.tsv, reports.jsonl and figures here")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("newton", help="export the Newton polygons of F and N")
    n.add_argument("input", help="poset JSON file")
    n.add_argument("--svg", help="render both polygons with their support")
    n.add_argument("--tsv", help="vertices of NT(F); NT(N) goes to <stem>_N<suffix>")
    n.set_defaults(func=cmd_newton)

    x = sub.add_parser("extensions", parents=[budget], help="list linear extensions")
    x.add_argument("input", help="poset JSON file")
    x.add_argument("--stats", action="store_true", help="add the minima table for k = 0..m")
    x.set_defaults(func=cmd_extensions)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InputError, QNewtonError, ValueError, OSError) as exc:
        print(f"qnewton: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
