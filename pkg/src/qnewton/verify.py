"""Batch verification of the polygon-shape results over poset corpora."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .linext import DEFAULT_MAX_EXTENSIONS, min_stat_bruteforce
from .newton import check_profile, verify_conjecture, verify_main_theorem
from .poset import Poset, chain_stats, load_poset
from .polyalg import q_int
from .qehrhart import (
    MAX_LATTICE_N,
    check_lemma_qbinom,
    check_reciprocity,
    compute_qehrhart,
    count_lattice_points,
    oracle_interpolation,
)

CHECKS = (
    "main_theorem",
    "conjecture",
    "linkage",
    "profile",
    "extremal_minimum",
    "oracle",
    "evaluation",
    "lemma_qbinom",
    "reciprocity",
)


@dataclass
class VerifyOptions:
    max_extensions: int = DEFAULT_MAX_EXTENSIONS
    max_n: int = MAX_LATTICE_N
    lemma_ns: tuple[int, ...] = (0, 1, 2)
    reciprocity_ns: tuple[int, ...] = (1, 2)


@dataclass
class RunReport:
    poset: dict
    command: str
    checks: dict[str, bool]
    timings: dict[str, float] = field(default_factory=dict)
    artifacts: list[str] = field(default_factory=list)
    counterexample: dict | None = None
    index: int = 0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_json(self) -> dict:
        out = {
            "index": self.index,
            "command": self.command,
            "poset": self.poset,
            "passed": self.passed,
            "checks": self.checks,
            "timings": self.timings,
            "artifacts": self.artifacts,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def verify_poset(p: Poset, options: VerifyOptions | None = None, command: str = "verify") -> RunReport:
    opts = options or VerifyOptions()
    checks: dict[str, bool] = {}
    timings: dict[str, float] = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        checks[name] = bool(fn())
        timings[name] = round(time.perf_counter() - t0, 6)

    t0 = time.perf_counter()
    result = compute_qehrhart(p, opts.max_extensions)
    timings["compute"] = round(time.perf_counter() - t0, 6)
    nat = result.natural_dual
    b = chain_stats(nat).b
    m = p.m

    main = verify_main_theorem(p, result.F)
    conj = verify_conjecture(p, result)
    checks["main_theorem"] = main.passed
    checks["conjecture"] = conj.passed
    checks["linkage"] = main.passed == conj.passed and main.h == conj.h + result.phi.degree()
    timed("profile", lambda: check_profile(result.F, m, b))
    timed("extremal_minimum", lambda: all(
        result.F.slice(k).q_min() == min_stat_bruteforce(nat, k, max_count=opts.max_extensions)
        for k in range(1, m + 1)
    ))
    timed("oracle", lambda: oracle_interpolation(p) == result.E)

    def evaluation():
        top = min(m + 2, opts.max_n)
        return all(
            result.E.evaluate(q_int(n)) == count_lattice_points(p, n, max_n=opts.max_n).poly
            for n in range(top + 1)
        )

    timed("evaluation", evaluation)
    timed("lemma_qbinom", lambda: all(check_lemma_qbinom(nat, n) for n in opts.lemma_ns))
    timed("reciprocity", lambda: all(check_reciprocity(p, n, result) for n in opts.reciprocity_ns))

    report = RunReport(p.to_json(), command, checks, timings)
    if not report.passed:
        report.counterexample = {
            "poset": p.to_json(),
            "failed": report.failed(),
            "F": str(result.F),
            "N": str(result.N),
            "phi": str(result.phi),
            "main_theorem": main.to_json(),
            "conjecture": conj.to_json(),
        }
    return report


def _verify_indexed(args):
    idx, p, opts = args
    rep = verify_poset(p, opts)
    rep.index = idx
    return rep


def verify_many(posets: Iterable[Poset], options: VerifyOptions | None = None,
                jobs: int = 1) -> Iterator[RunReport]:
    """Reports in input order; jobs > 1 fans out over worker processes."""
    opts = options or VerifyOptions()
    tasks = ((i, p, opts) for i, p in enumerate(posets))
    if jobs <= 1:
        yield from map(_verify_indexed, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_verify_indexed, tasks, chunksize=16)


def posets_from_report(data) -> list[Poset]:
    """Recover posets from a saved report (one report, a list, or JSON lines)."""
    if isinstance(data, dict):
        data = [data]
    out = []
    for entry in data:
        if "counterexample" in entry and entry["counterexample"]:
            out.append(load_poset(entry["counterexample"]["poset"]))
        else:
            out.append(load_poset(entry["poset"]))
    return out


__all__ = [
    "CHECKS",
    "RunReport",
    "VerifyOptions",
    "verify_poset",
    "verify_many",
    "posets_from_report",
]
