"""Finite posets on {1, ..., m}, chain statistics and poset corpora."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator

from .errors import CycleError, RangeError, SizeError

MAX_EXHAUSTIVE_M = 5


@dataclass(frozen=True)
class Poset:
    """Strict partial order on {1, ..., m}.

    ``lt`` is the full m x m strict-relation matrix stored 0-indexed:
    ``lt[i-1][j-1]`` is true iff i <_P j.  Public methods take 1-indexed
    labels.
    """

    m: int
    lt: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if self.m < 1:
            raise RangeError("a poset needs at least one element")
        if len(self.lt) != self.m or any(len(row) != self.m for row in self.lt):
            raise ValueError("relation matrix must be m x m")

    def less(self, x: int, y: int) -> bool:
        return self.lt[x - 1][y - 1]

    def relations(self) -> list[tuple[int, int]]:
        m = self.m
        return [(i + 1, j + 1) for i in range(m) for j in range(m) if self.lt[i][j]]

    def covers(self) -> list[tuple[int, int]]:
        """Pairs x < y with nothing strictly between."""
        m, lt = self.m, self.lt
        return [
            (i + 1, j + 1)
            for i in range(m) for j in range(m)
            if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(m))
        ]

    def predecessors(self, x: int) -> list[int]:
        return [i + 1 for i in range(self.m) if self.lt[i][x - 1]]

    def is_naturally_labeled(self) -> bool:
        return all(i < j for i, j in self.relations())

    def is_chain(self) -> bool:
        m = self.m
        return all(self.lt[i][j] or self.lt[j][i] for i in range(m) for j in range(i + 1, m))

    def relabel(self, perm: dict[int, int]) -> Poset:
        """Poset with element x renamed perm[x]."""
        m = self.m
        lt = [[False] * m for _ in range(m)]
        for i, j in self.relations():
            lt[perm[i] - 1][perm[j] - 1] = True
        return Poset(m, tuple(map(tuple, lt)))

    def to_json(self) -> dict:
        return {"m": self.m, "covers": [list(c) for c in self.covers()]}

    def __str__(self) -> str:
        covers = ", ".join(f"{i}<{j}" for i, j in self.covers())
        return f"Poset(m={self.m}; {covers or 'antichain'})"


@dataclass(frozen=True)
class ChainStats:
    mc: tuple[int, ...]
    mcbar: tuple[int, ...]
    b: tuple[int, ...]
    levels: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class Relabeling:
    """Bijection old label -> new label, stored as perm[x-1]."""

    perm: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.perm[x - 1]

    def as_dict(self) -> dict[int, int]:
        return {i + 1: v for i, v in enumerate(self.perm)}

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.perm))


def _closure(m: int, lt: list[list[bool]]) -> list[list[bool]]:
    for k in range(m):
        rk = lt[k]
        for i in range(m):
            if lt[i][k]:
                ri = lt[i]
                for j in range(m):
                    if rk[j]:
                        ri[j] = True
    return lt


def from_relations(m: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Transitive closure of the given relation pairs (covers or any relations)."""
    if m < 1:
        raise RangeError("m must be positive")
    lt = [[False] * m for _ in range(m)]
    for pair in pairs:
        x, y = pair
        if not (1 <= x <= m and 1 <= y <= m):
            raise RangeError(f"pair {tuple(pair)} out of range 1..{m}")
        if x == y:
            raise CycleError(f"reflexive pair ({x}, {x}) in a strict order")
        lt[x - 1][y - 1] = True
    _closure(m, lt)
    for i in range(m):
        if lt[i][i]:
            raise CycleError(f"relation has a directed cycle through element {i + 1}")
    return Poset(m, tuple(map(tuple, lt)))


from_covers = from_relations


def chain(m: int) -> Poset:
    return from_relations(m, [(i, i + 1) for i in range(1, m)])


def antichain(m: int) -> Poset:
    return from_relations(m, [])


def load_poset(data: dict | str | Path) -> Poset:
    """Read ``{"m": 4, "covers": [[1,2],[2,4],[3,4]]}`` from a dict, path or JSON text."""
    if isinstance(data, Path) or (isinstance(data, str) and not data.lstrip().startswith("{")):
        data = Path(data).read_text()
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "m" not in data:
        raise ValueError("poset JSON needs an integer field 'm'")
    m = data["m"]
    if not isinstance(m, int) or isinstance(m, bool):
        raise ValueError("'m' must be an integer")
    pairs = data.get("covers", data.get("relations", []))
    try:
        pairs = [(int(a), int(b)) for a, b in pairs]
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed relation list: {exc}") from None
    return from_relations(m, pairs)


def dual(p: Poset) -> Poset:
    return Poset(p.m, tuple(zip(*p.lt)))


def topological_order(p: Poset) -> list[int]:
    """Lexicographically smallest topological order (smallest minimal element first)."""
    m = p.m
    indeg = [sum(p.lt[i][j] for i in range(m)) for j in range(m)]
    done = [False] * m
    order = []
    for _ in range(m):
        x = next(j for j in range(m) if not done[j] and indeg[j] == 0)
        done[x] = True
        order.append(x + 1)
        for j in range(m):
            if p.lt[x][j]:
                indeg[j] -= 1
    return order


def naturalize(p: Poset) -> tuple[Poset, Relabeling]:
    order = topological_order(p)
    perm = [0] * p.m
    for new, old in enumerate(order, start=1):
        perm[old - 1] = new
    rl = Relabeling(tuple(perm))
    return p.relabel(rl.as_dict()), rl


def _max_chain_ending(p: Poset) -> list[int]:
    mc = [0] * p.m
    for x in topological_order(p):
        mc[x - 1] = 1 + max((mc[y - 1] for y in p.predecessors(x)), default=0)
    return mc


def chain_stats(p: Poset) -> ChainStats:
    mc = _max_chain_ending(p)
    mcbar = _max_chain_ending(dual(p))
    height = max(mc)
    levels = tuple(frozenset(x + 1 for x in range(p.m) if mc[x] == i) for i in range(1, height + 1))
    return ChainStats(tuple(mc), tuple(mcbar), tuple(sorted(mc)), levels)


def enumerate_posets(m: int) -> Iterator[Poset]:
    """Every labeled strict partial order on {1, ..., m}, each exactly once.

    Candidates are all irreflexive relations, generated pair by pair with
    antisymmetric pairs skipped, then filtered for transitivity.
    """
    if m < 1:
        raise RangeError("m must be positive")
    if m > MAX_EXHAUSTIVE_M:
        raise SizeError(f"exhaustive enumeration is limited to m <= {MAX_EXHAUSTIVE_M}")
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    # each unordered pair is unrelated, i<j or j<i
    for choice in product((0, 1, 2), repeat=len(pairs)):
        lt = [[False] * m for _ in range(m)]
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                lt[i][j] = True
            elif c == 2:
                lt[j][i] = True
        if _is_transitive(m, lt):
            yield Poset(m, tuple(map(tuple, lt)))


def _is_transitive(m: int, lt: list[list[bool]]) -> bool:
    for i in range(m):
        ri = lt[i]
        for j in range(m):
            if ri[j]:
                rj = lt[j]
                for k in range(m):
                    if rj[k] and not ri[k]:
                        return False
    return True


def random_poset(m: int, edge_prob: float | Fraction = Fraction(1, 2), seed: int = 0) -> Poset:
    """Closure of a random DAG whose edges follow a random topological order."""
    rng = random.Random(seed)
    order = list(range(1, m + 1))
    rng.shuffle(order)
    edges = [
        (order[i], order[j])
        for i in range(m) for j in range(i + 1, m)
        if rng.random() < edge_prob
    ]
    return from_relations(m, edges)
