"""Linear extensions, descent statistics and extremal extensions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Iterator, Sequence

from .errors import (
    BudgetError,
    EmptyDescentError,
    EmptySetError,
    NotNaturallyLabeled,
    RangeError,
)
from .poset import Poset, chain_stats

DEFAULT_MAX_EXTENSIONS = 10**7


@dataclass(frozen=True)
class LinExt:
    perm: tuple[int, ...]
    des_set: frozenset[int]
    maj: int
    des: int

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> LinExt:
        perm = tuple(perm)
        ds = frozenset(i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])
        return cls(perm, ds, sum(ds), len(ds))

    def stat(self, k: int) -> int:
        """maj - k*des + C(k+1, 2)."""
        return self.maj - k * self.des + comb(k + 1, 2)

    def __str__(self) -> str:
        sep = "" if len(self.perm) < 10 else " "
        return sep.join(map(str, self.perm))


def is_linear_extension(p: Poset, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(1, p.m + 1)):
        return False
    pos = {x: i for i, x in enumerate(perm)}
    return all(pos[x] < pos[y] for x, y in p.relations())


def linear_extensions(p: Poset, max_count: int = DEFAULT_MAX_EXTENSIONS) -> Iterator[LinExt]:
    """Stream L(P) by backtracking, smallest available minimal element first."""
    m = p.m
    succ = [[j for j in range(m) if p.lt[i][j]] for i in range(m)]
    indeg = [sum(p.lt[i][j] for i in range(m)) for j in range(m)]
    used = [False] * m
    word: list[int] = []
    count = 0

    def rec():
        nonlocal count
        if len(word) == m:
            count += 1
            if count > max_count:
                raise BudgetError(f"more than {max_count} linear extensions")
            yield LinExt.from_perm(word)
            return
        for x in range(m):
            if used[x] or indeg[x]:
                continue
            used[x] = True
            word.append(x + 1)
            for y in succ[x]:
                indeg[y] -= 1
            yield from rec()
            for y in succ[x]:
                indeg[y] += 1
            word.pop()
            used[x] = False

    yield from rec()


def descent_blocks(pi: LinExt | Sequence[int]) -> tuple[frozenset[int], ...]:
    """Maximal decreasing runs of pi, left to right, as sets."""
    perm = pi.perm if isinstance(pi, LinExt) else tuple(pi)
    if not perm:
        return ()
    blocks = []
    cur = [perm[0]]
    for a, b in zip(perm, perm[1:]):
        if a > b:
            cur.append(b)
        else:
            blocks.append(frozenset(cur))
            cur = [b]
    blocks.append(frozenset(cur))
    return tuple(blocks)


def _require_natural(p: Poset) -> None:
    if not p.is_naturally_labeled():
        raise NotNaturallyLabeled(f"{p} is not naturally labeled")


def remove_top_descent(p: Poset, pi: LinExt) -> LinExt:
    """Drop the largest descent by sorting the tail after the second-largest one."""
    _require_natural(p)
    if not is_linear_extension(p, pi.perm):
        raise ValueError(f"{pi} is not a linear extension of {p}")
    if not pi.des_set:
        raise EmptyDescentError(f"{pi} has no descents")
    ds = sorted(pi.des_set)
    j = ds[-2] if len(ds) > 1 else 0
    return LinExt.from_perm(pi.perm[:j] + tuple(sorted(pi.perm[j:])))


def _split_level(sizes: Sequence[int], k: int) -> int:
    """The p with |C_1|+...+|C_{p-1}| < k <= |C_1|+...+|C_p| (1-indexed)."""
    total = 0
    for idx, s in enumerate(sizes, start=1):
        total += s
        if k <= total:
            return idx
    raise RangeError(f"k={k} exceeds the poset size")


def min_maj_extension(p: Poset, k: int) -> tuple[LinExt, int]:
    """Extension attaining min of maj - k*des + C(k+1,2), and that minimum.

    Built as C_1 decreasing, ..., C_{p-1} decreasing, then the |T| smallest
    elements of C_p decreasing, then everything else increasing.
    """
    _require_natural(p)
    if not 0 <= k <= p.m:
        raise RangeError(f"k={k} outside 0..{p.m}")
    if k == 0:
        pi = LinExt.from_perm(range(1, p.m + 1))
        return pi, pi.stat(0)
    levels = chain_stats(p).levels
    lvl = _split_level([len(c) for c in levels], k)
    word: list[int] = []
    for c in levels[: lvl - 1]:
        word.extend(sorted(c, reverse=True))
    t = sorted(levels[lvl - 1])[: k - len(word)]
    word.extend(sorted(t, reverse=True))
    placed = set(word)
    word.extend(x for x in range(1, p.m + 1) if x not in placed)
    pi = LinExt.from_perm(word)
    return pi, pi.stat(k)


def extremal_conditions(p: Poset, pi: LinExt, k: int) -> bool:
    """The three equality conditions for maj - k*des + C(k+1,2) >= b_1+...+b_k.

    Descent blocks are read from the prefix pi_1...pi_k, whose blocks cover
    exactly the first k letters.  For k = 0 the only condition is Des = {}.
    """
    if not set(pi.des_set) <= set(range(1, k + 1)):
        return False
    if k == 0:
        return True
    levels = chain_stats(p).levels
    lvl = _split_level([len(c) for c in levels], k)
    blocks = descent_blocks(pi.perm[:k])
    if len(blocks) != lvl:
        return False
    if any(blocks[i] != levels[i] for i in range(lvl - 1)):
        return False
    return blocks[lvl - 1] <= levels[lvl - 1]


def min_stat_bruteforce(
    p: Poset,
    k: int,
    require_descents: bool = False,
    max_count: int = DEFAULT_MAX_EXTENSIONS,
) -> int:
    """Exhaustive minimum of maj - k*des + C(k+1,2) over L(P).

    With ``require_descents`` only extensions with 1 <= des <= k count.
    """
    _require_natural(p)
    values = [
        pi.stat(k)
        for pi in linear_extensions(p, max_count)
        if not require_descents or 1 <= pi.des <= k
    ]
    if not values:
        raise EmptySetError(f"no extension of {p} with 1 <= des <= {k}")
    return min(values)


def linear_extensions_bruteforce(p: Poset) -> list[tuple[int, ...]]:
    """All permutations passing the extension test; independent of the backtracker."""
    return [w for w in permutations(range(1, p.m + 1)) if is_linear_extension(p, w)]
