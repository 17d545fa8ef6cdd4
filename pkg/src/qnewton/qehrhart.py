"""q-Ehrhart polynomials of order polytopes and their brute-force oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Literal

from .errors import SizeError
from .linext import DEFAULT_MAX_EXTENSIONS, _require_natural, linear_extensions
from .poset import Poset, Relabeling, dual, naturalize, topological_order
from .polyalg import (
    BivarPoly,
    RatFunc,
    RatPolyX,
    ZPoly,
    content_q,
    exact_div,
    gcd_zpoly,
    lagrange_interpolate,
    q_binom,
    q_factorial,
    q_int,
)

Variant = Literal["closed", "interior"]

MAX_LATTICE_M = 8
MAX_LATTICE_N = 12


@dataclass(frozen=True)
class QEhrhartResult:
    """E = N / D with F = N * phi and D = [m]_q! / phi.

    ``F`` is F of the naturalized dual ``natural_dual``; ``E`` is the
    q-Ehrhart polynomial of the input poset's order polytope.
    """

    m: int
    F: BivarPoly
    E: RatPolyX
    N: BivarPoly
    phi: ZPoly
    D: ZPoly
    natural_dual: Poset
    relabeling: Relabeling

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "F": str(self.F),
            "N": str(self.N),
            "phi": str(self.phi),
            "D": str(self.D),
            "E_numerator": str(self.N),
            "E_denominator": str(self.D),
        }


@dataclass(frozen=True)
class WSeries:
    n: int
    poly: ZPoly
    variant: Variant

    def count(self) -> int:
        return self.poly.evaluate(1)


# -- F_P ----------------------------------------------------------------------

def _bivar_mul_raw(a: dict, b: dict) -> dict:
    out: dict[tuple[int, int], int] = {}
    for (i1, k1), v1 in a.items():
        for (i2, k2), v2 in b.items():
            key = (i1 + i2, k1 + k2)
            out[key] = out.get(key, 0) + v1 * v2
    return {key: v for key, v in out.items() if v}


@lru_cache(maxsize=None)
def _descent_product(m: int, s: int) -> tuple[tuple[tuple[int, int], int], ...]:
    """prod_{i=1}^m ([i-s]_q + q^(i-s) x) as Laurent-in-q terms."""
    acc = {(0, 0): 1}
    for i in range(1, m + 1):
        factor = {(e, 0): v for e, v in q_int(i - s).items()}
        factor[(i - s, 1)] = factor.get((i - s, 1), 0) + 1
        acc = _bivar_mul_raw(acc, factor)
    return tuple(sorted(acc.items()))


def compute_F(p: Poset, max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> BivarPoly:
    """F_P = sum over L(P) of q^maj(pi) prod_i ([i - des]_q + q^(i - des) x).

    Extensions sharing a descent number share the product, so the sum is
    taken as sum_s (sum_{des(pi)=s} q^maj(pi)) * product_s.
    """
    _require_natural(p)
    maj_by_des: dict[int, dict[int, int]] = {}
    for pi in linear_extensions(p, max_extensions):
        row = maj_by_des.setdefault(pi.des, {})
        row[pi.maj] = row.get(pi.maj, 0) + 1
    total: dict[tuple[int, int], int] = {}
    for s, majs in maj_by_des.items():
        prod_s = _descent_product(p.m, s)
        for mj, cnt in majs.items():
            for (i, k), v in prod_s:
                key = (i + mj, k)
                total[key] = total.get(key, 0) + cnt * v
    # raises on a negative q-exponent, which the degree bound rules out
    return BivarPoly((key, v) for key, v in total.items() if v)


def compute_qehrhart(p_input: Poset, max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> QEhrhartResult:
    """q-Ehrhart polynomial of O(p_input) together with F, N, phi and D."""
    m = p_input.m
    nat, rl = naturalize(dual(p_input))
    F = compute_F(nat, max_extensions)
    fact = q_factorial(m)
    phi = gcd_zpoly(content_q(F), fact)
    N = exact_div(F, phi)
    D = fact.exact_quotient(phi)
    E = RatPolyX.from_bivar(F, fact)
    (_, lead) = N.leading_term()
    assert lead > 0, "numerator leading coefficient must be positive"
    assert phi.coeff(0) == 1 and phi.lc() == 1
    return QEhrhartResult(m, F, E, N, phi, D, nat, rl)


# -- lattice points -------------------------------------------------------------

def count_lattice_points(
    p: Poset,
    n: int,
    variant: Variant = "closed",
    max_m: int = MAX_LATTICE_M,
    max_n: int = MAX_LATTICE_N,
) -> WSeries:
    """W(n O(P), q) or W(n O(P)°, q) by depth-first assignment.

    Coordinates are assigned along a topological order; each choice raises
    the lower bounds of the element's successors.  Subtrees are memoized on
    (depth, remaining lower bounds).
    """
    if n < 0:
        raise ValueError("dilation factor must be nonnegative")
    if p.m > max_m or n > max_n:
        raise SizeError(f"lattice enumeration limited to m <= {max_m}, n <= {max_n}")
    if variant == "closed":
        lo0, hi, gap = 0, n, 0
    elif variant == "interior":
        lo0, hi, gap = 1, n - 1, 1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    order = [x - 1 for x in topological_order(p)]
    m = p.m
    pos = {x: d for d, x in enumerate(order)}
    # successors as depth indices
    succ = [[pos[y] for y in range(m) if p.lt[x][y]] for x in order]
    memo: dict[tuple, dict[int, int]] = {}

    def rec(depth: int, lows: tuple[int, ...]) -> dict[int, int]:
        # lows[j] is the lower bound for depth + j
        if depth == m:
            return {0: 1}
        key = (depth, lows)
        if key in memo:
            return memo[key]
        out: dict[int, int] = {}
        for v in range(lows[0], hi + 1):
            nxt = list(lows[1:])
            for d in succ[depth]:
                j = d - depth - 1
                if nxt[j] < v + gap:
                    nxt[j] = v + gap
            for e, c in rec(depth + 1, tuple(nxt)).items():
                out[e + v] = out.get(e + v, 0) + c
        memo[key] = out
        return out

    poly = ZPoly(rec(0, (lo0,) * m)) if hi >= lo0 else ZPoly()
    return WSeries(n, poly, variant)


def lattice_points_bruteforce(p: Poset, n: int, variant: Variant = "closed") -> ZPoly:
    """Plain filter over the whole box; small cases only."""
    rels = p.relations()
    if variant == "closed":
        rng, ok = range(0, n + 1), (lambda a, b: a <= b)
    else:
        rng, ok = range(1, n), (lambda a, b: a < b)
    out: dict[int, int] = {}
    for pt in product(rng, repeat=p.m):
        if all(ok(pt[i - 1], pt[j - 1]) for i, j in rels):
            s = sum(pt)
            out[s] = out.get(s, 0) + 1
    return ZPoly(out)


@lru_cache(maxsize=None)
def _nodes(count: int) -> tuple[RatFunc, ...]:
    return tuple(RatFunc.coerce(q_int(n)) for n in range(count))


def oracle_interpolation(p: Poset) -> RatPolyX:
    """Interpolate ([n]_q, W(n O(P), q)) for n = 0..m; independent of F."""
    nodes = _nodes(p.m + 1)
    data = [(nodes[n], count_lattice_points(p, n).poly) for n in range(p.m + 1)]
    return lagrange_interpolate(data)


# -- identities -----------------------------------------------------------------

def check_reciprocity(p: Poset, n: int, result: QEhrhartResult | None = None) -> bool:
    """E([-n]_q) == (-1)^m W(n O(P)°, 1/q)."""
    if n < 1:
        raise ValueError("reciprocity is checked for n >= 1")
    E = (result or compute_qehrhart(p)).E
    lhs = E.evaluate(q_int(-n))
    w = count_lattice_points(p, n, "interior").poly
    rhs = (w.substitute_inverse() * (-1) ** p.m).to_ratfunc()
    return lhs == rhs


def p_partitions(p: Poset, n: int) -> ZPoly:
    """sum over order-reversing maps sigma: P -> {0..n} of q^|sigma|."""
    rels = p.relations()
    out: dict[int, int] = {}
    for sigma in product(range(n + 1), repeat=p.m):
        if all(sigma[x - 1] >= sigma[y - 1] for x, y in rels):
            s = sum(sigma)
            out[s] = out.get(s, 0) + 1
    return ZPoly(out)


def check_lemma_qbinom(p: Poset, n: int) -> bool:
    """P-partitions bounded by n against sum_pi q^maj [n - des + m choose m]_q."""
    _require_natural(p)
    m = p.m
    rhs = ZPoly()
    for pi in linear_extensions(p):
        top = n - pi.des + m
        if top >= m:  # an empty sum when des > n
            rhs = rhs + q_binom(top, m).shift(pi.maj)
    return p_partitions(p, n) == rhs


def classical_count_from_F(F: BivarPoly, m: int, n: int) -> int:
    """|n O(P) ∩ Z^m| from F(1, n) / m!, the q = 1 specialization."""
    value, rem = divmod(F.evaluate(1, n), math.factorial(m))
    assert rem == 0
    return value


__all__ = [
    "QEhrhartResult",
    "WSeries",
    "compute_F",
    "compute_qehrhart",
    "count_lattice_points",
    "lattice_points_bruteforce",
    "oracle_interpolation",
    "check_reciprocity",
    "check_lemma_qbinom",
    "p_partitions",
    "classical_count_from_F",
]
