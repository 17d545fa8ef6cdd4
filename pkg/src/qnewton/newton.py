"""Newton polygons in the (q, x) plane and the polygon family C(a; h)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from .errors import SpecError, ZeroPolynomial
from .poset import Poset, chain_stats, dual, naturalize
from .polyalg import BivarPoly
from .qehrhart import QEhrhartResult, compute_F, compute_qehrhart

Point = tuple[int, int]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class LatticePolygon:
    """Convex lattice polygon, vertices counterclockwise from the lexicographic minimum.

    Collinear boundary points are dropped, so two polygons are equal exactly
    when their vertex tuples are.  Segments and single points are allowed.
    """

    vertices: tuple[Point, ...]

    @classmethod
    def hull(cls, points: Iterable[Sequence[int]]) -> LatticePolygon:
        """Andrew's monotone chain, exact integer arithmetic."""
        pts = sorted({(int(a), int(b)) for a, b in points})
        if len(pts) <= 1:
            return cls(tuple(pts))
        lower: list[Point] = []
        for p in pts:
            while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
                lower.pop()
            lower.append(p)
        upper: list[Point] = []
        for p in reversed(pts):
            while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
                upper.pop()
            upper.append(p)
        verts = lower[:-1] + upper[:-1]
        if len(verts) == 2 and verts[0] == verts[1]:
            verts = verts[:1]
        return cls(tuple(verts))

    def __len__(self) -> int:
        return len(self.vertices)

    def contains(self, pt: Sequence[int]) -> bool:
        """Closed containment, exact."""
        v = self.vertices
        pt = (pt[0], pt[1])
        if len(v) == 1:
            return pt == v[0]
        if len(v) == 2:
            a, b = v
            return (_cross(a, b, pt) == 0
                    and min(a[0], b[0]) <= pt[0] <= max(a[0], b[0])
                    and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]))
        return all(_cross(v[i], v[(i + 1) % len(v)], pt) >= 0 for i in range(len(v)))

    def on_boundary(self, pt: Sequence[int]) -> bool:
        v = self.vertices
        if len(v) <= 2:
            return self.contains(pt)
        return any(
            LatticePolygon((v[i], v[(i + 1) % len(v)])).contains(pt) for i in range(len(v))
        )

    def is_convex(self) -> bool:
        v = self.vertices
        if len(v) <= 2:
            return True
        return all(_cross(v[i], v[(i + 1) % len(v)], v[(i + 2) % len(v)]) > 0
                   for i in range(len(v)))

    def to_tsv(self) -> str:
        return "".join(f"{a}\t{b}\n" for a, b in self.vertices)

    def __str__(self) -> str:
        return " -- ".join(f"({a},{b})" for a, b in self.vertices)


def newton_polygon(f: BivarPoly) -> LatticePolygon:
    if not f:
        raise ZeroPolynomial("the zero polynomial has no Newton polygon")
    return LatticePolygon.hull(f.support())


@dataclass(frozen=True)
class ShapeSpec:
    a: tuple[int, ...]
    h: int

    def __post_init__(self):
        a = tuple(self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise SpecError("a must be nonempty")
        if a[0] < 1 or any(x > y for x, y in zip(a, a[1:])):
            raise SpecError(f"a must be nondecreasing positive integers, got {a}")
        if self.h < sum(a):
            raise SpecError(f"h={self.h} is below a_1+...+a_m={sum(a)}")

    def generators(self) -> list[Point]:
        m = len(self.a)
        pts = [(0, 0)]
        total = 0
        for i, ai in enumerate(self.a, start=1):
            total += ai
            pts.append((total, i))
        pts += [(self.h, m), (self.h - m, 0)]
        return pts


def shape_polygon(s: ShapeSpec | tuple[Sequence[int], int]) -> LatticePolygon:
    """C(a_1, ..., a_m; h)."""
    if not isinstance(s, ShapeSpec):
        s = ShapeSpec(tuple(s[0]), s[1])
    return LatticePolygon.hull(s.generators())


def qrange_profile(f: BivarPoly) -> list[tuple[int, float | int, float | int]]:
    """(k, q_min, q_max) of [x^k] f for k = 0..deg_x f; zero slices give (inf, -inf)."""
    if not f:
        raise ZeroPolynomial("empty profile")
    return [(k, f.slice(k).q_min(), f.slice(k).q_max()) for k in range(f.x_degree() + 1)]


@dataclass
class TheoremReport:
    """Outcome of one polygon-shape check, with everything needed to replay it."""

    name: str
    poset: Poset
    passed: bool
    polynomial: BivarPoly
    actual: LatticePolygon
    expected: LatticePolygon
    a: tuple[int, ...]
    h: int
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "poset": self.poset.to_json(),
            "polynomial": str(self.polynomial),
            "actual_polygon": [list(v) for v in self.actual.vertices],
            "expected_polygon": [list(v) for v in self.expected.vertices],
            "a": list(self.a),
            "h": self.h,
            **self.details,
        }


def verify_main_theorem(p_input: Poset, F: BivarPoly | None = None) -> TheoremReport:
    """NT(F) == C(b; C(m+1, 2)) for F of the naturalized dual of p_input."""
    nat, _ = naturalize(dual(p_input))
    if F is None:
        F = compute_F(nat)
    b = chain_stats(nat).b
    h = comb(p_input.m + 1, 2)
    actual = newton_polygon(F)
    expected = shape_polygon(ShapeSpec(b, h))
    return TheoremReport("main_theorem", p_input, actual == expected, F, actual, expected, b, h)


def verify_conjecture(p_input: Poset, result: QEhrhartResult | None = None) -> TheoremReport:
    """NT(N) == C(a; h) with a the sorted mcbar values and h = C(m+1,2) - deg phi."""
    if result is None:
        result = compute_qehrhart(p_input)
    a = tuple(sorted(chain_stats(p_input).mcbar))
    r = result.phi.degree()
    h = comb(p_input.m + 1, 2) - r
    actual = newton_polygon(result.N)
    ok = h >= sum(a)
    expected = shape_polygon(ShapeSpec(a, h)) if ok else LatticePolygon(())
    ok = ok and actual == expected
    return TheoremReport("conjecture", p_input, ok, result.N, actual, expected, a, h,
                         {"phi": str(result.phi), "deg_phi": r})


def check_profile(F: BivarPoly, m: int, b: Sequence[int]) -> bool:
    """q_max([x^k]F) = C(m,2)+k and q_min([x^k]F) = b_1+...+b_k for k >= 1; [x^0] spans 0..C(m,2)."""
    prof = qrange_profile(F)
    if len(prof) != m + 1:
        return False
    if prof[0] != (0, 0, comb(m, 2)):
        return False
    return all(qmax == comb(m, 2) + k and qmin == sum(b[:k]) for k, qmin, qmax in prof[1:])


def write_tsv(polygon: LatticePolygon, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(polygon.to_tsv())
    return path


__all__ = [
    "LatticePolygon",
    "ShapeSpec",
    "TheoremReport",
    "newton_polygon",
    "shape_polygon",
    "qrange_profile",
    "verify_main_theorem",
    "verify_conjecture",
    "check_profile",
    "write_tsv",
]
