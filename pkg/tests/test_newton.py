from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qnewton.errors import SpecError, ZeroPolynomial
from qnewton.newton import (
    LatticePolygon,
    ShapeSpec,
    check_profile,
    newton_polygon,
    qrange_profile,
    shape_polygon,
    verify_conjecture,
    verify_main_theorem,
    write_tsv,
)
from qnewton.poset import antichain, chain, chain_stats, from_covers, naturalize, random_poset
from qnewton.polyalg import BivarPoly
from qnewton.qehrhart import compute_F, compute_qehrhart


def _extreme_points(points):
    """Extreme points by a direct test: p is extreme iff it is not in any
    triangle or segment spanned by the other points."""
    pts = sorted(set(points))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def in_segment(p, a, b):
        return (cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))

    def in_triangle(p, a, b, c):
        d = [cross(a, b, p), cross(b, c, p), cross(c, a, p)]
        return all(v >= 0 for v in d) or all(v <= 0 for v in d)

    out = set()
    for p in pts:
        others = [o for o in pts if o != p]
        covered = any(in_segment(p, a, b) for i, a in enumerate(others) for b in others[i + 1:])
        covered = covered or any(
            in_triangle(p, a, b, c) and cross(a, b, c) != 0
            for i, a in enumerate(others) for j, b in enumerate(others[i + 1:], i + 1)
            for c in others[j + 1:])
        if not covered:
            out.add(p)
    return out


def test_newton_examples():
    assert newton_polygon(BivarPoly({(1, 1): 1, (0, 0): 1})).vertices == ((0, 0), (1, 1))
    f = compute_F(antichain(2))
    assert newton_polygon(f).vertices == ((0, 0), (1, 0), (3, 2), (2, 2))
    assert newton_polygon(BivarPoly({(0, 0): 5})).vertices == ((0, 0),)
    with pytest.raises(ZeroPolynomial):
        newton_polygon(BivarPoly())


def test_staircase_polygon():
    listed = {(0, 0), (1, 1), (3, 2), (5, 3), (8, 4), (10, 4), (6, 0)}
    poly = shape_polygon(ShapeSpec((1, 2, 2, 3), 10))
    assert poly == LatticePolygon.hull(listed)
    assert all(poly.on_boundary(p) for p in listed)
    # (3,2) sits on the edge from (1,1) to (5,3), so it is not a corner
    assert set(poly.vertices) == listed - {(3, 2)}
    assert LatticePolygon(((1, 1), (5, 3))).contains((3, 2))


def test_shape_examples():
    assert shape_polygon(((1, 1), 3)) == LatticePolygon.hull(
        [(0, 0), (1, 1), (2, 2), (3, 2), (1, 0)])
    assert shape_polygon(((1, 1), 3)) == newton_polygon(compute_F(antichain(2)))
    seg = shape_polygon(((1, 1), 2))
    assert seg.vertices == ((0, 0), (2, 2))
    assert seg == newton_polygon(compute_qehrhart(antichain(2)).N)


@pytest.mark.parametrize("a,h", [((), 3), ((0, 1), 3), ((2, 1), 5), ((1, 2), 2)])
def test_shape_spec_errors(a, h):
    with pytest.raises(SpecError):
        ShapeSpec(a, h)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=9))
def test_hull_against_extreme_points(points):
    poly = LatticePolygon.hull(points)
    assert set(poly.vertices) == _extreme_points(points)
    assert poly.is_convex()
    assert all(poly.contains(p) for p in points)
    assert poly.vertices[0] == min(poly.vertices)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=5).map(sorted), st.integers(0, 6))
def test_shape_vertex_bound(a, extra):
    s = ShapeSpec(tuple(a), sum(a) + extra)
    poly = shape_polygon(s)
    assert len(poly) <= len(a) + 3
    assert set(poly.vertices) <= set(s.generators())
    assert all(poly.contains(g) for g in s.generators())


def test_degenerate_polygons():
    assert LatticePolygon.hull([(2, 2), (2, 2)]).vertices == ((2, 2),)
    seg = LatticePolygon.hull([(0, 0), (1, 1), (3, 3)])
    assert seg.vertices == ((0, 0), (3, 3))
    assert seg.contains((2, 2)) and not seg.contains((2, 1))
    assert LatticePolygon.hull([]).vertices == ()


def test_theorem_examples():
    rep = verify_main_theorem(chain(3))
    assert rep.passed and rep.expected == shape_polygon(((1, 2, 3), 6))
    rep = verify_main_theorem(antichain(2))
    assert rep.passed and rep.a == (1, 1) and rep.h == 3
    rep = verify_conjecture(antichain(2))
    assert rep.passed and rep.h == 2
    rep = verify_conjecture(chain(2))
    r = compute_qehrhart(chain(2))
    assert rep.passed and rep.h == 3 and r.N == r.F
    assert rep.expected == shape_polygon(((1, 2), 3))


def test_theorems_exhaustive(corpus_upto4):
    for p in corpus_upto4:
        r = compute_qehrhart(p)
        main = verify_main_theorem(p, r.F)
        conj = verify_conjecture(p, r)
        assert main.passed and conj.passed
        assert main.h == conj.h + r.phi.degree()


def test_profile_examples(fan):
    nat, _ = naturalize(fan)
    F = compute_F(nat)
    b = chain_stats(nat).b
    prof = qrange_profile(F)
    assert prof[0] == (0, 0, comb(3, 2))
    assert [qmax for _, _, qmax in prof[1:]] == [comb(3, 2) + k for k in (1, 2, 3)]
    assert [qmin for _, qmin, _ in prof[1:]] == [sum(b[:k]) for k in (1, 2, 3)]
    assert check_profile(F, 3, b)
    assert not check_profile(F, 3, (1, 1, 1))


@settings(max_examples=30, deadline=None)
@given(prob=st.sampled_from([0.2, 0.35, 0.5]), seed=st.integers(0, 10**6))
def test_profile_random_m6(prob, seed):
    nat, _ = naturalize(random_poset(6, prob, seed))
    assert check_profile(compute_F(nat), 6, chain_stats(nat).b)


def test_tsv_export(tmp_path):
    poly = newton_polygon(compute_F(antichain(2)))
    path = write_tsv(poly, tmp_path / "nt.tsv")
    assert path.read_text() == "0\t0\n1\t0\n3\t2\n2\t2\n"


def test_staircase_poset():
    p = from_covers(4, [(1, 2), (2, 4), (3, 4)])
    rep = verify_main_theorem(p)
    assert rep.passed and rep.a == (1, 2, 2, 3) and rep.h == 10
    assert rep.actual == shape_polygon(((1, 2, 2, 3), 10))
