"""Exact q-Ehrhart polynomials of order polytopes and their Newton polygons."""

from .errors import QNewtonError
from .linext import LinExt, descent_blocks, linear_extensions, min_maj_extension
from .newton import LatticePolygon, ShapeSpec, newton_polygon, shape_polygon
from .poset import (
    Poset,
    antichain,
    chain,
    chain_stats,
    dual,
    enumerate_posets,
    from_covers,
    load_poset,
    naturalize,
)
from .polyalg import BivarPoly, RatFunc, RatPolyX, ZPoly, q_binom, q_factorial, q_int
from .qehrhart import compute_F, compute_qehrhart, oracle_interpolation

__version__ = "0.1.0"

__all__ = [
    "QNewtonError",
    "LinExt",
    "descent_blocks",
    "linear_extensions",
    "min_maj_extension",
    "LatticePolygon",
    "ShapeSpec",
    "newton_polygon",
    "shape_polygon",
    "Poset",
    "antichain",
    "chain",
    "chain_stats",
    "dual",
    "enumerate_posets",
    "from_covers",
    "load_poset",
    "naturalize",
    "BivarPoly",
    "RatFunc",
    "RatPolyX",
    "ZPoly",
    "q_binom",
    "q_factorial",
    "q_int",
    "compute_F",
    "compute_qehrhart",
    "oracle_interpolation",
]
