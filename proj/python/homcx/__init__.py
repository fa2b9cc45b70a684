"""Graph Hom complexes, the G_{k,X} construction, and Z/2 homology."""

import json as _json

from ._core import (
    CapExceeded,
    Graph,
    InputError,
    SimplicialComplex,
    ball_subgraph,
    barycentric_subdivision,
    betti,
    betti_equal,
    bfs_distances,
    build_g_kx,
    choose_k,
    clique_complex,
    complete_graph,
    cover_nerve,
    cycle_graph,
    diameter,
    dismantle,
    enumerate_homs,
    euler_characteristic,
    exponential_graph,
    find_dominated,
    full_simplex,
    hom_complex_exponential,
    hom_complex_order,
    induced_subgraph,
    intersection_subgraph,
    is_graph_map,
    looped_point,
    looped_vertices,
    neighborhood,
    nerve,
    path_graph,
    product,
    random_dismantlable_graph,
    simplex_boundary,
    vertex_type,
)
from ._core import conjecture41_json as _conjecture41_json
from ._core import verify_universality_json as _verify_universality_json

__all__ = [
    "CapExceeded",
    "Graph",
    "InputError",
    "SimplicialComplex",
    "ball_subgraph",
    "barycentric_subdivision",
    "betti",
    "betti_equal",
    "bfs_distances",
    "build_g_kx",
    "choose_k",
    "clique_complex",
    "complete_graph",
    "conjecture41",
    "cover_nerve",
    "cycle_graph",
    "diameter",
    "dismantle",
    "enumerate_homs",
    "euler_characteristic",
    "exponential_graph",
    "find_dominated",
    "full_simplex",
    "hom_complex_exponential",
    "hom_complex_order",
    "induced_subgraph",
    "intersection_subgraph",
    "is_graph_map",
    "looped_point",
    "looped_vertices",
    "neighborhood",
    "nerve",
    "path_graph",
    "product",
    "random_dismantlable_graph",
    "simplex_boundary",
    "verify_universality",
    "vertex_type",
]


def verify_universality(t, x, k=None, max_cells=5_000_000, via="exp"):
    """Run the full universality verification and return the report dict."""
    return _json.loads(_verify_universality_json(t, x, k, max_cells, via))


def conjecture41(x, max_cells=5_000_000):
    """The k = 1 experiment for T = K_2; returns the reported comparison."""
    return _json.loads(_conjecture41_json(x, max_cells))
