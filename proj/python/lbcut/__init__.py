"""Exact minimum length-bounded cuts and multi-cuts on graphs of small tree-width."""

from ._core import (
    ResourceError,
    __version__,
    bfs_distances,
    brute_force_mlbc,
    brute_force_mlbmc,
    count_length_vectors,
    heuristic_decomposition,
    make_butte,
    make_highland,
    parse_graph,
    random_multicolor_instance,
    reduce_clique,
    solve_mlbc,
    solve_mlbmc,
    validate_decomposition,
    verify_cut,
    write_graph,
)

__all__ = [
    "ResourceError",
    "__version__",
    "bfs_distances",
    "brute_force_mlbc",
    "brute_force_mlbmc",
    "count_length_vectors",
    "heuristic_decomposition",
    "make_butte",
    "make_highland",
    "parse_graph",
    "random_multicolor_instance",
    "reduce_clique",
    "solve_mlbc",
    "solve_mlbmc",
    "validate_decomposition",
    "verify_cut",
    "write_graph",
]
