"""Exact effective resistance on small graphs.

Resistances come back as fractions.Fraction; spectra as ascending
lists of (value, multiplicity) pairs.
"""

from ._resist import (
    CacheError,
    Graph,
    GuardError,
    InfiniteResistance,
    InvalidArgument,
    ParseError,
    are_isomorphic,
    canonical_graph,
    canonical_graph6,
    check_lemmas,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    enumerate_connected,
    find_collisions,
    kmn_spectrum,
    network_resistance,
    parallel,
    path_graph,
    resistance,
    resistance_matrix,
    resistance_spectrum,
    series,
    spanning_tree_count,
    spectrum_json,
    verify_drs,
)

__all__ = [name for name in dir() if not name.startswith("_")]
