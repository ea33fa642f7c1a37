"""Graded and regular ideals of Leavitt path algebras of finite graphs.

Vertex sets go in and come out as lists of vertex names.
"""

import json

from ._core import (
    CutoffExceeded,
    Graph,
    GraphError,
    OracleError,
    UnknownVertex,
    backward_reach,
    bar_closure,
    condition_L,
    cycles,
    double_perp,
    enumerate_hs_sets,
    exit_free_cycle_vertices,
    hs_closure,
    ideal_from_generators,
    is_acyclic,
    is_hereditary,
    is_regular,
    is_saturated,
    laurent_mul,
    laurent_perp_is_zero,
    maximal_graded_ideals,
    oracle_agrees,
    oracle_dimension,
    pc_bijection_check,
    perp,
    quotient,
    regular_vertices,
    tree,
)


def analyze(graph, generators):
    """Regularity report for the ideal generated by `generators`, as a dict."""
    from ._core import _analyze_json

    return json.loads(_analyze_json(graph, list(generators)))


def verify(max_vertices=5, max_edges=8, trials=500, seed=42, prime=2):
    """Run the property suites and return the verification matrix as a dict."""
    from ._core import _verify_json

    return json.loads(_verify_json(max_vertices, max_edges, trials, seed, prime))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
