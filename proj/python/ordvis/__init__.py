"""Ordered-graph obstructions, capped partitions and visibility-graph colourings."""

from ._core import (
    GuardExceeded,
    Graph,
    InternalContradiction,
    PreconditionError,
    clique_number_hfree,
    colour_capped,
    colour_hfree,
    crossing_sequence,
    decompose_capped,
    find_capped_violation,
    find_h_obstruction,
    find_ordered_hole,
    has_crossing_sequence,
    is_capped,
    is_h_free,
    is_ordered_hole_free,
    is_simple_ccw,
    is_valid_segment,
    oracle,
    partition_three_capped,
    random_simple_polygon,
    reach_sets,
    visibility_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
