"""HC-obstructions among wheel-free graphs."""

import json

from ._core import (
    ClassificationRecord,
    Graph,
    ObstructaError,
    are_isomorphic,
    build,
    canonical_form,
    classify,
    find_induced_3pc,
    from_graph6,
    hamiltonian_cycle,
    hamiltonian_path,
    has_k4_minor,
    is_two_connected,
    is_wheel_free,
    line_graph,
    parse_edge_list,
    recognize_3pc,
    to_graph6,
)
from . import _core


def is_hc_obstruction(g):
    return json.loads(_core.is_hc_obstruction(g))


def decompose(g):
    return json.loads(_core.decompose(g))


def census(max_n, jobs=1):
    return json.loads(_core.census(max_n, jobs))


def verify(max_n, jobs=1):
    return json.loads(_core.verify(max_n, jobs))


__all__ = [
    "ClassificationRecord",
    "Graph",
    "ObstructaError",
    "are_isomorphic",
    "build",
    "canonical_form",
    "census",
    "classify",
    "decompose",
    "find_induced_3pc",
    "from_graph6",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "has_k4_minor",
    "is_hc_obstruction",
    "is_two_connected",
    "is_wheel_free",
    "line_graph",
    "parse_edge_list",
    "recognize_3pc",
    "to_graph6",
    "verify",
]
