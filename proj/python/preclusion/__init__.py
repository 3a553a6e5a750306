"""Exact matching preclusion, s-restricted matching preclusion and anti-Kekule numbers."""

import json

from ._core import (
    BudgetError,
    Error,
    Graph,
    OracleLimitError,
    ParameterError,
    ParseError,
    PreconditionError,
    TagMismatchError,
    __version__,
    brute_force_matching_number,
    complete,
    complete_bipartite,
    compute_v_e,
    cycle,
    emit,
    has_perfect_matching,
    hypercube,
    matching_number,
    max_matching,
    parse,
    path,
    petersen,
    random_bipartite_with_pm,
    run_cli,
    satisfies,
    verify_equivalence,
)
from . import _core


def solve(graph, mode, s=None, budget=None, deterministic=True, jobs=1):
    """Exact optimum as a certificate dict; "value" is an int, "INFINITY" or None."""
    return json.loads(_core._solve(graph, mode, s, budget, deterministic, jobs))


def brute_force_solve(graph, mode, s=None, edge_limit=16):
    return json.loads(_core._brute_force_solve(graph, mode, s, edge_limit))


def build_reduction(graph):
    return _core._build_reduction(graph)


def verify_mps_hypercube(n, s):
    return json.loads(_core._verify_mps_hypercube(n, s))


__all__ = [name for name in dir() if not name.startswith("_")]
