"""Distance Estrada index of connected graphs, with the bounds that relate it to simple invariants."""

from ._core import (
    ConvergenceError,
    Graph,
    ParseError,
    PreconditionError,
    adjacency_spectrum,
    bounds,
    bounds_json,
    complete,
    complete_multipartite,
    compute_json,
    cycle,
    dee,
    distance_matrix,
    distance_spectrum,
    eigvalsh,
    estrada,
    gnp,
    log_dee,
    path,
    petersen,
    star,
    verify,
)

__all__ = [
    "ConvergenceError",
    "Graph",
    "ParseError",
    "PreconditionError",
    "adjacency_spectrum",
    "bounds",
    "bounds_json",
    "complete",
    "complete_multipartite",
    "compute_json",
    "cycle",
    "dee",
    "distance_matrix",
    "distance_spectrum",
    "eigvalsh",
    "estrada",
    "gnp",
    "log_dee",
    "path",
    "petersen",
    "star",
    "verify",
]
