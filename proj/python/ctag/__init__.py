"""Python bindings for the ctag QAOA scheduler."""

from ._ctag import (
    Architecture,
    Metrics,
    ParseError,
    ProblemGraph,
    ScheduledCircuit,
    ValidationError,
    VerificationReport,
    architecture,
    astar_mapping,
    clique,
    clique_pattern,
    meet_cycle,
    metrics,
    predicted_depth,
    random_graph,
    read_graph,
    schedule,
    verify,
)

__all__ = [
    "Architecture",
    "Metrics",
    "ParseError",
    "ProblemGraph",
    "ScheduledCircuit",
    "ValidationError",
    "VerificationReport",
    "architecture",
    "astar_mapping",
    "clique",
    "clique_pattern",
    "meet_cycle",
    "metrics",
    "predicted_depth",
    "random_graph",
    "read_graph",
    "schedule",
    "verify",
]
