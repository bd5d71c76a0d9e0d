"""Exact verification of Fibonacci-harmonic summation identities."""

from ._fibharm import (
    BadAssignment,
    EncodingBug,
    FibharmError,
    NotFound,
    ParseError,
    __version__,
    audit,
    binomial,
    evaluate,
    families,
    fibonacci,
    harmonic,
    identities,
    lucas,
    sweep,
    verify_report,
)

__all__ = [
    "BadAssignment",
    "EncodingBug",
    "FibharmError",
    "NotFound",
    "ParseError",
    "__version__",
    "audit",
    "binomial",
    "evaluate",
    "families",
    "fibonacci",
    "harmonic",
    "identities",
    "lucas",
    "sweep",
    "verify_report",
]
