"""Partitions and partial matchings avoiding neighbor patterns."""
from .diagram import Diagram, Role, from_blocks, is_partial_matching, role_of, to_blocks
from .patterns import KCrossing, PatternKind, avoids, count_transients, occurrences

__all__ = [
    "Diagram",
    "KCrossing",
    "PatternKind",
    "Role",
    "avoids",
    "count_transients",
    "from_blocks",
    "is_partial_matching",
    "occurrences",
    "role_of",
    "to_blocks",
]
__version__ = "0.1.0"
