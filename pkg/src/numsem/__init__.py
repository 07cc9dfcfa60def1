"""Exhaustive enumeration and exact statistics of numerical semigroups by genus."""

from .core import (
    AperyTable,
    InvariantRecord,
    SemigroupSet,
    apery,
    invariants,
    minimal_generators,
    pseudo_frobenius,
    semigroup_from_gaps,
    semigroup_from_generators,
)
from .tree import count_genus, count_genus_series, enumerate_genus, iter_semigroups

__all__ = [
    "AperyTable",
    "InvariantRecord",
    "SemigroupSet",
    "apery",
    "invariants",
    "minimal_generators",
    "pseudo_frobenius",
    "semigroup_from_gaps",
    "semigroup_from_generators",
    "count_genus",
    "count_genus_series",
    "enumerate_genus",
    "iter_semigroups",
]

__version__ = "0.1.0"
