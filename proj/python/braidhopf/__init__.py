"""Exact verification of Hopf algebra structures in braided categories."""

from fractions import Fraction

from ._core import (
    Algebra,
    Check,
    Context,
    Error,
    Filtration,
    Group,
    Morphism,
    Report,
    Status,
    b_adic_filtration,
    build_context,
    group_algebra,
    load_algebra,
    load_group,
    load_morphism,
    magnum,
    parse_algebra,
    run,
    search_weak_projection,
    verify_weak_projection,
)

__all__ = [
    "Algebra",
    "Check",
    "Context",
    "Error",
    "Filtration",
    "Group",
    "Morphism",
    "Report",
    "Status",
    "b_adic_filtration",
    "build_context",
    "group_algebra",
    "load_algebra",
    "load_group",
    "load_morphism",
    "magnum",
    "matrix",
    "parse_algebra",
    "run",
    "search_weak_projection",
    "verify_weak_projection",
]


def matrix(f):
    """Entries of a morphism as nested lists of Fractions."""
    return [[Fraction(x) for x in row] for row in f.rows()]
