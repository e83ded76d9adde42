"""Vincular pattern posets: containment, intervals and Moebius values."""

from ._core import (
    Interval,
    NotApplicableError,
    NotComparableError,
    Permutation,
    VincularScheme,
    __version__,
    classify_single_occurrence,
    contains,
    count_occurrences,
    covered_by,
    direct_sum,
    interval,
    is_monotone,
    leq,
    mobius,
    mobius_bruteforce,
    mobius_closed_form,
    occurrences,
    order_isomorphic,
    remove_entry,
    two_cover_grid_mobius,
)

__all__ = [
    "Interval",
    "NotApplicableError",
    "NotComparableError",
    "Permutation",
    "VincularScheme",
    "__version__",
    "classify_single_occurrence",
    "contains",
    "count_occurrences",
    "covered_by",
    "direct_sum",
    "interval",
    "is_monotone",
    "leq",
    "mobius",
    "mobius_bruteforce",
    "mobius_closed_form",
    "occurrences",
    "order_isomorphic",
    "remove_entry",
    "two_cover_grid_mobius",
]
