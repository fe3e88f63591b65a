from ._core import (
    DomainError,
    Placement,
    ValidationError,
    border,
    contains,
    count_avoiders,
    gk_transform,
    invert,
    knuth_neighbors,
    label,
    phi,
    phi_star,
    pivots,
    rs,
    suite_names,
    verify,
)

__all__ = [
    "DomainError",
    "Placement",
    "ValidationError",
    "border",
    "contains",
    "count_avoiders",
    "gk_transform",
    "invert",
    "knuth_neighbors",
    "label",
    "phi",
    "phi_star",
    "pivots",
    "rs",
    "suite_names",
    "verify",
]
