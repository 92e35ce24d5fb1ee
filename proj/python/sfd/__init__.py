"""Spin fake degrees of Weyl groups, computed in exact arithmetic.

Thin re-export of the compiled extension; see `sfd._core` for signatures.
"""

from sfd._core import (  # noqa: F401
    BudgetExceededError,
    EngineError,
    MissingDatasetError,
    basic_spin_closed_form,
    degrees,
    emit_table,
    export_class_dataset,
    export_spin_table,
    fake_degree_table,
    fake_degrees_from_dataset,
    group_order,
    num_positive_roots,
    parse_field_literal,
    split_class_counts,
    supported_types,
    verify,
)

__all__ = [
    "BudgetExceededError",
    "EngineError",
    "MissingDatasetError",
    "basic_spin_closed_form",
    "degrees",
    "emit_table",
    "export_class_dataset",
    "export_spin_table",
    "fake_degree_table",
    "fake_degrees_from_dataset",
    "group_order",
    "num_positive_roots",
    "parse_field_literal",
    "split_class_counts",
    "supported_types",
    "verify",
]
