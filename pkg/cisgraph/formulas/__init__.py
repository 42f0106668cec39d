"""
Closed form totals of named families, extremal bounds, scan objectives and
predicted extremizers.
"""
from cisgraph.formulas.bounds import (
    BOUND_PARAMETERS,
    BoundId,
    BoundSpec,
    bound_value,
    near_equal_parts,
)
from cisgraph.formulas.closed_forms import (
    CLOSED_FORMS,
    closed_form_total,
    has_closed_form,
)
from cisgraph.formulas.extremizers import Extremizer, expected_extremizers
from cisgraph.formulas.objectives import Objective, Sense

__all__ = [
    "BOUND_PARAMETERS",
    "BoundId",
    "BoundSpec",
    "CLOSED_FORMS",
    "Extremizer",
    "Objective",
    "Sense",
    "bound_value",
    "closed_form_total",
    "expected_extremizers",
    "has_closed_form",
    "near_equal_parts",
]
