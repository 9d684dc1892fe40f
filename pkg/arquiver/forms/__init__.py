from arquiver.forms.algebra_forms import (
    bilinear_euler,
    euler_form,
    gldim_le_2_implies_equal,
    relation_counts,
    tits_form,
)
from arquiver.forms.nonnegativity import box_points, fitting_bound, radical_vectors_in_box, weak_nonnegativity_box
from arquiver.forms.unit_form import UnitForm, evaluate

__all__ = [
    "UnitForm",
    "bilinear_euler",
    "box_points",
    "euler_form",
    "evaluate",
    "fitting_bound",
    "gldim_le_2_implies_equal",
    "radical_vectors_in_box",
    "relation_counts",
    "tits_form",
    "weak_nonnegativity_box",
]
