"""
Checks on finished components: multisections, middle terms, dimension vector
counts, Hom orders and the dimensions of module varieties.
"""

from arquiver.analysis.counting import (
    DimensionVectorCount,
    brenner_bound_check,
    count_bounds,
    count_by_dimvector,
    count_table,
    middle_term_count,
)
from arquiver.analysis.multisection import (
    MultisectionParts,
    multisection_cover_check,
    multisection_parts,
    multisection_search,
    nonsectional_triples,
    tau_orbits,
    validate_multisection,
)
from arquiver.analysis.orders import (
    OrderVerdict,
    check_ext_step,
    finite_type_deg_order,
    hom_order,
    orbit_dimension,
    orbit_dimension_drop,
)
from arquiver.analysis.varieties import (
    VarietyReport,
    ext_end_inequality,
    group_dimension,
    periodic_variety_dimension,
    variety_dimension_formulas,
)

__all__ = [
    "DimensionVectorCount",
    "MultisectionParts",
    "OrderVerdict",
    "VarietyReport",
    "brenner_bound_check",
    "check_ext_step",
    "count_bounds",
    "count_by_dimvector",
    "count_table",
    "ext_end_inequality",
    "finite_type_deg_order",
    "group_dimension",
    "hom_order",
    "middle_term_count",
    "multisection_cover_check",
    "multisection_parts",
    "multisection_search",
    "nonsectional_triples",
    "orbit_dimension",
    "orbit_dimension_drop",
    "periodic_variety_dimension",
    "tau_orbits",
    "validate_multisection",
    "variety_dimension_formulas",
]
