from arquiver.reps.representation import (
    Representation,
    dimension_vector,
    direct_sum,
    dual,
    extend_to,
    injective,
    is_sincere,
    projective,
    restrict_to,
    simple,
    subrepresentation,
    support,
    thin_module,
    validate,
    zero_representation,
)
from arquiver.reps.homological import (
    HomSpace,
    ProjectiveCover,
    euler_characteristic,
    ext_dim,
    global_dimension,
    hom,
    hom_dimension,
    hom_vanishing_check,
    injective_dimension,
    is_brick,
    is_isomorphic_proxy,
    proj_dim,
    projective_cover,
    radical,
    syzygy,
    syzygy_with_inclusion,
    top_dimension_vector,
    top_generators,
)
from arquiver.reps.io import format_representations, parse_representations, read_representations, write_representations

__all__ = [
    "HomSpace",
    "ProjectiveCover",
    "Representation",
    "dimension_vector",
    "direct_sum",
    "dual",
    "euler_characteristic",
    "ext_dim",
    "extend_to",
    "format_representations",
    "global_dimension",
    "hom",
    "hom_dimension",
    "hom_vanishing_check",
    "injective",
    "injective_dimension",
    "is_brick",
    "is_isomorphic_proxy",
    "is_sincere",
    "parse_representations",
    "proj_dim",
    "projective",
    "projective_cover",
    "radical",
    "read_representations",
    "restrict_to",
    "simple",
    "subrepresentation",
    "support",
    "syzygy",
    "syzygy_with_inclusion",
    "thin_module",
    "top_dimension_vector",
    "top_generators",
    "validate",
    "write_representations",
    "zero_representation",
]
