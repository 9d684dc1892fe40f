from arquiver.qalg.algebra import (
    BoundQuiverAlgebra,
    ConvexRestriction,
    algebras_match,
    compute_path_basis,
    full_convex_subcategory,
    linear_quiver_algebra,
    load_algebra,
    parse_algebra,
    product,
    triangular_matrix_algebra,
)
from arquiver.qalg.extension import (
    ExtensionData,
    fresh_vertex,
    one_point_coextension,
    one_point_coextension_data,
    one_point_extension,
    one_point_extension_data,
    point_module,
)
from arquiver.qalg.quiver import Arrow, Path, Quiver, Relation, format_quiver, parse_quiver, parse_relation

__all__ = [
    "Arrow",
    "BoundQuiverAlgebra",
    "ConvexRestriction",
    "ExtensionData",
    "Path",
    "Quiver",
    "Relation",
    "algebras_match",
    "compute_path_basis",
    "format_quiver",
    "fresh_vertex",
    "full_convex_subcategory",
    "linear_quiver_algebra",
    "load_algebra",
    "one_point_coextension",
    "one_point_coextension_data",
    "one_point_extension",
    "one_point_extension_data",
    "parse_algebra",
    "parse_quiver",
    "parse_relation",
    "point_module",
    "product",
    "triangular_matrix_algebra",
]
