from arquiver.tquiver.translation_quiver import (
    TranslationQuiver,
    TVertex,
    add_labels,
    label_additivity_check,
    make_label,
    mesh_check,
)
from arquiver.tquiver.builders import build_stable_tube, build_za_window, tube_id
from arquiver.tquiver.cyclic import (
    cyclic_components,
    cyclic_components_check,
    cyclic_part,
    cyclic_vertices,
    scc_cyclic,
    support_algebra,
    support_of_subquiver,
)
from arquiver.tquiver.structure import (
    almost_cyclic_check,
    boundary_reaching_path,
    classify_tube,
    coherence_check,
    is_sectional,
    mouth,
    sectional_paths,
    sectional_steps,
)
from arquiver.tquiver.transforms import disjoint_union, opposite, relabel
from arquiver.tquiver.io import format_tquiver, parse_tquiver, read_tquiver, to_dot, write_tquiver

__all__ = [
    "TVertex",
    "TranslationQuiver",
    "add_labels",
    "almost_cyclic_check",
    "boundary_reaching_path",
    "build_stable_tube",
    "build_za_window",
    "classify_tube",
    "coherence_check",
    "cyclic_components",
    "cyclic_components_check",
    "cyclic_part",
    "cyclic_vertices",
    "disjoint_union",
    "format_tquiver",
    "is_sectional",
    "label_additivity_check",
    "make_label",
    "mesh_check",
    "mouth",
    "opposite",
    "parse_tquiver",
    "read_tquiver",
    "relabel",
    "scc_cyclic",
    "sectional_paths",
    "sectional_steps",
    "support_algebra",
    "support_of_subquiver",
    "to_dot",
    "tube_id",
    "write_tquiver",
]
