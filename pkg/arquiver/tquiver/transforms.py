"""
Opposites, disjoint unions and renamings of translation quivers.
"""

from dataclasses import replace

from arquiver.tquiver.translation_quiver import TranslationQuiver

__all__ = ["disjoint_union", "opposite", "relabel"]


def opposite(quiver):
    """
    Reverse every arrow, invert the translation and swap the projective and injective flags.

    ``opposite(opposite(q)) == q``.
    """
    vertices = [replace(v, projective=v.injective, injective=v.projective) for v in (quiver.vertex(x) for x in quiver.vertices)]
    arrows = [(t, s) for s, t in quiver.arrows]
    tau = {y: x for x, y in quiver.tau.items()}
    name = None
    if quiver.name:
        name = quiver.name[:-3] if quiver.name.endswith("^op") else f"{quiver.name}^op"
    return TranslationQuiver(vertices, arrows, tau, name=name)


def disjoint_union(*quivers, name=None):
    """
    The disjoint union; vertex ids must not clash.

    Raises
    ------
    `ValueError`
        Two quivers share a vertex id.
    """
    seen = set()
    vertices, arrows, tau = [], [], {}
    for q in quivers:
        clash = seen & set(q.vertices)
        if clash:
            raise ValueError(f"Vertex ids {sorted(clash)} occur in more than one quiver.")
        seen.update(q.vertices)
        vertices.extend(q.vertex(x) for x in q.vertices)
        arrows.extend(q.arrows)
        tau.update(q.tau)
    return TranslationQuiver(vertices, arrows, tau, name=name)


def relabel(quiver, mapping=None, prefix=None):
    """
    Rename vertex ids through ``mapping`` (missing ids are kept) or by prepending ``prefix``.
    """
    if mapping is None and prefix is None:
        raise ValueError("Give either a mapping or a prefix.")

    def new(x):
        if mapping is not None:
            return mapping.get(x, x)
        return f"{prefix}{x}"

    vertices = [replace(quiver.vertex(x), id=new(x)) for x in quiver.vertices]
    if len({v.id for v in vertices}) != len(vertices):
        raise ValueError("The renaming identifies two vertices.")
    arrows = [(new(s), new(t)) for s, t in quiver.arrows]
    tau = {new(x): new(y) for x, y in quiver.tau.items()}
    return TranslationQuiver(vertices, arrows, tau, name=quiver.name)
