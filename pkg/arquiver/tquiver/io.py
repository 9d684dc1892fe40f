"""
Translation quiver files and DOT export.

The file format is line oriented with ``#`` comments::

    tvertex S5 dim: 5=1
    tvertex P6 proj dim: 5=1,6=1
    tvertex right boundary
    tarrow S5 -> P6
    tau R -> S5

A ``tarrow`` line given twice is a double arrow.
"""

import logging
from pathlib import Path

from arquiver.exceptions import InvalidTranslationQuiver, ParseError
from arquiver.tquiver.translation_quiver import TranslationQuiver, TVertex, make_label

__all__ = ["format_tquiver", "parse_tquiver", "read_tquiver", "to_dot", "write_tquiver"]

logger = logging.getLogger(__name__)

_FLAGS = {"proj": "projective", "inj": "injective", "boundary": "boundary"}


def _parse_label(text, lineno):
    dims = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        vertex, sep, value = item.partition("=")
        if not sep or not vertex.strip():
            raise ParseError(f"bad label entry {item!r}", lineno)
        try:
            dims[vertex.strip()] = int(value)
        except ValueError:
            raise ParseError(f"bad label entry {item!r}", lineno) from None
    return make_label(dims)


def _pair(rest, lineno, keyword):
    source, sep, target = rest.partition("->")
    if not sep or not source.strip() or not target.strip():
        raise ParseError(f"bad {keyword} line", lineno)
    return source.strip(), target.strip()


def parse_tquiver(text, name=None):
    """
    Parse the translation quiver format.

    Returns
    -------
    `~arquiver.tquiver.TranslationQuiver`

    Raises
    ------
    `~arquiver.exceptions.ParseError`
        Syntax errors, and structural errors reported by the constructor.
    """
    vertices, arrows, tau = [], [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "tvertex":
            head, _, label = rest.partition("dim:")
            tokens = head.split()
            if not tokens:
                raise ParseError("tvertex without id", lineno)
            flags = {}
            for token in tokens[1:]:
                if token not in _FLAGS:
                    raise ParseError(f"unknown flag {token!r}", lineno)
                flags[_FLAGS[token]] = True
            vertices.append(TVertex(tokens[0], _parse_label(label, lineno) if label.strip() else None, **flags))
        elif keyword == "tarrow":
            arrows.append(_pair(rest, lineno, keyword))
        elif keyword == "tau":
            x, y = _pair(rest, lineno, keyword)
            if x in tau:
                raise ParseError(f"translate of {x} given twice", lineno)
            tau[x] = y
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    if not vertices:
        raise ParseError("no vertices declared")
    try:
        return TranslationQuiver(vertices, arrows, tau, name=name)
    except InvalidTranslationQuiver as err:
        raise ParseError(str(err)) from err


def read_tquiver(filename):
    filename = Path(filename)
    return parse_tquiver(filename.read_text(), name=filename.stem)


def format_tquiver(quiver):
    lines = [f"# {quiver.name}"] if quiver.name else []
    flags = {v: k for k, v in _FLAGS.items()}
    for x in quiver.vertices:
        v = quiver.vertex(x)
        parts = ["tvertex", x] + [flags[f] for f in v.flags()]
        if v.label:
            parts.append("dim: " + ",".join(f"{k}={n}" for k, n in v.label))
        lines.append(" ".join(parts))
    lines.extend(f"tarrow {s} -> {t}" for s, t in quiver.arrows)
    lines.extend(f"tau {x} -> {y}" for x, y in quiver.tau.items())
    return "\n".join(lines) + "\n"


def write_tquiver(filename, quiver):
    Path(filename).write_text(format_tquiver(quiver))


def _quote(text):
    return '"' + str(text).replace('"', '\\"') + '"'


def to_dot(quiver):
    """
    Graphviz source for ``quiver``.

    Vertices sharing a quasi-length (second layout coordinate) are drawn on one
    rank, the translation is drawn as dashed back edges, projective vertices as
    boxes, injective ones as diamonds and boundary vertices dotted. The output
    only depends on the quiver, so identical inputs give identical text.
    """
    lines = [f"digraph {_quote(quiver.name or 'component')} {{", "  rankdir=LR;"]
    layers = {}
    for x in quiver.vertices:
        v = quiver.vertex(x)
        attrs = [f"label={_quote(x)}"]
        if v.projective and v.injective:
            attrs.append("shape=Msquare")
        elif v.projective:
            attrs.append("shape=box")
        elif v.injective:
            attrs.append("shape=diamond")
        if v.boundary:
            attrs.append("style=dotted")
        if v.label:
            attrs.append(f"tooltip={_quote(' '.join(f'{k}={n}' for k, n in v.label))}")
        lines.append(f"  {_quote(x)} [{', '.join(attrs)}];")
        if v.coord is not None and len(v.coord) > 1:
            layers.setdefault(v.coord[1], []).append(x)
    for layer in sorted(layers):
        members = " ".join(_quote(x) for x in layers[layer])
        lines.append(f"  {{ rank=same; {members} }}")
    lines.extend(f"  {_quote(s)} -> {_quote(t)};" for s, t in quiver.arrows)
    lines.extend(f"  {_quote(x)} -> {_quote(y)} [style=dashed, constraint=false];" for x, y in quiver.tau.items())
    lines.append("}")
    return "\n".join(lines) + "\n"
