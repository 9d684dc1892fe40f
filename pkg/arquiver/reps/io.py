"""
Representation files.

A file names its algebra on the first declaration and then lists one or more
modules::

    algebra a2.quiver
    module P_1
    dim 1 1
    dim 2 1
    mat a : 1 x 1
    1

``module`` lines may be omitted for a single unnamed module. Matrix rows hold
space separated rationals such as ``-2/3``.
"""

from pathlib import Path

from arquiver import linalg
from arquiver.exceptions import InvalidRepresentation, ParseError
from arquiver.qalg.algebra import load_algebra
from arquiver.reps.representation import Representation

__all__ = ["format_representations", "parse_representations", "read_representations", "write_representations"]


def _blocks(text):
    header, modules = None, []
    current = None
    lines = [(n, raw.split("#", 1)[0].strip()) for n, raw in enumerate(text.splitlines(), start=1)]
    lines = [(n, line) for n, line in lines if line]
    k = 0
    while k < len(lines):
        lineno, line = lines[k]
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "algebra":
            if header is not None:
                raise ParseError("algebra declared twice", lineno)
            header = rest
        elif keyword == "module":
            current = {"name": rest or None, "dims": {}, "maps": {}}
            modules.append(current)
        elif keyword in ("dim", "mat"):
            if current is None:
                current = {"name": None, "dims": {}, "maps": {}}
                modules.append(current)
            if keyword == "dim":
                parts = rest.split()
                if len(parts) != 2:
                    raise ParseError(f"bad dim line {line!r}", lineno)
                try:
                    current["dims"][parts[0]] = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad dimension in {line!r}", lineno) from None
            else:
                arrow, sep, shape = rest.partition(":")
                nrows, x, ncols = shape.strip().partition("x")
                if not sep or not x:
                    raise ParseError(f"bad mat line {line!r}", lineno)
                try:
                    nrows, ncols = int(nrows), int(ncols)
                except ValueError:
                    raise ParseError(f"bad matrix shape in {line!r}", lineno) from None
                rows = []
                for _ in range(nrows):
                    k += 1
                    if k >= len(lines):
                        raise ParseError(f"matrix of arrow {arrow.strip()} is truncated", lineno)
                    values = lines[k][1].split()
                    if len(values) != ncols:
                        raise ParseError(f"expected {ncols} entries", lines[k][0])
                    try:
                        rows.append([linalg.to_qq(v) for v in values])
                    except (ValueError, ZeroDivisionError):
                        raise ParseError(f"bad matrix entry in {lines[k][1]!r}", lines[k][0]) from None
                current["maps"][arrow.strip()] = linalg.matrix(rows, (nrows, ncols))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
        k += 1
    return header, modules


def parse_representations(text, algebra=None, base_dir="."):
    """
    Parse a representation file.

    Parameters
    ----------
    text : `str`
    algebra : `~arquiver.qalg.BoundQuiverAlgebra`, optional
        Used instead of loading the algebra named in the header.
    base_dir : `str` or `pathlib.Path`
        Directory against which the header is resolved.

    Returns
    -------
    `dict`
        Module name to `~arquiver.reps.Representation`, in file order. Unnamed
        modules are called ``"M0"``, ``"M1"`` and so on.
    """
    header, blocks = _blocks(text)
    if algebra is None:
        if header is None:
            raise ParseError("no algebra declared")
        algebra = load_algebra(Path(base_dir) / header)
    modules = {}
    for k, block in enumerate(blocks):
        name = block["name"] or f"M{k}"
        if name in modules:
            raise ParseError(f"module {name} declared twice")
        try:
            modules[name] = Representation(algebra, block["dims"], block["maps"], name=name)
        except InvalidRepresentation as err:
            raise InvalidRepresentation(f"module {name}: {err}", relation=err.relation) from err
    return modules


def read_representations(filename, algebra=None):
    filename = Path(filename)
    return parse_representations(filename.read_text(), algebra=algebra, base_dir=filename.parent)


def format_representations(modules, algebra_file):
    lines = [f"algebra {algebra_file}"]
    for m in modules:
        lines.append(f"module {m.name}" if m.name else "module")
        lines.extend(f"dim {v} {d}" for v, d in m.dims.items() if d)
        for arrow_id, mat in m.maps.items():
            if mat.shape[0] and mat.shape[1]:
                lines.append(f"mat {arrow_id} : {mat.shape[0]} x {mat.shape[1]}")
                lines.extend(" ".join(str(x) for x in row) for row in linalg.entries(mat))
    return "\n".join(lines) + "\n"


def write_representations(filename, modules, algebra_file):
    Path(filename).write_text(format_representations(modules, algebra_file))
