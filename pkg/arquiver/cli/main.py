"""
The ``arquiver`` command.

Exit codes: 0 when every verdict holds, 2 on a failed verdict or invalid
input, 3 when every failed verdict is truncation dependent.
"""

import argparse
import logging
import sys
from contextlib import ExitStack
from pathlib import Path

from arquiver import __version__
from arquiver.analysis import (
    brenner_bound_check,
    count_bounds,
    count_by_dimvector,
    count_table,
    ext_end_inequality,
    group_dimension,
    hom_order,
    multisection_cover_check,
    multisection_parts,
    multisection_search,
    orbit_dimension,
)
from arquiver.cli.registry import FixtureRegistry
from arquiver.cli.verify import MODULES, run_checks
from arquiver.config import conf
from arquiver.exceptions import ArquiverError
from arquiver.forms import euler_form, radical_vectors_in_box, tits_form, weak_nonnegativity_box
from arquiver.logger import get_logger
from arquiver.ops import format_label, read_script, run_script
from arquiver.qalg import load_algebra
from arquiver.reps import global_dimension, read_representations
from arquiver.tquiver import (
    build_stable_tube,
    format_tquiver,
    make_label,
    mesh_check,
    read_tquiver,
    to_dot,
    write_tquiver,
)

__all__ = ["EXIT_FAILED", "EXIT_OK", "EXIT_TRUNCATED", "build_parser", "exit_code", "main"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 2
EXIT_TRUNCATED = 3


def exit_code(verdicts):
    """
    Exit code for a collection of verdicts.

    Examples
    --------
    >>> from arquiver.verdict import Verdict
    >>> exit_code([Verdict(True), Verdict(False, truncation_dependent=True)])
    3
    """
    failed = [v for v in verdicts if not v]
    if not failed:
        return EXIT_OK
    if all(v.truncation_dependent for v in failed):
        return EXIT_TRUNCATED
    return EXIT_FAILED


def _print_table(table):
    print("\n".join(table.pformat(max_lines=-1, max_width=-1)))


def _report(verdicts):
    for verdict in verdicts:
        print(verdict)
    return exit_code(verdicts)


def _split(text):
    return [item.strip() for item in text.split(",") if item.strip()]


def _dims(text):
    """``"4=1,5=2"`` as a dictionary."""
    dims = {}
    for item in _split(text):
        vertex, sep, count = item.partition("=")
        if not sep:
            raise ArquiverError(f"Expected vertex=count, got {item!r}.")
        dims[vertex.strip()] = int(count)
    return dims


def _algebra(ref, registry):
    """A fixture name or a quiver file."""
    if ref in registry:
        return registry.algebra(ref)
    return load_algebra(ref)


def _modules(filename, names):
    modules = read_representations(filename)
    if not names:
        return list(modules.values())
    missing = [n for n in names if n not in modules]
    if missing:
        raise ArquiverError(f"No module {missing[0]!r} in {filename}.")
    return [modules[n] for n in names]


def _describe_algebra(algebra):
    print(f"algebra {algebra.name}: {len(algebra.vertices)} vertices, {len(algebra.quiver.arrows)} arrows")
    print(f"vertices: {' '.join(algebra.vertices)}")
    print(f"relations ({len(algebra.relations)}):")
    for relation in algebra.relations:
        print(f"  {relation}")
    print(f"dimension: {algebra.dimension}")
    print(f"triangular: {'yes' if algebra.is_triangular() else 'no'}")


def cmd_validate(args, registry):
    target = args.target
    if target in registry:
        fixture = registry.get(target)
        _describe_algebra(registry.algebra(target))
        print(f"files: {', '.join(fixture.files())}")
        return EXIT_OK
    path = Path(target)
    if path.suffix == ".rep":
        modules = read_representations(path)
        for name, m in modules.items():
            print(f"module {name}: {format_label(make_label(m.dims))}")
        return EXIT_OK
    if path.suffix == ".tq":
        quiver = read_tquiver(path)
        print(f"{len(quiver)} vertices, {len(quiver.arrows)} arrows, {len(quiver.tau)} translations")
        return _report([mesh_check(quiver)])
    if path.suffix == ".script":
        script = read_script(path)
        print(f"{len(script.seeds)} seeds, {len(script.steps)} steps")
        return EXIT_OK
    _describe_algebra(load_algebra(path))
    return EXIT_OK


def cmd_forms(args, registry):
    algebra = _algebra(args.algebra, registry)
    if args.kind == "tits":
        _print_table(tits_form(algebra).as_table())
        return EXIT_OK
    if args.kind == "euler":
        _print_table(euler_form(algebra).as_table())
        print(f"gl.dim: {global_dimension(algebra, conf.gldim_cap)}")
        return EXIT_OK
    form = euler_form(algebra) if args.form == "euler" else tits_form(algebra)
    if args.kind == "weak-nonneg":
        return _report([weak_nonnegativity_box(form)])
    vectors = radical_vectors_in_box(form)
    print(f"{len(vectors)} radical vectors in [0, {conf.box_bound}]^{form.n}")
    for vector in vectors[: args.limit]:
        print(" ".join(str(x) for x in vector))
    return EXIT_OK


def cmd_tube(args, registry):
    mouth = None
    if args.mouth:
        filename, _, names = args.mouth.partition(":")
        mouth = [m.dims for m in _modules(filename, _split(names))]
    tube = build_stable_tube(args.rank, mouth=mouth, prefix=args.prefix)
    if args.out:
        write_tquiver(args.out, tube)
        print(f"wrote {args.out}")
    else:
        print(format_tquiver(tube), end="")
    return EXIT_OK


def cmd_surgery(args, registry):
    path = Path(args.script)
    result = run_script(read_script(path), base_dir=path.parent)
    quiver = result.quiver
    print(f"{len(result.results)} steps, {len(quiver)} vertices, {len(quiver.arrows)} arrows")
    if result.algebra is not None:
        print(f"algebra: {len(result.algebra.vertices)} vertices, {len(result.algebra.relations)} relations")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        stem = path.stem
        if result.algebra is not None:
            (out / f"{stem}.quiver").write_text(result.algebra.to_text(header=f"built by {path.name}"))
        write_tquiver(out / f"{stem}.tq", quiver)
        (out / f"{stem}.dot").write_text(to_dot(quiver))
        result.ledger.write(out / f"{stem}_ledger.ecsv", format="ascii.ecsv", overwrite=True)
        print(f"wrote {out}")
    return _report(result.verdicts)


def cmd_export(args, registry):
    text = to_dot(read_tquiver(args.tquiver))
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return EXIT_OK


def cmd_count_dim(args, registry):
    quiver = read_tquiver(args.tquiver)
    if args.dims:
        found = count_by_dimvector(quiver, _dims(args.dims), n=args.n)
        print(f"{found.count} vertices: {' '.join(found.vertices)} (n = {found.n})")
    else:
        _print_table(count_table(quiver))
    return _report(count_bounds(quiver, n=args.n))


def cmd_hom_order(args, registry):
    modules = read_representations(args.modules)
    first, second = (modules[name] for name in (args.first, args.second))
    family = [modules[n] for n in _split(args.family)] if args.family else list(modules.values())
    verdict = hom_order(first, second, family)
    print(verdict)
    print(f"Hom(X, -) profile: {verdict.dual_relation}")
    return EXIT_OK


def cmd_orbit_dim(args, registry):
    for m in _modules(args.modules, args.names):
        print(f"{m.name}: dim G = {group_dimension(m.dims)}, dim O = {orbit_dimension(m)}")
    return EXIT_OK


def cmd_multisection(args, registry):
    quiver = read_tquiver(args.tquiver)
    delta = _split(args.delta)
    parts = multisection_parts(quiver, delta)
    print(parts)
    code = _report([multisection_cover_check(quiver, parts)])
    if args.search:
        found = multisection_search(quiver, delta)
        cores = {multisection_parts(quiver, d, check=False).core for d in found}
        print(f"{len(found)} multisections found, {len(cores)} distinct cores")
    return code


def cmd_sx_bound(args, registry):
    verdict = brenner_bound_check(read_tquiver(args.tquiver))
    counts = verdict.witnesses["counts"]
    if counts:
        print(f"largest number of middle terms: {max(counts.values())}")
    return _report([verdict])


def cmd_ext_end(args, registry):
    return _report([ext_end_inequality(m) for m in _modules(args.modules, args.names)])


def cmd_verify(args, registry):
    table = run_checks(only=args.only, registry=registry)
    _print_table(table)
    failed = table[table["status"] != "PASS"]
    if not len(failed):
        return EXIT_OK
    if all(row["status"] == "FAIL" and row["truncated"] for row in failed):
        return EXIT_TRUNCATED
    return EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(prog="arquiver", description="Bound quiver algebras and their translation quivers.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debugging output")
    parser.add_argument("--window", type=int, help="quasi-length window of seed tubes")
    parser.add_argument("--box", type=int, help="coordinate bound of box searches")
    parser.add_argument("--cap", type=int, help="resolution and global dimension cap")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("validate", help="load and describe a fixture or file")
    p.add_argument("target", help="fixture name or .quiver, .rep, .tq or .script file")
    p.set_defaults(func=cmd_validate)

    p = commands.add_parser("forms", help="Tits and Euler forms")
    p.add_argument("kind", choices=("tits", "euler", "weak-nonneg", "radical"))
    p.add_argument("algebra", help="fixture name or quiver file")
    p.add_argument("--form", choices=("tits", "euler"), default="tits", help="form searched by weak-nonneg and radical")
    p.add_argument("--limit", type=int, default=20, help="radical vectors printed")
    p.set_defaults(func=cmd_forms)

    tube = commands.add_parser("tube", help="stable tubes").add_subparsers(dest="action", required=True)
    p = tube.add_parser("build", help="write a stable tube")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--mouth", help="file.rep:name,name,... labelling the mouth")
    p.add_argument("--prefix")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tube)

    surgery = commands.add_parser("surgery", help="operation scripts").add_subparsers(dest="action", required=True)
    p = surgery.add_parser("run", help="run a script")
    p.add_argument("script")
    p.add_argument("--out", help="directory for the algebra, translation quiver, DOT and ledger files")
    p.set_defaults(func=cmd_surgery)

    export = commands.add_parser("export", help="convert files").add_subparsers(dest="action", required=True)
    p = export.add_parser("dot", help="Graphviz source of a translation quiver")
    p.add_argument("tquiver")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    analyze = commands.add_parser("analyze", help="checks on components and modules").add_subparsers(
        dest="action", required=True
    )
    p = analyze.add_parser("count-dim", help="vertices per dimension vector")
    p.add_argument("tquiver")
    p.add_argument("--dims", help="vertex=count,...")
    p.add_argument("--n", type=int, help="rank of the Grothendieck group")
    p.set_defaults(func=cmd_count_dim)
    p = analyze.add_parser("hom-order", help="compare two modules in the Hom order")
    p.add_argument("modules", help=".rep file")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--family", help="test modules, defaults to every module of the file")
    p.set_defaults(func=cmd_hom_order)
    p = analyze.add_parser("orbit-dim", help="orbit dimensions")
    p.add_argument("modules", help=".rep file")
    p.add_argument("names", nargs="*")
    p.set_defaults(func=cmd_orbit_dim)
    p = analyze.add_parser("multisection", help="left part, core and right part")
    p.add_argument("tquiver")
    p.add_argument("--delta", required=True, help="comma separated vertex ids")
    p.add_argument("--search", action="store_true", help="look for nearby multisections")
    p.set_defaults(func=cmd_multisection)
    p = analyze.add_parser("sx-bound", help="number of middle terms")
    p.add_argument("tquiver")
    p.set_defaults(func=cmd_sx_bound)
    p = analyze.add_parser("ext-end", help="dim Ext^1(M, M) <= dim End(M)")
    p.add_argument("modules", help=".rep file")
    p.add_argument("names", nargs="*")
    p.set_defaults(func=cmd_ext_end)

    p = commands.add_parser("verify-examples", help="run the checks on the shipped fixtures")
    p.add_argument("--only", action="append", choices=MODULES, help="restrict to a module, may be repeated")
    p.set_defaults(func=cmd_verify)
    return parser


def _overrides(args):
    values = {"window": args.window, "box_bound": args.box}
    if args.cap is not None:
        values.update(resolution_cap=args.cap, gldim_cap=args.cap)
    return {k: v for k, v in values.items() if v is not None}


def main(argv=None, registry=None):
    """
    Run the command line.

    Returns
    -------
    `int`
        The exit code.
    """
    args = build_parser().parse_args(argv)
    if args.verbose:
        get_logger("arquiver", logging.INFO if args.verbose == 1 else logging.DEBUG)
    registry = registry or FixtureRegistry()
    with ExitStack() as stack:
        for name, value in _overrides(args).items():
            stack.enter_context(conf.set_temp(name, value))
        try:
            return args.func(args, registry)
        except (ValueError, KeyError, OSError) as err:
            logger.debug("Command failed", exc_info=True)
            message = err.args[0] if isinstance(err, KeyError) and err.args else err
            print(f"error: {message}", file=sys.stderr)
            return EXIT_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
