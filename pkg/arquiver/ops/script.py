"""
Operation scripts: seed components plus a replayable list of operations.

A script is line oriented with ``#`` comments::

    seed tube rank=3 window=10 algebra=d5t.quiver mouth=d5t_mouth.rep:S6,S7,E
    op ad1* pivot=T(0,1) t=1 ext=11 d=12
    op ad4 pivot=T(1,1) y=a,b r=1
    op ad5 sub=[fad1(pivot=x;t=0),ad4(pivot=X'(0)@1.1;y=a,b)]
    op ad3 pivot=X'(1)@5 ext=10 module=rad.rep:radP10

Lists are comma separated; inside ``sub=[...]`` the parameters of one step are
separated by ``;``. Every step but ad5 names its pivot; ``module=`` attaches a
representation read from a file to the pivot before the step runs.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path

from astropy.table import vstack

from arquiver.exceptions import ParseError, ScriptError
from arquiver.ops.grid import ledger_table
from arquiver.ops.modules import ModuleRegistry
from arquiver.ops.surgery import OPERATIONS, PivotContext, apply_operation
from arquiver.qalg import load_algebra, product
from arquiver.reps import read_representations
from arquiver.tquiver import (
    almost_cyclic_check,
    build_stable_tube,
    coherence_check,
    disjoint_union,
    read_tquiver,
    tube_id,
)

__all__ = [
    "OperationScript",
    "ScriptResult",
    "ScriptStep",
    "Seed",
    "format_script",
    "parse_script",
    "read_script",
    "run_script",
]

logger = logging.getLogger(__name__)

_INTEGER = ("t", "r", "rank", "window")
_LISTS = ("y", "d", "g")
_STEP_KEYS = ("pivot", "t", "r", "y", "ext", "d", "g", "module", "sub")
_SEED_KEYS = {
    "tube": ("rank", "window", "prefix", "algebra", "mouth"),
    "tquiver": ("file", "algebra", "mouth"),
}
_CONTEXT_KEYS = ("pivot", "t", "r", "y", "ext", "d", "g")


@dataclass(frozen=True)
class Seed:
    """A seed component: a stable tube or a translation quiver file."""

    kind: str
    params: dict = field(default_factory=dict)
    line: int = None


@dataclass(frozen=True)
class ScriptStep:
    """
    One ``op`` line.

    Attributes
    ----------
    operation : `str`
        An operation tag, ``*`` marking the dual.
    params : `dict`
        Parsed parameters, lists as tuples and counts as `int`.
    sub : `tuple`
        The steps of an ad5 composite.
    line : `int`
    """

    operation: str
    params: dict = field(default_factory=dict)
    sub: tuple = ()
    line: int = None

    def context_params(self):
        return {k: v for k, v in self.params.items() if k in _CONTEXT_KEYS}


@dataclass(frozen=True)
class OperationScript:
    seeds: tuple = ()
    steps: tuple = ()

    def __len__(self):
        return len(self.steps)


def _split(text, separator):
    """Split at ``separator`` outside brackets and parentheses."""
    parts, depth, current = [], 0, []
    for char in text:
        if char in "([":
            depth += 1
        elif char in ")]":
            depth -= 1
        if char == separator and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(char)
    parts.append("".join(current))
    return [p.strip() for p in parts if p.strip()]


def _value(key, raw, lineno):
    if key in _INTEGER:
        try:
            return int(raw)
        except ValueError:
            raise ParseError(f"{key} must be an integer, got {raw!r}", lineno) from None
    if key in _LISTS:
        return tuple(_split(raw, ","))
    return raw


def _params(tokens, allowed, lineno):
    params = {}
    for token in tokens:
        key, sep, raw = token.partition("=")
        if not sep or not raw:
            raise ParseError(f"expected key=value, got {token!r}", lineno)
        if key not in allowed:
            raise ParseError(f"unknown parameter {key!r}", lineno)
        if key in params:
            raise ParseError(f"parameter {key!r} given twice", lineno)
        params[key] = raw if key == "sub" else _value(key, raw, lineno)
    return params


def _check_operation(name, lineno):
    if name.rstrip("*") not in OPERATIONS or name.count("*") > 1:
        raise ParseError(f"unknown operation {name!r}", lineno)


def _parse_sub(raw, lineno):
    if not (raw.startswith("[") and raw.endswith("]")):
        raise ParseError("sub must be a bracketed list", lineno)
    steps = []
    for item in _split(raw[1:-1], ","):
        name, sep, rest = item.partition("(")
        if not sep or not rest.endswith(")"):
            raise ParseError(f"bad sub-step {item!r}", lineno)
        name = name.strip()
        _check_operation(name, lineno)
        params = _params(_split(rest[:-1], ";"), _CONTEXT_KEYS, lineno)
        if "pivot" not in params:
            raise ParseError(f"sub-step {name} needs a pivot", lineno)
        steps.append(ScriptStep(name, params, line=lineno))
    return tuple(steps)


def parse_script(text):
    """
    Parse an operation script.

    Returns
    -------
    `OperationScript`

    Raises
    ------
    `~arquiver.exceptions.ParseError`
    """
    seeds, steps = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = _split(line, " ")
        keyword = tokens[0]
        if keyword == "seed":
            if len(tokens) < 2 or tokens[1] not in _SEED_KEYS:
                raise ParseError(f"seed kind must be one of {', '.join(_SEED_KEYS)}", lineno)
            params = _params(tokens[2:], _SEED_KEYS[tokens[1]], lineno)
            if tokens[1] == "tube" and "rank" not in params:
                raise ParseError("seed tube needs rank", lineno)
            if tokens[1] == "tquiver" and "file" not in params:
                raise ParseError("seed tquiver needs file", lineno)
            seeds.append(Seed(tokens[1], params, lineno))
        elif keyword == "op":
            if len(tokens) < 2:
                raise ParseError("op without operation", lineno)
            _check_operation(tokens[1], lineno)
            params = _params(tokens[2:], _STEP_KEYS, lineno)
            sub = ()
            if "sub" in params:
                if tokens[1].rstrip("*") != "ad5":
                    raise ParseError("only ad5 takes sub-steps", lineno)
                sub = _parse_sub(params.pop("sub"), lineno)
            step = ScriptStep(tokens[1], params, sub, lineno)
            if tokens[1].rstrip("*") != "ad5" and "pivot" not in params:
                raise ParseError(f"{step.operation} needs a pivot", lineno)
            steps.append(step)
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    return OperationScript(tuple(seeds), tuple(steps))


def read_script(filename):
    return parse_script(Path(filename).read_text())


def _format_params(params, separator):
    parts = []
    for key, value in params.items():
        if isinstance(value, tuple):
            value = ",".join(value)
        parts.append(f"{key}={value}")
    return separator.join(parts)


def format_script(script):
    lines = []
    for seed in script.seeds:
        lines.append(" ".join(filter(None, ["seed", seed.kind, _format_params(seed.params, " ")])))
    for step in script.steps:
        parts = ["op", step.operation, _format_params(step.params, " ")]
        if step.sub:
            subs = ",".join(f"{s.operation}({_format_params(s.params, ';')})" for s in step.sub)
            parts.append(f"sub=[{subs}]")
        lines.append(" ".join(filter(None, parts)))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ScriptResult:
    """
    Outcome of `run_script`.

    Attributes
    ----------
    quiver : `~arquiver.tquiver.TranslationQuiver`
    algebra : `~arquiver.qalg.BoundQuiverAlgebra`
        `None` once a step could not compute its algebra side.
    modules : `~arquiver.ops.ModuleRegistry`
    results : `tuple`
        The `~arquiver.ops.SurgeryResult` of every step.
    verdicts : `tuple`
        Coherence and almost cyclicity of the final quiver.
    """

    quiver: object
    algebra: object
    modules: ModuleRegistry
    results: tuple = ()
    verdicts: tuple = ()

    @property
    def ledger(self):
        tables = [r.ledger for r in self.results if r.entries]
        if not tables:
            return ledger_table(())
        return vstack(tables)

    @property
    def passed(self):
        return all(self.verdicts)


def _module_ref(ref, algebra, base_dir):
    """``file.rep`` or ``file.rep:name``; a bare file gives its first module."""
    filename, _, name = ref.partition(":")
    modules = read_representations(Path(base_dir) / filename, algebra=algebra)
    if not name:
        return next(iter(modules.values()))
    try:
        return modules[name]
    except KeyError:
        raise ParseError(f"no module {name!r} in {filename}") from None


def _build_seeds(script, base_dir):
    algebras, quivers, registry = {}, [], ModuleRegistry()
    for seed in script.seeds:
        params = seed.params
        algebra = None
        if "algebra" in params:
            path = str(Path(base_dir) / params["algebra"])
            if path not in algebras:
                algebras[path] = load_algebra(path)
            algebra = algebras[path]
        mouth = []
        if "mouth" in params:
            if algebra is None:
                raise ParseError("a mouth needs an algebra", seed.line)
            filename, _, names = params["mouth"].partition(":")
            modules = read_representations(Path(base_dir) / filename, algebra=algebra)
            names = _split(names, ",") if names else list(modules)
            try:
                mouth = [(name, modules[name]) for name in names]
            except KeyError as err:
                raise ParseError(f"no module {err.args[0]!r} in {filename}", seed.line) from None
        if seed.kind == "tube":
            rank, prefix = params["rank"], params.get("prefix")
            labels = [m.dims for _, m in mouth] if mouth else None
            quiver = build_stable_tube(rank, params.get("window"), mouth=labels, prefix=prefix)
            registry.update({tube_id(k, 1, prefix): m for k, (_, m) in enumerate(mouth)})
        else:
            # modules are attached to the vertices sharing their names
            quiver = read_tquiver(Path(base_dir) / params["file"])
            registry.update({name: m for name, m in mouth if name in quiver})
        quivers.append(quiver)
    if not quivers:
        raise ParseError("a script needs at least one seed")
    quiver = quivers[0] if len(quivers) == 1 else disjoint_union(*quivers, name="seeds")
    algebra = None
    for a in algebras.values():
        algebra = a if algebra is None else product(algebra, a)
    return quiver, algebra, registry


def run_script(script, base_dir="."):
    """
    Build the seeds and apply every step in order.

    Parameters
    ----------
    script : `OperationScript`
    base_dir : `str` or `pathlib.Path`
        Directory against which file names in the script are resolved.

    Returns
    -------
    `ScriptResult`

    Raises
    ------
    `~arquiver.exceptions.ScriptError`
        A step failed; ``step`` is its position and ``cause`` the original error.
    """
    quiver, algebra, registry = _build_seeds(script, base_dir)
    provenance, reserved, results = set(), set(), []
    for k, step in enumerate(script.steps, start=1):
        logger.info("Step %d: %s %s", k, step.operation, step.params.get("pivot", ""))
        try:
            if "module" in step.params:
                if algebra is None:
                    raise ScriptError("a module= step needs an algebra")
                module = _module_ref(step.params["module"], algebra, base_dir)
                registry.add(step.params["pivot"], module.renamed(step.params["pivot"]))
            ctx = PivotContext(
                quiver,
                algebra=algebra,
                modules=registry,
                tag=str(k),
                provenance=frozenset(provenance),
                reserved=frozenset(reserved),
                **step.context_params(),
            )
            sub = [(s.operation, s.context_params()) for s in step.sub]
            result = apply_operation(step.operation, ctx, sub)
        except ScriptError as err:
            raise ScriptError(str(err), step=k, cause=err.cause) from err
        except ValueError as err:
            raise ScriptError(str(err), step=k, cause=err) from err
        if result.algebra is None and algebra is not None:
            logger.warning("Step %d has no algebra side; the rest of the script is quiver only", k)
        algebra, quiver = result.algebra, result.quiver
        registry.update(result.modules)
        if step.operation.endswith("*"):
            provenance.update(result.new_vertices)
        omega = result.extension_vertex
        if omega is not None:
            reserved.update(omega if isinstance(omega, tuple) else [omega])
        results.append(result)
    verdicts = (coherence_check(quiver), almost_cyclic_check(quiver))
    for verdict in verdicts:
        logger.info("%s", verdict)
    return ScriptResult(quiver, algebra, registry, tuple(results), verdicts)
