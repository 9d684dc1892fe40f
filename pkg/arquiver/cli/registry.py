"""
Named fixtures shipped in ``arquiver/data``.
"""

import logging
from dataclasses import dataclass

from astropy.table import Table

from arquiver.data import get_fixture_path
from arquiver.ops import read_script
from arquiver.qalg import load_algebra
from arquiver.reps import read_representations
from arquiver.tquiver import mesh_check, read_tquiver

__all__ = ["FIXTURES", "Fixture", "FixtureRegistry"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fixture:
    """
    A fixture algebra with the files that belong to it.

    Attributes
    ----------
    name : `str`
    algebra : `str`
        Quiver file.
    description : `str`
    modules, component, script : `str`, optional
        Representation, translation quiver and operation script files.
    """

    name: str
    algebra: str
    description: str
    modules: str = None
    component: str = None
    script: str = None

    def files(self):
        return [f for f in (self.algebra, self.modules, self.component, self.script) if f]


FIXTURES = (
    Fixture("A2", "a2.quiver", "linear quiver 1 -> 2"),
    Fixture("K2", "k2.quiver", "Kronecker quiver"),
    Fixture(
        "B8",
        "b8.quiver",
        "radical square zero algebra of global dimension 4 with a multisection",
        modules="b8_component.rep",
        component="b8_component.tq",
    ),
    Fixture(
        "A23",
        "a23.quiver",
        "generalized multicoil enlargement of a rank 3 tube on 23 vertices",
        script="a23_multicoil.script",
    ),
    Fixture("D5t", "d5t.quiver", "hereditary algebra of Euclidean type D5", modules="d5t_mouth.rep"),
    Fixture("GL", "gl.quiver", "glueing of Kronecker preprojectives and preinjectives"),
    Fixture("NC", "nc.quiver", "tame algebra that is not cycle-finite"),
)


class FixtureRegistry:
    """
    Loads fixtures by name and keeps one algebra object per fixture.

    Modules of a fixture are built over that cached algebra, so Hom and Ext
    computations between them are allowed.

    Parameters
    ----------
    fixtures : iterable of `Fixture`, optional
        Defaults to `FIXTURES`.
    """

    def __init__(self, fixtures=FIXTURES):
        self.fixtures = {f.name: f for f in fixtures}
        self._algebras = {}
        self._modules = {}

    def __contains__(self, name):
        return name in self.fixtures

    def __iter__(self):
        return iter(self.fixtures)

    def __len__(self):
        return len(self.fixtures)

    def get(self, name):
        try:
            return self.fixtures[name]
        except KeyError:
            raise KeyError(f"No fixture named {name!r}; known: {', '.join(self.fixtures)}.") from None

    def path(self, filename):
        return get_fixture_path(filename)

    def algebra(self, name):
        if name not in self._algebras:
            fixture = self.get(name)
            self._algebras[name] = load_algebra(self.path(fixture.algebra))
            logger.debug("Loaded fixture %s", name)
        return self._algebras[name]

    def modules(self, name):
        """The representations of a fixture by module name."""
        if name not in self._modules:
            fixture = self.get(name)
            if fixture.modules is None:
                raise KeyError(f"Fixture {name} has no representations.")
            self._modules[name] = read_representations(self.path(fixture.modules), algebra=self.algebra(name))
        return self._modules[name]

    def component(self, name):
        fixture = self.get(name)
        if fixture.component is None:
            raise KeyError(f"Fixture {name} has no translation quiver.")
        return read_tquiver(self.path(fixture.component))

    def script_path(self, name):
        fixture = self.get(name)
        if fixture.script is None:
            raise KeyError(f"Fixture {name} has no script.")
        return self.path(fixture.script)

    def validate(self):
        """
        Load every file of every fixture.

        Returns
        -------
        `~astropy.table.Table`
            One row per fixture with the vertex, arrow and relation counts and
            the algebra dimension. A file that fails to load raises.
        """
        rows = []
        for name, fixture in self.fixtures.items():
            algebra = self.algebra(name)
            if fixture.modules:
                self.modules(name)
            if fixture.component:
                if not mesh_check(self.component(name)):
                    raise ValueError(f"The component of fixture {name} breaks the mesh condition.")
            if fixture.script:
                read_script(self.script_path(name))
            rows.append(
                (
                    name,
                    len(algebra.vertices),
                    len(algebra.quiver.arrows),
                    len(algebra.relations),
                    algebra.dimension,
                    fixture.description,
                )
            )
        return Table(rows=rows, names=("fixture", "vertices", "arrows", "relations", "dimension", "description"))
