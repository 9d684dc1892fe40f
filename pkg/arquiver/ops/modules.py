"""
Representations attached to the vertices of a translation quiver.
"""

import logging

from arquiver.exceptions import AlgebraMismatch
from arquiver.reps import extend_to

__all__ = ["ModuleRegistry"]

logger = logging.getLogger(__name__)


class ModuleRegistry:
    """
    Maps translation quiver vertex ids to representations.

    Modules are stored over the algebra they were built on and padded by zero
    onto a larger algebra on request; the padded copy is cached per vertex.

    Parameters
    ----------
    modules : `dict`, optional
        Vertex id to `~arquiver.reps.Representation`.
    """

    def __init__(self, modules=None):
        self._modules = dict(modules or {})
        self._cache = {}

    def __repr__(self):
        return f"<ModuleRegistry: {len(self._modules)} modules>"

    def __len__(self):
        return len(self._modules)

    def __contains__(self, vertex_id):
        return vertex_id in self._modules

    def __iter__(self):
        return iter(self._modules)

    def items(self):
        return self._modules.items()

    def add(self, vertex_id, module):
        self._modules[vertex_id] = module
        self._cache.pop(vertex_id, None)

    def update(self, modules):
        for vertex_id, module in dict(modules).items():
            self.add(vertex_id, module)

    def copy(self):
        registry = ModuleRegistry(self._modules)
        registry._cache = dict(self._cache)
        return registry

    def get(self, vertex_id, algebra=None):
        """
        The module at ``vertex_id``, over ``algebra`` when given.

        Returns `None` when no module is registered.

        Raises
        ------
        `~arquiver.exceptions.AlgebraMismatch`
            The stored module does not embed into ``algebra``.
        """
        module = self._modules.get(vertex_id)
        if module is None or algebra is None or module.algebra is algebra:
            return module
        cached = self._cache.get(vertex_id)
        if cached is not None and cached[0] is algebra:
            return cached[1]
        extended = extend_to(module, algebra)
        self._cache[vertex_id] = (algebra, extended)
        return extended

    def available(self, vertex_id, algebra):
        """Like `get`, but `None` instead of an error when the module does not embed."""
        try:
            return self.get(vertex_id, algebra)
        except AlgebraMismatch as err:
            logger.debug("Module at %s does not embed: %s", vertex_id, err)
            return None
