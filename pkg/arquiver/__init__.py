"""
Exact computations with bound quiver algebras and their Auslander-Reiten
translation quivers.
"""

from .version import version as __version__

__all__ = []
