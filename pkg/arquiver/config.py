"""
Package configuration.

Values are read at call time, so ``conf.set_temp`` works as a context manager
for local overrides::

    >>> from arquiver.config import conf
    >>> with conf.set_temp("box_bound", 4):
    ...     conf.box_bound
    4
"""

from astropy import config as _config

__all__ = ["Conf", "conf", "resolve"]


class Conf(_config.ConfigNamespace):
    """
    Configuration parameters for `arquiver`.
    """

    length_cap = _config.ConfigItem(8, "Longest path length enumerated when computing a path basis.")
    box_bound = _config.ConfigItem(12, "Coordinate bound of the weak nonnegativity box search.")
    box_chunk = _config.ConfigItem(200000, "Number of box points evaluated per vectorised chunk.")
    box_max_points = _config.ConfigItem(50000000, "Refuse box searches with more points than this.")
    gldim_cap = _config.ConfigItem(12, "Largest global dimension certified by the Euler form.")
    resolution_cap = _config.ConfigItem(16, "Number of syzygies computed before a resolution is abandoned.")
    window = _config.ConfigItem(10, "Default quasi-length window of seed tubes.")
    multisection_max_vertices = _config.ConfigItem(40, "Largest component searched for multisections.")
    multisection_search_radius = _config.ConfigItem(2, "Number of local moves explored by the multisection search.")
    require_provenance = _config.ConfigItem(
        False, "Only allow ad2/ad3 at pivots created by a dual operation of the same script."
    )
    extension_prefix = _config.ConfigItem("w", "Prefix of generated extension vertex ids.")
    tube_prefix = _config.ConfigItem("T", "Prefix of generated tube vertex ids.")


conf = Conf()


def resolve(value, name):
    """Return ``value`` unless it is `None`, in which case read ``conf.<name>``."""
    return getattr(conf, name) if value is None else value
