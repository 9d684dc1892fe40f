"""
Fixture files shipped with the package.
"""

from pathlib import Path

__all__ = ["get_fixture_path"]

_DATA_DIR = Path(__file__).parent


def get_fixture_path(filename):
    """
    Absolute path of a fixture file.

    Parameters
    ----------
    filename : `str`
        Name of the file inside ``arquiver/data``.

    Returns
    -------
    `pathlib.Path`
    """
    path = _DATA_DIR / filename
    if not path.is_file():
        raise FileNotFoundError(f"No fixture named {filename!r}.")
    return path
