"""Named translation quivers shipped with the package."""
import os
import re

from meshforge.exceptions import QuiverError

from .families import DATA_DIR, curve_fixture
from .io import load_quiver

_CURVE = re.compile(r"^curve_a(\d+)$")


def list_fixtures():
    """Names accepted by :func:`load_fixture`, JSON fixtures first."""
    names = sorted(
        os.path.splitext(f)[0] for f in os.listdir(DATA_DIR) if f.endswith(".json")
    )
    return names + ["curve_a<n>"]


def load_fixture(name):
    """
    Load a shipped quiver by name.

    ``curve_a<n>`` builds :func:`curve_fixture` for ``n``; every other name
    is a JSON file under ``meshforge/data/quivers``.

    Raises
    ------
    QuiverError
        No such fixture.
    """
    match = _CURVE.match(name)
    if match:
        return curve_fixture(int(match.group(1)))

    path = os.path.join(DATA_DIR, f"{name}.json")
    if not os.path.isfile(path):
        raise QuiverError(f"Unknown fixture: '{name}'")
    return load_quiver(path)
