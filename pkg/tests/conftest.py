import json
from pathlib import Path

import pytest

from syncro.core import from_letter_images
from syncro.families import build_family

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def fig3():
    return build_family("fig3")


@pytest.fixture
def footnote():
    return build_family("gc_footnote")


@pytest.fixture
def three_letter_gap():
    """Completely reachable, all 2-sets distinguishable, yet Q ~ {0,1}."""
    return from_letter_images([[1, 2, 1], [0, 2, 2], [0, 1, 0]])


@pytest.fixture
def fig3_path(tmp_path, fig3):
    from syncro.document import AutomatonDocument, serialize

    path = tmp_path / "fig3.json"
    path.write_text(serialize(AutomatonDocument.from_automaton(fig3, name="fig3")))
    return path


def load_json(path):
    return json.loads(Path(path).read_text())
