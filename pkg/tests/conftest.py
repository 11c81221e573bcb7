"""
Pytest configuration and shared fixtures.

Provides the bundled scenarios, their state vectors, and small signatures
used across the engine tests.
"""
import json
from pathlib import Path

import pytest

from src.epistemic.valuations import Signature
from src.logic.parser import parse
from src.scenario.loader import build_vector, load

ROOT = Path(__file__).resolve().parent.parent
FIXTURES_DIR = ROOT / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def golden():
    """Load a golden JSON file by name."""

    def read(name: str):
        return json.loads((GOLDEN_DIR / name).read_text(encoding="utf-8"))

    return read


@pytest.fixture(scope="session")
def scenario():
    """Load a bundled scenario by stem, e.g. scenario("wet_floor")."""
    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = load(FIXTURES_DIR / f"{name}.scn")
        return cache[name]

    return get


@pytest.fixture(scope="session")
def vector(scenario):
    """State vector of a bundled scenario by stem."""
    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = build_vector(scenario(name))
        return cache[name]

    return get


@pytest.fixture(scope="session")
def wet_floor(scenario):
    return scenario("wet_floor")


@pytest.fixture(scope="session")
def wet_floor_vector(vector):
    return vector("wet_floor")


@pytest.fixture(scope="session")
def f(wet_floor):
    """Parse surface text over the running example's vocabulary and agents."""
    return wet_floor.parse


@pytest.fixture
def pq() -> Signature:
    return Signature(("p", "q"), ("i", "j"))


@pytest.fixture
def pq_parse():
    def read(text: str):
        return parse(text, ("p", "q"), ("i", "j"))

    return read


@pytest.fixture
def write_scenario(tmp_path):
    """Write a scenario document to a temporary .scn file and return its path."""

    def write(document, name: str = "scenario.scn") -> Path:
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def minimal_document() -> dict:
    return {
        "agents": ["mary", "bob"],
        "vocabulary": ["rain", "wetFloor"],
        "laws": ["rain -> wetFloor"],
        "depth": 2,
        "beliefs": {"mary": [["rain"]]},
    }
