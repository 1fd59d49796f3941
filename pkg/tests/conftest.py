import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from carpetcut.presets import resolve  # noqa: E402
from oracles import exhaustive_specs, random_specs  # noqa: E402

PRESET_NAMES = [
    "sierpinski",
    "goodcp",
    "countable",
    "segment",
    "diag3",
    "oddcuts:3",
    "evencuts:3",
    "oddcuts:4",
    "evencuts:4",
]
CORPUS_SEED = 20261018


@pytest.fixture(scope="session")
def presets():
    return {name: resolve(name) for name in PRESET_NAMES}


@pytest.fixture(scope="session")
def nonfragile_corpus():
    """All connected non-fragile specs for N = 3 and N = 4 with |D| <= 10."""
    return exhaustive_specs(3, 10) + exhaustive_specs(4, 10)


@pytest.fixture(scope="session")
def wide_corpus():
    """Seeded connected N = 5 specs with |D| <= 10.  None of them is
    non-fragile, so they are compared with fragile input allowed."""
    return random_specs(CORPUS_SEED, 20, bases=(5,), max_size=10, fragile=None)


@pytest.fixture(scope="session")
def small_corpus():
    """A quick seeded mix for property tests."""
    return random_specs(CORPUS_SEED + 1, 30, bases=(3, 4), fragile=None, max_size=8)


# -- acceptance report ---------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
