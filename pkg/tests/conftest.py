import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from suprema.lang import Alphabet, Lang
from suprema.sampling import random_lang

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def words(*ws):
    """Word tuples for single-character symbol strings."""
    return sorted({tuple(w) for w in ws}, key=lambda w: (len(w), w))


def as_set(k: Lang, n: int):
    return {"".join(w) for w in k.words(n)}


AB = Alphabet(("a", "b"))
ABU = Alphabet(("a", "b", "u"), uncontrollable=frozenset({"u"}))
AU = Alphabet(("a", "u"), uncontrollable=frozenset({"u"}))


@st.composite
def langs(draw, alphabet=AB, max_states=5):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_lang(random.Random(seed), alphabet, max_states)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


# lines appended by the acceptance suite, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
