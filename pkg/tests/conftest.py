import random

import pytest
from hypothesis import strategies as st

from hangwire.word import Word


def letters(max_nail=8, max_size=64):
    return st.lists(
        st.integers(1, max_nail).flatmap(lambda j: st.sampled_from((j, -j))),
        max_size=max_size,
    )


def words(max_nail=8, max_size=64):
    return letters(max_nail, max_size).map(Word)


def nail_sets(max_nail=8):
    return st.frozensets(st.integers(1, max_nail), max_size=max_nail)


def random_word(rng: random.Random, n: int, length: int) -> Word:
    """A reduced word of exactly ``length`` letters over nails 1..n."""
    out = []
    while len(out) < length:
        x = rng.choice([j for j in range(1, n + 1)] + [-j for j in range(1, n + 1)])
        if out and out[-1] == -x:
            continue
        out.append(x)
    return Word(out)


@pytest.fixture
def rng():
    return random.Random(20261018)


# -- acceptance reporting --------------------------------------------------------

ACCEPTANCE_CRITERIA = range(1, 10)
_acceptance: dict = {}


@pytest.fixture
def accept():
    """Record one part of an acceptance criterion: ``accept(number, ok, detail)``."""

    def record(number: int, ok: bool, detail: str) -> None:
        _acceptance.setdefault(number, []).append((bool(ok), detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance")
    for number in ACCEPTANCE_CRITERIA:
        parts = _acceptance.get(number)
        if not parts:
            terminalreporter.write_line(f"criterion {number}: NOT RUN")
            continue
        verdict = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        details = "; ".join(d if ok else f"FAILED {d}" for ok, d in parts)
        terminalreporter.write_line(f"criterion {number}: {verdict}  {details}")
