from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from hyperhodge import validate

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

QUINTIC = (["0", "0", "0", "0"], ["1/5", "2/5", "3/5", "4/5"])


def unit(max_den: int = 12):
    return st.integers(1, max_den).flatmap(
        lambda q: st.integers(0, q - 1).map(lambda n: Fraction(n, q))
    )


@st.composite
def hyper_data(draw, max_h: int = 6, max_den: int = 12, min_h: int = 1):
    h = draw(st.integers(min_h, max_h))
    alpha = draw(st.lists(unit(max_den), min_size=h, max_size=h))
    beta = draw(
        st.lists(unit(max_den).filter(lambda x: x not in alpha), min_size=h, max_size=h)
    )
    return validate(alpha, beta)


@pytest.fixture
def quintic():
    return validate(*QUINTIC)


def data(alpha: str, beta: str):
    """validate("1/5 2/5", "3/5 4/5")"""
    return validate(alpha.split(), beta.split())


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
