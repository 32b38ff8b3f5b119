from fractions import Fraction

import pytest
from hypothesis import strategies as st

from taxiapollo.exact_plane import Point

ACCEPTANCE_RESULTS = []


def rationals(lo=-20, hi=20, max_den=6):
    return st.builds(
        lambda n, d: Fraction(n, d),
        st.integers(lo * max_den, hi * max_den),
        st.integers(1, max_den),
    )


@st.composite
def points(draw, lo=-20, hi=20, max_den=6):
    return Point(draw(rationals(lo, hi, max_den)), draw(rationals(lo, hi, max_den)))


@st.composite
def distinct_pairs(draw, **kw):
    p = draw(points(**kw))
    q = draw(points(**kw).filter(lambda q: q != p))
    return p, q


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_RESULTS


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
