import pytest
from hypothesis import settings, strategies as st

from hypercount.partitions import partitions_of

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# acceptance lines collected by test_acceptance and echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@st.composite
def partitions(draw, max_size=12, min_size=0):
    n = draw(st.integers(min_size, max_size))
    return draw(st.sampled_from(partitions_of(n))) if n else ()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES
