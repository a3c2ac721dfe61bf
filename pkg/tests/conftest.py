import pytest

from reidpair.groupring import a, b, zero_vector

G = 4


@pytest.fixture
def vec():
    """Small helpers for genus-4 lattice vectors."""

    class V:
        zero = zero_vector(G)

        @staticmethod
        def a(i, n=1):
            return tuple(n * c for c in a(G, i))

        @staticmethod
        def b(i, n=1):
            return tuple(n * c for c in b(G, i))

        @staticmethod
        def add(*vs):
            return tuple(map(sum, zip(*vs)))

    return V


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
