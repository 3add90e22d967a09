import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semiexp.corpus import fixtures, enumerate_order_n  # noqa: E402
from semiexp.generated import GeneratedSemigroup  # noqa: E402
from semiexp.semigroup import FiniteSemigroup  # noqa: E402


@pytest.fixture(scope="session")
def fx():
    return {e.name: e for e in fixtures()}


@pytest.fixture(scope="session")
def small_corpus():
    out = []
    for n in (1, 2, 3):
        out.extend(enumerate_order_n(n))
    return out


def gen(table, letters, images):
    return GeneratedSemigroup(FiniteSemigroup(table), letters, images)


TRIV = [[0]]
Z2 = [[0, 1], [1, 0]]
Z3 = [[(i + j) % 3 for j in range(3)] for i in range(3)]
NULL3 = [[0, 0, 0]] * 3
SL2 = [[0, 1], [1, 1]]
LZ2 = [[0, 0], [1, 1]]
RZ2 = [[0, 1], [0, 1]]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
