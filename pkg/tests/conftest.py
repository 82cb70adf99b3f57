import sys
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from hwunitary import E6, E7, build  # noqa: E402
from hwunitary.root_system import as_weight  # noqa: E402

GOLDEN = HERE / "golden"

E6_RHO = ("0", "1", "2", "3", "4", "-4", "-4", "4")
E7_RHO = ("0", "1", "2", "3", "4", "5", "-17/2", "17/2")


def read_golden(name):
    rows = []
    for line in (GOLDEN / name).read_text().splitlines():
        line = line.strip()
        if line:
            rows.append(as_weight(line.strip("()").split(",")))
    return rows


@pytest.fixture(scope="session")
def e6():
    return build(E6)


@pytest.fixture(scope="session")
def e7():
    return build(E7)


# acceptance results are collected here and echoed at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
