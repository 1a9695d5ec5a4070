import json
from pathlib import Path

import pytest

from finite2groups.cohomology import Module, cohomology_group
from finite2groups.finite_algebra import FinAbGroup, cyclic_group, trivial_action
from finite2groups.twogroups import strict_quadruple, validate_quadruple

FIXTURES = Path(__file__).parent / "fixtures"


def fixture(name):
    return json.loads((FIXTURES / name).read_text())


def quadruple(n, cls=0):
    """(Z/n, Z/n, trivial, class ``cls`` of H^3)."""
    G, H = cyclic_group(n), FinAbGroup((n,))
    if not cls:
        return strict_quadruple(G, H)
    M = Module(G, H, trivial_action(G, H))
    return validate_quadruple(G, H, M.action, cohomology_group(M, 3).cocycle((cls,)))


@pytest.fixture
def z2_zero():
    return quadruple(2)


@pytest.fixture
def z2_nonzero():
    return quadruple(2, 1)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[num])
