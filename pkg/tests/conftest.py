from fractions import Fraction as F

import pytest

from evidential import make_frame, make_mass

from _report import RESULTS as ACCEPTANCE


@pytest.fixture
def abc():
    return make_frame(["a", "b", "c"])


@pytest.fixture
def m1(abc):
    # m1({a,b}) = 1/2, m1(Θ) = 1/2
    return make_mass(abc, {0b011: F(1, 2), 0b111: F(1, 2)})


@pytest.fixture
def m2(abc):
    # m2({a,c}) = 5/7, m2(Θ) = 2/7
    return make_mass(abc, {0b101: F(5, 7), 0b111: F(2, 7)})


@pytest.fixture
def conflict_pair(abc):
    a = make_mass(abc, {0b001: 0.6, 0b111: 0.4})
    b = make_mass(abc, {0b010: 0.5, 0b111: 0.5})
    return a, b


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0][2:])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
