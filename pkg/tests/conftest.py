from fractions import Fraction

import pytest

from bordersolve import BorderedSystem, FamilySpec, generate


@pytest.fixture
def ex31():
    return generate(FamilySpec("example31"))


@pytest.fixture
def ex32():
    return generate(FamilySpec("example32"))


@pytest.fixture
def identity_like():
    n = 6
    zero = Fraction(0)
    return BorderedSystem(
        n,
        a=[Fraction(1)] * n,
        b=[zero] * (n - 1),
        c=[zero] * (n - 1),
        p=[zero] * (n - 2),
        q=[zero] * (n - 2),
        y=[Fraction(k) for k in range(1, n + 1)],
    )


# one PASS/FAIL line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
