from __future__ import annotations

import pytest

from qnewton.poset import antichain, chain, enumerate_posets, from_covers

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record(criterion: str, passed: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (passed, detail)
    print(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.fixture(scope="session")
def corpus_upto5():
    return [p for m in range(1, 6) for p in enumerate_posets(m)]


@pytest.fixture(scope="session")
def corpus_upto4():
    return [p for m in range(1, 5) for p in enumerate_posets(m)]


@pytest.fixture
def fan():
    return from_covers(3, [(1, 3), (2, 3)])


@pytest.fixture
def anti2():
    return antichain(2)


@pytest.fixture
def chain3():
    return chain(3)
