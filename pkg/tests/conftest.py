import pytest

from sareg import HomogeneousIdeal, Ring


@pytest.fixture
def R4():
    return Ring(4)


@pytest.fixture
def skew_lines(R4):
    from sareg import intersect
    return intersect(HomogeneousIdeal.parse(R4, "x0", "x1"), HomogeneousIdeal.parse(R4, "x2", "x3"))


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict = {}


@pytest.fixture
def acceptance(request):
    def record(number: int, title: str, ok: bool, detail: str = ""):
        ACCEPTANCE[number] = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        print(ACCEPTANCE[number])
        assert ok, ACCEPTANCE[number]
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
