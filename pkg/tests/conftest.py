import pytest
from hypothesis import strategies as st

from ifnrank import Trifn
from ifnrank.tables import INDEX_TABLE_SETS

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


@st.composite
def trifns(draw, low=-10.0, high=10.0):
    a = sorted(draw(st.lists(st.floats(low, high, allow_nan=False), min_size=4, max_size=4)))
    w = draw(st.floats(0, 1))
    u = draw(st.floats(0, 1 - w))
    return Trifn(*a, w, u)


@pytest.fixture
def set1():
    return INDEX_TABLE_SETS["Set I"]


@pytest.fixture
def set1_a(set1):
    return set1["a"]


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's verdict for the terminal summary."""
    state = {"detail": ""}

    def note(detail):
        state["detail"] = detail

    yield note
    passed = not getattr(request.node, "_failed", False)
    ACCEPTANCE_RESULTS[request.node.name] = (passed, state["detail"])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and report.failed:
        item._failed = True


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, detail) in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
