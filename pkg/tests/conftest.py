import pytest

# filled by tests/test_acceptance.py: criterion number -> (passed, description)
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {text}")


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion and print a PASS/FAIL line."""
    state = {}

    def register(number: int, text: str):
        state["key"] = (number, text)

    yield register
    if "key" in state:
        number, text = state["key"]
        rep = getattr(request.node, "rep_call", None)
        ok = rep is not None and rep.passed
        ACCEPTANCE_RESULTS[number] = (ok, text)
        print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {text}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
