import warnings

import pytest

from imagestate.longitudinal import PerturbationWarning


@pytest.fixture
def quiet():
    """Silence first-order validity warnings for tests that deliberately use strong fields."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PerturbationWarning)
        yield


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""
    entry = {"label": request.node.name, "detail": ""}

    def note(label: str, detail: str) -> None:
        entry["label"] = label
        entry["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] {entry['label']}: {entry['detail']}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
