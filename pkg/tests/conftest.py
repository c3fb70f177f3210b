import pytest

_RESULTS: list[tuple[str, bool, str]] = []


class _Recorder:
    def __call__(self, name: str, passed: bool, detail: str = "") -> bool:
        _RESULTS.append((name, passed, detail))
        return passed


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary prints them after the run."""
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _RESULTS:
        line = f"criterion {name} {'PASS' if passed else 'FAIL'}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
