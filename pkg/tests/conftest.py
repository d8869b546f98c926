import pytest

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion():
    """Record a PASS/FAIL line for an acceptance criterion.

    Usage: ``with criterion(3, "description"): ...``; the line is FAIL if the
    block raises.
    """

    class _Recorder:
        def __init__(self, number, text):
            self.number, self.text = number, text

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            status = "FAIL" if exc_type else "PASS"
            _ACCEPTANCE[self.number] = (status, self.text)
            print(f"criterion {self.number}: {status}  {self.text}")
            return False

    return _Recorder


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        status, text = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {text}")
