import pytest

_RESULTS: dict[int, tuple[bool, str]] = {}


class Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title = number, title

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ok = exc_type is None
        detail = self.title if ok else f"{self.title} ({exc_type.__name__}: {exc})"
        _RESULTS[self.number] = (ok, detail)
        print(f"{'PASS' if ok else 'FAIL'} criterion {self.number}: {detail}")
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        ok, detail = _RESULTS[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
