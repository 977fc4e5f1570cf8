import time

import pytest

_RESULTS: dict[int, tuple[str, bool, float, str]] = {}


class Criterion:
    """Times one acceptance criterion and remembers whether it passed."""

    def __init__(self, number: int, title: str):
        self.number, self.title, self.note = number, title, ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        _RESULTS[self.number] = (self.title, exc_type is None, elapsed, self.note)
        status = "PASS" if exc_type is None else "FAIL"
        print(f"criterion {self.number:>2} {status} {elapsed:7.2f}s  {self.title}  {self.note}".rstrip())
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, elapsed, note = _RESULTS[number]
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'} {elapsed:7.2f}s  {title}"
        terminalreporter.write_line(f"{line}  {note}".rstrip())
