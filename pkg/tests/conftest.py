import warnings

import pytest

from hypersum.jacobi_fourier import CancellationWarning


@pytest.fixture(autouse=True)
def _quiet_cancellation():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CancellationWarning)
        yield


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
