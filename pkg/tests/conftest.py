import re

import pytest
from hypothesis import strategies as st

from chiralpart import _purepy, kernels


@st.composite
def partitions_st(draw, max_n=30, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parts = []
    rest = n
    while rest:
        part = draw(st.integers(min_value=1, max_value=min(rest, parts[-1] if parts else rest)))
        parts.append(part)
        rest -= part
    return tuple(parts)


BACKENDS = [_purepy]
if kernels.BACKEND == "cython":
    from chiralpart import _speedups

    BACKENDS.append(_speedups)


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def backend(request):
    return request.param


_criteria = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not match:
        return
    number = int(match.group(1))
    if report.when == "call" or report.outcome != "passed":
        previous = _criteria.get(number, "PASS")
        _criteria[number] = "PASS" if report.outcome == "passed" and previous == "PASS" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        terminalreporter.write_line(f"criterion {number:2d}: {_criteria[number]}")
