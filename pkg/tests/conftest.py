import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from hypfan.generators import generate_octahedral, generate_s3  # noqa: E402

# exact arithmetic makes timings vary widely; correctness is what is checked
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

_criteria = {}


@pytest.fixture(scope="session")
def octa():
    return generate_octahedral()


@pytest.fixture(scope="session")
def s3():
    return generate_s3()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    key = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria[key] = rep.outcome == "passed" and _criteria.get(key, True)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {num} ({title}): {'PASS' if ok else 'FAIL'}")
