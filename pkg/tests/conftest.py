import os
import re
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=_criterion_order):
            terminalreporter.write_line(RESULTS[key])


def _criterion_order(key: str):
    mt = re.match(r"criterion (\d+)(.*)", key)
    return (int(mt.group(1)), mt.group(2)) if mt else (10**6, key)
