import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::test_criterion_" not in getattr(rep, "nodeid", ""):
                continue
            if rep.when != "call" and outcome == "passed":
                continue
            name = rep.nodeid.split("::")[-1]
            num = int(name.split("_")[2])
            lines.append((num, name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for num, name, verdict in sorted(set(lines)):
            terminalreporter.write_line(f"criterion {num:2d}: {verdict}  ({name})")
