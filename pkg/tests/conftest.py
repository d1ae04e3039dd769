import os
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"


def subprocess_env() -> dict:
    """Environment for running the CLI as `python -m vpal` from the tree."""
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return env


def pytest_runtest_logreport(report):
    # One pass/fail line per acceptance criterion, visible in the terminal.
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    status = "PASS" if report.passed else "FAIL"
    sys.stderr.write(f"\n[acceptance] {name}: {status}\n")
