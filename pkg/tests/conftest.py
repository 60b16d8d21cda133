import sys


def pytest_runtest_logreport(report):
    # one visible PASS/FAIL line per acceptance criterion
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    status = "PASS" if report.passed else "FAIL"
    name = report.nodeid.rsplit("::", 1)[-1]
    sys.stderr.write(f"[acceptance] {status}: {name}\n")
    sys.stderr.flush()
