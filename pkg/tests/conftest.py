import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, (title, bad) in sorted(test_acceptance.RESULTS.items()):
        terminalreporter.write_line(test_acceptance.line(number, title, bad))
