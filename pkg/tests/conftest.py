import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance verdicts, one line per criterion, at the end of the run."""
    import acceptance_log

    lines = acceptance_log.summary()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
