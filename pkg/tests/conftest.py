"""Shared pytest plumbing: acceptance-criterion result lines."""

CRITERION_LINES = []


def record_criterion(number, passed, detail):
    CRITERION_LINES.append(
        "CRITERION %d: %s  (%s)" % (number, "PASS" if passed else "FAIL",
                                    detail))


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for line in sorted(CRITERION_LINES):
        terminalreporter.write_line(line)
