ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line[1])
    passed = sum(1 for _, text in ACCEPTANCE_LINES if " PASS " in text)
    terminalreporter.write_line(f"{passed}/{len(ACCEPTANCE_LINES)} criteria pass")
