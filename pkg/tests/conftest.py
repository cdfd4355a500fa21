from .acceptance_log import KEY


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(KEY, {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(lines[number])
