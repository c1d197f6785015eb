"""Shared pytest plumbing: the acceptance-criteria summary block.

Acceptance tests register one entry per criterion via record_criterion; the
terminal summary then prints a single PASS/FAIL line for each, so the
reproduction status is readable without digging through tracebacks.
"""

_ENTRIES = []


def record_criterion(number: int, description: str, passed: bool, detail: str = "") -> None:
    _ENTRIES.append((number, description, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ENTRIES:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed, detail in sorted(_ENTRIES):
        flag = "PASS" if passed else "FAIL"
        line = f"criterion {number:2d}: {flag}  {description}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
