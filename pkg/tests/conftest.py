import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# filled by test_acceptance.py; one line per criterion in the terminal summary
ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(f"{ACCEPTANCE[name]}  {name}")
