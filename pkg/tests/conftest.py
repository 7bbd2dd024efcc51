import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

# Exact arithmetic makes individual examples slow on cold caches; keep runs reproducible.
settings.register_profile("rootsuper", deadline=None, derandomize=True)
settings.load_profile("rootsuper")


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, when that suite ran."""
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
