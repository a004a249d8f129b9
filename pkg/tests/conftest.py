import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> list of (label, passed); filled by test_acceptance.py
ACCEPTANCE: dict[int, list[tuple[str, bool]]] = {}
_START = time.perf_counter()


def record(criterion: int, label: str, passed: bool) -> bool:
    ACCEPTANCE.setdefault(criterion, []).append((label, bool(passed)))
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    elapsed = time.perf_counter() - _START
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[k]
        failed = [label for label, ok in checks if not ok]
        status = "FAIL" if failed else "PASS"
        detail = "; failed: " + ", ".join(failed) if failed else ""
        tr.write_line(f"criterion {k}: {status} ({len(checks)} checks{detail})")
    status = "PASS" if elapsed < 300 else "FAIL"
    tr.write_line(f"criterion 8 runtime: {status} (session {elapsed:.1f}s, limit 300s)")
