import sys


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance criteria verdicts collected during the run."""
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        ok, detail = results[k]
        terminalreporter.write_line(f"{k:>2} {'PASS' if ok else 'FAIL'}: {detail}")
