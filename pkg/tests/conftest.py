import re

_CRITERION = re.compile(r"test_acceptance\.py::(test_criterion_\d+\w*)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion, printed whether or
    not the run was verbose."""
    rows = {}
    for outcome, flag in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m:
                name = m.group(1)
                # a FAIL in any phase beats a PASS from another phase
                if rows.get(name) != "FAIL":
                    rows[name] = flag
    if rows:
        terminalreporter.section("acceptance criteria")
        for name in sorted(rows):
            terminalreporter.write_line(f"{rows[name]}  {name}")
