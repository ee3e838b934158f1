import re

_AC = re.compile(r"test_acceptance\.py::test_ac(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    reports = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _AC.search(getattr(rep, "nodeid", ""))
            if m and (rep.when == "call" or outcome == "error"):
                reports.append((int(m.group(1)), m.group(2), outcome, dict(rep.user_properties)))
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for n, name, outcome, props in sorted(reports):
        tag = "PASS" if outcome == "passed" else "FAIL"
        detail = props.get("measured", "")
        terminalreporter.write_line(f"AC{n:02d} {tag} {name.replace('_', ' ')}: {detail}")
