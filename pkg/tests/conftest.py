import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", deadline=None, max_examples=200)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    # one line per acceptance criterion, in criterion order
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            crit = dict(rep.user_properties).get("criterion") if rep.when == "call" else None
            if crit is not None:
                lines.append((crit, "PASS" if rep.passed else "FAIL", dict(rep.user_properties)))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, status, props in sorted(lines, key=lambda t: t[0]):
            terminalreporter.write_line(f"criterion {crit}: {status}  ({props.get('seconds', 0):.1f} s)"
                                        f"  {props.get('detail', '')}")
