from hypothesis import HealthCheck, settings

settings.register_profile(
    "lowvol",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("lowvol")


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance verdicts, which tests record as user properties."""
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when == "call":
                lines += [v for k, v in rep.user_properties if k == "acceptance"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: (int(s.split()[1].rstrip("abc:")), s.split()[1])):
            terminalreporter.write_line(line)
