import pytest
from hypothesis import HealthCheck, settings

# derandomized so reruns draw the same samples
settings.register_profile(
    "repro", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

# acceptance criterion number -> (title, outcomes of its tests)
_CRITERIA: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): test belongs to acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or not (rep.when == "call" or rep.failed or rep.skipped):
        return
    status = "xfail" if hasattr(rep, "wasxfail") else rep.outcome
    _CRITERIA.setdefault(mark.args[0], (mark.args[1], []))[1].append(status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, states = _CRITERIA[n]
        verdict = "PASS" if all(s == "passed" for s in states) else "FAIL"
        tally = ", ".join(f"{states.count(s)} {s}" for s in sorted(set(states)))
        terminalreporter.write_line(f"criterion {n}: {verdict}  {title}  [{tally}]")
