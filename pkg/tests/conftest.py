import pytest

from cyclofactor.ffield import make_context

_PRIME_POWER = {9: (3, 2), 25: (5, 2), 27: (3, 3), 49: (7, 2), 81: (3, 4), 121: (11, 2)}


def ctx_for(q: int):
    """Context for a prime or one of the small prime powers used in tests."""
    if q in _PRIME_POWER:
        return make_context(*_PRIME_POWER[q])
    return make_context(q)


_acceptance_log: list[tuple[str, bool, float]] = []


def record_acceptance(name: str, passed: bool, seconds: float) -> None:
    _acceptance_log.append((name, passed, seconds))


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_log:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, seconds in _acceptance_log:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({seconds:.1f}s)")
