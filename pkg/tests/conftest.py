from __future__ import annotations

import functools

import pytest
from hypothesis import HealthCheck, settings

from hopfdoubles.catalog import catalog_build
from hopfdoubles.doubles import build_drinfeld_double

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

SMALL = ["trivial", "group:Z/2", "group:Z/3", "sweedler"]


@functools.lru_cache(maxsize=None)
def algebra(name: str):
    return catalog_build(name)


@functools.lru_cache(maxsize=None)
def package(name: str):
    """Drinfeld double package, shared across tests (all objects are immutable)."""
    return build_drinfeld_double(algebra(name))


@pytest.fixture(params=SMALL)
def small_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
