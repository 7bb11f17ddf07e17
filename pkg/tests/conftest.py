from __future__ import annotations

import functools

import pytest
from hypothesis import settings

from sasakilie.catalog import catalog

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def _cached(name: str, items: tuple):
  return catalog(name, dict(items))


def cat(name: str, **params):
  """Catalog bundle, cached across tests (bundles are immutable)."""
  return _cached(name, tuple(sorted(params.items())))


@pytest.fixture
def tolerance():
  from sasakilie.scalars import get_tolerance, set_tolerance

  old = get_tolerance()
  yield set_tolerance
  set_tolerance(old)


def pytest_terminal_summary(terminalreporter):
  import test_acceptance

  if test_acceptance.RESULTS:
    terminalreporter.section("acceptance criteria")
    for cid in sorted(test_acceptance.RESULTS):
      terminalreporter.write_line(test_acceptance.RESULTS[cid].line())
