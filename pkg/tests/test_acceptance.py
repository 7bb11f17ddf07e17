"""Acceptance suite: one test per criterion, one pass/fail line per criterion.

The lines are printed as each criterion runs (visible with ``-s``) and again
in the terminal summary.
"""
from __future__ import annotations

import pytest

from sasakilie.verify import CRITERIA, run_criterion

RESULTS: dict = {}


@pytest.mark.parametrize("cid", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(cid):
  r = run_criterion(cid)
  RESULTS[cid] = r
  print(r.line())
  failed = [f"  {name}: {info}" for name, ok, info in r.details if not ok]
  assert r.ok, "\n".join([r.line(), *failed])
