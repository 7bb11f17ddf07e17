from __future__ import annotations

from fractions import Fraction as F

import pytest

from conftest import cat
from sasakilie import linalg as la
from sasakilie.algebra import centre
from sasakilie.catalog import d_a_modification, rotation_x2x3
from sasakilie.curvature import MetricLieAlgebra
from sasakilie.modification import (ManualSeedRequired, ModificationMap, check_modification,
                                    invariance_report, modification_slice, modified_algebra, modify)
from sasakilie.normal_j import unitary_derivations
from sasakilie.scalars import ValidationError
from sasakilie.structures import HermitianData, check_kahler


def zero_map(H):
  n = H.dim
  return ModificationMap(H, [la.zeros(n, n)] * n)


def test_zero_map_is_valid_and_trivial():
  for name, params in (("d_a", {"a": 1}), ("normal_j_6dim", {}), ("abelian", {"n": 4})):
    H = cat(name, **params).hermitian
    m = zero_map(H)
    assert check_modification(m).ok
    assert modified_algebra(m).equals(H.algebra)


def test_rotation_family():
  for a, c in ((1, 1), (2, F(-3, 2)), (F(1, 2), 5)):
    m = d_a_modification(a, c)
    assert check_modification(m).ok
    L = modified_algebra(m)  # h1, x1, x2, x3
    assert L.basis_bracket(0, 2) == (0, 0, F(a) / 2, c)
    assert L.basis_bracket(0, 3) == (0, 0, -c, F(a) / 2)
    H = modify(m)
    assert isinstance(H, HermitianData) and check_kahler(H).ok


def test_rotation_along_x1_is_invalid():
  base = cat("d_a", a=1)
  m = ModificationMap.from_covector(base.metric, (0, 1, 0, 0), rotation_x2x3(1), base.J)
  rep = check_modification(m)
  assert not rep.ok and "kills_brackets" in rep.failures()
  with pytest.raises(ValidationError):
    modify(m)


def test_modified_ricci_is_unchanged():
  m = d_a_modification(1, 3)
  base = m.base
  mod = modify(m).metric
  assert la.mat_equal(mod.ricci_matrix, base.ricci_matrix)
  assert not mod.algebra.equals(base.algebra)


@pytest.mark.parametrize("c", [1, -2, F(1, 3)])
def test_invariance_report(c):
  B = cat("d_a", a=1)
  rep = invariance_report(d_a_modification(1, c), B.f)
  assert rep.ok, rep.failures()


def test_slice_of_d_a_is_rotation():
  (m,) = modification_slice(cat("d_a", a=2).hermitian)
  assert check_modification(m).ok
  g = [m.maps[i] for i in range(4)]
  assert all(la.is_zero_matrix(D) for D in g[1:]) and not la.is_zero_matrix(g[0])


def test_slice_with_d_a_n_derivation():
  H = cat("d_a_n", a=1, n=2).hermitian
  B = cat("d_a_n", a=1, n=2)
  ders = unitary_derivations(H)
  assert len(ders) > 1
  with pytest.raises(ManualSeedRequired):
    modification_slice(H)
  for D in ders:
    for m in modification_slice(H, D):
      assert invariance_report(m, B.f).ok


def test_slice_without_derivations_is_empty():
  assert modification_slice(cat("d_ab", a=1, b=2).hermitian) == []


def test_heisenberg_modification_keeps_centre():
  M = cat("h5").metric  # e1..e4, xi with [e1, e3] = [e2, e4] = 2 xi
  D = tuple(tuple(1 if (r, c) == (2, 0) else -1 if (r, c) == (0, 2) else 0 for c in range(5))
            for r in range(5))  # e1 -> e3, e3 -> -e1
  with pytest.raises(ManualSeedRequired):
    modification_slice(M)
  maps = modification_slice(M, D)
  assert len(maps) == 2
  for m in maps:
    mod = modify(m)
    assert isinstance(mod, MetricLieAlgebra)
    assert not mod.algebra.equals(M.algebra)
    assert centre(mod.algebra).contains(la.unit(5, 4))
    rep = invariance_report(m)
    # the metric invariants survive; [h, h] grows since h5 is not completely solvable
    assert all(rep[key].ok for key in ("connection_shift", "curvature", "ricci"))
    assert rep.failures() == ["derived_algebra"]
