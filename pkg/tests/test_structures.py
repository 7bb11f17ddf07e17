from __future__ import annotations

import pytest

from conftest import cat
from sasakilie import linalg as la
from sasakilie import structures
from sasakilie.algebra import LieAlgebra
from sasakilie.catalog import aff_aff_kahler
from sasakilie.constructions import KahlerExactSeed, build_centreless, central_extension
from sasakilie.curvature import MetricLieAlgebra
from sasakilie.scalars import ValidationError
from sasakilie.structures import (AlmostContactMetric, HermitianData, almost_contact_report,
                                  check_kahler, check_normal, check_sasakian, kahler_einstein_check,
                                  kahler_exact, sasaki_identities)

SASAKIAN = [("h3", {}), ("h5", {}), ("su2_family", {"k": 2}), ("example_7dim_i", {"k": -1}),
            ("example_7dim_ii", {"k": 1}), ("null_solvmanifold_7dim", {"a": 2, "b": 1}),
            ("h0_extension", {"a": 1, "n": 1})]


def patched_h5():
  """``h5`` with ``J e2 = -e4`` instead of ``e4`` (``e4`` is left alone)."""
  S = cat("h5").contact
  phi = [list(r) for r in S.phi]
  for row in phi:
    row[1] = -row[1]
  return AlmostContactMetric(S.metric, phi, S.xi)


@pytest.mark.parametrize("name,params", SASAKIAN)
def test_catalog_bundles_are_sasakian(name, params):
  S = cat(name, **params).contact
  rep = check_sasakian(S)
  assert rep.ok, rep.failures()
  nr = check_normal(S)
  assert nr.nijenhuis_route and nr.bracket_route
  assert sasaki_identities(S).ok


def test_central_extension_of_kahler_is_normal():
  H = aff_aff_kahler()
  assert check_kahler(H).ok
  S = central_extension(H)
  assert check_normal(S).ok and check_sasakian(S).ok


def test_patched_structure_is_not_normal():
  T = patched_h5()
  nr = check_normal(T)
  assert not nr.ok and not nr.bracket_route
  assert nr.witness == (1, 3)
  rep = check_sasakian(T)
  assert "normal" in rep.failures() and "phi_squared" in rep.failures()


def test_normality_routes_guard(monkeypatch):
  S = cat("h3").contact
  n = S.dim
  junk = tuple(tuple(la.unit(n, 0) for _ in range(n)) for _ in range(n))
  monkeypatch.setattr(structures, "nijenhuis_phi", lambda S: junk)
  with pytest.raises(RuntimeError):
    check_normal(S)


def test_almost_contact_axioms_itemized():
  S = cat("h3").contact
  bad = AlmostContactMetric(S.metric, S.phi, S.xi, (0, 0, 2))
  failures = almost_contact_report(bad).failures()
  assert "eta_xi" in failures and "eta_dual" in failures
  with pytest.raises(ValidationError):
    AlmostContactMetric(S.metric, S.phi, (0, 1))


def test_builder_output_is_sasakian():
  seed = KahlerExactSeed(aff_aff_kahler(), 1)
  assert check_sasakian(build_centreless(seed)).ok


def test_builder_rejects_wrong_gamma_on_H0():
  h1 = aff_aff_kahler()
  good = KahlerExactSeed(h1, 1, H0=(0, 1, 0, 0))
  assert good.validate().ok
  # closed 1-forms vanish on H0 = e2, so any change of gamma(H0) also breaks the primitive
  bad = KahlerExactSeed(h1, 1, H0=(0, 1, 0, 0), gamma=la.vadd(good.gamma, (0, 1, 0, 0)))
  rep = bad.validate()
  assert "gamma_H0" in rep.failures()
  with pytest.raises(ValidationError):
    build_centreless(bad)
  S = build_centreless(bad, validate=False)
  assert not check_sasakian(S).ok


def test_kahler_examples():
  H = aff_aff_kahler()
  alpha = kahler_exact(H)
  assert alpha is not None
  flat = cat("abelian", n=4).hermitian
  assert kahler_einstein_check(flat).constant == 0
  assert kahler_exact(flat) is None
  base = cat("null_solvmanifold_7dim", a=1, b=2).parts["base"].hermitian
  assert check_kahler(base).ok and kahler_einstein_check(base).constant == 0


def test_hermitian_validation():
  M = MetricLieAlgebra(LieAlgebra.abelian(2))
  with pytest.raises(ValidationError):
    HermitianData(M, ((0, -2), (1, 0)))
  with pytest.raises(ValidationError):
    HermitianData(MetricLieAlgebra(LieAlgebra.abelian(2), ((1, 0), (0, 4))), ((0, -1), (1, 0)))
  with pytest.raises(ValidationError):
    HermitianData(MetricLieAlgebra(LieAlgebra.abelian(3)), la.identity(3))


def test_non_integrable_J_is_not_kahler():
  L = cat("aff_product", a1=1, a2=1).algebra
  J = ((0, 0, -1, 0), (0, 0, 0, -1), (1, 0, 0, 0), (0, 1, 0, 0))  # pairs e1 with e3
  rep = check_kahler(HermitianData(MetricLieAlgebra(L), J))
  assert not rep.ok and not rep["parallel"].ok
