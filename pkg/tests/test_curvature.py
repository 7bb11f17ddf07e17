from __future__ import annotations

from fractions import Fraction as F

import numpy as np
import pytest

from conftest import cat
from sasakilie import linalg as la
from sasakilie.algebra import LieAlgebra
from sasakilie.curvature import (MetricLieAlgebra, curvature_identities, einstein_check,
                                 eta_einstein_check, ricci_form, scalar_curvature)
from sasakilie.scalars import ValidationError


def ricci_oracle(M):
  """Ricci tensor of a left-invariant metric from the orthonormal-frame formula

  ``Ric(x, x) = -1/2 sum |[x, e_i]|^2 - 1/2 B(x, x) + 1/4 sum <[e_i, e_j], x>^2 - <[H, x], x>``

  (``H`` the mean curvature vector, ``<H, x> = tr ad_x``), polarised, in numpy.
  """
  n = M.dim
  G = np.array(M.gram, dtype=float)
  C = np.array(M.algebra.structure_constants, dtype=float)  # C[i, j, k]
  P = np.linalg.inv(np.linalg.cholesky(G)).T  # columns: orthonormal frame
  Pinv = np.linalg.inv(P)
  Co = np.einsum("ia,jb,ijk,ck->abc", P, P, C, Pinv)
  ad = np.transpose(Co, (0, 2, 1))  # ad[a] acting on columns
  B = np.einsum("aij,bji->ab", ad, ad)
  H = np.array([np.trace(ad[a]) for a in range(n)])
  Ric = np.zeros((n, n))
  for a in range(n):
    for b in range(n):
      t1 = -0.5 * np.sum(Co[a, :, :] * Co[b, :, :])
      t3 = 0.25 * np.sum(Co[:, :, a] * Co[:, :, b])
      Ha, Hb = H @ Co[:, a, :], H @ Co[:, b, :]  # [H, e_a], [H, e_b]
      t4 = -0.5 * (Ha[b] + Hb[a])
      Ric[a, b] = t1 - 0.5 * B[a, b] + t3 + t4
  return Pinv.T @ Ric @ Pinv


CASES = [("h3", {}), ("h5", {}), ("su2_family", {"k": 2}), ("su2_family", {"k": -1}),
         ("example_7dim_i", {"k": 1}), ("example_7dim_ii", {"k": 3}), ("normal_j_6dim", {}),
         ("normal_j_8dim", {"a": 1, "b": 2}), ("d_a_n", {"a": 2, "n": 2}),
         ("null_solvmanifold_7dim", {"a": 1, "b": 2})]


@pytest.mark.parametrize("name,params", CASES)
def test_ricci_matches_orthonormal_frame_formula(name, params):
  M = cat(name, **params).metric
  exact = np.array(M.ricci_matrix, dtype=float)
  assert np.allclose(exact, ricci_oracle(M), atol=1e-9)


@pytest.mark.parametrize("name,params", CASES)
def test_curvature_identities(name, params):
  assert all(curvature_identities(cat(name, **params).metric).values())


def test_non_diagonal_gram():
  L = cat("aff_product", a1=1, a2=2).algebra
  M = MetricLieAlgebra(L, ((2, 1, 0, 0), (1, 2, 0, 0), (0, 0, 1, 0), (0, 0, 0, 3)))
  assert all(curvature_identities(M).values())
  assert np.allclose(np.array(M.ricci_matrix, dtype=float), ricci_oracle(M), atol=1e-9)


def test_gram_validation():
  L = LieAlgebra.abelian(2)
  with pytest.raises(ValidationError):
    MetricLieAlgebra(L, ((1, 2), (2, 1)))
  with pytest.raises(ValidationError):
    MetricLieAlgebra(L, ((1, 1), (0, 1)))


def test_abelian_is_flat():
  M = MetricLieAlgebra(LieAlgebra.abelian(3), ((2, 1, 0), (1, 3, 0), (0, 0, 5)))
  assert all(la.is_zero_matrix(Li) for Li in M.connection.matrices)
  assert all(la.is_zero_matrix(op) for row in M.curvature.ops for op in row)


@pytest.mark.parametrize("name,params", CASES[:6] + CASES[-1:])
def test_sasakian_connection_and_curvature(name, params):
  S = cat(name, **params).contact
  M = S.metric
  n = S.dim
  nabla = M.connection
  for i in range(n):
    x = la.unit(n, i)
    assert la.vec_equal(nabla(x, S.xi), la.vscale(-1, S.apply_phi(x)))
  for i in range(n):
    for j in range(n):
      x, y = la.unit(n, i), la.unit(n, j)
      lhs = la.matvec(M.curvature.operator(x, y), S.xi)
      rhs = la.vsub(la.vscale(S.eta_of(y), x), la.vscale(S.eta_of(x), y))
      assert la.vec_equal(lhs, rhs)
  assert ricci_form(M, S.xi, S.xi) == 2 * S.n


def test_centreless_builder_connection():
  B = cat("example_7dim_ii", k=1)
  M = B.metric
  S = B.contact
  n = S.dim
  # u, v span the image of ad_xi; labels e5, e6, e7 = xi
  u, v = la.unit(n, 4), la.unit(n, 5)
  H0 = tuple(B.seed.H0) + (0, 0, 0)
  half = F(1, 2)
  assert la.vec_equal(M.connection(v, u), la.vsub(la.vscale(-1, S.xi), la.vscale(half, H0)))
  assert la.vec_equal(M.connection(u, v), la.vadd(S.xi, la.vscale(half, H0)))


def test_flat_kahler_base_of_solvmanifold():
  H = cat("null_solvmanifold_7dim", a=1, b=2).parts["base"].hermitian
  assert all(la.is_zero_matrix(op) for row in H.metric.curvature.ops for op in row)


def test_ricci_examples():
  for a, n in ((1, 1), (1, 2), (3, 1)):
    M = cat("d_a_n", a=a, n=n).metric
    assert einstein_check(M) == -F(a) ** 2 * (F(n, 2) + 1)
  assert scalar_curvature(cat("h3").metric) == -2
  assert einstein_check(cat("d_a_n", a=1, n=1).metric) == F(-3, 2)
  assert einstein_check(cat("aff_product", a1=1, a2=1).metric) == -1
  assert einstein_check(cat("aff_product", a1=1, a2=2).metric) is None


def test_eta_einstein_examples():
  ee = eta_einstein_check(cat("h5").contact)
  assert (ee.lam, ee.kind) == (-2, "null")
  ee = eta_einstein_check(cat("example_7dim_i", k=F(-1, 2)).contact)
  assert (ee.lam, ee.kind) == (-3, "negative")
  # c = -sqrt 2 is irrational, so this instance runs in float mode
  ee = eta_einstein_check(cat("h0_extension", a=1.0, n=1, c=-(2 ** 0.5)).contact)
  assert ee.kind == "negative" and ee.lam == pytest.approx(-4)


def test_eta_einstein_negative_family_exact():
  # 2 c^2 = a^2 (n + 3) with a = 2, n = 5: c^2 = 16, lambda = -18
  ee = eta_einstein_check(cat("h0_extension", a=2, n=5, c=-4).contact)
  assert ee is not None and ee.lam == -18 and ee.kind == "negative"
