from __future__ import annotations

from fractions import Fraction as F

import pytest

from conftest import cat
from sasakilie import linalg as la
from sasakilie.algebra import bracket
from sasakilie.curvature import einstein_check
from sasakilie.linalg import Subspace
from sasakilie.normal_j import (NormalJAlgebra, datri_einstein, eta_einstein_obstruction,
                                h0_candidates, ricci_on_a, root_decomposition, root_invariants,
                                trace_formula_holds, unitary_derivations,
                                validate_derivation_lemmas)
from sasakilie.scalars import ValidationError

NORMAL_J = [("aff", {"a": 2}), ("d_ab", {"a": 1, "b": 3}), ("d_a", {"a": 2}),
            ("d_a_n", {"a": 1, "n": 2}), ("normal_j_6dim", {}), ("normal_j_8dim", {"a": 1, "b": 2}),
            ("normal_j_8dim", {"a": 2, "b": -2}), ("aff_product", {"a1": 1, "a2": 2, "a3": 3})]


@pytest.mark.parametrize("name,params", NORMAL_J)
def test_root_spaces_are_eigenspaces(name, params):
  """Oracle: ``[h, x] = alpha(h) x`` for every root vector, and the spaces fill ``n``."""
  N = cat(name, **params).normal_j
  R = root_decomposition(N)
  L = N.algebra
  total = 0
  for rt in R.roots:
    total += rt.dim
    for h in R.a.basis:
      a_h = la.dot(rt.covector, h)
      for x in rt.space.basis:
        assert la.vec_equal(bracket(L, h, x), la.vscale(a_h, x))
  assert total == R.n.dim == N.dim - R.a.dim
  assert R.a.dim == R.r
  assert root_invariants(N, R).ok
  assert trace_formula_holds(N, R)


@pytest.mark.parametrize("name,params", NORMAL_J)
def test_ricci_on_a_matches_curvature(name, params):
  N = cat(name, **params).normal_j
  R = root_decomposition(N)
  for h in R.h:
    assert ricci_on_a(N, h, R) == la.inner(N.metric.ricci_matrix, h, h)


def test_six_dimensional_roots():
  N = cat("normal_j_6dim").normal_j
  R = root_decomposition(N)
  eps = sorted(tuple(rt.covector) for rt in R.epsilons)
  assert eps == [(0, 2, 0, 0, 0, 0), (2, 0, 0, 0, 0, 0)]
  e = [la.unit(6, i) for i in range(6)]
  mixed = R.space("minus", 0, 1) + R.space("plus", 0, 1)
  assert mixed == Subspace.span([e[2], e[5]], 6)
  assert R.n_mixed == {(0, 1): 1}


def test_root_signatures():
  R = root_decomposition(cat("d_ab", a=1, b=2).normal_j)
  assert R.r == 2 and all(rt.distinguished for rt in R.roots)
  for n in (1, 2, 3):
    R = root_decomposition(cat("d_a_n", a=1, n=n).normal_j)
    kinds = sorted((rt.kind, rt.dim) for rt in R.roots)
    assert kinds == [("full", 1), ("half", 2 * n)]


def test_datri_criterion():
  for name, params in (("d_a", {"a": 1}), ("d_a_n", {"a": 2, "n": 3}), ("aff", {"a": 5})):
    N = cat(name, **params).normal_j
    res = datri_einstein(N)
    assert res and einstein_check(N.metric) == -res.constant
  for a, b in ((1, 1), (2, -2), (1, 2), (3, 1)):
    N = cat("normal_j_8dim", a=a, b=b).normal_j
    assert bool(datri_einstein(N)) == (abs(a) == abs(b))
    assert (einstein_check(N.metric) is not None) == (abs(a) == abs(b))
  for vals in ((1, 1), (2, 2, 2), (1, 2), (1, 1, 3)):
    params = {f"a{i + 1}": v for i, v in enumerate(vals)}
    assert bool(datri_einstein(cat("aff_product", **params).normal_j)) == (len(set(vals)) == 1)


def test_unitary_derivations():
  assert unitary_derivations(cat("d_ab", a=1, b=2).hermitian) == []
  ders = unitary_derivations(cat("d_a", a=1).hermitian)
  assert len(ders) == 1
  D = ders[0]  # rotation of span(x2, x3)
  assert all(la.is_zero_vector(la.matvec(D, la.unit(4, i))) for i in (0, 1))
  for n in (1, 2, 3):
    assert len(unitary_derivations(cat("abelian", n=2 * n).hermitian)) == n * n


@pytest.mark.parametrize("name,params", [("d_a", {"a": 1}), ("d_ab", {"a": 1, "b": 2}),
                                         ("d_a_n", {"a": 1, "n": 2}), ("normal_j_6dim", {})])
def test_derivation_lemmas(name, params):
  assert validate_derivation_lemmas(cat(name, **params).normal_j).ok


def test_h0_candidates():
  for a, n in ((1, 1), (3, 2)):
    (c,) = h0_candidates(cat("d_a_n", a=a, n=n).normal_j)
    assert c == la.vscale(-a, la.unit(2 + 2 * n, 1))
  got = {tuple(c) for c in h0_candidates(cat("d_ab", a=2, b=5).normal_j)}
  assert got == {(0, -2, 0, 0), (0, 0, 0, -5)}
  for name, params in NORMAL_J:
    N = cat(name, **params).normal_j
    assert len(h0_candidates(N)) == root_decomposition(N).a.dim


def test_obstruction():
  N = cat("normal_j_8dim", a=1, b=2).normal_j
  R = root_decomposition(N)
  assert (R.n_half, R.n_mixed) == ((0, 0), {(0, 1): 2})
  assert eta_einstein_obstruction(N, 1, R) and not eta_einstein_obstruction(N, 0, R)
  assert not eta_einstein_obstruction(cat("d_a_n", a=1, n=2).normal_j, 0)
  N = cat("d_ab", a=1, b=2).normal_j
  assert not any(eta_einstein_obstruction(N, i) for i in (0, 1))


def test_invalid_f_is_rejected():
  B = cat("d_ab", a=1, b=2)
  with pytest.raises(ValidationError):
    NormalJAlgebra(B.hermitian, (0, 1, 0, 1))
  N = NormalJAlgebra.from_form(B.algebra, B.J, (0, 2, 0, F(1, 2)))
  assert N.gram[1][1] == 2
