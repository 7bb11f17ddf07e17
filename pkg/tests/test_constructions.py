from __future__ import annotations

import math
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.linalg import expm

from conftest import cat
from sasakilie import linalg as la
from sasakilie.algebra import centre, change_basis, killing_form
from sasakilie.catalog import aff_aff_kahler, catalog
from sasakilie.constructions import (KahlerExactSeed, build_centreless, central_extension,
                                     kahler_reduction, lattice_integrality, split_by_reeb)
from sasakilie.curvature import eta_einstein_check
from sasakilie.linalg import Subspace
from sasakilie.notation import parse_structure_equations
from sasakilie.scalars import FLOAT, ValidationError
from sasakilie.structures import check_sasakian


def same_hermitian(a, b):
  return a.algebra.equals(b.algebra) and la.mat_equal(a.gram, b.gram) and la.mat_equal(a.J, b.J)


# ---------------------------------------------------------------- central extension


def test_extension_of_flat_plane_is_h3():
  S = central_extension(cat("abelian", n=2).hermitian)
  assert check_sasakian(S).ok
  assert S.algebra.equals(cat("h3").algebra)


def test_extension_of_flat_r4_is_null():
  S = central_extension(cat("abelian", n=4).hermitian)
  ee = eta_einstein_check(S)
  assert (ee.lam, ee.kind) == (-2, "null")


def test_extension_of_flat_solvable_base():
  B = cat("null_solvmanifold_7dim", a=1, b=2)
  S = central_extension(B.parts["base"].hermitian)
  xi = 6
  for i, j in ((0, 1), (2, 3), (4, 5)):
    assert S.algebra.basis_bracket(i, j)[xi] == 2


# ---------------------------------------------------------------- reduction


def test_reduction_of_h5_is_flat():
  H = kahler_reduction(cat("h5").contact)
  assert same_hermitian(H, cat("abelian", n=4).hermitian)


def test_reduction_of_solvmanifold():
  B = cat("null_solvmanifold_7dim", a=1, b=2)
  assert same_hermitian(kahler_reduction(B.contact), B.parts["base"].hermitian)


@pytest.mark.parametrize("name,params", [("abelian", {"n": 2}), ("abelian", {"n": 6}),
                                         ("aff_product", {"a1": 1, "a2": 3})])
def test_reduction_inverts_extension(name, params):
  H = cat(name, **params).hermitian
  assert same_hermitian(kahler_reduction(central_extension(H)), H)


def test_reduction_needs_centre():
  with pytest.raises(ValidationError):
    kahler_reduction(cat("example_7dim_i", k=1).contact)


# ---------------------------------------------------------------- centreless builder


def test_builder_on_aff_product():
  for k in (1, 2, F(-1, 3)):
    S = build_centreless(KahlerExactSeed(aff_aff_kahler(), k))
    text = (r"(0,-e^{12},0,-e^{34}, -k(2e^2+2e^4-e^7)e^6, k(2e^2+2e^4-e^7)e^5,"
            r" -2(e^{12}+e^{34}+e^{56}))")
    assert S.algebra.equals(parse_structure_equations(text, {"k": k}))
    assert centre(S.algebra).dim == 0


def test_builder_with_H0_is_solvable_variant():
  S = build_centreless(KahlerExactSeed(aff_aff_kahler(), 1, H0=(0, 1, 0, 0)))
  text = (r"(0, -e^{12}-e^{56}, 0, -e^{34}, -(2e^2+2e^4-e^7)e^6 - \tfrac12 e^{15},"
          r" (2e^2+2e^4-e^7)e^5 - \tfrac12 e^{16}, -2(e^{12}+e^{34}+e^{56}))")
  assert S.algebra.equals(parse_structure_equations(text))


def test_three_dimensional_builder():
  for k in (1, 3, -1, F(-1, 2)):
    S = cat("su2_family", k=k).contact
    L = S.algebra  # u, v, xi
    k = F(k)
    assert L.basis_bracket(2, 0) == (0, k, 0)
    assert L.basis_bracket(2, 1) == (-k, 0, 0)
    assert L.basis_bracket(0, 1) == (0, 0, 2)
    pos, neg, zero = la.inertia(killing_form(L))
    assert (neg == 3) == (k > 0)


# ---------------------------------------------------------------- Reeb split


def test_split_of_centreless_example():
  S = cat("example_7dim_i", k=1).contact
  sp = split_by_reeb(S)
  assert sp.ok
  e = [la.unit(7, i) for i in range(7)]
  assert sp.kernel == Subspace.span(e[:4] + [e[6]], 7)
  assert sp.image == Subspace.span(e[4:6], 7)
  assert la.is_zero_vector(sp.seed.H0)


def test_split_needs_trivial_centre():
  sp = split_by_reeb(cat("h5").contact)
  assert not sp.ok and sp.reason


def test_split_of_three_dimensional():
  sp = split_by_reeb(cat("su2_family", k=2).contact)
  assert sp.ok and sp.seed.h1.dim == 0 and sp.kernel.dim == 1 and sp.image.dim == 2


@pytest.mark.parametrize("name,params", [("example_7dim_ii", {"k": 2}),
                                         ("h0_extension", {"a": 2, "n": 1}),
                                         ("example_7dim_i", {"k": F(1, 2)})])
def test_split_then_build_is_a_change_of_basis(name, params):
  S = cat(name, **params).contact
  sp = split_by_reeb(S)
  rebuilt = build_centreless(sp.seed)
  P = la.transpose(tuple(sp.basis))
  assert change_basis(S.algebra, P).equals(rebuilt.algebra)


# ---------------------------------------------------------------- catalog


def test_catalog_examples():
  L = cat("d_a_n", a=1, n=2).algebra  # h1, x1, u1..u4
  assert L.basis_bracket(0, 1) == la.unit(6, 1)
  for j in range(2, 6):
    assert L.basis_bracket(0, j) == la.vscale(F(1, 2), la.unit(6, j))
  assert L.basis_bracket(2, 3) == la.unit(6, 1) and L.basis_bracket(4, 5) == la.unit(6, 1)
  assert not list(cat("abelian", n=4).algebra.nonzero_brackets())
  E = cat("normal_j_8dim", a=1, b=1).algebra
  assert E.basis_bracket(4, 6) == la.vscale(-1, la.unit(8, 2))
  assert E.basis_bracket(5, 7) == la.vscale(-1, la.unit(8, 2))


def test_catalog_errors():
  with pytest.raises(ValidationError):
    catalog("no_such_thing")
  with pytest.raises(ValidationError):
    catalog("aff", {"a": 1, "bogus": 2})


# ---------------------------------------------------------------- lattice


def exp_ad_oracle(a_turns, b_turns, t):
  """``expm(t ad_e1)`` on ``(e2, ..., e6, xi)`` from a float catalog algebra."""
  a, b = a_turns * math.pi / 2, b_turns * math.pi / 2
  L = catalog("null_solvmanifold_7dim", {"a": a, "b": b}, mode=FLOAT).algebra
  ad = np.array(L.ads[0], dtype=float)[1:, 1:]
  return expm(t * ad)


@pytest.mark.parametrize("a,b,t", [(1, 1, 1), (1, 1, 0), (1, 1, 4), (2, 1, 3), (F(2, 3), 1, 1),
                                   (F(1, 2), F(1, 3), 2)])
def test_lattice_matches_expm(a, b, t):
  r = lattice_integrality(a, b, t)
  assert np.allclose(np.array(r.matrix, dtype=float), exp_ad_oracle(float(a), float(b), float(t)),
                     atol=1e-9)
  M = exp_ad_oracle(float(a), float(b), float(t))
  assert r.integer == bool(np.allclose(M, np.round(M), atol=1e-9))


def test_lattice_examples():
  r = lattice_integrality(1, 1, 1)
  assert r.integer and r.exact
  r0 = lattice_integrality(1, 1, 0)
  assert r0.matrix == la.identity(6) and r0.integer
  r3 = lattice_integrality(F(2, 3), 1, 1)
  assert not r3.integer and not r3.exact
