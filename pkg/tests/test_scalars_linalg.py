from __future__ import annotations

from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sasakilie import linalg as la
from sasakilie.scalars import (EXACT, FLOAT, ModeError, ValidationError, coerce, exact_sqrt, fmt,
                               get_tolerance, is_zero, parse_scalar, set_tolerance, sqrt)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(n):
  return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n).map(
    lambda rows: tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------- scalars


def test_exact_mode_refuses_floats():
  with pytest.raises(ModeError):
    coerce(0.5, EXACT)
  with pytest.raises(ModeError):
    coerce(True, EXACT)
  assert coerce(3, EXACT) == F(3)
  assert coerce(F(1, 3), FLOAT) == pytest.approx(1 / 3)


def test_parse_scalar():
  assert parse_scalar("-3/4") == F(-3, 4)
  assert parse_scalar("1/4", FLOAT) == 0.25
  with pytest.raises(ValidationError):
    parse_scalar("pi")


def test_tolerance(tolerance):
  assert get_tolerance() == 1e-9
  assert is_zero(1e-10) and not is_zero(1e-8)
  tolerance(1e-6)
  assert is_zero(1e-7)
  with pytest.raises(ValueError):
    set_tolerance(0)


def test_sqrt():
  assert exact_sqrt(F(9, 4)) == F(3, 2)
  assert exact_sqrt(2) is None
  with pytest.raises(ModeError):
    sqrt(F(2))
  assert sqrt(2.0) == pytest.approx(2 ** 0.5)
  assert fmt(F(-1, 2)) == "-1/2" and fmt(F(4)) == "4"


# ---------------------------------------------------------------- linear algebra


def test_rref_nullspace_solve():
  a = ((1, 2, 3), (2, 4, 6), (1, 0, 1))
  assert la.rank(a) == 2
  ker = la.nullspace(a)
  assert len(ker) == 1
  assert la.is_zero_vector(la.matvec(a, ker[0]))
  x = la.solve(((2, 1), (1, 3)), (3, 5))
  assert x == (F(4, 5), F(7, 5))
  assert la.solve(((1, 1), (1, 1)), (1, 2)) is None


@given(matrices(3))
def test_det_and_inverse_agree_with_numpy(a):
  d = la.det(a)
  assert float(d) == pytest.approx(np.linalg.det(np.array(a, dtype=float)), abs=1e-9)
  if d != 0:
    inv = la.inverse(a)
    assert la.mat_equal(la.matmul(a, inv), la.identity(3))


@given(matrices(4))
def test_charpoly_cayley_hamilton(a):
  p = la.charpoly(a)
  acc = la.zeros(4, 4)
  power = la.identity(4)
  for c in p:
    acc = la.madd(acc, la.mscale(c, power))
    power = la.matmul(a, power)
  assert la.is_zero_matrix(acc)
  assert p[0] == (la.det(a) if len(a) % 2 == 0 else -la.det(a))


def test_rational_roots_and_sturm():
  # (t - 1/2)^2 (t + 3) (t^2 + 1)
  cubic = [F(3, 4), F(-11, 4), F(2), 1]
  p = [F(3, 4), F(-11, 4), F(11, 4), F(-7, 4), F(2), 1]
  roots = la.rational_roots(cubic)
  assert roots == {F(1, 2): 2, F(-3): 1}
  poly = np.polynomial.Polynomial([float(c) for c in cubic])
  assert sorted(float(r) for r in roots for _ in range(roots[r])) == pytest.approx(
    sorted(poly.roots().real))
  assert la.count_real_roots([-2, 0, 1]) == 2
  assert la.count_real_roots([1, 0, 1]) == 0
  assert not la.all_roots_real(p)
  assert la.all_roots_real(cubic)


def test_spectrum_of_rotation_is_not_real():
  rot = ((0, -1), (1, 0))
  assert la.spectrum_is_real(rot) is False
  assert la.spectrum_is_real(((0.0, -1.0), (1.0, 0.0))) is False
  with pytest.raises(ModeError):
    la.eigenvalues(((0, 2), (1, 0)))
  assert la.eigenvalues(((0.0, 2.0), (1.0, 0.0))) == pytest.approx([-2 ** 0.5, 2 ** 0.5])


@given(matrices(3))
def test_inertia_matches_numpy(a):
  sym = la.madd(a, la.transpose(a))
  ev = np.linalg.eigvalsh(np.array(sym, dtype=float))
  expect = (int(np.sum(ev > 1e-9)), int(np.sum(ev < -1e-9)), int(np.sum(abs(ev) <= 1e-9)))
  assert la.inertia(sym) == expect


def test_subspace_canonical_form():
  a = la.Subspace.span([(1, 1, 0), (0, 1, 0)], 3)
  b = la.Subspace.span([(1, 0, 0), (2, 3, 0), (0, 0, 0)], 3)
  assert a == b and a.dim == 2
  assert a.contains((5, -1, 0)) and not a.contains((0, 0, 1))
  perp = a.orthogonal_complement()
  assert perp == la.Subspace.span([(0, 0, 1)], 3)
  assert a.intersect(la.Subspace.span([(1, 1, 1), (0, 0, 1)], 3)) == la.Subspace.span([(1, 1, 0)], 3)


def test_sparse_products_keep_mode():
  assert all(isinstance(x, float) for x in la.matvec(((0.0, 0.0), (0.0, 0.0)), (1, 1)))
  assert la.matmul(((1, 0), (0, 1)), ((F(1, 2), 0), (0, 3))) == ((F(1, 2), 0), (0, 3))
