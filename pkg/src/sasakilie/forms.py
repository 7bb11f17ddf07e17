"""Left-invariant exterior forms and the Chevalley-Eilenberg differential.

A :class:`KForm` of degree ``k`` is stored by its values on increasing
basis tuples, ``coeffs[(i1, ..., ik)] = form(e_i1, ..., e_ik)``, so that
``e^i ^ e^j`` evaluates as ``x_i y_j - x_j y_i``.
"""
from __future__ import annotations

from itertools import combinations
from typing import Mapping

from . import linalg as la
from .algebra import LieAlgebra
from .scalars import EXACT, ModeError, ValidationError, coerce, is_zero

__all__ = [
  "sort_with_sign",
  "KForm",
  "ce_differential",
  "basis_forms",
  "find_primitive",
]


def sort_with_sign(indices) -> tuple[int, tuple[int, ...]]:
  """Sort ``indices`` returning the permutation sign; sign 0 on repeats."""
  idx = list(indices)
  if len(set(idx)) != len(idx):
    return 0, ()
  sgn = 1
  for i in range(len(idx)):
    for j in range(len(idx) - 1 - i):
      if idx[j] > idx[j + 1]:
        idx[j], idx[j + 1] = idx[j + 1], idx[j]
        sgn = -sgn
  return sgn, tuple(idx)


class KForm:
  def __init__(self, dim: int, degree: int, coeffs: Mapping[tuple, object] | None = None,
               mode: str = EXACT):
    self.dim = dim
    self.degree = degree
    self.mode = mode
    clean = {}
    for key, val in (coeffs or {}).items():
      key = tuple(key)
      if len(key) != degree:
        raise ValidationError(f"index {key} has the wrong degree")
      if any(b <= a for a, b in zip(key, key[1:])):
        raise ValidationError(f"index {key} is not strictly increasing")
      if any(not 0 <= i < dim for i in key):
        raise ValidationError(f"index {key} out of range")
      val = coerce(val, mode)
      if val != 0:
        clean[key] = val
    self.coeffs = clean

  @classmethod
  def from_terms(cls, dim: int, degree: int, terms, mode: str = EXACT) -> "KForm":
    """Accumulate ``(indices, value)`` pairs with arbitrary index order."""
    acc: dict = {}
    for idx, val in terms:
      s, key = sort_with_sign(idx)
      if s:
        acc[key] = acc.get(key, 0) + s * coerce(val, mode)
    return cls(dim, degree, acc, mode)

  @classmethod
  def covector(cls, values, mode: str = EXACT) -> "KForm":
    return cls(len(values), 1, {(i,): v for i, v in enumerate(values)}, mode)

  @classmethod
  def from_matrix(cls, a, mode: str = EXACT) -> "KForm":
    n = len(a)
    return cls(n, 2, {(i, j): a[i][j] for i, j in combinations(range(n), 2)}, mode)

  @classmethod
  def zero(cls, dim: int, degree: int, mode: str = EXACT) -> "KForm":
    return cls(dim, degree, {}, mode)

  def value(self, indices) -> object:
    s, key = sort_with_sign(indices)
    if not s:
      return 0
    return s * self.coeffs.get(key, 0)

  def __call__(self, *vectors):
    if len(vectors) != self.degree:
      raise ValidationError("wrong number of arguments")
    total = 0
    for key, c in self.coeffs.items():
      m = tuple(tuple(v[i] for v in vectors) for i in key)
      total += c * la.det(m) if self.degree else c
    return total

  def as_vector(self) -> tuple:
    """Coefficients of a 1-form as a covector."""
    if self.degree != 1:
      raise ValidationError("not a 1-form")
    return tuple(self.coeffs.get((i,), 0) for i in range(self.dim))

  def to_matrix(self):
    if self.degree != 2:
      raise ValidationError("not a 2-form")
    n = self.dim
    return tuple(tuple(self.value((i, j)) if i != j else 0 for j in range(n)) for i in range(n))

  def _check(self, other: "KForm") -> None:
    if self.mode != other.mode:
      raise ModeError("forms of different modes")
    if self.dim != other.dim:
      raise ValidationError("forms on different algebras")

  def __add__(self, other: "KForm") -> "KForm":
    self._check(other)
    if self.degree != other.degree:
      raise ValidationError("cannot add forms of different degree")
    acc = dict(self.coeffs)
    for k, v in other.coeffs.items():
      acc[k] = acc.get(k, 0) + v
    return KForm(self.dim, self.degree, acc, self.mode)

  def __neg__(self) -> "KForm":
    return KForm(self.dim, self.degree, {k: -v for k, v in self.coeffs.items()}, self.mode)

  def __sub__(self, other: "KForm") -> "KForm":
    return self + (-other)

  def scale(self, c) -> "KForm":
    return KForm(self.dim, self.degree, {k: c * v for k, v in self.coeffs.items()}, self.mode)

  def __rmul__(self, c) -> "KForm":
    return self.scale(c)

  def wedge(self, other: "KForm") -> "KForm":
    self._check(other)
    terms = []
    for ka, va in self.coeffs.items():
      for kb, vb in other.coeffs.items():
        terms.append((ka + kb, va * vb))
    return KForm.from_terms(self.dim, self.degree + other.degree, terms, self.mode)

  def is_zero(self) -> bool:
    return all(is_zero(v) for v in self.coeffs.values())

  def equals(self, other: "KForm") -> bool:
    return self.degree == other.degree and (self - other).is_zero()

  def __eq__(self, other) -> bool:
    if not isinstance(other, KForm):
      return NotImplemented
    return self.dim == other.dim and self.equals(other)

  def __hash__(self):
    return hash((self.dim, self.degree))

  def __repr__(self) -> str:
    return f"KForm(degree={self.degree}, {self.coeffs})"


def ce_differential(L: LieAlgebra, form: KForm) -> KForm:
  """Chevalley-Eilenberg differential of a left-invariant form.

  ``(d phi)(x_0..x_k) = sum_{a<b} (-1)^(a+b) phi([x_a, x_b], x_0, ..., x_k)``
  with ``x_a, x_b`` removed from the tail.
  """
  if form.dim != L.dim:
    raise ValidationError("form and algebra dimensions differ")
  if form.mode != L.mode:
    raise ModeError("form and algebra modes differ")
  k = form.degree
  n = L.dim
  c = L.structure_constants
  out = {}
  for idx in combinations(range(n), k + 1):
    total = 0
    for a, b in combinations(range(k + 1), 2):
      br = c[idx[a]][idx[b]]
      rest = idx[:a] + idx[a + 1:b] + idx[b + 1:]
      sgn = -1 if (a + b) % 2 else 1
      for m in range(n):
        if br[m] != 0:
          v = form.value((m,) + rest)
          if v != 0:
            total += sgn * br[m] * v
    if total != 0:
      out[idx] = total
  return KForm(n, k + 1, out, L.mode)


def basis_forms(dim: int, degree: int, mode: str = EXACT) -> list[KForm]:
  return [KForm(dim, degree, {key: 1}, mode) for key in combinations(range(dim), degree)]


def find_primitive(L: LieAlgebra, omega: KForm) -> KForm | None:
  """A form ``alpha`` with ``d alpha = omega``, or ``None`` if ``omega`` is not exact.

  The solution sets every free coordinate to zero, giving a minimal-support
  representative modulo closed forms.
  """
  k = omega.degree
  if k == 0:
    return None
  n = L.dim
  basis = basis_forms(n, k - 1, L.mode)
  images = [ce_differential(L, b) for b in basis]
  keys = list(combinations(range(n), k))
  a = [[img.coeffs.get(key, 0) for img in images] for key in keys]
  rhs = [omega.coeffs.get(key, 0) for key in keys]
  if not basis:
    return None
  sol = la.solve(a, rhs)
  if sol is None:
    return None
  terms = {key: v for key, v in zip(combinations(range(n), k - 1), sol)}
  return KForm(n, k - 1, terms, L.mode)
