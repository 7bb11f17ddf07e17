"""Finite-dimensional real Lie algebras given by structure constants.

A :class:`LieAlgebra` stores ``c[i][j][k]`` with ``[e_i, e_j] = sum_k
c[i][j][k] e_k``.  Only pairs ``i < j`` are ever supplied; the opposite
pairs are filled in by antisymmetry, so antisymmetry cannot be violated.
All indices are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Mapping, Sequence

from . import linalg as la
from .linalg import Subspace
from .scalars import EXACT, ModeError, ValidationError, check_mode, coerce, is_zero

__all__ = [
  "LieAlgebra",
  "JacobiError",
  "JacobiReport",
  "Classification",
  "bracket",
  "bracket_spaces",
  "check_jacobi",
  "derived_algebra",
  "derived_series",
  "lower_central_series",
  "centre",
  "killing_form",
  "radical",
  "is_unimodular",
  "classify",
  "direct_sum",
  "change_basis",
]


class JacobiError(ValidationError):
  def __init__(self, report: "JacobiReport"):
    super().__init__(f"Jacobi identity fails at {report.witness}")
    self.report = report


def default_labels(n: int) -> tuple[str, ...]:
  return tuple(f"e{i + 1}" for i in range(n))


class LieAlgebra:
  """Structure constants of a Lie algebra in a fixed basis."""

  def __init__(self, dim: int, brackets: Mapping | None = None, labels: Sequence[str] | None = None,
               mode: str = EXACT, check: bool = True):
    """``brackets`` maps ``(i, j)`` to the coordinate vector of ``[e_i, e_j]``
    (or to a sparse ``{k: value}`` dict).  Pairs with ``i > j`` are accepted
    and converted by antisymmetry; ``i == j`` must be zero.
    """
    check_mode(mode)
    if dim < 0:
      raise ValidationError("dimension must be non-negative")
    self.dim = dim
    self.mode = mode
    self.labels = tuple(labels) if labels is not None else default_labels(dim)
    if len(self.labels) != dim:
      raise ValidationError("label count does not match dimension")
    if len(set(self.labels)) != dim:
      raise ValidationError("labels must be distinct")
    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for (i, j), value in (brackets or {}).items():
      if not (0 <= i < dim and 0 <= j < dim):
        raise ValidationError(f"bracket index ({i}, {j}) out of range")
      vec = _as_dense(value, dim, mode)
      if i == j:
        if not la.is_zero_vector(vec):
          raise ValidationError(f"[e{i+1}, e{i+1}] must vanish")
        continue
      sgn = 1
      if i > j:
        i, j, sgn = j, i, -1
      if (i, j) in seen:
        raise ValidationError(f"bracket ({i}, {j}) given twice")
      seen.add((i, j))
      for k in range(dim):
        c[i][j][k] = sgn * vec[k]
        c[j][i][k] = -sgn * vec[k]
    self._c = tuple(tuple(tuple(row) for row in plane) for plane in c)
    if check:
      rep = check_jacobi(self)
      if not rep.ok:
        raise JacobiError(rep)

  @classmethod
  def abelian(cls, dim: int, mode: str = EXACT, labels=None) -> "LieAlgebra":
    return cls(dim, {}, labels, mode)

  @classmethod
  def from_ad(cls, ads: Sequence[la.Matrix], labels=None, mode: str = EXACT, check: bool = True):
    """Build from the matrices of ``ad_{e_i}`` (column ``j`` is ``[e_i, e_j]``)."""
    n = len(ads)
    br = {}
    for i in range(n):
      for j in range(i + 1, n):
        br[(i, j)] = tuple(ads[i][k][j] for k in range(n))
    return cls(n, br, labels, mode, check)

  def constant(self, i: int, j: int, k: int):
    return self._c[i][j][k]

  @property
  def structure_constants(self):
    return self._c

  def nonzero_brackets(self):
    """``(i, j, vector)`` for every ``i < j`` with ``[e_i, e_j] != 0``."""
    for i, j in combinations(range(self.dim), 2):
      v = self._c[i][j]
      if not la.is_zero_vector(v):
        yield i, j, v

  def bracket(self, x, y) -> tuple:
    return bracket(self, x, y)

  def basis_bracket(self, i: int, j: int) -> tuple:
    return self._c[i][j]

  @cached_property
  def ads(self) -> tuple:
    """``ad_{e_i}`` as matrices acting on column vectors."""
    n = self.dim
    return tuple(tuple(tuple(self._c[i][j][k] for j in range(n)) for k in range(n)) for i in range(n))

  def ad(self, x) -> la.Matrix:
    n = self.dim
    return tuple(tuple(sum(x[i] * self._c[i][j][k] for i in range(n) if x[i] != 0)
                       for j in range(n)) for k in range(n))

  def vector(self, values) -> tuple:
    v = tuple(coerce(x, self.mode) for x in values)
    if len(v) != self.dim:
      raise ValidationError("vector has the wrong length")
    return v

  def basis_vector(self, i: int) -> tuple:
    return tuple(coerce(1 if k == i else 0, self.mode) for k in range(self.dim))

  def index(self, label: str) -> int:
    return self.labels.index(label)

  def relabel(self, labels: Sequence[str]) -> "LieAlgebra":
    return LieAlgebra(self.dim, self.bracket_table(), labels, self.mode, check=False)

  def bracket_table(self) -> dict:
    return {(i, j): v for i, j, v in self.nonzero_brackets()}

  def equals(self, other: "LieAlgebra") -> bool:
    """Same structure constants (labels ignored)."""
    if self.dim != other.dim or self.mode != other.mode:
      return False
    return all(la.vec_equal(self._c[i][j], other._c[i][j])
               for i, j in combinations(range(self.dim), 2))

  def __repr__(self) -> str:
    return f"LieAlgebra(dim={self.dim}, mode={self.mode!r}, brackets={len(self.bracket_table())})"


def _as_dense(value, dim: int, mode: str) -> tuple:
  if isinstance(value, Mapping):
    v = [0] * dim
    for k, x in value.items():
      v[k] = x
    value = v
  if len(value) != dim:
    raise ValidationError("bracket vector has the wrong length")
  return tuple(coerce(x, mode) for x in value)


def _require_vector(L: LieAlgebra, x) -> None:
  if len(x) != L.dim:
    raise ValidationError("vector has the wrong length")
  if L.mode == EXACT and any(isinstance(t, float) for t in x):
    raise ModeError("float vector used with an exact algebra")


def bracket(L: LieAlgebra, x, y) -> tuple:
  """Bilinear bracket of two coordinate vectors."""
  _require_vector(L, x)
  _require_vector(L, y)
  n = L.dim
  out = [0] * n
  c = L.structure_constants
  for i in range(n):
    if x[i] == 0:
      continue
    for j in range(n):
      if i == j or y[j] == 0:
        continue
      s = x[i] * y[j]
      row = c[i][j]
      for k in range(n):
        if row[k] != 0:
          out[k] += s * row[k]
  return tuple(out)


def bracket_spaces(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
  vecs = [bracket(L, x, y) for x in a.basis for y in b.basis]
  return Subspace.span(vecs, L.dim)


@dataclass(frozen=True)
class JacobiReport:
  ok: bool
  witness: tuple[int, int, int] | None = None
  value: tuple | None = None

  def __bool__(self) -> bool:
    return self.ok


def check_jacobi(L: LieAlgebra) -> JacobiReport:
  """Check the Jacobi identity on all basis triples ``i < j < k``.

  The first failing triple in lexicographic order is returned as witness.
  """
  n = L.dim
  c = L.structure_constants
  for i, j, k in combinations(range(n), 3):
    total = [0] * n
    for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
      # [e_a, [e_b, e_d]]
      inner = c[b][d]
      for m in range(n):
        if inner[m] == 0:
          continue
        row = c[a][m]
        for t in range(n):
          if row[t] != 0:
            total[t] += inner[m] * row[t]
    if not la.is_zero_vector(total):
      return JacobiReport(False, (i, j, k), tuple(total))
  return JacobiReport(True)


def derived_algebra(L: LieAlgebra, sub: Subspace | None = None) -> Subspace:
  sub = Subspace.full(L.dim) if sub is None else sub
  return bracket_spaces(L, sub, sub)


def derived_series(L: LieAlgebra) -> list[Subspace]:
  """``g, [g,g], ...`` up to and including the first repeated term."""
  series = [Subspace.full(L.dim)]
  while True:
    nxt = derived_algebra(L, series[-1])
    if nxt.dim == series[-1].dim:
      return series
    series.append(nxt)


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
  full = Subspace.full(L.dim)
  series = [full]
  while True:
    nxt = bracket_spaces(L, full, series[-1])
    if nxt.dim == series[-1].dim:
      return series
    series.append(nxt)


def centre(L: LieAlgebra) -> Subspace:
  rows = [row for ad in L.ads for row in ad]
  return Subspace.kernel(rows, L.dim) if rows else Subspace.zero(L.dim)


def killing_form(L: LieAlgebra) -> la.Matrix:
  ads = L.ads
  n = L.dim
  return tuple(tuple(la.trace(la.matmul(ads[i], ads[j])) for j in range(n)) for i in range(n))


def radical(L: LieAlgebra) -> Subspace:
  """Killing-orthogonal complement of the derived algebra."""
  der = derived_algebra(L)
  return der.orthogonal_complement(killing_form(L))


def is_unimodular(L: LieAlgebra) -> bool:
  return all(is_zero(la.trace(a)) for a in L.ads)


@dataclass(frozen=True)
class Classification:
  solvable: bool
  nilpotent: bool
  completely_solvable: bool | str
  perfect: bool
  semisimple: bool

  def as_dict(self) -> dict:
    return dict(solvable=self.solvable, nilpotent=self.nilpotent,
                completely_solvable=self.completely_solvable, perfect=self.perfect,
                semisimple=self.semisimple)


def classify(L: LieAlgebra) -> Classification:
  n = L.dim
  der = derived_series(L)
  solvable = der[-1].dim == 0
  nilpotent = lower_central_series(L)[-1].dim == 0
  perfect = der[0].dim == n if len(der) == 1 else False
  if n == 0:
    perfect = True
  semisimple = n > 0 and not is_zero(la.det(killing_form(L)))
  cs: bool | str = False
  if solvable:
    cs = True
    probes = [L.basis_vector(i) for i in range(n)]
    for term in der[1:]:
      probes.extend(term.basis)
    for x in probes:
      real = la.spectrum_is_real(L.ad(x))
      if real is False:
        cs = False
        break
      if real is None:
        cs = "unknown"
  return Classification(solvable, nilpotent, cs, perfect, semisimple)


def direct_sum(A: LieAlgebra, B: LieAlgebra, labels=None) -> LieAlgebra:
  if A.mode != B.mode:
    raise ModeError("cannot sum algebras of different modes")
  n, m = A.dim, B.dim
  br = {}
  for i, j, v in A.nonzero_brackets():
    br[(i, j)] = tuple(v) + (0,) * m
  for i, j, v in B.nonzero_brackets():
    br[(n + i, n + j)] = (0,) * n + tuple(v)
  if labels is None:
    labels = A.labels + B.labels
    if len(set(labels)) != n + m:
      labels = default_labels(n + m)
  return LieAlgebra(n + m, br, labels, A.mode, check=False)


def change_basis(L: LieAlgebra, P: la.Matrix, labels=None) -> LieAlgebra:
  """Structure constants in the basis ``f_j = sum_i P[i][j] e_i``."""
  Pinv = la.inverse(P)
  cols = la.transpose(P)
  n = L.dim
  br = {}
  for a in range(n):
    for b in range(a + 1, n):
      w = bracket(L, cols[a], cols[b])
      br[(a, b)] = la.matvec(Pinv, w)
  return LieAlgebra(n, br, labels, L.mode, check=False)
