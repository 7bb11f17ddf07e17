"""Modifications of metric Lie algebras by commuting unitary derivations.

A modification map sends ``x`` to a skew derivation ``D_x`` (commuting
with ``J`` when a complex structure is present) such that
``[D_x, D_y] = 0``, ``D_[x,y] = 0`` and ``D_(D_x y) = 0``.  The modified
bracket ``[x, y] + D_x y - D_y x`` has the same Riemannian geometry.
"""
from __future__ import annotations

from . import linalg as la
from .algebra import LieAlgebra, bracket, derived_algebra
from .curvature import MetricLieAlgebra
from .forms import KForm, ce_differential
from .normal_j import derivations, unitary_derivations
from .scalars import ValidationError, is_zero
from .structures import Condition, HermitianData, Report

__all__ = [
  "ManualSeedRequired",
  "ModificationMap",
  "check_modification",
  "modified_algebra",
  "modify",
  "modification_slice",
  "skew_derivations",
  "invariance_report",
]


class ManualSeedRequired(ValueError):
  """The modification equations are genuinely quadratic for this input."""


class ModificationMap:
  """``maps[i]`` is the derivation ``D_{e_i}``; ``J`` may be ``None``."""

  def __init__(self, base, maps, J=None):
    if isinstance(base, HermitianData):
      J = base.J if J is None else J
      base = base.metric
    self.base: MetricLieAlgebra = base
    n = base.dim
    mode = base.mode
    self.maps = tuple(la.as_matrix(m, mode) for m in maps)
    if len(self.maps) != n or any(len(m) != n for m in self.maps):
      raise ValidationError("modification map has the wrong shape")
    self.J = None if J is None else la.as_matrix(J, mode)

  @classmethod
  def from_covector(cls, base, g, D, J=None) -> "ModificationMap":
    """``x -> g(x) D``."""
    return cls(base, [la.mscale(gi, D) for gi in g], J)

  @property
  def dim(self) -> int:
    return self.base.dim

  def at(self, x) -> la.Matrix:
    n = self.dim
    out = la.zeros(n, n)
    for xi, m in zip(x, self.maps):
      if xi != 0:
        out = la.madd(out, la.mscale(xi, m))
    return out

  def hermitian(self) -> HermitianData | None:
    return None if self.J is None else HermitianData(self.base, self.J)


def _is_derivation(L: LieAlgebra, D) -> bool:
  n = L.dim
  basis = la.identity(n)
  for i in range(n):
    for j in range(i + 1, n):
      lhs = la.matvec(D, L.basis_bracket(i, j))
      rhs = la.vadd(bracket(L, la.matvec(D, basis[i]), basis[j]),
                    bracket(L, basis[i], la.matvec(D, basis[j])))
      if not la.vec_equal(lhs, rhs):
        return False
  return True


def check_modification(m: ModificationMap) -> Report:
  L = m.base.algebra
  G = m.base.gram
  n = m.dim
  maps = m.maps
  conds = []
  conds.append(Condition("derivation", all(_is_derivation(L, D) for D in maps)))
  conds.append(Condition("skew", all(
    la.is_zero_matrix(la.madd(la.matmul(la.transpose(D), G), la.matmul(G, D))) for D in maps)))
  if m.J is not None:
    conds.append(Condition("J_commuting", all(
      la.mat_equal(la.matmul(D, m.J), la.matmul(m.J, D)) for D in maps)))
  conds.append(Condition("commuting", all(
    la.is_zero_matrix(la.commutator(maps[i], maps[j])) for i in range(n) for j in range(i + 1, n)),
    "[D_x, D_y] = 0"))
  conds.append(Condition("kills_brackets", all(
    la.is_zero_matrix(m.at(L.basis_bracket(i, j))) for i in range(n) for j in range(i + 1, n)),
    "D_[x,y] = 0"))
  basis = la.identity(n)
  conds.append(Condition("kills_images", all(
    la.is_zero_matrix(m.at(la.matvec(D, y))) for D in maps for y in basis), "D_(D_x y) = 0"))
  return Report("modification", tuple(conds))


def modified_algebra(m: ModificationMap, check: bool = True) -> LieAlgebra:
  L = m.base.algebra
  n = m.dim
  basis = la.identity(n)
  br = {}
  for i in range(n):
    for j in range(i + 1, n):
      w = la.vadd(L.basis_bracket(i, j),
                  la.vsub(la.matvec(m.maps[i], basis[j]), la.matvec(m.maps[j], basis[i])))
      if not la.is_zero_vector(w):
        br[(i, j)] = w
  return LieAlgebra(n, br, L.labels, L.mode, check=check)


def modify(m: ModificationMap):
  """The modified structure: :class:`HermitianData` when ``J`` is known,
  else a :class:`MetricLieAlgebra`."""
  rep = check_modification(m)
  if not rep.ok:
    raise ValidationError(f"invalid modification: {rep.failures()}")
  M = MetricLieAlgebra(modified_algebra(m), m.base.gram)
  return M if m.J is None else HermitianData(M, m.J)


def modification_slice(base, direction=None) -> list:
  """Modifications of the form ``x -> g(x) D`` for a fixed derivation ``D``.

  Such maps are valid exactly when ``g`` kills ``[h, h]`` and ``D(h)``, which
  is a linear condition.  When ``direction`` is omitted the unitary
  derivation algebra must be at most one-dimensional; otherwise the
  equations are quadratic and :class:`ManualSeedRequired` is raised.
  Returns a basis of the valid ``g`` as :class:`ModificationMap` objects.
  """
  J = base.J if isinstance(base, HermitianData) else None
  M = base.metric if isinstance(base, HermitianData) else base
  L = M.algebra
  n = L.dim
  if direction is None:
    if J is not None:
      ders = unitary_derivations(base)
    else:
      ders = skew_derivations(M)
    if not ders:
      return []
    if len(ders) > 1:
      raise ManualSeedRequired(
        f"{len(ders)}-dimensional unitary derivation algebra: supply a direction")
    direction = ders[0]
  D = la.as_matrix(direction, L.mode)
  rows = list(derived_algebra(L).basis) + [la.matvec(D, la.unit(n, j)) for j in range(n)]
  gs = la.nullspace(rows, n) if rows else [la.unit(n, i) for i in range(n)]
  return [ModificationMap.from_covector(M, g, D, J) for g in gs]


def skew_derivations(M: MetricLieAlgebra) -> list:
  """Basis of the derivations that are skew for the metric."""
  n = M.dim
  G = M.gram
  ders = derivations(M.algebra)
  if not ders:
    return []
  # intersect with skew matrices: solve for coefficients
  rows = []
  for a in range(n):
    for b in range(n):
      rows.append([la.matmul(la.transpose(D), G)[a][b] + la.matmul(G, D)[a][b] for D in ders])
  coeffs = la.nullspace(rows, len(ders))
  out = []
  for c in coeffs:
    acc = la.zeros(n, n)
    for ci, D in zip(c, ders):
      acc = la.madd(acc, la.mscale(ci, D))
    out.append(acc)
  return out


def invariance_report(m: ModificationMap, f=None) -> Report:
  """Compare the base and the modified algebra.

  Checks the connection shift ``nabla' = nabla + D``, the curvature tensor,
  Ricci, the derived algebra, ``tr ad_h`` on the orthogonal complement of
  the derived algebra and, when ``f`` is given, ``omega = -d' f``.
  """
  base = m.base
  mod = modify(m)
  Mm = mod if isinstance(mod, MetricLieAlgebra) else mod.metric
  n = m.dim
  conds = []
  shift = all(la.mat_equal(Mm.connection.matrices[i],
                           la.madd(base.connection.matrices[i], m.maps[i])) for i in range(n))
  conds.append(Condition("connection_shift", shift, "nabla' = nabla + D"))
  conds.append(Condition("curvature", all(
    la.mat_equal(Mm.curvature.ops[i][j], base.curvature.ops[i][j])
    for i in range(n) for j in range(n))))
  conds.append(Condition("ricci", la.mat_equal(Mm.ricci_matrix, base.ricci_matrix)))
  d0, d1 = derived_algebra(base.algebra), derived_algebra(Mm.algebra)
  conds.append(Condition("derived_algebra", d0 == d1))
  a = d0.orthogonal_complement(base.gram)
  traces = all(is_zero(la.trace(base.algebra.ad(h)) - la.trace(Mm.algebra.ad(h))) for h in a.basis)
  conds.append(Condition("trace_on_a", traces, "tr ad_h unchanged on a"))
  if f is not None and m.J is not None:
    H = HermitianData(Mm, m.J)
    df = ce_differential(Mm.algebra, KForm.covector(f, Mm.mode))
    conds.append(Condition("exact", H.kahler_form.equals(-df), "omega = -d f"))
  return Report("modification invariants", tuple(conds))
