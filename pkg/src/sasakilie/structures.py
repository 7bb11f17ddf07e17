"""Almost contact metric, Sasakian, Hermitian and Kähler structures."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import linalg as la
from .algebra import LieAlgebra, bracket, check_jacobi
from .curvature import MetricLieAlgebra, einstein_check
from .forms import KForm, ce_differential, find_primitive
from .scalars import ValidationError, is_zero

__all__ = [
  "Condition",
  "Report",
  "AlmostContactMetric",
  "HermitianData",
  "almost_contact_report",
  "nijenhuis_phi",
  "NormalityResult",
  "check_normal",
  "contact_condition",
  "check_sasakian",
  "sasaki_identities",
  "nijenhuis_J",
  "is_parallel",
  "check_kahler",
  "kahler_exact",
  "KahlerEinstein",
  "kahler_einstein_check",
]


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class Condition:
  name: str
  ok: bool
  detail: str = ""
  witness: object = None


@dataclass(frozen=True)
class Report:
  """Named pass/fail conditions."""

  title: str
  conditions: tuple[Condition, ...] = ()

  @property
  def ok(self) -> bool:
    return all(c.ok for c in self.conditions)

  def __bool__(self) -> bool:
    return self.ok

  def __getitem__(self, name: str) -> Condition:
    for c in self.conditions:
      if c.name == name:
        return c
    raise KeyError(name)

  def __contains__(self, name: str) -> bool:
    return any(c.name == name for c in self.conditions)

  def failures(self) -> list[str]:
    return [c.name for c in self.conditions if not c.ok]

  def as_dict(self) -> dict:
    return {
      "title": self.title,
      "ok": self.ok,
      "conditions": [
        {"name": c.name, "ok": c.ok, "detail": c.detail,
         "witness": None if c.witness is None else str(c.witness)}
        for c in self.conditions
      ],
    }

  def __str__(self) -> str:
    lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
    for c in self.conditions:
      extra = f"  ({c.detail})" if c.detail else ""
      lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {c.name}{extra}")
    return "\n".join(lines)


# ---------------------------------------------------------------- data


class AlmostContactMetric:
  """``(phi, xi, eta)`` on a metric Lie algebra.

  Construction does not validate; use :func:`almost_contact_report` or
  :func:`check_sasakian` for itemized checks.
  """

  def __init__(self, metric: MetricLieAlgebra, phi, xi, eta=None):
    mode = metric.mode
    n = metric.dim
    self.metric = metric
    self.phi = la.as_matrix(phi, mode)
    self.xi = la.as_vector(xi, mode)
    self.eta = la.as_vector(eta, mode) if eta is not None else metric.flat(self.xi)
    if len(self.phi) != n or len(self.xi) != n or len(self.eta) != n:
      raise ValidationError("structure tensors have the wrong size")

  @property
  def algebra(self) -> LieAlgebra:
    return self.metric.algebra

  @property
  def gram(self):
    return self.metric.gram

  @property
  def dim(self) -> int:
    return self.metric.dim

  @property
  def mode(self) -> str:
    return self.metric.mode

  @property
  def n(self) -> int:
    return (self.dim - 1) // 2

  def eta_of(self, x):
    return la.dot(self.eta, x)

  def apply_phi(self, x):
    return la.matvec(self.phi, x)

  @cached_property
  def fundamental_form(self) -> KForm:
    """``Phi(x, y) = <x, phi y>``."""
    return KForm.from_matrix(la.matmul(self.gram, self.phi), self.mode)

  @cached_property
  def eta_form(self) -> KForm:
    return KForm.covector(self.eta, self.mode)

  def __repr__(self) -> str:
    return f"AlmostContactMetric(dim={self.dim}, mode={self.mode!r})"


class HermitianData:
  """A metric Lie algebra with an orthogonal almost complex structure ``J``."""

  def __init__(self, metric: MetricLieAlgebra, J):
    n = metric.dim
    if n % 2:
      raise ValidationError("Hermitian data needs even dimension")
    J = la.as_matrix(J, metric.mode) if n else ()
    if len(J) != n:
      raise ValidationError("J has the wrong size")
    if n:
      if not la.mat_equal(la.matmul(J, J), la.mscale(-1, la.identity(n))):
        raise ValidationError("J^2 != -1")
      G = metric.gram
      if not la.mat_equal(la.matmul(la.matmul(la.transpose(J), G), J), G):
        raise ValidationError("J is not orthogonal")
    self.metric = metric
    self.J = J

  @property
  def algebra(self) -> LieAlgebra:
    return self.metric.algebra

  @property
  def gram(self):
    return self.metric.gram

  @property
  def dim(self) -> int:
    return self.metric.dim

  @property
  def mode(self) -> str:
    return self.metric.mode

  def apply_J(self, x):
    return la.matvec(self.J, x) if self.dim else ()

  @cached_property
  def kahler_form(self) -> KForm:
    """``omega(x, y) = <x, J y>``."""
    if not self.dim:
      return KForm.zero(0, 2, self.mode)
    return KForm.from_matrix(la.matmul(self.gram, self.J), self.mode)

  def omega(self, x, y):
    return self.metric.inner(x, self.apply_J(y))

  def __repr__(self) -> str:
    return f"HermitianData(dim={self.dim}, mode={self.mode!r})"


# ---------------------------------------------------------------- almost contact


def almost_contact_report(S: AlmostContactMetric) -> Report:
  n = S.dim
  phi, xi, eta, G = S.phi, S.xi, S.eta, S.gram
  conds = []
  conds.append(Condition("odd_dimension", n % 2 == 1, f"dim {n}"))
  conds.append(Condition("eta_xi", is_zero(la.dot(eta, xi) - 1), "eta(xi) = 1"))
  conds.append(Condition("phi_xi", la.is_zero_vector(la.matvec(phi, xi)), "phi xi = 0"))
  conds.append(Condition("eta_phi", la.is_zero_vector(la.vecmat(eta, phi)), "eta o phi = 0"))
  target = la.madd(la.mscale(-1, la.identity(n)), la.outer(xi, eta))
  conds.append(Condition("phi_squared", la.mat_equal(la.matmul(phi, phi), target),
                         "phi^2 = -Id + xi (x) eta"))
  lhs = la.matmul(la.matmul(la.transpose(phi), G), phi)
  rhs = la.msub(G, la.outer(eta, eta))
  conds.append(Condition("compatible", la.mat_equal(lhs, rhs),
                         "<phi x, phi y> = <x, y> - eta(x) eta(y)"))
  conds.append(Condition("eta_dual", la.vec_equal(eta, la.matvec(G, xi)), "eta = <xi, .>"))
  return Report("almost contact metric", tuple(conds))


def nijenhuis_phi(S: AlmostContactMetric) -> tuple:
  """``N[i][j] = phi^2[e_i,e_j] + [phi e_i, phi e_j] - phi[phi e_i, e_j] - phi[e_i, phi e_j]``."""
  L = S.algebra
  phi = S.phi
  n = S.dim
  phi2 = la.matmul(phi, phi)
  cols = la.transpose(phi)
  basis = la.identity(n)
  out = [[(0,) * n] * n for _ in range(n)]
  for i in range(n):
    for j in range(i + 1, n):
      ei, ej = basis[i], basis[j]
      v = la.matvec(phi2, bracket(L, ei, ej))
      v = la.vadd(v, bracket(L, cols[i], cols[j]))
      v = la.vsub(v, la.matvec(phi, bracket(L, cols[i], ej)))
      v = la.vsub(v, la.matvec(phi, bracket(L, ei, cols[j])))
      out[i][j] = v
      out[j][i] = la.vscale(-1, v)
  return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class NormalityResult:
  ok: bool
  nijenhuis_route: bool
  bracket_route: bool
  witness: tuple | None = None

  def __bool__(self) -> bool:
    return self.ok


def check_normal(S: AlmostContactMetric) -> NormalityResult:
  """Normality ``N_phi = -d eta (x) xi`` checked along two independent routes.

  The second route asks that ``ad_xi`` commutes with ``phi`` and that
  ``[phi x, phi y] - [x, y] = phi([phi x, y] + [x, phi y])`` on ``ker eta``.
  The routes coincide whenever ``eta([xi, .]) = 0``; a disagreement there
  signals a bug and raises.
  """
  L = S.algebra
  n = S.dim
  deta = ce_differential(L, S.eta_form)
  N = nijenhuis_phi(S)
  witness = None
  route1 = True
  for i in range(n):
    for j in range(i + 1, n):
      target = la.vscale(-deta.value((i, j)), S.xi)
      if not la.vec_equal(N[i][j], target):
        route1 = False
        witness = witness or (i, j)
  ad_xi = L.ad(S.xi)
  phi = S.phi
  route2 = la.mat_equal(la.matmul(ad_xi, phi), la.matmul(phi, ad_xi))
  kernel = la.Subspace.kernel([S.eta], n) if n else la.Subspace.zero(0)
  kb = kernel.basis
  for a in range(len(kb)):
    if not route2:
      break
    for b in range(a + 1, len(kb)):
      x, y = kb[a], kb[b]
      px, py = la.matvec(phi, x), la.matvec(phi, y)
      lhs = la.vsub(bracket(L, px, py), bracket(L, x, y))
      rhs = la.matvec(phi, la.vadd(bracket(L, px, y), bracket(L, x, py)))
      if not la.vec_equal(lhs, rhs):
        route2 = False
        break
  guard = la.is_zero_vector(la.vecmat(S.eta, ad_xi))
  if guard and route1 != route2:
    raise RuntimeError("normality routes disagree")
  return NormalityResult(route1, route1, route2, witness)


def contact_condition(S: AlmostContactMetric) -> bool:
  """``eta ^ (d eta)^n`` is a volume form."""
  deta = ce_differential(S.algebra, S.eta_form)
  top = S.eta_form
  for _ in range(S.n):
    top = top.wedge(deta)
  return not top.is_zero()


def check_sasakian(S: AlmostContactMetric) -> Report:
  """Itemized Sasakian check: Jacobi, almost contact metric axioms,
  contact condition, ``d eta = 2 Phi`` and normality."""
  conds = []
  jac = check_jacobi(S.algebra)
  conds.append(Condition("jacobi", jac.ok, "" if jac.ok else f"triple {jac.witness}", jac.witness))
  acm = almost_contact_report(S)
  conds.extend(acm.conditions)
  if acm["odd_dimension"].ok:
    conds.append(Condition("contact", contact_condition(S), "eta ^ (d eta)^n != 0"))
  deta = ce_differential(S.algebra, S.eta_form)
  conds.append(Condition("d_eta", deta.equals(S.fundamental_form.scale(2)), "d eta = 2 Phi"))
  if acm.ok:
    nr = check_normal(S)
    conds.append(Condition("normal", nr.ok, "" if nr.ok else f"pair {nr.witness}", nr.witness))
  else:
    conds.append(Condition("normal", False, "almost contact metric axioms fail"))
  return Report("sasakian", tuple(conds))


def sasaki_identities(S: AlmostContactMetric) -> Report:
  """Curvature identities satisfied by every Sasakian Lie algebra."""
  M = S.metric
  n = S.dim
  nab = M.connection
  R = M.curvature
  Ric = M.ricci_matrix
  phi, xi, eta = S.phi, S.xi, S.eta
  basis = la.identity(n)
  nabla_xi = all(la.vec_equal(nab(x, xi), la.vscale(-1, la.matvec(phi, x))) for x in basis)
  nabla_along_xi = all(
    la.vec_equal(nab(xi, x), la.vsub(bracket(S.algebra, xi, x), la.matvec(phi, x))) for x in basis)
  nabla_phi = True
  for x in basis:
    Lx = nab.operator(x)
    dphi = la.msub(la.matmul(Lx, phi), la.matmul(phi, Lx))
    for y in basis:
      expect = la.vsub(la.vscale(M.inner(x, y), xi), la.vscale(la.dot(eta, y), x))
      if not la.vec_equal(la.matvec(dphi, y), expect):
        nabla_phi = False
  curv = True
  for x in basis:
    for y in basis:
      expect = la.vsub(la.vscale(la.dot(eta, y), x), la.vscale(la.dot(eta, x), y))
      if not la.vec_equal(R(x, y, xi), expect):
        curv = False
  ric_xi = la.vec_equal(la.vecmat(xi, Ric), la.vscale(2 * S.n, eta))
  conds = (
    Condition("nabla_xi", nabla_xi, "nabla_x xi = -phi x"),
    Condition("nabla_along_xi", nabla_along_xi, "nabla_xi x = [xi, x] - phi x"),
    Condition("nabla_phi", nabla_phi, "(nabla_x phi) y = <x,y> xi - eta(y) x"),
    Condition("curvature_xi", curv, "R(x,y) xi = eta(y) x - eta(x) y"),
    Condition("ricci_xi", ric_xi, "Ric(xi, x) = 2n eta(x)"),
  )
  return Report("sasaki identities", conds)


# ---------------------------------------------------------------- Kähler


def nijenhuis_J(H: HermitianData) -> tuple:
  """``N[i][j] = [J e_i, J e_j] - J[J e_i, e_j] - J[e_i, J e_j] - [e_i, e_j]``."""
  L = H.algebra
  J = H.J
  n = H.dim
  cols = la.transpose(J) if n else ()
  basis = la.identity(n)
  out = [[(0,) * n] * n for _ in range(n)]
  for i in range(n):
    for j in range(i + 1, n):
      v = bracket(L, cols[i], cols[j])
      v = la.vsub(v, la.matvec(J, bracket(L, cols[i], basis[j])))
      v = la.vsub(v, la.matvec(J, bracket(L, basis[i], cols[j])))
      v = la.vsub(v, bracket(L, basis[i], basis[j]))
      out[i][j] = v
      out[j][i] = la.vscale(-1, v)
  return tuple(tuple(r) for r in out)


def is_parallel(H: HermitianData) -> bool:
  """``nabla J = 0``."""
  mats = H.metric.connection.matrices
  return all(la.mat_equal(la.matmul(m, H.J), la.matmul(H.J, m)) for m in mats)


def check_kahler(H: HermitianData) -> Report:
  """Kähler means ``N_J = 0`` and ``d omega = 0``; ``nabla J = 0`` is cross-checked."""
  N = nijenhuis_J(H)
  integrable = all(la.is_zero_vector(v) for row in N for v in row)
  closed = ce_differential(H.algebra, H.kahler_form).is_zero() if H.dim else True
  parallel = is_parallel(H) if H.dim else True
  if (integrable and closed) != parallel:
    raise RuntimeError("Kähler condition disagrees with nabla J = 0")
  return Report("kahler", (
    Condition("integrable", integrable, "N_J = 0"),
    Condition("closed", closed, "d omega = 0"),
    Condition("parallel", parallel, "nabla J = 0"),
  ))


def kahler_exact(H: HermitianData) -> KForm | None:
  """A 1-form ``alpha`` with ``d alpha = omega``, or ``None``."""
  if H.dim == 0:
    return KForm.zero(0, 1, H.mode)
  return find_primitive(H.algebra, H.kahler_form)


@dataclass(frozen=True)
class KahlerEinstein:
  constant: object = None
  reason: str | None = None

  def __bool__(self) -> bool:
    return self.constant is not None


def kahler_einstein_check(H: HermitianData) -> KahlerEinstein:
  if not check_kahler(H).ok:
    return KahlerEinstein(None, "not_kahler")
  c = einstein_check(H.metric)
  if c is None:
    return KahlerEinstein(None, "not_einstein")
  return KahlerEinstein(c, None)
