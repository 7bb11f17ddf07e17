"""Levi-Civita connection and curvature of left-invariant metrics."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import linalg as la
from .algebra import LieAlgebra
from .scalars import ValidationError, coerce, is_zero

__all__ = [
  "MetricLieAlgebra",
  "Connection",
  "levi_civita",
  "RiemannTensor",
  "riemann_tensor",
  "curvature_identities",
  "ricci",
  "ricci_form",
  "scalar_curvature",
  "einstein_check",
  "EtaEinstein",
  "eta_einstein_class",
  "eta_einstein_check",
]


class MetricLieAlgebra:
  """A Lie algebra with a positive definite inner product (Gram matrix)."""

  def __init__(self, algebra: LieAlgebra, gram=None):
    n = algebra.dim
    if gram is None:
      gram = la.identity(n)
    gram = la.as_matrix(gram, algebra.mode)
    if len(gram) != n or any(len(r) != n for r in gram):
      raise ValidationError("Gram matrix has the wrong shape")
    if not la.is_symmetric(gram):
      raise ValidationError("Gram matrix is not symmetric")
    if n and not la.is_positive_definite(gram):
      raise ValidationError("Gram matrix is not positive definite")
    self.algebra = algebra
    self.gram = gram

  @property
  def dim(self) -> int:
    return self.algebra.dim

  @property
  def mode(self) -> str:
    return self.algebra.mode

  @cached_property
  def gram_inverse(self):
    return la.inverse(self.gram) if self.dim else ()

  def inner(self, x, y):
    return la.inner(self.gram, x, y)

  def flat(self, x) -> tuple:
    """Metric dual covector of ``x``."""
    return la.matvec(self.gram, x)

  def sharp(self, alpha) -> tuple:
    return la.matvec(self.gram_inverse, alpha)

  @cached_property
  def connection(self) -> "Connection":
    return levi_civita(self)

  @cached_property
  def curvature(self) -> "RiemannTensor":
    return riemann_tensor(self)

  @cached_property
  def ricci_matrix(self):
    return ricci(self)

  def __repr__(self) -> str:
    return f"MetricLieAlgebra(dim={self.dim}, mode={self.mode!r})"


@dataclass(frozen=True)
class Connection:
  """Christoffel symbols: ``nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k``."""

  gamma: tuple

  @cached_property
  def matrices(self) -> tuple:
    """``nabla_{e_i}`` as a matrix acting on column vectors."""
    n = len(self.gamma)
    return tuple(tuple(tuple(self.gamma[i][j][k] for j in range(n)) for k in range(n))
                 for i in range(n))

  def operator(self, x):
    """Matrix of ``nabla_x``."""
    n = len(self.gamma)
    out = la.zeros(n, n)
    for i in range(n):
      if x[i] != 0:
        out = la.madd(out, la.mscale(x[i], self.matrices[i]))
    return out

  def __call__(self, x, y) -> tuple:
    return la.matvec(self.operator(x), y)


def levi_civita(M: MetricLieAlgebra) -> Connection:
  """Koszul formula ``2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>``."""
  n = M.dim
  c = M.algebra.structure_constants
  G = M.gram
  # b[a][b][d] = <[e_a, e_b], e_d>
  b = [[[sum(c[p][q][m] * G[m][d] for m in range(n) if c[p][q][m] != 0) for d in range(n)]
        for q in range(n)] for p in range(n)]
  Ginv = M.gram_inverse
  half = coerce(1, M.mode) / 2
  gamma = []
  for i in range(n):
    plane = []
    for j in range(n):
      low = [half * (b[i][j][l] - b[j][l][i] + b[l][i][j]) for l in range(n)]
      plane.append(tuple(sum(Ginv[k][l] * low[l] for l in range(n)) for k in range(n)))
    gamma.append(tuple(plane))
  return Connection(tuple(gamma))


@dataclass(frozen=True)
class RiemannTensor:
  """``ops[i][j]`` is the matrix of ``R_{e_i, e_j} = [nabla_i, nabla_j] - nabla_[e_i, e_j]``."""

  ops: tuple

  def operator(self, x, y):
    n = len(self.ops)
    out = la.zeros(n, n)
    for i in range(n):
      if x[i] == 0:
        continue
      for j in range(n):
        if y[j] != 0 and i != j:
          out = la.madd(out, la.mscale(x[i] * y[j], self.ops[i][j]))
    return out

  def __call__(self, x, y, z) -> tuple:
    return la.matvec(self.operator(x, y), z)

  def component(self, i: int, j: int, k: int, l: int):
    """Coefficient of ``e_l`` in ``R_{e_i, e_j} e_k``."""
    return self.ops[i][j][l][k]


def riemann_tensor(M: MetricLieAlgebra) -> RiemannTensor:
  n = M.dim
  L = M.connection.matrices
  c = M.algebra.structure_constants
  zero = la.zeros(n, n)
  ops = [[zero] * n for _ in range(n)]
  for i in range(n):
    for j in range(i + 1, n):
      r = la.commutator(L[i], L[j])
      for k in range(n):
        if c[i][j][k] != 0:
          r = la.msub(r, la.mscale(c[i][j][k], L[k]))
      ops[i][j] = r
      ops[j][i] = la.mscale(-1, r)
  return RiemannTensor(tuple(tuple(row) for row in ops))


def curvature_identities(M: MetricLieAlgebra) -> dict[str, bool]:
  """Identities every Levi-Civita connection and its curvature satisfy.

  ``R(i,j,k,l) = <R_{e_i,e_j} e_k, e_l>`` is lowered with the Gram matrix,
  so the skew and pair symmetries test the metric as well as the formula.
  """
  n = M.dim
  G = M.gram
  L = M.connection.matrices
  alg = M.algebra
  basis = la.identity(n)
  torsion = all(la.vec_equal(la.vsub(la.matvec(L[i], basis[j]), la.matvec(L[j], basis[i])),
                             alg.basis_bracket(i, j))
                for i in range(n) for j in range(i + 1, n))
  # <nabla_i e_j, e_k> + <e_j, nabla_i e_k> = 0, i.e. G L_i is skew
  metric = all(la.is_zero_matrix(la.madd(la.matmul(G, Li), la.transpose(la.matmul(G, Li))))
               for Li in L)
  ops = M.curvature.ops
  low = [[la.matmul(G, ops[i][j]) for j in range(n)] for i in range(n)]

  def R(i, j, k, l):
    return low[i][j][l][k]

  skew_xy = skew_zw = pairs = bianchi = True
  for i in range(n):
    for j in range(n):
      for k in range(n):
        for l in range(n):
          r = R(i, j, k, l)
          if skew_xy and not is_zero(r + R(j, i, k, l)):
            skew_xy = False
          if skew_zw and not is_zero(r + R(i, j, l, k)):
            skew_zw = False
          if pairs and not is_zero(r - R(k, l, i, j)):
            pairs = False
          if bianchi and not is_zero(r + R(j, k, i, l) + R(k, i, j, l)):
            bianchi = False
  return {
    "torsion_free": torsion,
    "metric_compatible": metric,
    "skew_xy": skew_xy,
    "skew_zw": skew_zw,
    "pair_symmetry": pairs,
    "first_bianchi": bianchi,
    "ricci_symmetric": la.is_symmetric(M.ricci_matrix),
  }


def ricci(M: MetricLieAlgebra):
  """``Ric(x, y) = trace(z -> R_{z,x} y)``."""
  n = M.dim
  R = M.curvature.ops
  return tuple(tuple(sum(R[i][x][i][y] for i in range(n)) for y in range(n)) for x in range(n))


def ricci_form(M: MetricLieAlgebra, x, y):
  return la.dot(x, la.matvec(M.ricci_matrix, y))


def scalar_curvature(M: MetricLieAlgebra):
  Ric = M.ricci_matrix
  Gi = M.gram_inverse
  n = M.dim
  return sum(Gi[i][j] * Ric[i][j] for i in range(n) for j in range(n))


def einstein_check(M: MetricLieAlgebra):
  """The constant ``c`` with ``Ric = c <.,.>``, or ``None``."""
  n = M.dim
  if n == 0:
    return None
  Ric = M.ricci_matrix
  c = Ric[0][0] / M.gram[0][0]
  if all(is_zero(Ric[i][j] - c * M.gram[i][j]) for i in range(n) for j in range(n)):
    return c
  return None


@dataclass(frozen=True)
class EtaEinstein:
  """``Ric = lam g + (2n - lam) eta (x) eta``."""

  lam: object
  kind: str
  scalar: object

  def __iter__(self):
    return iter((self.lam, self.kind))


def eta_einstein_class(lam) -> str:
  d = lam + 2
  if is_zero(d):
    return "null"
  return "positive" if d > 0 else "negative"


def eta_einstein_check(S, require_sasakian: bool = True) -> EtaEinstein | None:
  """η-Einstein constant and class of an almost contact metric algebra.

  The constant is read off one transversal direction and then verified on
  every entry.  With ``require_sasakian`` the structure must be Sasakian.
  """
  from .structures import almost_contact_report, check_sasakian

  rep = check_sasakian(S) if require_sasakian else almost_contact_report(S)
  if not rep.ok:
    raise ValidationError(f"structure is not valid: {rep.failures()}")
  M = S.metric
  n = M.dim
  half_dim = (n - 1) // 2
  Ric = M.ricci_matrix
  eta = S.eta
  # a transversal probe: the first basis vector with a non-zero projection to ker eta
  probe = None
  for i in range(n):
    w = tuple((1 if k == i else 0) - eta[i] * S.xi[k] for k in range(n))
    if not la.is_zero_vector(w):
      probe = w
      break
  if probe is None:
    return None
  lam = ricci_form(M, probe, probe) / M.inner(probe, probe)
  tail = 2 * half_dim - lam
  for i in range(n):
    for j in range(n):
      if not is_zero(Ric[i][j] - lam * M.gram[i][j] - tail * eta[i] * eta[j]):
        return None
  return EtaEinstein(lam, eta_einstein_class(lam), scalar_curvature(M))
