"""Constructions linking Kähler and Sasakian Lie algebras.

* :func:`central_extension` turns Kähler data ``(h, J, <,>)`` into a
  Sasakian algebra ``R xi + h`` with ``[x, y] = -2 omega(x, y) xi + [x, y]_h``.
* :func:`kahler_reduction` is its inverse on Sasakian algebras with
  centre ``R xi``.
* :func:`build_centreless` assembles a Sasakian algebra with trivial
  centre from a Kähler-exact seed; :func:`split_by_reeb` recovers the seed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .algebra import LieAlgebra, bracket, centre
from .curvature import MetricLieAlgebra
from .forms import KForm, ce_differential
from .linalg import Subspace
from .scalars import ModeError, ValidationError, coerce, exact_sqrt, get_tolerance, is_zero
from .structures import (AlmostContactMetric, Condition, HermitianData, Report, check_kahler,
                         check_sasakian, kahler_exact)

__all__ = [
  "central_extension",
  "kahler_reduction",
  "KahlerExactSeed",
  "build_centreless",
  "ReebSplit",
  "split_by_reeb",
  "LatticeResult",
  "lattice_integrality",
]


def central_extension(H: HermitianData, xi_label: str = "xi") -> AlmostContactMetric:
  n = H.dim
  L = H.algebra
  omega = H.kahler_form
  br = {}
  for i in range(n):
    for j in range(i + 1, n):
      v = tuple(L.basis_bracket(i, j)) + (-2 * omega.value((i, j)),)
      if not la.is_zero_vector(v):
        br[(i, j)] = v
  labels = L.labels + (xi_label if xi_label not in L.labels else f"e{n + 1}",)
  G = tuple(tuple(r) + (0,) for r in H.gram) + (tuple([0] * n + [1]),)
  alg = LieAlgebra(n + 1, br, labels, L.mode)
  phi = tuple(tuple(r) + (0,) for r in H.J) + ((0,) * (n + 1),)
  xi = la.unit(n + 1, n)
  return AlmostContactMetric(MetricLieAlgebra(alg, G), phi, xi)


def _coords(basis, w):
  """Coordinates of ``w`` in a (not necessarily RREF) basis, or ``None``."""
  if not basis:
    return () if la.is_zero_vector(w) else None
  return la.solve(la.transpose(tuple(basis)), w)


def _restricted_hermitian(S: AlmostContactMetric, basis, labels) -> HermitianData:
  """Kähler data induced on ``span(basis)`` inside ``ker eta``."""
  L = S.algebra
  m = len(basis)
  br = {}
  for i in range(m):
    for j in range(i + 1, m):
      w = bracket(L, basis[i], basis[j])
      w = la.vsub(w, la.vscale(S.eta_of(w), S.xi))
      c = _coords(basis, w)
      if c is None:
        raise ValidationError("subspace is not closed under the projected bracket")
      if not la.is_zero_vector(c):
        br[(i, j)] = c
  alg = LieAlgebra(m, br, labels, L.mode)
  G = tuple(tuple(S.metric.inner(a, b) for b in basis) for a in basis)
  cols = []
  for b in basis:
    c = _coords(basis, S.apply_phi(b))
    if c is None:
      raise ValidationError("phi does not preserve the subspace")
    cols.append(c)
  J = la.transpose(tuple(cols)) if cols else ()
  return HermitianData(MetricLieAlgebra(alg, G), J)


def kahler_reduction(S: AlmostContactMetric) -> HermitianData:
  """Kähler algebra ``ker eta`` of a Sasakian algebra whose centre is ``R xi``."""
  rep = check_sasakian(S)
  if not rep.ok:
    raise ValidationError(f"not Sasakian: {rep.failures()}")
  z = centre(S.algebra)
  if z != Subspace.span([S.xi], S.dim):
    raise ValidationError(f"centre has dimension {z.dim}, expected R xi")
  n = S.dim
  p = max(i for i in range(n) if not is_zero(S.xi[i]))
  basis = [la.vsub(la.unit(n, i), la.vscale(S.eta[i], S.xi)) for i in range(n) if i != p]
  basis = [la.as_vector(b, S.mode) for b in basis]
  labels = tuple(lab for i, lab in enumerate(S.algebra.labels) if i != p)
  return _restricted_hermitian(S, basis, labels)


# ---------------------------------------------------------------- seeds


class KahlerExactSeed:
  """Input of the centreless builder: Kähler ``h1``, rotation speed ``k`` and ``H0 in h1``.

  ``gamma`` defaults to ``-2k`` times a primitive of the Kähler form.
  """

  def __init__(self, h1: HermitianData, k, H0=None, gamma=None):
    mode = h1.mode
    self.h1 = h1
    self.k = coerce(k, mode)
    m = h1.dim
    self.H0 = la.as_vector(H0 if H0 is not None else (0,) * m, mode)
    if gamma is None:
      alpha = kahler_exact(h1)
      if alpha is None:
        raise ValidationError("Kähler form is not exact")
      gamma = la.vscale(-2 * self.k, alpha.as_vector()) if m else ()
    self.gamma = la.as_vector(gamma, mode)
    if len(self.H0) != m or len(self.gamma) != m:
      raise ValidationError("seed vectors have the wrong size")

  @property
  def mode(self) -> str:
    return self.h1.mode

  @property
  def mu(self) -> tuple:
    """``mu(x) = -<x, J H0> / 2`` as a covector."""
    if not self.h1.dim:
      return ()
    half = coerce(1, self.mode) / 2
    return la.vscale(-half, self.h1.metric.flat(self.h1.apply_J(self.H0)))

  def validate(self) -> Report:
    h1 = self.h1
    L = h1.algebra
    m = h1.dim
    conds = []
    kr = check_kahler(h1)
    conds.append(Condition("kahler", kr.ok, ",".join(kr.failures())))
    conds.append(Condition("k_nonzero", not is_zero(self.k), f"k = {self.k}"))
    dgamma = ce_differential(L, KForm.covector(self.gamma, self.mode)) if m else KForm.zero(0, 2, self.mode)
    conds.append(Condition("gamma_primitive", dgamma.equals(h1.kahler_form.scale(-2 * self.k)),
                           "omega = -d gamma / 2k"))
    der = Subspace.span([L.basis_bracket(i, j) for i in range(m) for j in range(i + 1, m)], m)
    conds.append(Condition("H0_derived", der.contains(self.H0), "H0 in [h1, h1]"))
    JH0 = h1.apply_J(self.H0)
    perp = all(is_zero(h1.metric.inner(JH0, w)) for w in der.basis)
    conds.append(Condition("JH0_orthogonal", perp, "J H0 orthogonal to [h1, h1]"))
    mu = self.mu
    ok = True
    for i in range(m):
      e = la.unit(m, i)
      if not la.vec_equal(la.vscale(2 * mu[i], self.H0), bracket(L, e, self.H0)):
        ok = False
    conds.append(Condition("mu_eigen", ok, "2 mu(x) H0 = [x, H0]"))
    if not la.is_zero_vector(self.H0):
      g = la.dot(self.gamma, self.H0)
      conds.append(Condition("gamma_H0", is_zero(g + 2 * self.k), f"gamma(H0) = {g}"))
    return Report("kahler exact seed", tuple(conds))

  def __repr__(self) -> str:
    return f"KahlerExactSeed(dim={self.h1.dim}, k={self.k})"


def build_centreless(seed: KahlerExactSeed, validate: bool = True, labels=None) -> AlmostContactMetric:
  """Sasakian algebra ``R xi + h1 + span(u, v)`` from a seed.

  Basis order is ``h1, u, v, xi``.  With ``validate=False`` an invalid seed
  still produces the (possibly non-Lie) bracket for diagnostics.
  """
  if validate:
    rep = seed.validate()
    if not rep.ok:
      raise ValidationError(f"invalid seed: {rep.failures()}")
  h1 = seed.h1
  L = h1.algebra
  m = h1.dim
  n = m + 3
  u, v, xi = m, m + 1, m + 2
  omega = h1.kahler_form
  mu, gamma, k = seed.mu, seed.gamma, seed.k
  br = {}

  def vec(h=None, **extra):
    out = list(h) + [0, 0, 0] if h is not None else [0] * n
    for key, val in extra.items():
      out[{"u": u, "v": v, "xi": xi}[key]] += val
    return tuple(out)

  for i in range(m):
    for j in range(i + 1, m):
      br[(i, j)] = vec(L.basis_bracket(i, j), xi=-2 * omega.value((i, j)))
    br[(i, u)] = vec(u=mu[i], v=gamma[i])
    br[(i, v)] = vec(u=-gamma[i], v=mu[i])
  br[(u, v)] = vec(seed.H0, xi=2)
  br[(u, xi)] = vec(v=-k)
  br[(v, xi)] = vec(u=k)
  if labels is None:
    labels = L.labels + tuple(x for x in ("u", "v", "xi"))
    if len(set(labels)) != n:
      labels = tuple(f"e{i + 1}" for i in range(n))
  alg = LieAlgebra(n, br, labels, seed.mode, check=validate)
  G = tuple(tuple(r) + (0, 0, 0) for r in h1.gram) + tuple(la.unit(n, m + t) for t in range(3))
  phi = [list(r) + [0, 0, 0] for r in h1.J] + [[0] * n for _ in range(3)]
  phi[v][u] = 1
  phi[u][v] = -1
  return AlmostContactMetric(MetricLieAlgebra(alg, G), phi, la.unit(n, xi))


# ---------------------------------------------------------------- Reeb split


@dataclass
class ReebSplit:
  kernel: Subspace
  image: Subspace
  seed: KahlerExactSeed | None = None
  basis: tuple | None = None
  reason: str | None = None
  mu: tuple | None = None

  @property
  def ok(self) -> bool:
    return self.seed is not None


def _unit_in(space: Subspace, M: MetricLieAlgebra):
  """A unit vector of ``space``; exact mode needs a rational norm."""
  cands = list(space.basis)
  if len(cands) == 2:
    a, b = cands
    cands += [la.vadd(a, b), la.vsub(a, b), la.vadd(a, la.vscale(2, b)), la.vadd(la.vscale(2, a), b)]
  for w in cands:
    q = M.inner(w, w)
    if isinstance(q, float):
      return la.vscale(1 / math.sqrt(q), w)
    r = exact_sqrt(q)
    if r is not None:
      return la.vscale(1 / r, w)
  raise ModeError("no unit vector with rational coordinates found; use float mode")


def split_by_reeb(S: AlmostContactMetric) -> ReebSplit:
  """Decompose along ``ker ad_xi`` and ``im ad_xi`` and extract the seed."""
  L = S.algebra
  M = S.metric
  n = S.dim
  A = L.ad(S.xi)
  ker = Subspace.kernel(A, n)
  im = Subspace.span(la.transpose(A), n)
  if ker.dim + im.dim != n or not all(is_zero(M.inner(a, b)) for a in ker.basis for b in im.basis):
    return ReebSplit(ker, im, reason="kernel and image of ad_xi are not orthogonal complements")
  if im.dim != 2:
    return ReebSplit(ker, im, reason=f"image of ad_xi has dimension {im.dim}, not 2")
  h1 = ker.intersect(Subspace.kernel([S.eta], n))
  hb = list(h1.basis)
  u = _unit_in(im, M)
  v = S.apply_phi(u)
  if not im.contains(v):
    return ReebSplit(ker, im, reason="phi does not preserve the image of ad_xi")
  k = M.inner(bracket(L, S.xi, u), v)
  labels = tuple(f"e{i + 1}" for i in range(len(hb)))
  H = _restricted_hermitian(S, hb, labels)
  gamma = tuple(M.inner(bracket(L, x, u), v) for x in hb)
  mu = tuple(M.inner(bracket(L, x, u), u) for x in hb)
  uv = bracket(L, u, v)
  if not is_zero(S.eta_of(uv) - 2):
    return ReebSplit(ker, im, reason="eta([u, v]) != 2")
  H0 = _coords(hb, la.vsub(uv, la.vscale(S.eta_of(uv), S.xi)))
  if H0 is None:
    return ReebSplit(ker, im, reason="[u, v] has a component outside R xi + h1")
  seed = KahlerExactSeed(H, k, H0, gamma)
  basis = tuple(hb) + (u, v, S.xi)
  return ReebSplit(ker, im, seed, basis, None, mu)


# ---------------------------------------------------------------- lattice


_QUARTER = {0: (1, 0), 1: (0, 1), 2: (-1, 0), 3: (0, -1)}


@dataclass(frozen=True)
class LatticeResult:
  matrix: tuple
  integer: bool
  exact: bool


def _cos_sin(turns):
  """``cos`` and ``sin`` of ``turns * pi / 2``; exact when ``turns`` is an integer."""
  if not isinstance(turns, float) and Fraction(turns).denominator == 1:
    return _QUARTER[int(turns) % 4], True
  ang = float(turns) * math.pi / 2
  return (math.cos(ang), math.sin(ang)), False


def lattice_integrality(a, b, t) -> LatticeResult:
  """Matrix of ``exp(t ad_{e1})`` on ``(e2, e3, e4, e5, e6, xi)`` for the
  7-dimensional null-class solvmanifold, with rotation speeds
  ``a * pi / 2`` and ``b * pi / 2``.
  """
  (ca, sa), ea = _cos_sin(Fraction(a) * Fraction(t) if not isinstance(a, float) else a * t)
  (cb, sb), eb = _cos_sin(Fraction(b) * Fraction(t) if not isinstance(b, float) else b * t)
  exact = ea and eb
  tt = t if exact else float(t)
  rows = (
    (1, 0, 0, 0, 0, 0),
    (0, ca, -sa, 0, 0, 0),
    (0, sa, ca, 0, 0, 0),
    (0, 0, 0, cb, -sb, 0),
    (0, 0, 0, sb, cb, 0),
    (2 * tt, 0, 0, 0, 0, 1),
  )
  if exact:
    integer = all(Fraction(x).denominator == 1 for r in rows for x in r)
  else:
    rows = tuple(tuple(float(x) for x in r) for r in rows)
    tol = get_tolerance()
    integer = all(abs(x - round(x)) <= tol for r in rows for x in r)
  return LatticeResult(rows, integer, exact)
