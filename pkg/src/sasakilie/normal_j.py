"""Normal j-algebras: root decomposition, Einstein criterion, unitary derivations.

A normal j-algebra is a completely solvable Kähler Lie algebra ``d`` with a
1-form ``f`` such that ``<x, y> = f[Jx, y]`` and ``omega = -df``.  It splits
as ``d = a + n`` with ``n = [d, d]`` and ``a`` its orthogonal complement,
and ``n`` decomposes into root spaces of the abelian ``a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg as la
from .algebra import LieAlgebra, bracket, classify, derived_algebra
from .linalg import Subspace
from .scalars import ValidationError, coerce, exact_sqrt, is_zero
from .structures import Condition, HermitianData, Report, check_kahler

__all__ = [
  "NormalJAlgebra",
  "Root",
  "RootDecomposition",
  "root_decomposition",
  "datri_einstein",
  "derivations",
  "unitary_derivations",
  "validate_derivation_lemmas",
  "h0_candidates",
  "eta_einstein_obstruction",
  "trace_formula_holds",
  "ricci_on_a",
  "root_invariants",
  "DatriResult",
]


class NormalJAlgebra:
  """Hermitian data plus the distinguished 1-form ``f``.

  The constructor checks the defining identities and raises
  :class:`ValidationError` when one fails.
  """

  def __init__(self, hermitian: HermitianData, f, check: bool = True):
    self.hermitian = hermitian
    self.f = la.as_vector(f, hermitian.mode)
    if len(self.f) != hermitian.dim:
      raise ValidationError("f has the wrong size")
    if check:
      rep = self.report()
      if not rep.ok:
        raise ValidationError(f"not a normal j-algebra: {rep.failures()}")

  @classmethod
  def from_form(cls, algebra: LieAlgebra, J, f) -> "NormalJAlgebra":
    """Build with the inner product ``<x, y> = f[Jx, y]``."""
    from .curvature import MetricLieAlgebra

    J = la.as_matrix(J, algebra.mode)
    gram = _form_gram(algebra, J, la.as_vector(f, algebra.mode))
    return cls(HermitianData(MetricLieAlgebra(algebra, gram), J), f)

  @property
  def algebra(self) -> LieAlgebra:
    return self.hermitian.algebra

  @property
  def J(self):
    return self.hermitian.J

  @property
  def gram(self):
    return self.hermitian.gram

  @property
  def metric(self):
    return self.hermitian.metric

  @property
  def dim(self) -> int:
    return self.hermitian.dim

  @property
  def mode(self) -> str:
    return self.hermitian.mode

  def f_bracket(self, x, y):
    return la.dot(self.f, bracket(self.algebra, x, y))

  def report(self) -> Report:
    n = self.dim
    L = self.algebra
    J = self.J
    basis = la.identity(n)
    cols = la.transpose(J) if n else ()
    conds = []
    cs = classify(L).completely_solvable
    conds.append(Condition("completely_solvable", cs is True, str(cs)))
    inv = all(is_zero(self.f_bracket(cols[i], cols[j]) - self.f_bracket(basis[i], basis[j]))
              for i in range(n) for j in range(n))
    conds.append(Condition("f_J_invariant", inv, "f[Jx, Jy] = f[x, y]"))
    gram = _form_gram(L, J, self.f)
    conds.append(Condition("metric_from_f", la.mat_equal(gram, self.gram), "<x, y> = f[Jx, y]"))
    kr = check_kahler(self.hermitian)
    conds.append(Condition("kahler", kr.ok, ",".join(kr.failures())))
    return Report("normal j-algebra", tuple(conds))

  def __repr__(self) -> str:
    return f"NormalJAlgebra(dim={self.dim}, mode={self.mode!r})"


def _form_gram(L: LieAlgebra, J, f):
  n = L.dim
  cols = la.transpose(J) if n else ()
  return tuple(tuple(la.dot(f, bracket(L, cols[i], la.unit(n, j))) for j in range(n))
               for i in range(n))


# ---------------------------------------------------------------- roots


@dataclass(frozen=True)
class Root:
  """A root ``alpha`` of ``a`` on ``n`` with its root space.

  ``values`` are the values on the basis of ``a``; ``covector`` extends
  ``alpha`` to the whole algebra by zero on ``n``.  ``kind`` is one of
  ``"full"`` (``eps_i``), ``"half"`` (``eps_i / 2``), ``"minus"``
  (``(eps_i - eps_j) / 2``) or ``"plus"`` (``(eps_i + eps_j) / 2``), with
  0-based distinguished indices in ``indices``.
  """

  values: tuple
  covector: tuple
  space: Subspace
  kind: str
  indices: tuple

  @property
  def dim(self) -> int:
    return self.space.dim

  @property
  def distinguished(self) -> bool:
    return self.kind == "full"


@dataclass(frozen=True)
class RootDecomposition:
  a: Subspace
  n: Subspace
  roots: tuple[Root, ...]
  epsilons: tuple[Root, ...]
  generators: tuple
  norms: tuple
  h: tuple
  n_half: tuple
  n_mixed: dict

  @property
  def r(self) -> int:
    return len(self.epsilons)

  def space(self, kind: str, *indices) -> Subspace:
    for root in self.roots:
      if root.kind == kind and root.indices == tuple(indices):
        return root.space
    return Subspace.zero(self.n.ambient_dim)

  def f_squared(self, N: NormalJAlgebra) -> tuple:
    """``f(x_k)^2`` for unit generators ``x_k``."""
    return tuple(la.dot(N.f, x) ** 2 / q for x, q in zip(self.generators, self.norms))

  def signature(self) -> tuple:
    """Root types with multiplicities, independent of the basis."""
    return tuple(sorted((r.kind, r.indices, r.dim) for r in self.roots))


def _split(L: LieAlgebra, space: Subspace, h) -> list[tuple[Subspace, object]]:
  A = space.restrict(L.ad(h))
  out = []
  total = 0
  for lam in la.distinct_eigenvalues(A):
    shifted = la.msub(A, la.mscale(lam, la.identity(len(A))))
    ker = la.nullspace(shifted, len(A))
    vecs = [la.lincomb(c, space.basis, space.ambient_dim) for c in ker]
    out.append((Subspace.span(vecs, space.ambient_dim), lam))
    total += len(ker)
  if total != space.dim:
    raise ValidationError("ad(a) is not diagonalizable on n")
  return out


def _kind(coeffs) -> tuple[str, tuple] | None:
  nz = [(i, c) for i, c in enumerate(coeffs) if not is_zero(c)]
  half = Fraction(1, 2)
  if len(nz) == 1:
    i, c = nz[0]
    if is_zero(c - 1):
      return "full", (i,)
    if is_zero(c - half):
      return "half", (i,)
  if len(nz) == 2:
    (i, ci), (j, cj) = nz
    if is_zero(ci - half) and is_zero(cj - half):
      return "plus", (i, j)
    if is_zero(ci - half) and is_zero(cj + half):
      return "minus", (i, j)
    if is_zero(ci + half) and is_zero(cj - half):
      return "minus", (j, i)
  return None


def root_decomposition(N: NormalJAlgebra) -> RootDecomposition:
  L = N.algebra
  dim = L.dim
  G = N.gram
  J = N.J
  nsp = derived_algebra(L)
  asp = nsp.orthogonal_complement(G)
  ab = asp.basis
  for x, y in combinations(ab, 2):
    if not la.is_zero_vector(bracket(L, x, y)):
      raise ValidationError("a is not abelian")
  pieces = [(nsp, ())]
  for h in ab:
    nxt = []
    for W, vals in pieces:
      for sub, lam in _split(L, W, h):
        nxt.append((sub, vals + (lam,)))
    pieces = nxt
  # extend each root to a covector on the whole algebra, vanishing on n
  B = la.transpose(tuple(ab) + tuple(nsp.basis))
  Binv = la.inverse(B)
  covs = []
  for _, vals in pieces:
    covs.append(tuple(sum(vals[b] * Binv[b][i] for b in range(len(ab))) for i in range(dim)))
  # distinguished roots: J maps the root space into a
  dist = [t for t, (W, _) in enumerate(pieces)
          if all(asp.contains(la.matvec(J, w)) for w in W.basis)]
  if len(dist) != len(ab):
    raise ValidationError(f"{len(dist)} distinguished roots but dim a = {len(ab)}")

  def first_nonzero(vals):
    return next((i for i, v in enumerate(vals) if not is_zero(v)), len(vals))

  dist.sort(key=lambda t: first_nonzero(pieces[t][1]))
  E = [pieces[t][1] for t in dist]
  Et = la.transpose(tuple(E)) if E else ()

  def coefficients(vals):
    sol = la.solve(Et, vals) if E else ()
    if sol is None:
      raise ValidationError("root is not a combination of distinguished roots")
    return sol

  coeffs = [coefficients(vals) for _, vals in pieces]
  # order distinguished roots so that mixed roots read (eps_i - eps_j)/2 with i < j
  r = len(dist)
  must_precede = set()
  for c in coeffs:
    kind = _kind(c)
    if kind is None:
      raise ValidationError(f"root with coefficients {c} is not of normal j type")
    if kind[0] == "minus":
      must_precede.add(kind[1])
  order = []
  remaining = list(range(r))
  while remaining:
    free = [i for i in remaining if not any((j, i) in must_precede for j in remaining if j != i)]
    if not free:
      raise ValidationError("no ordering of the distinguished roots is consistent")
    order.append(free[0])
    remaining.remove(free[0])
  perm = {old: new for new, old in enumerate(order)}
  roots = []
  for (W, vals), cov, c in zip(pieces, covs, coeffs):
    kind, idx = _kind(c)
    idx = tuple(perm[i] for i in idx)
    if kind in ("plus",):
      idx = tuple(sorted(idx))
    if kind == "minus" and idx[0] > idx[1]:
      raise ValidationError("inconsistent root ordering")
    roots.append(Root(tuple(vals), cov, W, kind, idx))
  roots.sort(key=lambda rt: (("full", "half", "minus", "plus").index(rt.kind), rt.indices))
  eps = tuple(rt for rt in roots if rt.kind == "full")
  gens, norms, hs = [], [], []
  for rt in eps:
    if rt.dim != 1:
      raise ValidationError("distinguished root space is not one-dimensional")
    x = rt.space.basis[0]
    if la.dot(rt.covector, la.matvec(J, x)) < 0:
      x = la.vscale(-1, x)
    q = N.metric.inner(x, x)
    s = q ** 0.5 if isinstance(q, float) else exact_sqrt(q)
    if s is not None:
      x = la.vscale(1 / s, x)
      q = coerce(1, N.mode)
    if not la.dot(N.f, x) > 0:
      raise ValidationError("f(x_k) and eps_k(J x_k) have opposite signs")
    gens.append(x)
    norms.append(q)
    hs.append(la.matvec(J, x))
  n_half = tuple(next((rt.dim for rt in roots if rt.kind == "half" and rt.indices == (k,)), 0)
                 for k in range(r))
  n_mixed = {}
  for i, j in combinations(range(r), 2):
    dm = next((rt.dim for rt in roots if rt.kind == "minus" and rt.indices == (i, j)), 0)
    dp = next((rt.dim for rt in roots if rt.kind == "plus" and rt.indices == (i, j)), 0)
    if dm != dp:
      raise ValidationError(f"n_{i+1}{j+1}: minus and plus root spaces differ in dimension")
    n_mixed[(i, j)] = dm
  return RootDecomposition(asp, nsp, tuple(roots), eps, tuple(gens), tuple(norms), tuple(hs),
                           n_half, n_mixed)


def root_invariants(N: NormalJAlgebra, R: RootDecomposition) -> Report:
  """Structural facts every normal j-algebra satisfies."""
  L = N.algebra
  J = N.J
  G = N.gram
  conds = []
  ortho = all(is_zero(la.inner(G, x, y))
              for a, b in combinations(R.roots, 2) for x in a.space.basis for y in b.space.basis)
  conds.append(Condition("orthogonal_root_spaces", ortho))
  closed = True
  for a in R.roots:
    for b in R.roots:
      target = tuple(x + y for x, y in zip(a.values, b.values))
      tgt = next((c.space for c in R.roots if la.vec_equal(c.values, target)), None)
      for x in a.space.basis:
        for y in b.space.basis:
          w = bracket(L, x, y)
          if la.is_zero_vector(w):
            continue
          if tgt is None or not tgt.contains(w):
            closed = False
  conds.append(Condition("root_brackets", closed, "[n_a, n_b] in n_(a+b)"))
  cross = all(is_zero(la.dot(R.epsilons[k].covector, R.h[i]))
              for i in range(R.r) for k in range(R.r) if i != k)
  conds.append(Condition("eps_cross", cross, "eps_k(J x_i) = 0 for i != k"))
  f_off = all(is_zero(la.dot(N.f, x)) for rt in R.roots if rt.kind != "full" for x in rt.space.basis)
  conds.append(Condition("f_support", f_off, "f vanishes off distinguished root spaces"))
  half_ok = all(R.space("half", k).image(J) == R.space("half", k) for k in range(R.r))
  conds.append(Condition("J_half", half_ok, "J n_(eps_k/2) = n_(eps_k/2)"))
  mixed_ok = all(R.space("plus", i, j).image(J) == R.space("minus", i, j)
                 for (i, j) in R.n_mixed)
  conds.append(Condition("J_mixed", mixed_ok, "J n_(eps_i+eps_j)/2 = n_(eps_i-eps_j)/2"))
  return Report("root invariants", tuple(conds))


@dataclass(frozen=True)
class DatriResult:
  constant: object
  ratios: tuple

  def __bool__(self) -> bool:
    return self.constant is not None


def datri_einstein(N: NormalJAlgebra, R: RootDecomposition | None = None) -> DatriResult:
  """Einstein criterion: with unit generators, ``f(x_k)^2 * C`` must equal
  ``1 + n_k / 4 + (sum of n_jk over j != k) / 2`` for one ``C`` and all ``k``.
  Returns ``C`` (so that ``Ric = -C <,>``) or ``None``."""
  R = R or root_decomposition(N)
  fsq = R.f_squared(N)
  ratios = []
  for k in range(R.r):
    s = 1 + Fraction(1, 4) * R.n_half[k]
    s += Fraction(1, 2) * sum(d for (i, j), d in R.n_mixed.items() if k in (i, j))
    ratios.append(s / fsq[k])
  if not ratios:
    return DatriResult(None, ())
  c = ratios[0]
  ok = all(is_zero(x - c) for x in ratios)
  return DatriResult(c if ok else None, tuple(ratios))


def trace_formula_holds(N: NormalJAlgebra, R: RootDecomposition | None = None) -> bool:
  """``tr ad_{h_i} = eps_i(h_i) (1 + n_i / 2 + sum_{k > i} n_ik)``."""
  R = R or root_decomposition(N)
  L = N.algebra
  for i in range(R.r):
    h = R.h[i]
    e = la.dot(R.epsilons[i].covector, h)
    rhs = e * (1 + Fraction(1, 2) * R.n_half[i]
               + sum(d for (a, b), d in R.n_mixed.items() if a == i))
    if not is_zero(la.trace(L.ad(h)) - rhs):
      return False
  return True


def ricci_on_a(N: NormalJAlgebra, h, R: RootDecomposition | None = None):
  """``-sum_alpha alpha(h)^2 dim n_alpha``."""
  R = R or root_decomposition(N)
  return -sum(la.dot(rt.covector, h) ** 2 * rt.dim for rt in R.roots)


# ---------------------------------------------------------------- derivations


def _derivation_rows(L: LieAlgebra) -> list:
  n = L.dim
  c = L.structure_constants
  rows = []
  for i in range(n):
    for j in range(i + 1, n):
      for k in range(n):
        row = [0] * (n * n)
        # D[e_i, e_j] component k
        for m in range(n):
          if c[i][j][m] != 0:
            row[k * n + m] += c[i][j][m]
        # - [D e_i, e_j] - [e_i, D e_j]
        for p in range(n):
          if c[p][j][k] != 0:
            row[p * n + i] -= c[p][j][k]
          if c[i][p][k] != 0:
            row[p * n + j] -= c[i][p][k]
        if any(x != 0 for x in row):
          rows.append(row)
  return rows


def _basis_to_matrices(vecs, n):
  return [tuple(tuple(v[a * n + b] for b in range(n)) for a in range(n)) for v in vecs]


def derivations(L: LieAlgebra) -> list:
  """Basis of the derivation algebra as matrices."""
  n = L.dim
  return _basis_to_matrices(la.nullspace(_derivation_rows(L), n * n) if n else [], n)


def unitary_derivations(H: HermitianData) -> list:
  """Basis of derivations that commute with ``J`` and are skew for the metric."""
  L = H.algebra
  n = L.dim
  if n == 0:
    return []
  J, G = H.J, H.gram
  rows = _derivation_rows(L)
  for a in range(n):
    for b in range(n):
      row = [0] * (n * n)
      for m in range(n):
        row[a * n + m] += J[m][b]  # (DJ)[a][b]
        row[m * n + b] -= J[a][m]  # (JD)[a][b]
      rows.append(row)
      row = [0] * (n * n)
      for m in range(n):
        row[m * n + a] += G[m][b]  # (D^T G)[a][b]
        row[m * n + b] += G[a][m]  # (G D)[a][b]
      rows.append(row)
  rows = [r for r in rows if any(x != 0 for x in r)]
  return _basis_to_matrices(la.nullspace(rows, n * n), n)


def validate_derivation_lemmas(N: NormalJAlgebra, R: RootDecomposition | None = None,
                               ders: list | None = None) -> Report:
  """Unitary derivations kill ``a`` and each ``n_(eps_i)`` and preserve
  ``n_(eps_i/2)`` and ``n_(eps_i-eps_j)/2 + n_(eps_i+eps_j)/2``."""
  R = R or root_decomposition(N)
  ders = unitary_derivations(N.hermitian) if ders is None else ders
  kill_a = all(la.is_zero_vector(la.matvec(D, h)) for D in ders for h in R.a.basis)
  kill_eps = all(la.is_zero_vector(la.matvec(D, x)) for D in ders for rt in R.epsilons
                 for x in rt.space.basis)
  half = all(R.space("half", k).is_invariant(D) for D in ders for k in range(R.r))
  mixed = all((R.space("minus", i, j) + R.space("plus", i, j)).is_invariant(D)
              for D in ders for (i, j) in R.n_mixed)
  return Report("unitary derivation lemmas", (
    Condition("kills_a", kill_a, "D(a) = 0"),
    Condition("kills_eps", kill_eps, "D(n_eps_i) = 0"),
    Condition("preserves_half", half, "D n_(eps_i/2) in n_(eps_i/2)"),
    Condition("preserves_mixed", mixed, "D preserves n_(eps_i -+ eps_j)/2 pairs"),
  ))


# ---------------------------------------------------------------- H0


def h0_candidates(N: NormalJAlgebra, R: RootDecomposition | None = None) -> list:
  """Vectors ``-eps_i(h_i) x_i`` with unit ``x_i`` and ``h_i = J x_i``."""
  R = R or root_decomposition(N)
  out = []
  for rt, x, q, h in zip(R.epsilons, R.generators, R.norms, R.h):
    out.append(la.vscale(-la.dot(rt.covector, h) / q, x))
  return out


def eta_einstein_obstruction(N: NormalJAlgebra, i: int, R: RootDecomposition | None = None) -> bool:
  """True when ``H0`` in ``n_(eps_i)`` cannot give an η-Einstein extension,
  i.e. some ``n_ji > 0`` with ``j < i`` (0-based ``i``)."""
  R = R or root_decomposition(N)
  return any(R.n_mixed.get((j, i), 0) > 0 for j in range(i))
