"""Dense linear algebra over exact rationals or floats.

Matrices are tuples of row tuples and act on column vectors.  Every
routine works for ``Fraction`` and ``float`` entries alike; zero tests go
through :func:`sasakilie.scalars.is_zero` so float mode uses the global
tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import EXACT, FLOAT, coerce, get_tolerance, is_zero

__all__ = [
  "Vector",
  "Matrix",
  "zeros",
  "identity",
  "unit",
  "as_matrix",
  "as_vector",
  "transpose",
  "matmul",
  "matvec",
  "vecmat",
  "dot",
  "inner",
  "madd",
  "msub",
  "mscale",
  "vadd",
  "vsub",
  "vscale",
  "lincomb",
  "commutator",
  "trace",
  "outer",
  "is_zero_vector",
  "is_zero_matrix",
  "vec_equal",
  "mat_equal",
  "rref",
  "rank",
  "nullspace",
  "solve",
  "inverse",
  "det",
  "is_positive_definite",
  "is_symmetric",
  "Subspace",
  "charpoly",
  "polyval",
  "polyder",
  "polydivmod",
  "polygcd",
  "rational_roots",
  "count_real_roots",
  "all_roots_real",
  "spectrum_is_real",
  "eigenvalues",
  "distinct_eigenvalues",
  "matrix_mode",
  "inertia",
]

Vector = tuple
Matrix = tuple


def zeros(rows: int, cols: int) -> Matrix:
  return tuple((0,) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
  return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def unit(n: int, i: int) -> Vector:
  return tuple(1 if k == i else 0 for k in range(n))


def as_matrix(rows, mode: str) -> Matrix:
  return tuple(tuple(coerce(x, mode) for x in row) for row in rows)


def as_vector(v, mode: str) -> Vector:
  return tuple(coerce(x, mode) for x in v)


def transpose(a: Matrix) -> Matrix:
  return tuple(zip(*a)) if a else ()


def _zero_for(*arrays):
  for arr in arrays:
    for row in arr:
      for x in (row if isinstance(row, (tuple, list)) else (row,)):
        if isinstance(x, float):
          return 0.0
  return 0


def matmul(a: Matrix, b: Matrix) -> Matrix:
  # structure-constant matrices are sparse: only multiply non-zero entries
  zero = _zero_for(a, b)
  cols = [[(k, y) for k, y in enumerate(col) if y != 0] for col in transpose(b)]
  return tuple(tuple(sum((row[k] * y for k, y in col), zero) for col in cols) for row in a)


def matvec(a: Matrix, v: Sequence) -> Vector:
  zero = _zero_for(a, v)
  nz = [(k, y) for k, y in enumerate(v) if y != 0]
  return tuple(sum((row[k] * y for k, y in nz), zero) for row in a)


def vecmat(v: Sequence, a: Matrix) -> Vector:
  """Row vector times matrix (a covector pulled back by ``a``)."""
  n = len(a[0]) if a else 0
  return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(n))


def dot(u: Sequence, v: Sequence):
  return sum(x * y for x, y in zip(u, v))


def inner(gram: Matrix, u: Sequence, v: Sequence):
  return dot(u, matvec(gram, v))


def madd(a: Matrix, b: Matrix) -> Matrix:
  return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def msub(a: Matrix, b: Matrix) -> Matrix:
  return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mscale(c, a: Matrix) -> Matrix:
  return tuple(tuple(c * x for x in r) for r in a)


def vadd(u, v) -> Vector:
  return tuple(x + y for x, y in zip(u, v))


def vsub(u, v) -> Vector:
  return tuple(x - y for x, y in zip(u, v))


def vscale(c, v) -> Vector:
  return tuple(c * x for x in v)


def lincomb(coeffs, vectors, n: int) -> Vector:
  out = [0] * n
  for c, v in zip(coeffs, vectors):
    if is_zero(c):
      continue
    for i, x in enumerate(v):
      out[i] += c * x
  return tuple(out)


def commutator(a: Matrix, b: Matrix) -> Matrix:
  return msub(matmul(a, b), matmul(b, a))


def trace(a: Matrix):
  return sum(a[i][i] for i in range(len(a)))


def outer(u, v) -> Matrix:
  return tuple(tuple(x * y for y in v) for x in u)


def is_zero_vector(v) -> bool:
  return all(is_zero(x) for x in v)


def is_zero_matrix(a) -> bool:
  return all(is_zero(x) for row in a for x in row)


def vec_equal(u, v) -> bool:
  return len(u) == len(v) and all(is_zero(x - y) for x, y in zip(u, v))


def mat_equal(a, b) -> bool:
  return len(a) == len(b) and all(vec_equal(r, s) for r, s in zip(a, b))


def _is_float(rows) -> bool:
  return any(isinstance(x, float) for r in rows for x in r)


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list], list[int]]:
  """Reduced row echelon form.  Returns ``(R, pivots)`` with zero rows dropped."""
  m = [list(r) for r in rows]
  if ncols is None:
    ncols = len(m[0]) if m else 0
  floating = _is_float(m)
  if floating:
    scale = max((abs(x) for r in m for x in r), default=0.0)
    thresh = get_tolerance() * max(1.0, scale)
  pivots: list[int] = []
  r = 0
  for c in range(ncols):
    if r >= len(m):
      break
    if floating:
      best = max(range(r, len(m)), key=lambda i: abs(m[i][c]))
      if abs(m[best][c]) <= thresh:
        for i in range(r, len(m)):
          m[i][c] = 0.0
        continue
      p = best
    else:
      p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
      if p is None:
        continue
    m[r], m[p] = m[p], m[r]
    inv = 1 / m[r][c] if floating else Fraction(1) / m[r][c]
    m[r] = [x * inv for x in m[r]]
    m[r][c] = 1
    for i in range(len(m)):
      if i != r and not (m[i][c] == 0):
        f = m[i][c]
        m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        m[i][c] = 0
    pivots.append(c)
    r += 1
  out = m[:r]
  if floating:
    out = [[0.0 if abs(x) <= thresh else x for x in row] for row in out]
  return out, pivots


def rank(rows) -> int:
  return len(rref(rows)[1])


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
  """Basis of ``{x : a x = 0}``; one vector per free column, free entry 1."""
  if ncols is None:
    ncols = len(a[0]) if a else 0
  r, piv = rref(a, ncols)
  free = [c for c in range(ncols) if c not in piv]
  basis = []
  for fc in free:
    v = [0] * ncols
    v[fc] = 1
    for row, pc in zip(r, piv):
      v[pc] = -row[fc]
    basis.append(tuple(v))
  return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Vector | None:
  """A solution of ``a x = b`` with free variables set to zero, or ``None``."""
  ncols = len(a[0]) if a else 0
  aug = [list(row) + [bi] for row, bi in zip(a, b)]
  r, piv = rref(aug, ncols + 1)
  if ncols in piv:
    return None
  x = [0] * ncols
  for row, pc in zip(r, piv):
    x[pc] = row[ncols]
  return tuple(x)


def inverse(a: Matrix) -> Matrix:
  n = len(a)
  aug = [list(row) + list(e) for row, e in zip(a, identity(n))]
  r, piv = rref(aug, 2 * n)
  if piv[:n] != list(range(n)) or len(piv) < n:
    raise ZeroDivisionError("singular matrix")
  return tuple(tuple(row[n:]) for row in r[:n])


def det(a: Matrix):
  n = len(a)
  m = [list(r) for r in a]
  floating = _is_float(m)
  d = 1
  for c in range(n):
    if floating:
      p = max(range(c, n), key=lambda i: abs(m[i][c]))
      if abs(m[p][c]) == 0:
        return 0.0
    else:
      p = next((i for i in range(c, n) if m[i][c] != 0), None)
      if p is None:
        return Fraction(0)
    if p != c:
      m[c], m[p] = m[p], m[c]
      d = -d
    d = d * m[c][c]
    for i in range(c + 1, n):
      if m[i][c] != 0:
        f = m[i][c] / m[c][c]
        m[i] = [x - f * y for x, y in zip(m[i], m[c])]
  return d


def is_positive_definite(a: Matrix) -> bool:
  """Sylvester's criterion on leading principal minors."""
  n = len(a)
  for k in range(1, n + 1):
    minor = det(tuple(tuple(a[i][j] for j in range(k)) for i in range(k)))
    if isinstance(minor, float):
      if minor <= get_tolerance():
        return False
    elif minor <= 0:
      return False
  return True


def is_symmetric(a: Matrix) -> bool:
  return all(is_zero(a[i][j] - a[j][i]) for i in range(len(a)) for j in range(i))


# ---------------------------------------------------------------- subspaces


@dataclass(frozen=True, eq=False)
class Subspace:
  """A linear subspace of ``R^n`` stored by its RREF basis."""

  ambient_dim: int
  basis: tuple[Vector, ...]

  @classmethod
  def span(cls, vectors, ambient_dim: int) -> "Subspace":
    vectors = [tuple(v) for v in vectors]
    if not vectors:
      return cls(ambient_dim, ())
    r, _ = rref(vectors, ambient_dim)
    return cls(ambient_dim, tuple(tuple(row) for row in r))

  @classmethod
  def zero(cls, n: int) -> "Subspace":
    return cls(n, ())

  @classmethod
  def full(cls, n: int) -> "Subspace":
    return cls(n, identity(n))

  @classmethod
  def kernel(cls, a: Sequence[Sequence], ncols: int) -> "Subspace":
    return cls.span(nullspace(a, ncols), ncols)

  @property
  def dim(self) -> int:
    return len(self.basis)

  def __len__(self) -> int:
    return self.dim

  def __iter__(self):
    return iter(self.basis)

  def contains(self, v) -> bool:
    if is_zero_vector(v):
      return True
    return self.coordinates(v) is not None

  def coordinates(self, v) -> Vector | None:
    """Coefficients of ``v`` in :attr:`basis`, or ``None`` if ``v`` is outside."""
    if not self.basis:
      return () if is_zero_vector(v) else None
    return solve(transpose(self.basis), v)

  def contains_space(self, other: "Subspace") -> bool:
    return all(self.contains(v) for v in other.basis)

  def __eq__(self, other) -> bool:
    if not isinstance(other, Subspace):
      return NotImplemented
    return (self.ambient_dim == other.ambient_dim and self.dim == other.dim
            and self.contains_space(other))

  def __hash__(self):
    return hash((self.ambient_dim, self.dim))

  def __add__(self, other: "Subspace") -> "Subspace":
    return Subspace.span(self.basis + other.basis, self.ambient_dim)

  def intersect(self, other: "Subspace") -> "Subspace":
    if not self.basis or not other.basis:
      return Subspace.zero(self.ambient_dim)
    # solve sum a_i u_i - sum b_j w_j = 0
    cols = list(self.basis) + [vscale(-1, w) for w in other.basis]
    ker = nullspace(transpose(tuple(cols)), len(cols))
    vecs = [lincomb(k[: self.dim], self.basis, self.ambient_dim) for k in ker]
    return Subspace.span(vecs, self.ambient_dim)

  def orthogonal_complement(self, gram: Matrix | None = None) -> "Subspace":
    n = self.ambient_dim
    if not self.basis:
      return Subspace.full(n)
    rows = self.basis if gram is None else tuple(vecmat(b, gram) for b in self.basis)
    return Subspace.kernel(rows, n)

  def image(self, a: Matrix) -> "Subspace":
    return Subspace.span([matvec(a, v) for v in self.basis], len(a))

  def is_invariant(self, a: Matrix) -> bool:
    return all(self.contains(matvec(a, v)) for v in self.basis)

  def restrict(self, a: Matrix) -> Matrix:
    """Matrix of ``a`` restricted to this (invariant) subspace, in :attr:`basis`."""
    cols = []
    for v in self.basis:
      c = self.coordinates(matvec(a, v))
      if c is None:
        raise ValueError("subspace is not invariant")
      cols.append(c)
    return transpose(tuple(cols)) if cols else ()

  def projector(self, gram: Matrix) -> Matrix:
    """Orthogonal projection onto this subspace with respect to ``gram``."""
    n = self.ambient_dim
    if not self.basis:
      return zeros(n, n)
    b = transpose(self.basis)  # n x d
    g = matmul(matmul(self.basis, gram), b)  # d x d
    ginv = inverse(g)
    return matmul(matmul(b, ginv), matmul(self.basis, gram))


# ---------------------------------------------------------------- polynomials
# Polynomials are lists of coefficients, lowest degree first.


def _trim(p):
  p = list(p)
  while p and is_zero(p[-1]):
    p.pop()
  return p


def charpoly(a: Matrix) -> list:
  """Characteristic polynomial ``det(t I - a)`` (Faddeev-LeVerrier)."""
  n = len(a)
  coeffs = [0] * (n + 1)
  coeffs[n] = 1
  m = zeros(n, n)
  ident = identity(n)
  for k in range(1, n + 1):
    m = madd(matmul(a, m), mscale(coeffs[n - k + 1], ident))
    t = trace(matmul(a, m))
    coeffs[n - k] = -t / k if isinstance(t, float) else -Fraction(t) / k
  return coeffs


def polyval(p, x):
  acc = 0
  for c in reversed(p):
    acc = acc * x + c
  return acc


def polyder(p):
  return [i * p[i] for i in range(1, len(p))]


def polydivmod(p, q):
  p = _trim(p)
  q = _trim(q)
  if not q:
    raise ZeroDivisionError("polynomial division by zero")
  out = [0] * max(len(p) - len(q) + 1, 1)
  r = list(p)
  while len(r) >= len(q) and r:
    shift = len(r) - len(q)
    c = r[-1] / q[-1] if isinstance(r[-1], float) or isinstance(q[-1], float) else Fraction(r[-1]) / q[-1]
    out[shift] = c
    for i, qc in enumerate(q):
      r[shift + i] -= c * qc
    r.pop()
    r = _trim(r)
  return out, r


def polygcd(p, q):
  p, q = _trim(p), _trim(q)
  while q:
    _, r = polydivmod(p, q)
    p, q = q, r
  if not p:
    return [1]
  lead = p[-1]
  return [c / lead for c in p]


def rational_roots(p) -> dict:
  """Rational roots of an exact polynomial with their multiplicities."""
  p = [Fraction(c) for c in _trim(p)]
  roots: dict = {}
  if len(p) <= 1:
    return roots
  while len(p) > 1 and p[0] == 0:
    roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
    p = p[1:]
  if len(p) <= 1:
    return roots
  den = 1
  for c in p:
    den = den * c.denominator // _gcd(den, c.denominator)
  ints = [int(c * den) for c in p]
  lead, const = abs(ints[-1]), abs(ints[0])
  for q in _divisors(lead):
    for num in _divisors(const):
      for s in (1, -1):
        cand = Fraction(s * num, q)
        if cand in roots:
          continue
        mult = 0
        while len(p) > 1 and polyval(p, cand) == 0:
          p, _ = polydivmod(p, [-cand, 1])
          p = [Fraction(c) for c in p]
          mult += 1
        if mult:
          roots[cand] = mult
  return roots


def _gcd(a, b):
  while b:
    a, b = b, a % b
  return abs(a)


def _divisors(n: int) -> list[int]:
  n = abs(n)
  if n == 0:
    return [1]
  small, large = [], []
  d = 1
  while d * d <= n:
    if n % d == 0:
      small.append(d)
      if d * d != n:
        large.append(n // d)
    d += 1
  return small + large[::-1]


def count_real_roots(p) -> int:
  """Number of distinct real roots of an exact polynomial (Sturm sequence)."""
  p = [Fraction(c) for c in _trim(p)]
  if len(p) <= 1:
    return 0
  seq = [p, polyder(p)]
  while True:
    _, r = polydivmod(seq[-2], seq[-1])
    if not r:
      break
    seq.append([-c for c in r])

  def changes(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

  at_pos = [(1 if q[-1] > 0 else -1) for q in seq if q]
  at_neg = [(1 if q[-1] > 0 else -1) * (-1) ** (len(q) - 1) for q in seq if q]
  return changes(at_neg) - changes(at_pos)


def all_roots_real(p) -> bool:
  """Exact test that every complex root of ``p`` is real."""
  p = [Fraction(c) for c in _trim(p)]
  if len(p) <= 1:
    return True
  g = polygcd(p, polyder(p))
  sqf, _ = polydivmod(p, g)
  sqf = _trim(sqf)
  return count_real_roots(sqf) == len(sqf) - 1


def spectrum_is_real(a: Matrix):
  """Whether every eigenvalue of ``a`` is real.

  Exact matrices are decided exactly.  Float matrices return ``True`` or
  ``False`` when the imaginary parts are clearly below or above the
  tolerance, and ``None`` when the test is inconclusive.
  """
  if not a:
    return True
  if _is_float(a):
    import numpy as np

    ev = np.linalg.eigvals(np.array(a, dtype=float))
    worst = float(np.max(np.abs(ev.imag))) if len(ev) else 0.0
    tol = get_tolerance()
    if worst <= tol:
      return True
    if worst > tol ** 0.5:
      return False
    return None
  return all_roots_real(charpoly(a))


def eigenvalues(a: Matrix) -> list:
  """Real eigenvalues with multiplicity.

  Exact mode returns the rational roots and raises if the characteristic
  polynomial does not split over the rationals.  Float mode uses numpy and
  clusters values within the tolerance.
  """
  if not a:
    return []
  if _is_float(a):
    import numpy as np

    ev = np.linalg.eigvals(np.array(a, dtype=float))
    tol = get_tolerance() ** 0.5
    if np.max(np.abs(ev.imag)) > tol:
      raise ValueError("matrix has non-real eigenvalues")
    return sorted(float(x) for x in ev.real)
  p = charpoly(a)
  roots = rational_roots(p)
  if sum(roots.values()) != len(a):
    from .scalars import ModeError

    raise ModeError("eigenvalues are not rational; use float mode")
  out = []
  for r, m in sorted(roots.items()):
    out.extend([r] * m)
  return out


def distinct_eigenvalues(a: Matrix) -> list:
  vals = eigenvalues(a)
  if vals and isinstance(vals[0], float):
    # numerically repeated eigenvalues scatter by about sqrt(eps)
    tol = get_tolerance() ** 0.5
    clusters: list[list[float]] = []
    for v in vals:
      if clusters and abs(v - clusters[-1][-1]) <= tol:
        clusters[-1].append(v)
      else:
        clusters.append([v])
    return [sum(c) / len(c) for c in clusters]
  out: list = []
  for v in vals:
    if not any(v == w for w in out):
      out.append(v)
  return out


def matrix_mode(a) -> str:
  return FLOAT if _is_float(a) else EXACT


def inertia(a: Matrix) -> tuple[int, int, int]:
  """``(positive, negative, zero)`` eigenvalue counts of a symmetric matrix.

  Exact mode applies Descartes' rule of signs to the characteristic
  polynomial, which is exact because its roots are all real.
  """
  if not a:
    return (0, 0, 0)
  if _is_float(a):
    import numpy as np

    ev = np.linalg.eigvalsh(np.array(a, dtype=float))
    tol = get_tolerance()
    return (int(np.sum(ev > tol)), int(np.sum(ev < -tol)), int(np.sum(np.abs(ev) <= tol)))
  p = charpoly(a)
  zero = next(i for i, c in enumerate(p) if c != 0)
  q = p[zero:]

  def changes(coeffs):
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

  pos = changes(q)
  neg = changes([c if i % 2 == 0 else -c for i, c in enumerate(q)])
  return (pos, neg, zero)
