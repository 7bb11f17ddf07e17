"""Named examples as ready-to-use :class:`~sasakilie.bundle.Bundle` objects.

Parameters are scalars; any float parameter switches the whole example to
float mode.  Use :func:`catalog` with a name from :data:`CATALOG`.
"""
from __future__ import annotations

from fractions import Fraction

from . import linalg as la
from .algebra import LieAlgebra, direct_sum
from .bundle import Bundle
from .constructions import KahlerExactSeed, build_centreless, central_extension
from .curvature import MetricLieAlgebra
from .modification import ModificationMap, modified_algebra
from .scalars import EXACT, FLOAT, ValidationError, coerce
from .structures import HermitianData

__all__ = [
  "CATALOG",
  "abelian",
  "aff_product",
  "aff",
  "d_ab",
  "d_a_n",
  "d_a",
  "d_a_modification",
  "rotation_x2x3",
  "normal_j_6dim",
  "normal_j_8dim",
  "aff_aff_kahler",
  "heisenberg",
  "su2_family",
  "example_7dim_i",
  "example_7dim_ii",
  "null_solvmanifold_7dim",
  "h0_extension",
  "catalog",
]


def _mode(params: dict, mode: str | None) -> str:
  if mode is not None:
    return mode
  return FLOAT if any(isinstance(v, float) for v in params.values()) else EXACT


def _labels(n: int) -> tuple:
  return tuple(f"e{i + 1}" for i in range(n))


def _J_from_pairs(n: int, pairs, mode: str):
  """``J e_p = s e_q`` for ``(p, q, s)`` and ``J e_q = -e_p / s``."""
  J = [[0] * n for _ in range(n)]
  for p, q, s in pairs:
    J[q][p] = s
    J[p][q] = -1 / Fraction(s) if mode == EXACT else -1 / float(s)
  return la.as_matrix(J, mode)


def _hermitian(L: LieAlgebra, J, gram=None) -> HermitianData:
  return HermitianData(MetricLieAlgebra(L, gram), J)


def _normal_j_bundle(L: LieAlgebra, J, f, gram=None) -> Bundle:
  H = _hermitian(L, J, gram)
  return Bundle.from_hermitian(H, la.as_vector(f, L.mode))


# ---------------------------------------------------------------- Kähler


def abelian(n: int = 2, mode: str = EXACT) -> Bundle:
  """Flat ``R^n``; for even ``n`` with ``J e_i = e_(n/2+i)``."""
  n = int(n)
  L = LieAlgebra(n, {}, _labels(n), mode)
  if n % 2:
    return Bundle(L, la.as_matrix(la.identity(n), mode))
  m = n // 2
  J = _J_from_pairs(n, [(i, m + i, 1) for i in range(m)], mode)
  return Bundle.from_hermitian(_hermitian(L, J))


def aff_product(values, mode: str = EXACT) -> Bundle:
  """``aff(R)^m`` with ``[h_i, x_i] = a_i x_i`` on basis ``h1, x1, h2, x2, ...``."""
  m = len(values)
  n = 2 * m
  br = {}
  f = [0] * n
  for i, a in enumerate(values):
    a = coerce(a, mode)
    if a == 0:
      raise ValidationError("aff parameter must be non-zero")
    br[(2 * i, 2 * i + 1)] = {2 * i + 1: a}
    f[2 * i + 1] = 1 / a
  labels = tuple(lab for i in range(m) for lab in (f"h{i + 1}", f"x{i + 1}")) if m > 1 else ("e1", "e2")
  L = LieAlgebra(n, br, labels, mode)
  J = _J_from_pairs(n, [(2 * i + 1, 2 * i, 1) for i in range(m)], mode)
  return _normal_j_bundle(L, J, f)


def aff(a=1, mode: str = EXACT) -> Bundle:
  """``[e1, e2] = a e2`` with ``J e2 = e1``."""
  return aff_product([a], mode)


def d_ab(a=1, b=2, mode: str = EXACT) -> Bundle:
  return aff_product([a, b], mode)


def d_a_n(a=1, n=1, mode: str = EXACT) -> Bundle:
  """Basis ``h1, x1, u1..u2n``: ``[h1,x1] = a x1``, ``[h1,u_j] = a/2 u_j``,
  ``[u_(2i-1), u_(2i)] = a x1``; ``J x1 = h1``, ``J u_(2i) = u_(2i-1)``."""
  n = int(n)
  a = coerce(a, mode)
  dim = 2 + 2 * n
  br = {(0, 1): {1: a}}
  for j in range(2, dim):
    br[(0, j)] = {j: a / 2}
  for i in range(n):
    br[(2 + 2 * i, 3 + 2 * i)] = {1: a}
  labels = ("h1", "x1") + tuple(f"u{j + 1}" for j in range(2 * n))
  L = LieAlgebra(dim, br, labels, mode)
  J = _J_from_pairs(dim, [(1, 0, 1)] + [(3 + 2 * i, 2 + 2 * i, 1) for i in range(n)], mode)
  f = [0] * dim
  f[1] = 1 / a
  return _normal_j_bundle(L, J, f)


def d_a(a=1, c=0, mode: str = EXACT) -> Bundle:
  """``d_a`` on ``h1, x1, x2, x3``; with ``c != 0`` the modification that
  rotates ``span(x2, x3)`` at speed ``c`` along ``h1``."""
  c = coerce(c, mode)
  if c == 0:
    return _d_a_base(a, mode)
  m = d_a_modification(a, c, mode)
  base = _d_a_base(a, mode)
  return Bundle(modified_algebra(m), base.gram, J=base.J, f=base.f, parts={"base": base})


def _d_a_base(a, mode: str) -> Bundle:
  base = d_a_n(a, 1, mode)
  L = base.algebra.relabel(("h1", "x1", "x2", "x3"))
  return Bundle(L, base.gram, J=base.J, f=base.f)


def d_a_modification(a=1, c=1, mode: str = EXACT) -> ModificationMap:
  """The map ``h1 -> c D`` with ``D`` the rotation of ``span(x2, x3)``."""
  base = _d_a_base(a, mode)
  c = coerce(c, mode)
  return ModificationMap.from_covector(base.metric, (c, 0, 0, 0), rotation_x2x3(1, mode), base.J)


def rotation_x2x3(c=1, mode: str = EXACT):
  """``x2 -> c x3``, ``x3 -> -c x2`` on ``d_a``."""
  D = [[0] * 4 for _ in range(4)]
  D[3][2] = c
  D[2][3] = -c
  return la.as_matrix(D, mode)


def normal_j_6dim(mode: str = EXACT) -> Bundle:
  """Six-dimensional normal j-algebra with two distinguished roots.

  ``J e1 = e4``, ``J e2 = 2 e5``, ``J e3 = e6`` and ``f = -e^4/2 - e^5/4``;
  the inner product is the one induced by ``f``.
  """
  br = {
    (0, 2): {2: 1}, (1, 2): {2: -1},
    (0, 3): {3: 2}, (2, 5): {3: 2},
    (1, 4): {4: 2},
    (0, 5): {5: 1}, (1, 5): {5: 1}, (2, 4): {5: 1},
  }
  L = LieAlgebra(6, br, _labels(6), mode)
  J = _J_from_pairs(6, [(0, 3, 1), (1, 4, 2), (2, 5, 1)], mode)
  f = la.as_vector((0, 0, 0, Fraction(-1, 2), Fraction(-1, 4), 0), mode)
  from .normal_j import _form_gram

  return _normal_j_bundle(L, J, f, _form_gram(L, J, f))


def normal_j_8dim(a=1, b=1, mode: str = EXACT) -> Bundle:
  """Eight-dimensional normal j-algebra with ``r = 2``, ``n_12 = 2``."""
  a, b = coerce(a, mode), coerce(b, mode)
  if a == 0 or b == 0:
    raise ValidationError("parameters must be non-zero")
  h = lambda x: x / 2  # noqa: E731
  br = {
    (0, 2): {2: a}, (0, 4): {4: h(a)}, (0, 5): {5: h(a)}, (0, 6): {6: h(a)}, (0, 7): {7: h(a)},
    (1, 3): {3: b}, (1, 4): {4: -h(b)}, (1, 5): {5: -h(b)}, (1, 6): {6: h(b)}, (1, 7): {7: h(b)},
    (4, 6): {2: -a}, (5, 7): {2: -a},
    # x_2 carries the (e1-e2)/2 root spaces into the (e1+e2)/2 ones; without
    # these two brackets J is not integrable
    (3, 4): {6: b}, (3, 5): {7: b},
  }
  L = LieAlgebra(8, br, _labels(8), mode)
  J = _J_from_pairs(8, [(2, 0, 1), (3, 1, 1), (4, 6, 1), (5, 7, 1)], mode)
  f = [0] * 8
  f[2] = 1 / a
  f[3] = 1 / b
  return _normal_j_bundle(L, J, f)


def aff_aff_kahler(mode: str = EXACT) -> HermitianData:
  """``aff(R) x aff(R)`` with ``[e1,e2] = e2``, ``[e3,e4] = e4``, ``J e1 = e2``, ``J e3 = e4``."""
  L = LieAlgebra(4, {(0, 1): {1: 1}, (2, 3): {3: 1}}, _labels(4), mode)
  J = _J_from_pairs(4, [(0, 1, 1), (2, 3, 1)], mode)
  return _hermitian(L, J)


# ---------------------------------------------------------------- Sasakian


def heisenberg(n=1, mode: str = EXACT) -> Bundle:
  """``h_(2n+1)`` as the central extension of flat ``R^(2n)``."""
  flat = abelian(2 * int(n), mode)
  S = central_extension(flat.hermitian)
  return Bundle.from_contact(S, parts={"base": flat})


def _seed_bundle(seed: KahlerExactSeed, labels=None) -> Bundle:
  S = build_centreless(seed, labels=labels)
  return Bundle.from_contact(S, parts={"seed": Bundle.from_seed(seed)})


def su2_family(k=1, mode: str = EXACT) -> Bundle:
  """Three-dimensional ``[xi,u] = k v``, ``[xi,v] = -k u``, ``[u,v] = 2 xi``."""
  L0 = LieAlgebra(0, {}, (), mode)
  h1 = HermitianData(MetricLieAlgebra(L0, ()), ())
  return _seed_bundle(KahlerExactSeed(h1, k))


def example_7dim_i(k=1, mode: str = EXACT) -> Bundle:
  """Centreless Sasakian algebra over ``aff x aff`` with ``H0 = 0``."""
  h1 = aff_aff_kahler(mode)
  return _seed_bundle(KahlerExactSeed(h1, k, (0, 0, 0, 0)), _labels(7))


def example_7dim_ii(k=1, mode: str = EXACT) -> Bundle:
  """Centreless Sasakian algebra over ``aff x aff`` with ``H0 = e2``."""
  h1 = aff_aff_kahler(mode)
  return _seed_bundle(KahlerExactSeed(h1, k, (0, 1, 0, 0)), _labels(7))


def null_solvmanifold_7dim(a=1, b=1, mode: str = EXACT) -> Bundle:
  """Central extension of the flat 6-dimensional algebra with
  ``[e1,e3] = a e4``, ``[e1,e4] = -a e3``, ``[e1,e5] = b e6``, ``[e1,e6] = -b e5``."""
  a, b = coerce(a, mode), coerce(b, mode)
  br = {(0, 2): {3: a}, (0, 3): {2: -a}, (0, 4): {5: b}, (0, 5): {4: -b}}
  L = LieAlgebra(6, br, _labels(6), mode)
  J = _J_from_pairs(6, [(0, 1, 1), (2, 3, 1), (4, 5, 1)], mode)
  H = _hermitian(L, J)
  S = central_extension(H)
  return Bundle.from_contact(S, parts={"base": Bundle.from_hermitian(H)})


def h0_extension(a=1, n=1, c=None, k=1, mode: str = EXACT) -> Bundle:
  """Centreless Sasakian algebra over ``d_a^n`` (times a hyperbolic plane
  ``[h, x] = |c| x`` when ``c`` is given, Einstein constant ``-c^2``) with
  ``H0 = -a x1``."""
  base = d_a_n(a, n, mode)
  H = base.hermitian
  a = coerce(a, mode)
  if c is not None:
    c = coerce(c, mode)
    hyp = aff(abs(c), mode).hermitian
    L = direct_sum(H.algebra, hyp.algebra)
    G = _block(H.gram, hyp.gram)
    J = _block(H.J, hyp.J)
    H = _hermitian(L, J, G)
  H0 = [0] * H.dim
  H0[1] = -a
  seed = KahlerExactSeed(H, k, H0)
  return _seed_bundle(seed)


def _block(A, B):
  n, m = len(A), len(B)
  top = tuple(tuple(r) + (0,) * m for r in A)
  bot = tuple((0,) * n + tuple(r) for r in B)
  return top + bot


# ---------------------------------------------------------------- registry


def _aff_product_entry(mode=EXACT, **params):
  keys = sorted((k for k in params if k.startswith("a")), key=lambda s: int(s[1:] or 0))
  return aff_product([params[k] for k in keys], mode)


CATALOG = {
  "abelian": (abelian, ("n",)),
  "aff": (aff, ("a",)),
  "aff_product": (_aff_product_entry, ("a1", "a2", "...")),
  "h": (heisenberg, ("n",)),
  "su2_family": (su2_family, ("k",)),
  "d_ab": (d_ab, ("a", "b")),
  "d_a": (d_a, ("a", "c")),
  "d_a_n": (d_a_n, ("a", "n")),
  "normal_j_6dim": (normal_j_6dim, ()),
  "normal_j_8dim": (normal_j_8dim, ("a", "b")),
  "example_7dim_i": (example_7dim_i, ("k",)),
  "example_7dim_ii": (example_7dim_ii, ("k",)),
  "null_solvmanifold_7dim": (null_solvmanifold_7dim, ("a", "b")),
  "h0_extension": (h0_extension, ("a", "n", "c", "k")),
}

_ALIASES = {"h3": ("h", {"n": 1}), "h5": ("h", {"n": 2}), "flat": ("abelian", {})}

_INTEGER_PARAMS = {"n"}


def catalog(name: str, params: dict | None = None, mode: str | None = None, **kw) -> Bundle:
  """Assemble the named example.  Unknown names or parameters raise
  :class:`ValidationError`."""
  params = dict(params or {})
  params.update(kw)
  if name in _ALIASES:
    name, fixed = _ALIASES[name]
    params = {**fixed, **params}
  if name not in CATALOG:
    raise ValidationError(f"unknown catalog entry {name!r}; known: {sorted(CATALOG)}")
  fn, names = CATALOG[name]
  if "..." not in names:
    extra = set(params) - set(names)
    if extra:
      raise ValidationError(f"unknown parameters for {name}: {sorted(extra)}")
  for key in _INTEGER_PARAMS & set(params):
    v = params[key]
    if int(v) != v or int(v) < 0:
      raise ValidationError(f"{key} must be a non-negative integer")
    params[key] = int(v)
  md = _mode({k: v for k, v in params.items() if k not in _INTEGER_PARAMS}, mode)
  bundle = fn(mode=md, **params)
  return bundle.with_name(name, params)
