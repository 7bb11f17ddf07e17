"""The reference verification suite.

Each ``check_*`` function recomputes one family of facts from scratch and
returns a :class:`CriterionResult`.  :func:`run_all` runs them in order of
their identifier; ``sasakilie verify-paper`` prints the results.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .algebra import centre, change_basis, classify, killing_form
from .bundle import Bundle
from .catalog import catalog, d_a_modification
from .constructions import (build_centreless, central_extension, kahler_reduction,
                            lattice_integrality, split_by_reeb)
from .corpus import CORPUS, SIGN_VARIANTS
from .curvature import curvature_identities, einstein_check, eta_einstein_check
from .forms import basis_forms, ce_differential
from .linalg import Subspace
from .modification import invariance_report
from .normal_j import (datri_einstein, eta_einstein_obstruction, h0_candidates, root_decomposition,
                       root_invariants)
from .notation import parse_structure_equations, print_structure_equations
from .scalars import is_zero
from .structures import check_sasakian, sasaki_identities

__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_all", "random_metric_bundles", "check_d_squared"]


@dataclass
class CriterionResult:
  id: int
  title: str
  ok: bool
  details: list = field(default_factory=list)
  seconds: float = 0.0

  def line(self) -> str:
    status = "PASS" if self.ok else "FAIL"
    return f"[{status}] {self.id:2d}. {self.title} ({self.seconds:.2f}s)"


class _Checker:
  """Collects named sub-checks; the criterion passes when all of them do."""

  def __init__(self):
    self.details: list[tuple[str, bool, str]] = []

  def __call__(self, name: str, ok, info="") -> bool:
    self.details.append((name, bool(ok), str(info)))
    return bool(ok)

  @property
  def ok(self) -> bool:
    return bool(self.details) and all(ok for _, ok, _ in self.details)


# ---------------------------------------------------------------- 1-3: centre


_SASAKIAN_CASES = (
  ("h3", {}),
  ("h5", {}),
  ("example_7dim_i", {"k": 1}),
  ("example_7dim_i", {"k": -1}),
  ("example_7dim_ii", {"k": 1}),
  ("example_7dim_ii", {"k": 3}),
  ("null_solvmanifold_7dim", {"a": 1, "b": 1}),
  ("null_solvmanifold_7dim", {"a": 2, "b": 3}),
)


def check_sasaki_identities(chk: _Checker) -> None:
  for name, params in _SASAKIAN_CASES:
    S = catalog(name, params).contact
    chk(f"{name}{params} sasakian", check_sasakian(S).ok)
    rep = sasaki_identities(S)
    chk(f"{name}{params} identities", rep.ok, rep.failures())


def check_extension_ricci(chk: _Checker) -> None:
  for name, params in (("h3", {}), ("h5", {}), ("null_solvmanifold_7dim", {"a": 1, "b": 2})):
    B = catalog(name, params)
    H = B.parts["base"].hermitian
    S = central_extension(H)
    m = H.dim
    Rg = S.metric.ricci_matrix
    Rh = H.metric.ricci_matrix
    ok = all(Rg[i][j] == Rh[i][j] - 2 * H.gram[i][j] for i in range(m) for j in range(m))
    chk(f"{name} Ric_g = Ric_h - 2g on h", ok)
    chk(f"{name} matches catalog", S.algebra.equals(B.algebra))


def check_null_type(chk: _Checker) -> None:
  for name, params in (("h5", {}), ("null_solvmanifold_7dim", {"a": 1, "b": 1}),
                       ("null_solvmanifold_7dim", {"a": 3, "b": 2})):
    S = catalog(name, params).contact
    ee = eta_einstein_check(S)
    n = S.n
    chk(f"{name}{params} eta-Einstein", ee is not None)
    if ee is not None:
      chk(f"{name}{params} lambda = -2", ee.lam == -2, ee.lam)
      chk(f"{name}{params} null", ee.kind == "null", ee.kind)
      chk(f"{name}{params} scalar = -2n", ee.scalar == -2 * n, ee.scalar)


# ---------------------------------------------------------------- 4-6: Ricci of d_a^n and H0 != 0


def check_da_n_ricci(chk: _Checker) -> None:
  for a, n in ((1, 1), (1, 2), (2, 1), (3, 3)):
    M = catalog("d_a_n", {"a": a, "n": n}).metric
    expect = -Fraction(a) ** 2 * (Fraction(n, 2) + 1)
    c = einstein_check(M)
    chk(f"d_a^n a={a} n={n}", c == expect, f"{c} vs {expect}")


def check_negative_family(chk: _Checker) -> None:
  c = -math.sqrt(2.0)
  chk("c^2 = a^2 (n+3) / 2", abs(c * c - 0.5 * 1 * (1 + 3)) < 1e-12)
  S = catalog("h0_extension", {"a": 1.0, "n": 1, "c": c}).contact
  ee = eta_einstein_check(S)
  chk("eta-Einstein at c = -sqrt 2", ee is not None)
  if ee is not None:
    chk("lambda = -4", abs(ee.lam + 4) <= 1e-9, ee.lam)
    chk("negative class", ee.kind == "negative", ee.kind)
  for delta in (1e-3, -1e-3):
    Sp = catalog("h0_extension", {"a": 1.0, "n": 1, "c": c + delta}).contact
    chk(f"perturbed by {delta:+g} is not eta-Einstein", eta_einstein_check(Sp) is None)


_H0_CASES = (
  ("h0_extension", {"a": 1, "n": 1}),
  ("h0_extension", {"a": 2, "n": 2}),
  ("h0_extension", {"a": 1, "n": 2}),
  ("h0_extension", {"a": 3, "n": 1, "k": 2}),
  ("h0_extension", {"a": 1.0, "n": 1, "c": -math.sqrt(2.0)}),
  ("example_7dim_ii", {"k": 1}),
  ("example_7dim_ii", {"k": -2}),
)


def lambda_formula(B: Bundle):
  """``tr ad_{J H0} / 2 - |H0|^2 - 2`` computed on the seed."""
  seed = B.seed
  h1 = seed.h1
  JH0 = h1.apply_J(seed.H0)
  return la.trace(h1.algebra.ad(JH0)) / 2 - h1.metric.inner(seed.H0, seed.H0) - 2


def check_lambda_formula(chk: _Checker) -> None:
  hits = 0
  for name, params in _H0_CASES:
    B = catalog(name, params)
    if la.is_zero_vector(B.seed.H0):
      continue
    ee = eta_einstein_check(B.contact)
    if ee is None:
      continue
    hits += 1
    lam = lambda_formula(B)
    chk(f"{name}{params}", is_zero(ee.lam - lam), f"{ee.lam} vs {lam}")
  chk("at least one eta-Einstein case with H0 != 0", hits >= 3, hits)


# ---------------------------------------------------------------- 7: solvability


def check_solvability(chk: _Checker) -> None:
  for k, expect in ((1, (0, 3, 0)), (-1, (2, 1, 0)), (2, (0, 3, 0)), (-3, (2, 1, 0))):
    B = catalog("example_7dim_i", {"k": k})
    L = B.algebra
    chk(f"7dim i k={k} not solvable", not classify(L).solvable)
    # Killing form of g restricted to the simple factor span(u, v, xi)
    K = killing_form(L)
    sub = tuple(tuple(K[i][j] for j in (4, 5, 6)) for i in (4, 5, 6))
    chk(f"7dim i k={k} inertia {expect}", la.inertia(sub) == expect, la.inertia(sub))
  for k in (1, -1, 3):
    chk(f"7dim ii k={k} solvable", classify(catalog("example_7dim_ii", {"k": k}).algebra).solvable)


# ---------------------------------------------------------------- 8-10: normal j-algebras


def check_root_data(chk: _Checker) -> None:
  N = catalog("normal_j_6dim").normal_j
  R = root_decomposition(N)
  eps = sorted(tuple(r.covector) for r in R.epsilons)
  chk("6dim r = 2", R.r == 2)
  chk("6dim eps = 2e^1, 2e^2", eps == sorted([(0, 2, 0, 0, 0, 0), (2, 0, 0, 0, 0, 0)]), eps)
  chk("6dim invariants", root_invariants(N, R).ok)
  for a, b in ((1, 2), (1, 1), (3, -1)):
    N = catalog("d_ab", {"a": a, "b": b}).normal_j
    R = root_decomposition(N)
    chk(f"d_ab({a},{b}) two distinguished roots only",
        R.r == 2 and all(r.kind == "full" for r in R.roots), R.signature())
    chk(f"d_ab({a},{b}) invariants", root_invariants(N, R).ok)
  for a, n in ((1, 1), (2, 2), (1, 3)):
    N = catalog("d_a_n", {"a": a, "n": n}).normal_j
    R = root_decomposition(N)
    chk(f"d_a^n a={a} n={n}: r = 1, n1 = 2n", R.r == 1 and R.n_half == (2 * n,), R.signature())
    chk(f"d_a^n a={a} n={n} invariants", root_invariants(N, R).ok)


def check_einstein_criterion(chk: _Checker) -> None:
  for name, params in (("aff", {"a": 1}), ("aff", {"a": 3}), ("d_a", {"a": 2}),
                       ("d_a_n", {"a": 1, "n": 2}), ("d_a_n", {"a": 3, "n": 1})):
    N = catalog(name, params).normal_j
    res = datri_einstein(N)
    chk(f"{name}{params} dim a = 1 Einstein", bool(res), res.ratios)
    c = einstein_check(N.metric)
    chk(f"{name}{params} Ric = -C g", c is not None and is_zero(c + res.constant), c)
  for (a, b), expect in (((1, 1), True), ((1, -1), True), ((1, 2), False), ((2, -2), True)):
    N = catalog("normal_j_8dim", {"a": a, "b": b}).normal_j
    res = datri_einstein(N)
    chk(f"8dim ({a},{b}) Einstein = {expect}", bool(res) == expect, res.ratios)
    chk(f"8dim ({a},{b}) agrees with Ricci", (einstein_check(N.metric) is not None) == expect)
  for vals, expect in (((1, 1, 1), True), ((2, 2, 2), True), ((1, 1, 2), False), ((1, 2, 3), False)):
    params = {f"a{i + 1}": v for i, v in enumerate(vals)}
    N = catalog("aff_product", params).normal_j
    res = datri_einstein(N)
    chk(f"aff^3 {vals} Einstein = {expect}", bool(res) == expect, res.ratios)


def check_h0_obstruction(chk: _Checker) -> None:
  for a, b in ((1, 2), (2, 3), (1, -1)):
    B = catalog("d_ab", {"a": a, "b": b})
    cands = h0_candidates(B.normal_j)
    expect = {(0, -a, 0, 0), (0, 0, 0, -b)}
    got = {tuple(c) for c in cands}
    chk(f"d_ab({a},{b}) H0 candidates", got == expect, got)
  for a, b in ((1, 1), (1, -1), (1, 2)):
    N = catalog("normal_j_8dim", {"a": a, "b": b}).normal_j
    R = root_decomposition(N)
    chk(f"8dim ({a},{b}) n12 = 2", R.n_mixed == {(0, 1): 2}, R.n_mixed)
    chk(f"8dim ({a},{b}) i = 2 obstructed", eta_einstein_obstruction(N, 1, R))
    chk(f"8dim ({a},{b}) i = 1 not obstructed", not eta_einstein_obstruction(N, 0, R))


# ---------------------------------------------------------------- 11-12


def check_modification_invariance(chk: _Checker) -> None:
  for c in (1, 2, -1, Fraction(1, 2), Fraction(-7, 3)):
    m = d_a_modification(1, c)
    B = catalog("d_a", {"a": 1, "c": c})
    rep = invariance_report(m, B.f)
    chk(f"c={c}", rep.ok, rep.failures())
    chk(f"c={c} changes the bracket", not B.algebra.equals(B.parts["base"].algebra))


def check_lattice(chk: _Checker) -> None:
  r = lattice_integrality(1, 1, 1)
  chk("a = b = pi/2, t = 1 integer", r.integer and r.exact)
  chk("a = b = pi/2, t = 4 integer", lattice_integrality(1, 1, 4).integer)
  chk("a = pi/3 not integer", not lattice_integrality(Fraction(2, 3), 1, 1).integer)
  chk("a = pi/3 float fallback", not lattice_integrality(Fraction(2, 3), 1, 1).exact)


# ---------------------------------------------------------------- 13: roundtrips


def check_roundtrips(chk: _Checker) -> None:
  for doc in CORPUS:
    L = parse_structure_equations(doc.text, doc.params)
    again = parse_structure_equations(print_structure_equations(L))
    chk(f"corpus {doc.name} parse/print", again.equals(L))
    if doc.catalog is not None:
      chk(f"corpus {doc.name} = catalog", catalog(*doc.catalog).algebra.equals(L))
  for doc in SIGN_VARIANTS:
    from .algebra import check_jacobi

    rep = check_jacobi(parse_structure_equations(doc.text, doc.params, check=False))
    chk(f"sign variant {doc.name} rejected", not rep.ok, rep.witness)
  for name, params in (("example_7dim_i", {"k": 1}), ("example_7dim_i", {"k": -1}),
                       ("example_7dim_ii", {"k": 1}), ("example_7dim_ii", {"k": 2}),
                       ("su2_family", {"k": 1}), ("su2_family", {"k": -1}),
                       ("su2_family", {"k": 3})):
    S = catalog(name, params).contact
    sp = split_by_reeb(S)
    chk(f"{name}{params} split", sp.ok, sp.reason)
    if not sp.ok:
      continue
    rebuilt = build_centreless(sp.seed)
    P = la.transpose(tuple(sp.basis))
    chk(f"{name}{params} rebuild", change_basis(S.algebra, P).equals(rebuilt.algebra))
  S = catalog("h5").contact
  H = kahler_reduction(S)
  S2 = central_extension(H)
  chk("h5 reduction/extension", S2.algebra.equals(S.algebra) and la.mat_equal(S2.phi, S.phi)
      and la.mat_equal(S2.gram, S.gram))
  chk("h5 centre is R xi", centre(S.algebra) == Subspace.span([S.xi], S.dim))


# ---------------------------------------------------------------- 14: properties


_RANDOM_FAMILIES = (
  ("aff", ("a",)),
  ("d_ab", ("a", "b")),
  ("d_a", ("a", "c")),
  ("d_a_n", ("a",)),
  ("normal_j_8dim", ("a", "b")),
  ("h", ()),
  ("su2_family", ("k",)),
  ("example_7dim_i", ("k",)),
  ("example_7dim_ii", ("k",)),
  ("null_solvmanifold_7dim", ("a", "b")),
  ("h0_extension", ("a", "k")),
  ("normal_j_6dim", ()),
)


def random_metric_bundles(count: int = 200, seed: int = 20240601) -> list[Bundle]:
  """Catalog bundles with randomly perturbed non-zero rational parameters."""
  rng = random.Random(seed)
  out = []
  for i in range(count):
    name, keys = _RANDOM_FAMILIES[i % len(_RANDOM_FAMILIES)]
    params = {}
    for key in keys:
      v = Fraction(rng.randint(1, 9), rng.randint(1, 5)) * rng.choice((1, -1))
      params[key] = v
    if name == "d_a_n":
      params["n"] = rng.randint(1, 2)
    if name == "h":
      params["n"] = rng.randint(1, 3)
    if name == "h0_extension":
      params["n"] = 1
    out.append(catalog(name, params))
  return out


def check_d_squared(L, max_degree: int = 3) -> bool:
  for k in range(min(max_degree, L.dim - 2) + 1):
    for form in basis_forms(L.dim, k, L.mode):
      if not ce_differential(L, ce_differential(L, form)).is_zero():
        return False
  return True


def check_properties(chk: _Checker, count: int = 200) -> None:
  bad: dict[str, list] = {}
  for B in random_metric_bundles(count):
    ids = curvature_identities(B.metric)
    ids["d_squared"] = check_d_squared(B.algebra, 2 if B.dim > 6 else 3)
    for key, ok in ids.items():
      if not ok:
        bad.setdefault(key, []).append(f"{B.name}{B.params}")
  for key in ("torsion_free", "metric_compatible", "skew_xy", "skew_zw", "pair_symmetry",
              "first_bianchi", "ricci_symmetric", "d_squared"):
    chk(f"{count} algebras: {key}", key not in bad, bad.get(key, [])[:3])


# ---------------------------------------------------------------- registry


CRITERIA = (
  (1, "Sasaki identities on catalog Sasakian bundles", check_sasaki_identities),
  (2, "Central extension: Ric_g = Ric_h - 2<,>", check_extension_ricci),
  (3, "Null type: lambda = -2, scalar = -2n", check_null_type),
  (4, "d_a^n Ricci = -a^2 (n/2 + 1) g", check_da_n_ricci),
  (5, "Negative family at c = -sqrt 2: lambda = -4", check_negative_family),
  (6, "lambda = tr ad_JH0 / 2 - |H0|^2 - 2", check_lambda_formula),
  (7, "Solvability dichotomy of the 7-dimensional examples", check_solvability),
  (8, "Root data of normal j-algebras", check_root_data),
  (9, "D'Atri Einstein criterion", check_einstein_criterion),
  (10, "H0 candidates and the n_12 obstruction", check_h0_obstruction),
  (11, "Modification invariance on modified d_a", check_modification_invariance),
  (12, "Lattice integrality of exp(t ad_e1)", check_lattice),
  (13, "Roundtrips: notation, Reeb split, reduction", check_roundtrips),
  (14, "Property suite on 200 random metric algebras", check_properties),
)


def run_criterion(cid: int) -> CriterionResult:
  for i, title, fn in CRITERIA:
    if i == cid:
      chk = _Checker()
      t0 = time.perf_counter()
      try:
        fn(chk)
      except Exception as exc:  # a crash is a failure of that criterion only
        chk("raised", False, f"{type(exc).__name__}: {exc}")
      return CriterionResult(i, title, chk.ok, chk.details, time.perf_counter() - t0)
  raise KeyError(cid)


def run_all(ids=None) -> list[CriterionResult]:
  ids = sorted(ids) if ids else [i for i, _, _ in CRITERIA]
  return [run_criterion(i) for i in ids]
