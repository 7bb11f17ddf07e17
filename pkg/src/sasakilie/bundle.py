"""Structure bundles: an algebra plus whatever geometric data rides on it.

A :class:`Bundle` is the common currency of the catalog, the CLI and the
JSON serializer.  Optional fields select the kind of structure:

* ``gram``                        metric Lie algebra
* ``J``                           Hermitian (Kähler) data
* ``J`` and ``f``                 normal j-algebra (or a modified one)
* ``phi``, ``xi``, ``eta``        almost contact metric structure
* ``gamma``, ``k``, ``H0`` with J seed for the centreless builder
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import cached_property

from . import linalg as la
from .algebra import LieAlgebra
from .curvature import MetricLieAlgebra
from .scalars import EXACT, ValidationError, check_mode, fmt, parse_scalar

__all__ = [
  "SCHEMA_VERSION",
  "Bundle",
  "bundle_to_dict",
  "bundle_from_dict",
  "serialize_bundle",
  "deserialize_bundle",
  "convert_bundle",
  "bundles_equal",
]

SCHEMA_VERSION = 1

_VECTOR_FIELDS = ("xi", "eta", "f", "gamma", "H0")
_MATRIX_FIELDS = ("gram", "phi", "J")


@dataclass(frozen=True)
class Bundle:
  algebra: LieAlgebra
  gram: tuple | None = None
  phi: tuple | None = None
  xi: tuple | None = None
  eta: tuple | None = None
  J: tuple | None = None
  f: tuple | None = None
  gamma: tuple | None = None
  k: object = None
  H0: tuple | None = None
  name: str = ""
  params: dict = field(default_factory=dict)
  parts: dict = field(default_factory=dict)

  @property
  def mode(self) -> str:
    return self.algebra.mode

  @property
  def dim(self) -> int:
    return self.algebra.dim

  @property
  def labels(self) -> tuple:
    return self.algebra.labels

  @property
  def kind(self) -> str:
    if self.k is not None:
      return "seed"
    if self.phi is not None:
      return "contact"
    if self.J is not None and self.f is not None:
      return "normal_j"
    if self.J is not None:
      return "hermitian"
    if self.gram is not None:
      return "metric"
    return "lie"

  @cached_property
  def metric(self) -> MetricLieAlgebra:
    return MetricLieAlgebra(self.algebra, self.gram)

  @cached_property
  def contact(self):
    from .structures import AlmostContactMetric

    if self.phi is None:
      raise ValidationError("bundle has no almost contact structure")
    return AlmostContactMetric(self.metric, self.phi, self.xi, self.eta)

  @cached_property
  def hermitian(self):
    from .structures import HermitianData

    if self.J is None:
      raise ValidationError("bundle has no complex structure")
    return HermitianData(self.metric, self.J)

  @cached_property
  def normal_j(self):
    from .normal_j import NormalJAlgebra

    if self.f is None:
      raise ValidationError("bundle has no distinguished 1-form f")
    return NormalJAlgebra(self.hermitian, self.f)

  @cached_property
  def seed(self):
    from .constructions import KahlerExactSeed

    if self.k is not None:
      return KahlerExactSeed(self.hermitian, self.k, self.H0, self.gamma)
    if "seed" in self.parts:
      return self.parts["seed"].seed
    raise ValidationError("bundle carries no seed")

  # -------------------------------------------------------------- builders

  @classmethod
  def from_contact(cls, S, **kw) -> "Bundle":
    return cls(S.algebra, S.gram, phi=S.phi, xi=S.xi, eta=S.eta, **kw)

  @classmethod
  def from_hermitian(cls, H, f=None, **kw) -> "Bundle":
    return cls(H.algebra, H.gram, J=H.J, f=None if f is None else tuple(f), **kw)

  @classmethod
  def from_seed(cls, seed, **kw) -> "Bundle":
    h1 = seed.h1
    return cls(h1.algebra, h1.gram, J=h1.J, gamma=seed.gamma, k=seed.k, H0=seed.H0, **kw)

  def with_name(self, name: str, params: dict | None = None) -> "Bundle":
    return replace(self, name=name, params=dict(params or {}))


# ---------------------------------------------------------------- JSON


def _enc(x) -> str:
  return fmt(x)


def _dec(s, mode: str):
  return parse_scalar(s, mode)


def bundle_to_dict(b: Bundle) -> dict:
  L = b.algebra
  out = {
    "schema_version": SCHEMA_VERSION,
    "kind": b.kind,
    "name": b.name,
    "params": {k: _enc(v) if not isinstance(v, str) else v for k, v in b.params.items()},
    "mode": L.mode,
    "dim": L.dim,
    "labels": list(L.labels),
    "constants": [[i + 1, j + 1, k + 1, _enc(v[k])]
                  for i, j, v in L.nonzero_brackets() for k in range(L.dim) if v[k] != 0],
  }
  for name in _MATRIX_FIELDS:
    val = getattr(b, name)
    if val is not None:
      out[name] = [[_enc(x) for x in row] for row in val]
  for name in _VECTOR_FIELDS:
    val = getattr(b, name)
    if val is not None:
      out[name] = [_enc(x) for x in val]
  if b.k is not None:
    out["k"] = _enc(b.k)
  if b.parts:
    out["parts"] = {k: bundle_to_dict(v) for k, v in b.parts.items()}
  return out


def bundle_from_dict(d: dict, check: bool = True) -> Bundle:
  try:
    version = d["schema_version"]
    if version != SCHEMA_VERSION:
      raise ValidationError(f"unsupported schema version {version}")
    mode = check_mode(d.get("mode", EXACT))
    n = int(d["dim"])
    labels = d.get("labels")
    br: dict = {}
    for entry in d.get("constants", []):
      i, j, k, val = entry
      i, j, k = int(i) - 1, int(j) - 1, int(k) - 1
      if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
        raise ValidationError(f"structure constant index out of range: {entry}")
      sgn = 1
      if i > j:
        i, j, sgn = j, i, -1
      vec = br.setdefault((i, j), [0] * n)
      vec[k] += sgn * _dec(val, mode)
    alg = LieAlgebra(n, br, labels, mode, check=check)
    kw = {}
    for name in _MATRIX_FIELDS:
      if name in d:
        kw[name] = tuple(tuple(_dec(x, mode) for x in row) for row in d[name])
    for name in _VECTOR_FIELDS:
      if name in d:
        kw[name] = tuple(_dec(x, mode) for x in d[name])
    if "k" in d:
      kw["k"] = _dec(d["k"], mode)
    params = {}
    for key, val in d.get("params", {}).items():
      try:
        params[key] = _dec(val, mode)
      except ValidationError:
        params[key] = val
    parts = {k: bundle_from_dict(v, check) for k, v in d.get("parts", {}).items()}
    return Bundle(alg, name=d.get("name", ""), params=params, parts=parts, **kw)
  except (KeyError, TypeError, ValueError) as exc:
    if isinstance(exc, ValidationError):
      raise
    raise ValidationError(f"malformed bundle: {exc}") from exc


def serialize_bundle(b: Bundle) -> str:
  return json.dumps(bundle_to_dict(b), indent=2)


def deserialize_bundle(text: str, check: bool = True) -> Bundle:
  try:
    data = json.loads(text)
  except json.JSONDecodeError as exc:
    raise ValidationError(f"invalid JSON: {exc}") from exc
  return bundle_from_dict(data, check)


def convert_bundle(b: Bundle, mode: str) -> Bundle:
  """Re-read ``b`` in another arithmetic mode (exact to float only)."""
  check_mode(mode)
  if mode == b.mode:
    return b
  if mode == EXACT:
    raise ValidationError("a float bundle cannot be converted to exact mode")

  def retag(d):
    d = dict(d, mode=mode)
    if "parts" in d:
      d["parts"] = {k: retag(v) for k, v in d["parts"].items()}
    return d

  return bundle_from_dict(retag(bundle_to_dict(b)))


def bundles_equal(a: Bundle, b: Bundle) -> bool:
  """Field-by-field equality (exact in exact mode, within tolerance in float mode)."""
  if a.mode != b.mode or a.labels != b.labels or not a.algebra.equals(b.algebra):
    return False
  for name in _MATRIX_FIELDS:
    x, y = getattr(a, name), getattr(b, name)
    if (x is None) != (y is None) or (x is not None and not la.mat_equal(x, y)):
      return False
  for name in _VECTOR_FIELDS:
    x, y = getattr(a, name), getattr(b, name)
    if (x is None) != (y is None) or (x is not None and not la.vec_equal(x, y)):
      return False
  if (a.k is None) != (b.k is None) or (a.k is not None and not la.vec_equal((a.k,), (b.k,))):
    return False
  if set(a.parts) != set(b.parts):
    return False
  return all(bundles_equal(a.parts[k], b.parts[k]) for k in a.parts)
