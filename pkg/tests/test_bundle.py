from __future__ import annotations

import json

import pytest

from conftest import cat
from sasakilie import linalg as la
from sasakilie.bundle import (bundle_to_dict, bundles_equal, convert_bundle, deserialize_bundle,
                              serialize_bundle)
from sasakilie.catalog import catalog
from sasakilie.scalars import EXACT, FLOAT, ValidationError

ALL = [("h5", {}), ("example_7dim_ii", {"k": 2}), ("su2_family", {"k": -1}),
       ("normal_j_8dim", {"a": 1, "b": 2}), ("abelian", {"n": 4}), ("d_a", {"a": 1, "c": 3}),
       ("h0_extension", {"a": 1, "n": 1})]


@pytest.mark.parametrize("name,params", ALL)
def test_exact_roundtrip_is_bit_exact(name, params):
  b = cat(name, **params)
  text = serialize_bundle(b)
  again = deserialize_bundle(text)
  assert bundles_equal(b, again)
  assert serialize_bundle(again) == text
  assert set(again.parts) == set(b.parts)


def test_contact_fields_survive():
  b = cat("example_7dim_i", k=1)
  again = deserialize_bundle(serialize_bundle(b))
  for name in ("gram", "phi", "xi", "eta"):
    assert getattr(again, name) == getattr(b, name)
  assert again.seed.k == 1


def test_float_roundtrip_within_tolerance():
  b = catalog("h0_extension", {"a": 1.0, "n": 1, "c": -(2 ** 0.5)})
  assert b.mode == FLOAT
  again = deserialize_bundle(serialize_bundle(b))
  assert bundles_equal(b, again)
  assert all(abs(x - y) <= 1e-9 for r, s in zip(b.gram, again.gram) for x, y in zip(r, s))


def test_convert_to_float():
  b = cat("h5")
  f = convert_bundle(b, FLOAT)
  assert f.mode == FLOAT and f.parts["base"].mode == FLOAT
  assert la.mat_equal(f.gram, tuple(tuple(float(x) for x in r) for r in b.gram))
  with pytest.raises(ValidationError):
    convert_bundle(f, EXACT)


def test_schema_fields():
  d = bundle_to_dict(cat("h3"))
  assert d["schema_version"] and d["mode"] == EXACT and d["dim"] == 3
  assert d["constants"] == [[1, 2, 3, "2"]]
  assert d["labels"] == ["e1", "e2", "xi"]


@pytest.mark.parametrize("mutate", [
  lambda d: d.pop("dim"),
  lambda d: d.update(schema_version=99),
  lambda d: d.update(constants=[[1, 2, 9, "1"]]),
  lambda d: d.update(constants=[[1, 2, 3, "x"]]),
  lambda d: d.update(mode="symbolic"),
])
def test_malformed_documents(mutate):
  d = bundle_to_dict(cat("h3"))
  mutate(d)
  with pytest.raises(ValidationError):
    deserialize_bundle(json.dumps(d))


def test_invalid_json():
  with pytest.raises(ValidationError):
    deserialize_bundle("{not json")


def test_jacobi_is_enforced_on_load():
  d = bundle_to_dict(cat("h5"))
  d["constants"].append([1, 3, 4, "1"])
  with pytest.raises(ValidationError):
    deserialize_bundle(json.dumps(d))
  assert deserialize_bundle(json.dumps(d), check=False).dim == 5
