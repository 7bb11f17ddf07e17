from __future__ import annotations

from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cat
from sasakilie.algebra import check_jacobi
from sasakilie.constructions import KahlerExactSeed, build_centreless
from sasakilie.catalog import aff_aff_kahler, catalog
from sasakilie.corpus import CORPUS, SIGN_VARIANTS, corpus_entry
from sasakilie.forms import KForm
from sasakilie.notation import (NotationError, format_form, parse_document, parse_form,
                                parse_structure_equations, print_structure_equations)
from sasakilie.scalars import FLOAT

coeff = st.fractions(-7, 7, max_denominator=6).filter(lambda x: x != 0)


@st.composite
def documents(draw):
  n = draw(st.integers(1, 11))
  keys = list(combinations(range(n), 2))
  slots = []
  for _ in range(n):
    chosen = draw(st.lists(st.sampled_from(keys), unique=True, max_size=4)) if keys else []
    slots.append({k: draw(coeff) for k in chosen})
  return n, slots


@st.composite
def one_forms(draw, n):
  idx = draw(st.lists(st.integers(0, n - 1), unique=True, min_size=1, max_size=3))
  return {(i,): draw(coeff) for i in idx}


# ---------------------------------------------------------------- examples


def test_examples():
  aff = parse_structure_equations("(0, e^{21})")
  assert aff.basis_bracket(0, 1) == (0, 1)
  assert not list(parse_structure_equations("(0,0,0)").nonzero_brackets())
  doc = corpus_entry("example_7dim_i")
  built = build_centreless(KahlerExactSeed(aff_aff_kahler(), 1))
  assert parse_structure_equations(doc.text, doc.params).equals(built.algebra)


def test_typography():
  a = parse_form(r"k (2 e^{2} +2 e ^{4}-e^{7}) e^{6}", 7, {"k": 3})
  assert a == {(1, 5): 6, (3, 5): 6, (5, 6): 3}
  assert parse_form(r"\tfrac{1}{2}e^{15} - \frac 32 e^1\wedge e^2", 5) == {(0, 4): F(1, 2),
                                                                           (0, 1): F(-3, 2)}
  assert parse_form("e^{21}", 2) == {(0, 1): -1}
  assert parse_form("e^12", 2) == {(0,): 2}  # TeX: the superscript takes one character
  assert parse_form("e^{1,10} − e^2·e^3 / 2", 10) == {(0, 9): 1, (1, 2): F(-1, 2)}
  assert parse_form("2 e^{11}", 2) == {}


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), one_forms(n),
                                                     st.integers(0, n - 1), coeff)))
def test_juxtaposition_is_wedge(data):
  n, alpha, j, c = data
  text = f"{c.numerator}/{c.denominator} ({format_form(alpha, n)}) e^{{{j + 1}}}"
  expect = (c * KForm(n, 1, alpha)).wedge(KForm(n, 1, {(j,): 1}))
  assert KForm(n, 2, parse_form(text, n)).equals(expect)


@given(documents())
def test_print_parse_roundtrip(doc):
  n, slots = doc
  text = "(" + ", ".join(format_form(s, n) for s in slots) + ")"
  assert parse_document(text) == slots
  again = "(" + ", ".join(format_form(s, n) for s in parse_document(text)) + ")"
  assert again == text


def test_print_parse_on_h5():
  L = cat("h5").algebra
  assert parse_structure_equations(print_structure_equations(L)).equals(L)


def test_float_mode():
  L = parse_structure_equations("(0, 0.5 e^{12})", mode=FLOAT)
  assert L.mode == FLOAT and L.basis_bracket(0, 1) == (0, -0.5)
  assert parse_structure_equations(print_structure_equations(L), mode=FLOAT).equals(L)


# ---------------------------------------------------------------- errors


@pytest.mark.parametrize("text,line,column", [
  ("(0, e^{12} +)", 1, 13),
  ("(0,\n  e^{12} ?)", 2, 10),
  ("(0, e^{1)", 1, 9),
  ("0, e^{12})", 1, 1),
])
def test_syntax_errors_carry_position(text, line, column):
  with pytest.raises(NotationError) as err:
    parse_structure_equations(text)
  assert (err.value.line, err.value.column) == (line, column)


def test_binding_and_range_errors():
  with pytest.raises(NotationError, match="k"):
    parse_structure_equations("(0, k e^{12})")
  with pytest.raises(NotationError):
    parse_structure_equations("(0, e^{13})")
  with pytest.raises(NotationError):
    parse_structure_equations("(0, e^{1})")


# ---------------------------------------------------------------- corpus


@pytest.mark.parametrize("doc", CORPUS, ids=lambda d: d.name)
def test_corpus_entry(doc):
  L = parse_structure_equations(doc.text, doc.params)
  assert check_jacobi(L).ok
  assert parse_structure_equations(print_structure_equations(L)).equals(L)
  if doc.catalog is not None:
    assert catalog(*doc.catalog).algebra.equals(L)


@pytest.mark.parametrize("doc", SIGN_VARIANTS, ids=lambda d: d.name)
def test_sign_variants_fail_jacobi(doc):
  L = parse_structure_equations(doc.text, doc.params, check=False)
  assert not check_jacobi(L).ok
