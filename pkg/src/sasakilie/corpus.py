"""Reference structure-equation documents.

Each entry pairs a document in the notation of :mod:`sasakilie.notation`
with the catalog example it describes.  ``CORPUS`` holds consistent
documents (written in the typographic style of the literature, with
juxtaposed products and ``\\tfrac``).  ``SIGN_VARIANTS`` holds documents
that differ from a corpus entry in a sign or a missing term and violate
the Jacobi identity; they guard against transcribing those variants by accident.
"""
from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CorpusDoc", "CORPUS", "SIGN_VARIANTS", "corpus_entry"]


@dataclass(frozen=True)
class CorpusDoc:
  name: str
  text: str
  params: dict = field(default_factory=dict)
  catalog: tuple | None = None  # (catalog name, catalog params)


CORPUS: tuple[CorpusDoc, ...] = (
  CorpusDoc("aff", "(0, e^{21})", catalog=("aff", {})),
  CorpusDoc("abelian3", "(0,0,0)", catalog=("abelian", {"n": 3})),
  CorpusDoc("h3", "(0, 0, -2e^{12})", catalog=("h3", {})),
  CorpusDoc("h5", "(0, 0, 0, 0, -2(e^{13}+e^{24}))", catalog=("h5", {})),
  CorpusDoc("aff_aff", r"\big(0,-e^{12},0,-e^{34}\big)"),
  CorpusDoc(
    "example_7dim_i",
    r"""\big(0,-e^{12},0,-e^{34},
  -k (2 e^{2} +2 e ^{4}-e^{7}) e^{6}, k (2 e^{2} +2 e^{4}-e^{7}) e^{5},
 -2 (e ^{12}+e^{34}+e^{56})
\big)""",
    {"k": 1}, ("example_7dim_i", {"k": 1})),
  CorpusDoc(
    "example_7dim_i_sl2",
    r"""\big(0,-e^{12},0,-e^{34},
  -k (2 e^{2} +2 e ^{4}-e^{7}) e^{6}, k (2 e^{2} +2 e^{4}-e^{7}) e^{5},
 -2 (e ^{12}+e^{34}+e^{56})
\big)""",
    {"k": -1}, ("example_7dim_i", {"k": -1})),
  CorpusDoc(
    "example_7dim_ii",
    r"""\big(0,  -e^{12}-e^{56}, 0, -e^{34},
 -k (2 e^{2} +2 e ^{4}-e^{7}) e^{6} -\tfrac{1}{2}e^{15},
 k (2 e^{2} +2 e^{4}-e^{7}) e^{5} -\tfrac{1}{2}e^{16},
 -2(e^{12}+e^{34}+e^{56})
 \big)""",
    {"k": 1}, ("example_7dim_ii", {"k": 1})),
  CorpusDoc(
    "example_7dim_ii_k3",
    r"""\big(0,  -e^{12}-e^{56}, 0, -e^{34},
 -k (2 e^{2} +2 e ^{4}-e^{7}) e^{6} -\tfrac{1}{2}e^{15},
 k (2 e^{2} +2 e^{4}-e^{7}) e^{5} -\tfrac{1}{2}e^{16},
 -2(e^{12}+e^{34}+e^{56})
 \big)""",
    {"k": 3}, ("example_7dim_ii", {"k": 3})),
  CorpusDoc(
    "normal_j_6dim",
    "(0, 0, -e^{13}+e^{23}, -2 e^{14}- 2 e^{36}, -2 e^{25}, -e^{16}-e^{26}-e^{35})",
    catalog=("normal_j_6dim", {})),
  CorpusDoc(
    "normal_j_8dim",
    r"""\big(0, 0, a(-e^{13}+e^{57}+e^{68}), -be^{24},
\tfrac{1}{2}(be^{2}-ae^{1})e^5,
\tfrac{1}{2}(be^{2}-ae^{1})e^6,
-\tfrac{1}{2}(ae^{1}+be^{2})e^7 - b e^{45},
-\tfrac{1}{2}(ae^{1}+be^{2})e^8 - b e^{46}\big)""",
    {"a": 1, "b": 2}, ("normal_j_8dim", {"a": 1, "b": 2})),
  CorpusDoc(
    "normal_j_8dim_curve_plus",
    r"""\big(0, 0, a(e^{57}+e^{68}-e^{13}), -ae^{24},
\tfrac{a}{2}(e^{25}-e^{15}),
\tfrac{a}{2}(e^{26}-e^{16}),
-\tfrac{a}{2}(e^{17}+e^{27}) - a e^{45},
-\tfrac{a}{2}(e^{18}+e^{28}) - a e^{46}\big)""",
    {"a": 3}, ("normal_j_8dim", {"a": 3, "b": 3})),
  CorpusDoc(
    "normal_j_8dim_curve_minus",
    r"""\big(0, 0, a(e^{57}+e^{68}-e^{13}), ae^{24},
-\tfrac{a}{2}(e^{25}+e^{15}),
-\tfrac{a}{2}(e^{26}+e^{16}),
-\tfrac{a}{2}(e^{17}-e^{27}) + a e^{45},
-\tfrac{a}{2}(e^{18}-e^{28}) + a e^{46}\big)""",
    {"a": 3}, ("normal_j_8dim", {"a": 3, "b": -3})),
  CorpusDoc(
    "null_solvmanifold_7dim",
    "(0, 0, a e^{14}, -a e^{13}, b e^{16}, -b e^{15}, -2(e^{12}+e^{34}+e^{56}))",
    {"a": 1, "b": 2}, ("null_solvmanifold_7dim", {"a": 1, "b": 2})),
  CorpusDoc("su2", "(-e^{23}, e^{13}, -2e^{12})", catalog=("su2_family", {"k": 1})),
  CorpusDoc("wide", r"(0,0,0,0,0,0,0,0,0, e^{1,2}+\frac 12 e^{3,4})"),
)

SIGN_VARIANTS: tuple[CorpusDoc, ...] = (
  CorpusDoc(
    "example_7dim_i",
    r"""\big(0,-e^{12},0,-e^{34},
  k (2 e^{2} +2 e ^{4}+e^{7}) e^{6}, k (2 e^{2} +2 e^{4}-e^{7}) e^{5},
 -2 (e ^{12}+e^{34}+e^{56})
\big)""",
    {"k": 1}),
  CorpusDoc(
    "example_7dim_ii",
    r"""\big(0,  -e^{12}-e^{56}, 0, -e^{34},
 -k (2 e^{2} +2 e ^{4}-e^{7}) e^{6} -\tfrac{1}{2}e^{15},
 k (2 e^{2} +2 e^{4}+e^{7}) e^{5} -\tfrac{1}{2}e^{16},
 -2(e^{12}+e^{34}+e^{56})
 \big)""",
    {"k": 1}),
  CorpusDoc(
    "normal_j_8dim",
    r"""\big(0, 0, a(-e^{13}+e^{57}+e^{68}), -be^{24},
\tfrac{1}{2}(be^{2}-ae^{1})e^5,
\tfrac{1}{2}(be^{2}-ae^{1})e^6,
\tfrac{1}{2}(be^{2}-ae^{1})e^7,
-\tfrac{1}{2}(ae^{1}+be^{2})e^8\big)""",
    {"a": 1, "b": 2}),
)


def corpus_entry(name: str) -> CorpusDoc:
  for doc in CORPUS:
    if doc.name == name:
      return doc
  raise KeyError(name)
