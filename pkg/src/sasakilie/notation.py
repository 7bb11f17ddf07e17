"""Structure-equation notation.

A Lie algebra with basis ``e_1..e_n`` and dual basis ``e^1..e^n`` is
written as the tuple ``(d e^1, ..., d e^n)``, for example ``(0, e^{21})``
for aff(R).  Since ``d e^k = -sum_{i<j} c_ij^k e^{ij}``, the coefficient
of ``e^{ij}`` in the k-th slot is ``-c_ij^k``.

Grammar (whitespace is insignificant)::

  doc     := ['\\big'] '(' expr (',' expr)* ['\\big'] ')'
  expr    := ['+'|'-'] product (('+'|'-') product)*
  product := factor (['\\wedge'|'*'|'·'|juxtaposition] factor)*
  factor  := number | param | basis | frac | '(' expr ')' | '{' expr '}'
  number  := digits ['.' digits] ['/' digits]
  basis   := 'e' '^' (digit | '{' indices '}')
  indices := digits            (one index per digit, e.g. e^{12})
           | int (',' int)*    (for indices above 9, e.g. e^{1,10})
  frac    := ('\\frac'|'\\tfrac'|'\\dfrac') arg arg
  param   := a single letter other than 'e', or a command like '\\lambda'

Products are wedge products in the exterior algebra, so the
juxtaposed style ``k (2 e^{2} + 2 e^{4} - e^{7}) e^{6}`` means the
scalar ``k`` times the 1-form in brackets wedged with ``e^6``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Mapping

from .algebra import LieAlgebra
from .forms import sort_with_sign
from .scalars import EXACT, ValidationError, check_mode, coerce

__all__ = [
  "NotationError",
  "parse_structure_equations",
  "parse_document",
  "parse_form",
  "print_structure_equations",
  "format_form",
]


class NotationError(ValidationError):
  """Syntax or binding error, with 1-based line and column."""

  def __init__(self, message: str, text: str = "", pos: int = 0):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    super().__init__(f"{message} at line {line}, column {col}")
    self.line = line
    self.column = col


# ---------------------------------------------------------------- lexer

_TOKEN = re.compile(r"""
    (?P<ws>\s+|\\[,;:!\ ]|\\quad|\\qquad|\\left|\\right|\\big|\\Big|\\bigg)
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<cmd>\\[A-Za-z]+)
  | (?P<name>[A-Za-z])
  | (?P<op>[-+*/^(){},·∧−])
""", re.VERBOSE)

_WEDGE_CMDS = {r"\wedge", r"\cdot", r"\cdotp"}
_FRAC_CMDS = {r"\frac", r"\tfrac", r"\dfrac"}


@dataclass(frozen=True)
class _Tok:
  kind: str
  text: str
  pos: int


def _lex(text: str) -> list[_Tok]:
  out = []
  pos = 0
  while pos < len(text):
    m = _TOKEN.match(text, pos)
    if m is None:
      raise NotationError(f"unexpected character {text[pos]!r}", text, pos)
    kind = m.lastgroup
    tok = m.group()
    if kind == "op":
      if tok == "−":
        tok = "-"
      elif tok in "·∧":
        tok = "*"
    elif kind == "cmd" and tok in _WEDGE_CMDS:
      kind, tok = "op", "*"
    if kind != "ws":
      out.append(_Tok(kind, tok, m.start()))
    pos = m.end()
  out.append(_Tok("end", "", len(text)))
  return out


# ---------------------------------------------------------------- exterior algebra values


def _wedge(x: dict, y: dict) -> dict:
  out: dict = {}
  for a, ca in x.items():
    for b, cb in y.items():
      s, idx = sort_with_sign(a + b)
      if s == 0:
        continue
      out[idx] = out.get(idx, 0) + s * ca * cb
  return {k: v for k, v in out.items() if v != 0}


def _add(x: dict, y: dict, sgn: int = 1) -> dict:
  out = dict(x)
  for k, v in y.items():
    out[k] = out.get(k, 0) + sgn * v
  return {k: v for k, v in out.items() if v != 0}


def _scalar_of(x: dict, text: str, pos: int):
  if any(k != () for k in x):
    raise NotationError("expected a scalar", text, pos)
  return x.get((), 0)


# ---------------------------------------------------------------- parser


class _Parser:
  def __init__(self, text: str, dim: int | None, params: Mapping, mode: str):
    self.text = text
    self.toks = _lex(text)
    self.i = 0
    self.dim = dim
    self.mode = mode
    self.params = {k: coerce(v, mode) for k, v in params.items()}

  @property
  def tok(self) -> _Tok:
    return self.toks[self.i]

  def error(self, msg: str, tok: _Tok | None = None):
    tok = tok or self.tok
    raise NotationError(msg, self.text, tok.pos)

  def accept(self, text: str) -> bool:
    if self.tok.text == text and self.tok.kind in ("op", "cmd"):
      self.i += 1
      return True
    return False

  def expect(self, text: str) -> None:
    if not self.accept(text):
      self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")

  def number(self, text: str):
    return coerce(Fraction(text), self.mode) if self.mode == EXACT else float(text)

  # doc and expressions

  def document(self) -> list[dict]:
    self.expect("(")
    comps = [self.expr()]
    while self.accept(","):
      comps.append(self.expr())
    self.expect(")")
    if self.tok.kind != "end":
      self.error("trailing input")
    return comps

  def expr(self) -> dict:
    sgn = -1 if self.accept("-") else 1
    if sgn == 1:
      self.accept("+")
    acc = _add({}, self.product(), sgn)
    while self.tok.text in ("+", "-") and self.tok.kind == "op":
      sgn = 1 if self.tok.text == "+" else -1
      self.i += 1
      acc = _add(acc, self.product(), sgn)
    return acc

  def _starts_factor(self) -> bool:
    t = self.tok
    if t.kind in ("num", "name"):
      return True
    if t.kind == "cmd":
      return True
    return t.kind == "op" and t.text in ("(", "{")

  def product(self) -> dict:
    acc = self.factor()
    while True:
      if self.accept("*"):
        acc = _wedge(acc, self.factor())
      elif self.tok.kind == "op" and self.tok.text == "/":
        tok = self.tok
        self.i += 1
        den = _scalar_of(self.factor(), self.text, tok.pos)
        if den == 0:
          self.error("division by zero", tok)
        acc = {k: v / den for k, v in acc.items()}
      elif self._starts_factor():
        acc = _wedge(acc, self.factor())
      else:
        return acc

  def factor(self) -> dict:
    t = self.tok
    if t.kind == "num":
      self.i += 1
      v = self.number(t.text)
      return {(): v} if v != 0 else {}
    if t.kind == "name":
      self.i += 1
      if t.text == "e":
        return self.basis(t)
      return self.param(t.text, t)
    if t.kind == "cmd":
      self.i += 1
      if t.text in _FRAC_CMDS:
        num = self.arg()
        tok = self.tok
        den = _scalar_of(self.arg(), self.text, tok.pos)
        if den == 0:
          self.error("division by zero", tok)
        return {k: v / den for k, v in num.items()}
      return self.param(t.text[1:], t)
    if self.accept("("):
      v = self.expr()
      self.expect(")")
      return v
    if self.accept("{"):
      v = self.expr()
      self.expect("}")
      return v
    self.error(f"unexpected {t.text or 'end of input'!r}")

  def arg(self) -> dict:
    """A TeX macro argument: a braced group or a single token."""
    t = self.tok
    if self.accept("{"):
      v = self.expr()
      self.expect("}")
      return v
    if t.kind == "num":
      # \frac 12 means 1/2: a bare argument is a single digit
      self.i += 1
      head, rest = t.text[0], t.text[1:]
      if rest:
        self.toks.insert(self.i, _Tok("num", rest, t.pos + 1))
      return {(): self.number(head)} if head != "0" else {}
    if t.kind == "name":
      self.i += 1
      return self.param(t.text, t)
    self.error("expected a macro argument")

  def param(self, name: str, tok: _Tok) -> dict:
    if name not in self.params:
      self.error(f"unbound parameter {name!r}", tok)
    v = self.params[name]
    return {(): v} if v != 0 else {}

  def basis(self, tok: _Tok) -> dict:
    self.expect("^")
    t = self.tok
    if t.kind == "num":
      # e^12 without braces: the superscript is the first digit only
      self.i += 1
      idx = [int(t.text[0])]
      if len(t.text) > 1:
        self.toks.insert(self.i, _Tok("num", t.text[1:], t.pos + 1))
    elif self.accept("{"):
      idx = self.indices()
      self.expect("}")
    else:
      self.error("expected an index after 'e^'")
    for k in idx:
      if k < 1 or (self.dim is not None and k > self.dim):
        self.error(f"index {k} out of range", tok)
    s, sorted_idx = sort_with_sign(tuple(k - 1 for k in idx))
    return {} if s == 0 else {sorted_idx: coerce(s, self.mode)}

  def indices(self) -> list[int]:
    t = self.tok
    if t.kind != "num" or "." in t.text:
      self.error("expected indices")
    self.i += 1
    if self.tok.text == ",":
      out = [int(t.text)]
      while self.accept(","):
        u = self.tok
        if u.kind != "num" or "." in u.text:
          self.error("expected an index")
        self.i += 1
        out.append(int(u.text))
      return out
    return [int(c) for c in t.text]


def parse_form(text: str, dim: int | None = None, params: Mapping | None = None,
               mode: str = EXACT) -> dict:
  """Parse one expression into ``{sorted 0-based index tuple: coeff}``."""
  check_mode(mode)
  p = _Parser(text, dim, params or {}, mode)
  v = p.expr()
  if p.tok.kind != "end":
    p.error("trailing input")
  return v


def parse_document(text: str, params: Mapping | None = None, mode: str = EXACT) -> list[dict]:
  """Parse ``(d e^1, ..., d e^n)`` into one exterior-algebra element per slot."""
  check_mode(mode)
  # the dimension is the number of slots; count them with a first pass
  comps = _Parser(text, None, params or {}, mode).document()
  n = len(comps)
  comps = _Parser(text, n, params or {}, mode).document()
  for k, c in enumerate(comps):
    if any(len(idx) != 2 for idx in c):
      raise NotationError(f"slot {k + 1} is not a 2-form", text, 0)
  return comps


def parse_structure_equations(text: str, params: Mapping | None = None, mode: str = EXACT,
                              labels=None, check: bool = True) -> LieAlgebra:
  """Build the Lie algebra whose structure equations are ``text``.

  With ``check=False`` the Jacobi identity is not enforced; callers can run
  :func:`~sasakilie.algebra.check_jacobi` themselves.
  """
  comps = parse_document(text, params, mode)
  n = len(comps)
  br: dict = {}
  for k, c in enumerate(comps):
    for (i, j), v in c.items():
      br.setdefault((i, j), {})[k] = -v
  return LieAlgebra(n, br, labels, mode, check=check)


# ---------------------------------------------------------------- printer


def _fmt_coeff(x) -> str:
  if isinstance(x, float):
    s = format(Decimal(repr(x)), "f")
    return s
  x = Fraction(x)
  return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fmt_basis(idx: tuple, n: int) -> str:
  if n <= 9:
    return "e^{" + "".join(str(i + 1) for i in idx) + "}"
  return "e^{" + ",".join(str(i + 1) for i in idx) + "}"


def format_form(terms: Mapping, n: int) -> str:
  """Render ``{index tuple: coeff}`` as a signed sum, or ``0``."""
  parts = []
  for idx in sorted(terms):
    c = terms[idx]
    if c == 0:
      continue
    neg = c < 0
    mag = -c if neg else c
    body = _fmt_basis(idx, n) if idx else _fmt_coeff(mag)
    if idx and mag != 1:
      body = f"{_fmt_coeff(mag)} {body}"
    if not parts:
      parts.append(f"-{body}" if neg else body)
    else:
      parts.append(f"- {body}" if neg else f"+ {body}")
  return " ".join(parts) if parts else "0"


def print_structure_equations(L: LieAlgebra) -> str:
  """Inverse of :func:`parse_structure_equations` on normalized documents."""
  n = L.dim
  slots: list[dict] = [{} for _ in range(n)]
  for i, j, v in L.nonzero_brackets():
    for k in range(n):
      if v[k] != 0:
        slots[k][(i, j)] = -v[k]
  return "(" + ", ".join(format_form(s, n) for s in slots) + ")"
