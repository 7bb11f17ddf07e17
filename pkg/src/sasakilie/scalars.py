"""Scalar modes.

Two arithmetic modes are supported.  In exact mode every scalar is a
:class:`fractions.Fraction` (plain ``int`` is accepted as a neutral
literal).  In float mode every scalar is a ``float`` and equality is
tested against a global absolute tolerance.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = [
  "EXACT",
  "FLOAT",
  "MODES",
  "ModeError",
  "ValidationError",
  "get_tolerance",
  "set_tolerance",
  "check_mode",
  "parse_scalar",
  "coerce",
  "mode_of",
  "is_zero",
  "equal",
  "sign",
  "exact_sqrt",
  "sqrt",
  "fmt",
]

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)

_tolerance = 1e-9


class ModeError(TypeError):
  """Raised when exact and float values are mixed."""


class ValidationError(ValueError):
  """Raised when an input object violates its invariants."""


def get_tolerance() -> float:
  return _tolerance


def set_tolerance(tol: float) -> None:
  global _tolerance
  if not tol > 0:
    raise ValueError("tolerance must be positive")
  _tolerance = float(tol)


def check_mode(mode: str) -> str:
  if mode not in MODES:
    raise ValueError(f"unknown mode {mode!r}")
  return mode


def parse_scalar(text: str | int | float | Fraction, mode: str = EXACT):
  """Read a scalar from a string like ``"-3/4"`` or ``"0.25"``."""
  if isinstance(text, str):
    text = text.strip()
    if mode == EXACT:
      try:
        return Fraction(text)
      except ValueError as exc:
        raise ValidationError(f"not a rational number: {text!r}") from exc
    try:
      return float(Fraction(text)) if "/" in text else float(text)
    except ValueError as exc:
      raise ValidationError(f"not a number: {text!r}") from exc
  return coerce(text, mode)


def coerce(x, mode: str):
  """Convert ``x`` into the scalar type of ``mode``.

  Floats are refused in exact mode.  Rationals are promoted in float mode.
  """
  if mode == EXACT:
    if isinstance(x, bool):
      raise ModeError("booleans are not scalars")
    if isinstance(x, Fraction):
      return x
    if isinstance(x, int):
      return Fraction(x)
    if isinstance(x, Rational):
      return Fraction(x.numerator, x.denominator)
    raise ModeError(f"float value {x!r} in exact mode")
  if mode == FLOAT:
    if isinstance(x, (int, float, Fraction)) and not isinstance(x, bool):
      return float(x)
    try:
      return float(x)
    except TypeError as exc:
      raise ModeError(f"cannot use {x!r} as a float") from exc
  raise ValueError(f"unknown mode {mode!r}")


def mode_of(values) -> str:
  """Infer the mode of an iterable of scalars (floats win, ints are neutral)."""
  for v in values:
    if isinstance(v, float):
      return FLOAT
  return EXACT


def is_zero(x) -> bool:
  if isinstance(x, float):
    return abs(x) <= _tolerance
  return x == 0


def equal(x, y) -> bool:
  return is_zero(x - y)


def sign(x) -> int:
  if is_zero(x):
    return 0
  return 1 if x > 0 else -1


def exact_sqrt(q):
  """Square root of a non-negative rational when it is rational, else ``None``."""
  q = Fraction(q)
  if q < 0:
    return None
  num, den = q.numerator, q.denominator
  rn, rd = math.isqrt(num), math.isqrt(den)
  if rn * rn == num and rd * rd == den:
    return Fraction(rn, rd)
  return None


def sqrt(x):
  """Square root in the mode of ``x``; raises in exact mode if irrational."""
  if isinstance(x, float):
    return math.sqrt(x)
  r = exact_sqrt(x)
  if r is None:
    raise ModeError(f"sqrt({x}) is irrational; use float mode")
  return r


def fmt(x) -> str:
  """Render a scalar as text (``p/q`` in exact mode)."""
  if isinstance(x, float):
    return repr(x)
  x = Fraction(x)
  return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
