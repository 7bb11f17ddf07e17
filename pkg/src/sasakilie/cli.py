"""Command-line interface.

Bundles are JSON documents (see :mod:`sasakilie.bundle`).  Wherever a
bundle is expected one may also write ``catalog:NAME`` or
``catalog:NAME:key=value,key=value`` to use a catalog example directly,
or ``-`` to read JSON from standard input.

Exit codes: 0 pass, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import linalg as la
from .algebra import check_jacobi
from .bundle import Bundle, bundle_to_dict, convert_bundle, deserialize_bundle
from .catalog import CATALOG, catalog
from .constructions import build_centreless, central_extension, lattice_integrality, split_by_reeb
from .curvature import einstein_check, eta_einstein_check, scalar_curvature
from .modification import (ManualSeedRequired, ModificationMap, check_modification, invariance_report,
                           modification_slice, modified_algebra)
from .normal_j import (datri_einstein, derivations, h0_candidates, root_decomposition, root_invariants,
                       unitary_derivations)
from .notation import parse_structure_equations
from .scalars import EXACT, FLOAT, ModeError, ValidationError, coerce, fmt, set_tolerance
from .structures import Report, check_kahler, check_sasakian, sasaki_identities

__all__ = ["main", "build_parser", "load_bundle"]

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
  pass


# ---------------------------------------------------------------- helpers


def _parse_params(items) -> dict:
  out = {}
  for item in items or []:
    for part in item.split(","):
      if not part.strip():
        continue
      if "=" not in part:
        raise InputError(f"parameter {part!r} is not of the form name=value")
      key, val = part.split("=", 1)
      out[key.strip()] = _number(val.strip())
  return out


def _number(text: str):
  """Rationals stay exact; anything with a decimal point or exponent is a float."""
  try:
    return Fraction(text) if not any(ch in text for ch in ".eE") else float(text)
  except ValueError:
    try:
      return float(text)
    except ValueError as exc:
      raise InputError(f"not a number: {text!r}") from exc


def load_bundle(spec: str, mode: str | None = None) -> Bundle:
  if spec.startswith("catalog:"):
    _, _, rest = spec.partition(":")
    name, _, params = rest.partition(":")
    b = catalog(name, _parse_params([params]), mode)
  else:
    try:
      text = sys.stdin.read() if spec == "-" else open(spec, encoding="utf-8").read()
    except OSError as exc:
      raise InputError(f"cannot read {spec}: {exc}") from exc
    b = deserialize_bundle(text)
  if mode is not None and mode != b.mode:
    b = convert_bundle(b, mode)
  return b


def _fmt_matrix(m) -> list:
  return [[fmt(x) for x in row] for row in m]


def _fmt_vec(v) -> list:
  return [fmt(x) for x in v]


def _show(x) -> str:
  """Short display form; JSON output keeps full precision."""
  return f"{x:.6g}" if isinstance(x, float) else fmt(x)


class _Out:
  """Collects human lines and a JSON payload; prints one of them."""

  def __init__(self, as_json: bool):
    self.as_json = as_json
    self.lines: list[str] = []
    self.data: dict = {}

  def line(self, text: str = "") -> None:
    self.lines.append(text)

  def report(self, key: str, rep: Report) -> bool:
    self.data[key] = rep.as_dict()
    self.lines.append(str(rep))
    return rep.ok

  def emit(self) -> None:
    if self.as_json:
      print(json.dumps(self.data, indent=2, default=str))
    else:
      print("\n".join(self.lines))


def _emit_bundle(b: Bundle, path: str | None) -> None:
  text = json.dumps(bundle_to_dict(b), indent=2)
  if path:
    with open(path, "w", encoding="utf-8") as fh:
      fh.write(text + "\n")
  else:
    print(text)


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
  b = load_bundle(args.bundle, args.mode)
  out = _Out(args.json)
  ok = True
  jac = check_jacobi(b.algebra)
  out.data["jacobi"] = {"ok": jac.ok, "witness": jac.witness}
  out.line(f"jacobi: {'PASS' if jac.ok else 'FAIL'}" + ("" if jac.ok else f" at {jac.witness}"))
  ok &= jac.ok
  if jac.ok and b.kind == "contact":
    S = b.contact
    rep = check_sasakian(S)
    ok &= out.report("sasakian", rep)
    if rep.ok:
      ok &= out.report("sasaki_identities", sasaki_identities(S))
  if jac.ok and b.J is not None and b.kind != "contact":
    ok &= out.report("kahler", check_kahler(b.hermitian))
    if b.f is not None:
      from .normal_j import NormalJAlgebra

      ok &= out.report("normal_j", NormalJAlgebra(b.hermitian, b.f, check=False).report())
  out.data["ok"] = bool(ok)
  out.emit()
  return EXIT_OK if ok else EXIT_FAIL


def cmd_curvature(args) -> int:
  b = load_bundle(args.bundle, args.mode)
  M = b.metric
  out = _Out(args.json)
  ric = M.ricci_matrix
  scal = scalar_curvature(M)
  c = einstein_check(M)
  out.data.update(ricci=_fmt_matrix(ric), scalar=fmt(scal), einstein=None if c is None else fmt(c))
  out.line("Ricci:")
  for row in ric:
    out.line("  " + " ".join(f"{_show(x):>8}" for x in row))
  out.line(f"scalar curvature: {fmt(scal)}")
  out.line(f"Einstein: {'no' if c is None else 'Ric = ' + fmt(c) + ' g'}")
  if b.kind == "contact":
    S = b.contact
    if check_sasakian(S).ok:
      ee = eta_einstein_check(S)
      if ee is None:
        out.data["eta_einstein"] = None
        out.line("eta-Einstein: no")
      else:
        out.data["eta_einstein"] = {"lambda": fmt(ee.lam), "class": ee.kind}
        out.line(f"eta-Einstein: lambda = {fmt(ee.lam)} ({ee.kind})")
    else:
      out.data["eta_einstein"] = None
      out.line("eta-Einstein: structure is not Sasakian")
  out.emit()
  return EXIT_OK


def cmd_extend(args) -> int:
  b = load_bundle(args.bundle, args.mode)
  if b.J is None:
    raise InputError("extend needs a bundle with a complex structure J")
  rep = check_kahler(b.hermitian)
  if not rep.ok:
    print(str(rep), file=sys.stderr)
    return EXIT_FAIL
  S = central_extension(b.hermitian)
  _emit_bundle(Bundle.from_contact(S, name=f"{b.name}+xi" if b.name else "", parts={"base": b}),
               args.output)
  return EXIT_OK


def cmd_build(args) -> int:
  b = load_bundle(args.bundle, args.mode)
  if b.kind != "seed":
    raise InputError("build needs a seed bundle (fields J, k and optionally H0, gamma)")
  seed = b.seed
  rep = seed.validate()
  if not rep.ok:
    print(str(rep), file=sys.stderr)
    return EXIT_FAIL
  S = build_centreless(seed)
  _emit_bundle(Bundle.from_contact(S, parts={"seed": b}), args.output)
  return EXIT_OK


def cmd_split(args) -> int:
  b = load_bundle(args.bundle, args.mode)
  sp = split_by_reeb(b.contact)
  if not sp.ok:
    print(f"cannot split: {sp.reason}", file=sys.stderr)
    return EXIT_FAIL
  _emit_bundle(Bundle.from_seed(sp.seed), args.output)
  return EXIT_OK


def cmd_roots(args) -> int:
  b = load_bundle(args.bundle, args.mode)
  N = b.normal_j
  R = root_decomposition(N)
  out = _Out(args.json)
  inv = root_invariants(N, R)
  d = datri_einstein(N, R)
  cands = h0_candidates(N, R)
  out.data.update(
    r=R.r,
    roots=[{"kind": rt.kind, "indices": list(rt.indices), "covector": _fmt_vec(rt.covector),
            "dim": rt.dim} for rt in R.roots],
    n_half=list(R.n_half),
    n_mixed={f"{i + 1},{j + 1}": v for (i, j), v in R.n_mixed.items()},
    datri=None if d.constant is None else fmt(d.constant),
    h0_candidates=[_fmt_vec(v) for v in cands],
  )
  out.line(f"rank r = {R.r}")
  for rt in R.roots:
    idx = ",".join(str(i + 1) for i in rt.indices)
    out.line(f"  {rt.kind:5s} ({idx}) dim {rt.dim}: {' '.join(_fmt_vec(rt.covector))}")
  out.line(f"n_i = {list(R.n_half)}, n_ij = "
           + str({f"{i + 1}{j + 1}": v for (i, j), v in R.n_mixed.items()}))
  out.line("Einstein (D'Atri): " + ("no" if d.constant is None else f"Ric = -{fmt(d.constant)} g"))
  out.line("H0 candidates: " + "; ".join(" ".join(_fmt_vec(v)) for v in cands))
  ok = out.report("invariants", inv)
  out.emit()
  return EXIT_OK if ok else EXIT_FAIL


def cmd_derivations(args) -> int:
  b = load_bundle(args.bundle, args.mode)
  out = _Out(args.json)
  ders = derivations(b.algebra)
  out.data["derivations"] = [_fmt_matrix(D) for D in ders]
  out.line(f"dim Der = {len(ders)}")
  if b.J is not None:
    u = unitary_derivations(b.hermitian)
    out.data["unitary"] = [_fmt_matrix(D) for D in u]
    out.line(f"dim Der_u = {len(u)}")
    for D in u:
      out.line("  " + "; ".join(" ".join(_fmt_vec(r)) for r in D))
  out.emit()
  return EXIT_OK


def cmd_modify(args) -> int:
  b = load_bundle(args.bundle, args.mode)
  base = b.hermitian if b.J is not None else b.metric
  try:
    maps = modification_slice(base)
  except ManualSeedRequired as exc:
    raise InputError(str(exc)) from exc
  if not maps:
    raise InputError("no modification of the form x -> g(x) D exists for this bundle")
  params = _parse_params(args.param)
  if "c" in params:
    params.setdefault("c1", params.pop("c"))
  n = b.dim
  acc = [la.zeros(n, n) for _ in range(n)]
  for i, m in enumerate(maps):
    c = params.pop(f"c{i + 1}", 0)
    if c:
      c = coerce(c, b.mode)
      acc = [la.madd(x, la.mscale(c, y)) for x, y in zip(acc, m.maps)]
  if params:
    raise InputError(f"unknown parameters {sorted(params)}; the slice has {len(maps)} direction(s)")
  mm = ModificationMap(base, acc)
  out = _Out(args.json)
  ok = out.report("modification", check_modification(mm))
  if ok:
    ok &= out.report("invariants", invariance_report(mm, b.f))
    new = Bundle(modified_algebra(mm), b.gram, J=b.J, f=b.f, parts={"base": b})
    out.data["bundle"] = bundle_to_dict(new)
    if not args.json:
      out.line(json.dumps(bundle_to_dict(new), indent=2))
  out.emit()
  return EXIT_OK if ok else EXIT_FAIL


def cmd_catalog(args) -> int:
  if args.list or not args.name:
    for name, (_, keys) in sorted(CATALOG.items()):
      print(f"{name}({', '.join(keys)})")
    return EXIT_OK
  b = catalog(args.name, _parse_params(args.param), args.mode)
  _emit_bundle(b, args.output)
  return EXIT_OK


def cmd_equations(args) -> int:
  L = parse_structure_equations(args.text, _parse_params(args.param), args.mode or EXACT)
  _emit_bundle(Bundle(L, la.as_matrix(la.identity(L.dim), L.mode)), args.output)
  return EXIT_OK


def cmd_lattice(args) -> int:
  a, b, t = _number(args.a), _number(args.b), _number(args.t)
  res = lattice_integrality(a, b, t)
  out = _Out(args.json)
  out.data.update(matrix=_fmt_matrix(res.matrix), integer=res.integer, exact=res.exact)
  out.line("exp(t ad_e1) on (e2, e3, e4, e5, e6, xi):")
  for row in res.matrix:
    out.line("  " + " ".join(f"{_show(x):>9}" for x in row))
  out.line(f"integer matrix: {'yes' if res.integer else 'no'}"
           + ("" if res.exact else " (floating point)"))
  out.emit()
  return EXIT_OK if res.integer else EXIT_FAIL


def cmd_verify(args) -> int:
  from .verify import run_all

  ids = [int(x) for x in args.only.split(",")] if args.only else None
  results = run_all(ids)
  if args.json:
    print(json.dumps([{"id": r.id, "title": r.title, "ok": r.ok, "seconds": round(r.seconds, 3),
                       "details": [{"check": n, "ok": o, "info": i} for n, o, i in r.details]}
                      for r in results], indent=2))
  else:
    for r in results:
      print(r.line())
      if args.verbose or not r.ok:
        for name, ok, info in r.details:
          if args.verbose or not ok:
            print(f"      {'ok  ' if ok else 'FAIL'} {name}" + (f": {info}" if info else ""))
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria passed")
  return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
  def flags(defaults: bool) -> argparse.ArgumentParser:
    # global flags are accepted before and after the command; the copy on
    # the subcommands must not overwrite values given before it
    g = argparse.ArgumentParser(add_help=False)
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    g.add_argument("--mode", choices=(EXACT, FLOAT), **({"default": None} | kw),
                   help="arithmetic mode (default: exact, or the bundle's own mode)")
    g.add_argument("--tol", type=float, **({"default": None} | kw), help="float-mode tolerance")
    g.add_argument("--json", action="store_true", **kw, help="machine-readable output")
    return g

  common = flags(False)
  p = argparse.ArgumentParser(prog="sasakilie", parents=[flags(True)],
                              description="Sasakian, Kähler and normal j-algebra verification.")
  sub = p.add_subparsers(dest="command", required=True)

  def add(name, fn, help_, bundle=True, output=False):
    sp = sub.add_parser(name, parents=[common], help=help_)
    if bundle:
      sp.add_argument("bundle", help="bundle JSON file, '-' for stdin, or catalog:NAME[:k=v,...]")
    if output:
      sp.add_argument("-o", "--output", help="write the bundle here instead of stdout")
    sp.set_defaults(func=fn)
    return sp

  add("check", cmd_check, "Jacobi, Sasakian, Kähler and normal j-algebra checks")
  add("curvature", cmd_curvature, "Ricci tensor, scalar curvature, Einstein verdicts")
  add("extend", cmd_extend, "central extension of a Kähler bundle", output=True)
  add("build", cmd_build, "centreless Sasakian algebra from a Kähler-exact seed", output=True)
  add("split", cmd_split, "recover the seed of a centreless Sasakian bundle", output=True)
  add("roots", cmd_roots, "root decomposition of a normal j-algebra")
  add("derivations", cmd_derivations, "derivations and unitary derivations")
  sp = add("modify", cmd_modify, "modify along the unitary derivation slice")
  sp.add_argument("--param", action="append", help="c=VALUE (or c1=..., c2=...)")
  sp = add("catalog", cmd_catalog, "print a catalog bundle", bundle=False, output=True)
  sp.add_argument("name", nargs="?")
  sp.add_argument("--param", action="append", help="name=value, repeatable or comma-separated")
  sp.add_argument("--list", action="store_true")
  sp = add("equations", cmd_equations, "bundle from structure equations (orthonormal basis)",
           bundle=False, output=True)
  sp.add_argument("text", help='e.g. "(0, e^{21})"')
  sp.add_argument("--param", action="append")
  sp = add("lattice", cmd_lattice, "integrality of exp(t ad_e1) for the null solvmanifold",
           bundle=False)
  sp.add_argument("--a", required=True, help="rotation speed in units of pi/2")
  sp.add_argument("--b", required=True, help="rotation speed in units of pi/2")
  sp.add_argument("--t", required=True)
  sp = add("verify-paper", cmd_verify, "run the full verification suite", bundle=False)
  sp.add_argument("--only", help="comma-separated criterion ids")
  sp.add_argument("-v", "--verbose", action="store_true")
  return p


def main(argv=None) -> int:
  parser = build_parser()
  try:
    args = parser.parse_args(argv)
  except SystemExit as exc:
    return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
  try:
    if args.tol is not None:
      set_tolerance(args.tol)
    return args.func(args)
  except (InputError, ValidationError, ModeError, KeyError, ValueError) as exc:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
  sys.exit(main())
