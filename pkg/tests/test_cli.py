from __future__ import annotations

import json
import subprocess
import sys

import pytest

from sasakilie.bundle import deserialize_bundle
from sasakilie.cli import main


@pytest.fixture
def run(capsys, tolerance):
  def go(*argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err
  return go


def test_check_catalog(run):
  code, out, _ = run("check", "catalog:h3", "--json")
  assert code == 0
  data = json.loads(out)
  assert data["ok"] and data["jacobi"]["ok"] and data["sasakian"]["ok"]


def test_check_reads_files_and_stdin(run, tmp_path, monkeypatch):
  path = tmp_path / "h5.json"
  assert run("catalog", "h5", "-o", str(path))[0] == 0
  assert deserialize_bundle(path.read_text()).dim == 5
  assert run("check", str(path))[0] == 0
  monkeypatch.setattr(sys, "stdin", open(path))
  assert run("--json", "check", "-")[0] == 0


def test_curvature(run):
  code, out, _ = run("curvature", "catalog:h5", "--json")
  data = json.loads(out)
  assert code == 0 and data["eta_einstein"] == {"lambda": "-2", "class": "null"}
  assert data["scalar"] == "-4"


def test_pipeline_extend_split_build(run, tmp_path):
  flat, h = tmp_path / "flat.json", tmp_path / "h.json"
  run("catalog", "abelian", "--param", "n=4", "-o", str(flat))
  assert run("extend", str(flat), "-o", str(h))[0] == 0
  assert run("check", str(h))[0] == 0
  seed, built = tmp_path / "seed.json", tmp_path / "built.json"
  assert run("split", "catalog:example_7dim_i:k=2", "-o", str(seed))[0] == 0
  assert run("build", str(seed), "-o", str(built))[0] == 0
  assert run("check", str(built))[0] == 0


def test_roots_derivations_modify(run):
  code, out, _ = run("roots", "catalog:d_ab", "--json")
  assert code == 0 and json.loads(out)["r"] == 2
  assert run("derivations", "catalog:d_a")[0] == 0
  code, out, _ = run("modify", "catalog:d_a", "--param", "c=2", "--json")
  assert code == 0 and json.loads(out)["modification"]["ok"]


def test_equations_and_lattice(run):
  code, out, _ = run("equations", "(0, e^{21})")
  assert code == 0 and deserialize_bundle(out).algebra.basis_bracket(0, 1) == (0, 1)
  assert run("lattice", "--a", "1", "--b", "1", "--t", "1")[0] == 0
  code, out, _ = run("lattice", "--a", "2/3", "--b", "1", "--t", "1", "--json")
  assert code == 1 and json.loads(out)["integer"] is False


def test_float_mode_flags(run):
  code, out, _ = run("--mode", "float", "--tol", "1e-8", "curvature", "catalog:d_a_n", "--json")
  assert code == 0 and float(json.loads(out)["einstein"]) == pytest.approx(-1.5)


@pytest.mark.parametrize("argv", [
  ("check", "catalog:nope"),
  ("check", "/no/such/file.json"),
  ("equations", "(0, e^{13})"),
  ("equations", "(0, k e^{12})"),
  ("catalog", "aff", "--param", "a"),
  ("frobnicate",),
  ("check",),
])
def test_input_errors_exit_2(run, argv):
  assert run(*argv)[0] == 2


def test_failing_check_exits_1(run, tmp_path):
  path = tmp_path / "bad.json"
  run("catalog", "h5", "-o", str(path))
  data = json.loads(path.read_text())
  for row in data["phi"]:
    row[1] = str(-int(row[1]))  # J e2 = -e4 patch
  path.write_text(json.dumps(data))
  code, out, _ = run("check", str(path), "--json")
  assert code == 1 and not json.loads(out)["ok"]


def test_verify_subset(run):
  code, out, _ = run("verify-paper", "--only", "3,12")
  assert code == 0
  assert "[PASS]  3." in out and "[PASS] 12." in out and "2/2 criteria passed" in out


def test_module_entry_point():
  res = subprocess.run([sys.executable, "-m", "sasakilie", "catalog", "--list"],
                       capture_output=True, text=True, check=False)
  assert res.returncode == 0 and "normal_j_8dim" in res.stdout
