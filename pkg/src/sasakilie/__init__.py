"""Exact verification of Sasakian, Kähler and normal j-algebra structures
on finite-dimensional metric Lie algebras."""
from __future__ import annotations

from .algebra import JacobiError, LieAlgebra, check_jacobi, classify, killing_form
from .bundle import Bundle, deserialize_bundle, serialize_bundle
from .catalog import catalog
from .constructions import (KahlerExactSeed, build_centreless, central_extension, kahler_reduction,
                            lattice_integrality, split_by_reeb)
from .curvature import MetricLieAlgebra, einstein_check, eta_einstein_check
from .forms import KForm, ce_differential, find_primitive
from .modification import ManualSeedRequired, ModificationMap, invariance_report, modify
from .normal_j import NormalJAlgebra, datri_einstein, root_decomposition
from .notation import NotationError, parse_structure_equations, print_structure_equations
from .scalars import EXACT, FLOAT, ModeError, ValidationError, get_tolerance, set_tolerance
from .structures import AlmostContactMetric, HermitianData, check_kahler, check_sasakian

__version__ = "0.1.0"

__all__ = [
  "EXACT",
  "FLOAT",
  "ModeError",
  "ValidationError",
  "get_tolerance",
  "set_tolerance",
  "LieAlgebra",
  "JacobiError",
  "check_jacobi",
  "classify",
  "killing_form",
  "KForm",
  "ce_differential",
  "find_primitive",
  "MetricLieAlgebra",
  "einstein_check",
  "eta_einstein_check",
  "AlmostContactMetric",
  "HermitianData",
  "check_sasakian",
  "check_kahler",
  "central_extension",
  "kahler_reduction",
  "KahlerExactSeed",
  "build_centreless",
  "split_by_reeb",
  "lattice_integrality",
  "NormalJAlgebra",
  "root_decomposition",
  "datri_einstein",
  "ModificationMap",
  "ManualSeedRequired",
  "modify",
  "invariance_report",
  "Bundle",
  "serialize_bundle",
  "deserialize_bundle",
  "catalog",
  "NotationError",
  "parse_structure_equations",
  "print_structure_equations",
]
