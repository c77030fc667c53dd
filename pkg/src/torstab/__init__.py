"""Combinatorial deformation and GIT stability analysis of toric surfaces."""

from torstab.automorphisms import RootSystem, is_reductive_part_torus, root_system
from torstab.constructions import hj_resolve, parse_construct_spec, quotient_fan
from torstab.deformations import WeightSystem, def_weights_surface, euler_check
from torstab.errors import ToricError
from torstab.fan import Fan2D, GeneralFan, load_fan, validate_surface_fan
from torstab.report import AnalysisReport, analyze
from torstab.stability import Splitting, classify_support, cscK_verdict, extremal_verdict, mu_sigma, nu_sigma

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Fan2D",
    "GeneralFan",
    "RootSystem",
    "Splitting",
    "ToricError",
    "WeightSystem",
    "analyze",
    "classify_support",
    "cscK_verdict",
    "def_weights_surface",
    "euler_check",
    "extremal_verdict",
    "hj_resolve",
    "is_reductive_part_torus",
    "load_fan",
    "mu_sigma",
    "nu_sigma",
    "parse_construct_spec",
    "quotient_fan",
    "root_system",
    "validate_surface_fan",
]
