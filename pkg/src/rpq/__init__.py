"""Exact two-parameter deformed operator calculus.

Subpackages: exact scalars, deformation presets and deformed integers, the
graded shift-operator algebra, generator identity suites, n-brackets, the
constraint-operator toy model, and a lattice KdV simulator.
"""

from .deformations import NAMED_PRESETS, PRESETS, DeformationPreset, get_preset
from .operators import DegreeCoeff, GradedOp, LaurentPoly, commutator, deformed_bracket, op_equal
from .scalars import BiLaurent, EpsScalar, parse_scalar, rational

__all__ = [
    "NAMED_PRESETS",
    "PRESETS",
    "DeformationPreset",
    "get_preset",
    "DegreeCoeff",
    "GradedOp",
    "LaurentPoly",
    "commutator",
    "deformed_bracket",
    "op_equal",
    "BiLaurent",
    "EpsScalar",
    "parse_scalar",
    "rational",
]

__version__ = "0.1.0"
