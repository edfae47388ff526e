"""Exact computations with class-two nilpotent Lie algebras whose derived subalgebra is two-dimensional."""

from .catalog import Family, FamilyParams, Instance, enumerate_instances, make
from .classifier import Ambiguous, ClassificationResult, NoMatch, Reject, classify
from .extsquare import exterior_center, exterior_square
from .homology import multiplier_formula, schur_multiplier_dim
from .lie import StructureConstants, change_of_basis, direct_sum, random_class2, report, validate
from .linalg import GF, QQ, Field
from .pencil import Fingerprint, fingerprint

__version__ = "0.1.0"
