"""Metric classification of conics in the pseudo-Euclidean plane."""

from .classify import ClassificationReport, SemiAxes, center, classify, family, hyperbola_v_params, reduce, semiaxes
from .conic import Conic, HomogeneousPoint, Invariants, IsotropicPointSet, Reality, evaluate, invariants, isotropic_points, quadratic_form, transform
from .pe_plane import Motion, PEPoint, PEVector, VectorKind, motion_apply, motion_compose, motion_inverse, pe_angle, pe_distance, pe_dot, pe_norm, rotation_matrix, vector_kind
from .spectral import CaseKind, DiagCase, PEValues, diag_case, diagonalize, pe_values, rotation_angle
from .taxonomy import ConicClass, Family, TypeTag, lookup, taxonomy

__version__ = "0.1.0"
