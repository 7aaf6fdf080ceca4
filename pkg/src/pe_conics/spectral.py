"""Pseudo-Euclidean values and diagonalization of a 2x2 symmetric matrix.

A hyperbolic rotation ``R`` acts on the quadratic part by congruence
``R sigma R`` (``R`` is symmetric). It can kill the off-diagonal entry iff
``|a11 + a22| > 2|a12|``; the borderline ``|a11 + a22| = 2|a12|`` would need
an infinite angle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NoRealPEValues, NotDiagonalizable
from .numeric import DEFAULT_EPS, Scalar, exact_sqrt, is_exact, magnitude, sign, sqrt, unify
from .pe_plane import Motion


class CaseKind(enum.Enum):
    CASE_I = "I"
    CASE_II = "II"
    CASE_III = "III"
    FAMILY4_AXIS = "family-4 axis"


@dataclass(frozen=True)
class DiagCase:
    kind: CaseKind
    # for CASE_II: +1 when a11 + a22 = -2 a12 (the point (0:1:1) is on the
    # conic), -1 when a11 + a22 = 2 a12 (the point (0:1:-1) is)
    sign: int = 0


@dataclass(frozen=True)
class PEValues:
    lambda1: Scalar
    lambda2: Scalar


def _entries(sigma):
    if hasattr(sigma, "sigma"):
        sigma = sigma.sigma
    (a11, a12), (b12, a22) = sigma
    if a12 != b12:
        raise ValueError("sigma must be symmetric")
    return unify(a11, a12, a22)


def pe_values(sigma) -> PEValues:
    """Solve ``l1 - l2 = a11 - a22``, ``l1 * l2 = det sigma`` with ``l1 + l2 >= 0``."""
    a11, a12, a22 = _entries(sigma)
    i1 = a11 - a22
    i2 = a11 * a22 - a12 * a12
    disc = i1 * i1 + 4 * i2
    if sign(disc, magnitude((a11, a12, a22)) ** 2) < 0:
        raise NoRealPEValues(f"I1^2 + 4 I2 = {disc} < 0")
    d = sqrt(max(disc, disc - disc))
    if not is_exact(d):
        i1 = float(i1)
    return PEValues((i1 + d) / 2, (-i1 + d) / 2)


def diag_case(sigma, eps: float = DEFAULT_EPS, scale: float | None = None) -> DiagCase:
    a11, a12, a22 = _entries(sigma)
    if scale is None:
        scale = magnitude((a11, a12, a22))
    tr = a11 + a22
    s_tr = sign(tr, scale, eps)
    s_12 = sign(a12, scale, eps)
    s_disc = sign(tr * tr - 4 * a12 * a12, scale**2, eps)
    if s_tr == 0 and s_12 == 0:
        return DiagCase(CaseKind.FAMILY4_AXIS)
    if s_tr == 0:
        return DiagCase(CaseKind.CASE_III)
    if s_disc > 0:
        return DiagCase(CaseKind.CASE_I)
    if s_disc == 0:
        if s_12 == 0:
            return DiagCase(CaseKind.FAMILY4_AXIS)
        return DiagCase(CaseKind.CASE_II, 1 if s_tr == -s_12 else -1)
    return DiagCase(CaseKind.CASE_III)


def _tanh_double_angle(sigma, eps, scale):
    a11, a12, a22 = _entries(sigma)
    case = diag_case(((a11, a12), (a12, a22)), eps, scale)
    if case.kind is CaseKind.FAMILY4_AXIS:
        return a12 - a12
    if case.kind is not CaseKind.CASE_I:
        raise NotDiagonalizable(f"quadratic form is in case {case.kind.value}")
    return -2 * a12 / (a11 + a22)


def rotation_angle(sigma, eps: float = DEFAULT_EPS, scale: float | None = None) -> float:
    """The angle with ``tanh(2 phi) = -2 a12 / (a11 + a22)``."""
    u = float(_tanh_double_angle(sigma, eps, scale))
    return 0.25 * math.log((1 + u) / (1 - u))


def reducing_rotation(sigma, eps: float = DEFAULT_EPS, scale: float | None = None) -> Motion:
    """Rotation that diagonalizes ``sigma``; exact when ``e**phi`` is rational."""
    u = _tanh_double_angle(sigma, eps, scale)
    if is_exact(u):
        if u == 0:
            return Motion.identity()
        r = exact_sqrt((1 + u) / (1 - u))
        q = exact_sqrt(r) if r is not None else None
        if q is not None:
            return Motion.from_exp(q)
    u = float(u)
    cosh2 = 1.0 / math.sqrt((1.0 - u) * (1.0 + u))
    ch = math.sqrt((1.0 + cosh2) / 2.0)
    return Motion(ch, u * cosh2 / (2.0 * ch), 0.0, 0.0)


def congruence(sigma, ch, sh) -> tuple:
    """``R sigma R`` for the rotation with entries ``ch``, ``sh``."""
    a11, a12, a22 = _entries(sigma)
    a11, a12, a22, ch, sh = unify(a11, a12, a22, ch, sh)
    c2, s2, cs = ch * ch, sh * sh, ch * sh
    d11 = a11 * c2 + a22 * s2 + 2 * a12 * cs
    d12 = (a11 + a22) * cs + a12 * (c2 + s2)
    d22 = a11 * s2 + a22 * c2 + 2 * a12 * cs
    return ((d11, d12), (d12, d22))


def diagonalize(sigma, eps: float = DEFAULT_EPS, scale: float | None = None) -> tuple:
    """Return ``(R, D)`` with ``D = R sigma R`` diagonal.

    Raises :class:`NotDiagonalizable` unless ``|a11 + a22| > 2|a12|``.
    Already-diagonal matrices with zero trace are accepted with ``R = I``.
    """
    rot = reducing_rotation(sigma, eps, scale)
    return rot.matrix, congruence(sigma, rot.ch, rot.sh)
