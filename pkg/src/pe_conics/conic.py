"""Second-degree curves, their motion invariants and coefficient transport.

A conic is the symmetric matrix::

    | a00 a01 a02 |
    | a01 a11 a12 |      F(x, y) = a11 x^2 + 2 a12 xy + a22 y^2
    | a02 a12 a22 |               + 2 a01 x + 2 a02 y + a00

Any nonzero matrix is admitted, including ones whose quadratic part vanishes
(the line at infinity counted as a component).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from typing import Sequence

from .errors import InvalidConic
from .numeric import DEFAULT_EPS, Scalar, exact_sqrt, is_exact, magnitude, sign, surd_sign, unify
from .pe_plane import Motion, PEPoint, VectorKind

COEFF_NAMES = ("a00", "a01", "a02", "a11", "a12", "a22")


@dataclass(frozen=True)
class Conic:
    a00: Scalar = 0
    a01: Scalar = 0
    a02: Scalar = 0
    a11: Scalar = 0
    a12: Scalar = 0
    a22: Scalar = 0

    def __post_init__(self):
        vals = unify(*(getattr(self, f.name) for f in fields(self)))
        if all(v == 0 for v in vals):
            raise InvalidConic("the zero matrix is not a conic")
        for name, v in zip(COEFF_NAMES, vals):
            object.__setattr__(self, name, v)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> Conic:
        if len(coeffs) != 6:
            raise InvalidConic(f"expected 6 coefficients, got {len(coeffs)}")
        return cls(*coeffs)

    @classmethod
    def from_matrix(cls, m) -> Conic:
        return cls(m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2])

    @classmethod
    def _raw(cls, a00, a01, a02, a11, a12, a22) -> Conic:
        # trusted construction for hot paths: values already unified, nonzero
        obj = object.__new__(cls)
        for name, v in zip(COEFF_NAMES, (a00, a01, a02, a11, a12, a22)):
            object.__setattr__(obj, name, v)
        return obj

    @property
    def coeffs(self) -> tuple:
        return (self.a00, self.a01, self.a02, self.a11, self.a12, self.a22)

    @property
    def matrix(self) -> tuple:
        return (
            (self.a00, self.a01, self.a02),
            (self.a01, self.a11, self.a12),
            (self.a02, self.a12, self.a22),
        )

    @property
    def sigma(self) -> tuple:
        return ((self.a11, self.a12), (self.a12, self.a22))

    @property
    def is_exact(self) -> bool:
        return is_exact(self.a00)

    @property
    def scale(self) -> float:
        """Largest coefficient magnitude, the reference for float sign tests."""
        return magnitude(self.coeffs)

    def scaled(self, k) -> Conic:
        vals = unify(k, *self.coeffs)
        return Conic(*(vals[0] * v for v in vals[1:]))

    def to_float(self) -> Conic:
        return Conic(*(float(v) for v in self.coeffs))


@dataclass(frozen=True)
class Invariants:
    I1: Scalar
    I2: Scalar
    I3: Scalar
    I4: Scalar
    I5: Scalar

    def as_tuple(self) -> tuple:
        return (self.I1, self.I2, self.I3, self.I4, self.I5)


def evaluate(c: Conic, p: PEPoint) -> Scalar:
    x, y, a00, a01, a02, a11, a12, a22 = unify(p.x, p.y, *c.coeffs)
    return a11 * x * x + 2 * a12 * x * y + a22 * y * y + 2 * a01 * x + 2 * a02 * y + a00


def invariants(c: Conic) -> Invariants:
    a00, a01, a02, a11, a12, a22 = c.coeffs
    det_sigma = a11 * a22 - a12 * a12
    det_a = (
        a00 * det_sigma
        - a01 * (a01 * a22 - a12 * a02)
        + a02 * (a01 * a12 - a11 * a02)
    )
    i4 = (a00 * a11 - a01 * a01) - (a00 * a22 - a02 * a02)
    return Invariants(a11 - a22, det_sigma, det_a, i4, a00)


def quadratic_form(c: Conic) -> tuple:
    return c.sigma


def rotate(c: Conic, ch: Scalar, sh: Scalar) -> Conic:
    """Coefficients of ``F(x ch + y sh, x sh + y ch)``."""
    a00, a01, a02, a11, a12, a22, ch, sh = unify(*c.coeffs, ch, sh)
    c2, s2, cs = ch * ch, sh * sh, ch * sh
    return Conic._raw(
        a00,
        a01 * ch + a02 * sh,
        a01 * sh + a02 * ch,
        a11 * c2 + a22 * s2 + 2 * a12 * cs,
        (a11 + a22) * cs + a12 * (c2 + s2),
        a11 * s2 + a22 * c2 + 2 * a12 * cs,
    )


def translate(c: Conic, x0: Scalar, y0: Scalar) -> Conic:
    """Coefficients of ``F(x + x0, y + y0)``."""
    a00, a01, a02, a11, a12, a22, x0, y0 = unify(*c.coeffs, x0, y0)
    return Conic._raw(
        a11 * x0 * x0 + 2 * a12 * x0 * y0 + a22 * y0 * y0 + 2 * a01 * x0 + 2 * a02 * y0 + a00,
        a11 * x0 + a12 * y0 + a01,
        a12 * x0 + a22 * y0 + a02,
        a11,
        a12,
        a22,
    )


def transform(c: Conic, m: Motion) -> Conic:
    """The conic ``F o m``, so that ``evaluate(transform(c, m), p) == evaluate(c, m(p))``."""
    shifted = c
    if m.tx != 0 or m.ty != 0:
        shifted = translate(c, m.tx, m.ty)
    if m.sh == 0 and m.ch == 1:
        if not m.is_exact and shifted.is_exact:
            return shifted.to_float()
        return shifted
    return rotate(shifted, m.ch, m.sh)


@dataclass(frozen=True, eq=False)
class HomogeneousPoint:
    x0: Scalar
    x1: Scalar
    x2: Scalar

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousPoint):
            return NotImplemented
        a0, a1, a2, b0, b1, b2 = unify(self.x0, self.x1, self.x2, other.x0, other.x1, other.x2)
        scale = magnitude((a0, a1, a2)) * magnitude((b0, b1, b2))
        cross = (a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0)
        return all(sign(v, scale) == 0 for v in cross)

    __hash__ = None


class Reality(enum.Enum):
    TWO_COMPLEX_CONJUGATE = "two complex conjugate"
    ONE_REAL_DOUBLE = "one real double"
    TWO_REAL_DISTINCT = "two real distinct"
    ALL_OF_OMEGA = "all of omega"


@dataclass(frozen=True)
class IsotropicPointSet:
    """Intersection of the conic with the line at infinity.

    ``points`` pairs each real point with the kind of its direction
    vector ``(x1, x2)``; lightlike means the point is an absolute point.
    """

    reality: Reality
    points: tuple = ()

    @property
    def kinds(self) -> tuple:
        return tuple(k for _, k in self.points)


def _direction_kind(p, q, r, disc, scale, eps) -> VectorKind:
    # point (0 : p + q sqrt(disc) : r); kind from sign of x1^2 - x2^2
    s = surd_sign(p * p + q * q * disc - r * r, 2 * p * q, disc, scale, eps)
    return {1: VectorKind.SPACELIKE, -1: VectorKind.TIMELIKE, 0: VectorKind.LIGHTLIKE}[s]


def isotropic_points(c: Conic, eps: float = DEFAULT_EPS) -> IsotropicPointSet:
    """Solve ``a11 x1^2 + 2 a12 x1 x2 + a22 x2^2 = 0`` on the line ``x0 = 0``."""
    a11, a12, a22 = c.a11, c.a12, c.a22
    scale = c.scale
    if all(sign(v, scale, eps) == 0 for v in (a11, a12, a22)):
        return IsotropicPointSet(Reality.ALL_OF_OMEGA)
    disc = a12 * a12 - a11 * a22
    s = sign(disc, scale**2, eps)
    if s < 0:
        return IsotropicPointSet(Reality.TWO_COMPLEX_CONJUGATE)
    zero = disc - disc
    if s == 0:
        disc = zero
    if sign(a11, scale, eps) != 0:
        root = exact_sqrt(disc) if is_exact(disc) else None
        if root is None:
            root = float(disc) ** 0.5
        roots = [(-a12, 1)] if s == 0 else [(-a12, 1), (-a12, -1)]
        pts = []
        for p, q in roots:
            kind = _direction_kind(p, q, a11, disc, scale**2, eps)
            x1 = p + q * root if is_exact(root) else float(p) + q * root
            pts.append((HomogeneousPoint(zero, x1, a11 if is_exact(x1) else float(a11)), kind))
        reality = Reality.ONE_REAL_DOUBLE if s == 0 else Reality.TWO_REAL_DISTINCT
        return IsotropicPointSet(reality, tuple(pts))
    one = zero + 1
    at_x1 = (HomogeneousPoint(zero, one, zero), VectorKind.SPACELIKE)
    if s == 0:
        return IsotropicPointSet(Reality.ONE_REAL_DOUBLE, (at_x1,))
    other = HomogeneousPoint(zero, -a22, 2 * a12)
    kind = _direction_kind(-a22, zero, 2 * a12, zero, scale**2, eps)
    return IsotropicPointSet(Reality.TWO_REAL_DISTINCT, (at_x1, (other, kind)))
