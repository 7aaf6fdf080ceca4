"""Metric primitives of the pseudo-Euclidean plane and its motion group.

The scalar product is ``x1*x2 - y1*y2``. Motions are hyperbolic rotations
about the origin followed by translations::

    x' = x cosh(phi) + y sinh(phi) + tx
    y' = x sinh(phi) + y cosh(phi) + ty

A :class:`Motion` stores the pair ``(cosh phi, sinh phi)`` rather than
``phi`` itself, so motions built from a rational ``q = e**phi`` stay exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Tuple

from .errors import KindMismatch, OutOfSector
from .numeric import DEFAULT_EPS, Scalar, is_exact, sign, sqrt, to_exact, unify

Matrix2 = Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]


@dataclass(frozen=True)
class PEVector:
    dx: Scalar
    dy: Scalar


@dataclass(frozen=True)
class PEPoint:
    x: Scalar
    y: Scalar

    def __sub__(self, other: PEPoint) -> PEVector:
        return PEVector(*_sub(self.x, other.x, self.y, other.y))


def _sub(x1, x2, y1, y2):
    x1, x2, y1, y2 = unify(x1, x2, y1, y2)
    return x1 - x2, y1 - y2


class VectorKind(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


# The absolute figure: the line at infinity x0 = 0 and two points on it.
OMEGA_1 = (0, 1, 1)
OMEGA_2 = (0, 1, -1)


def pe_dot(v1: PEVector, v2: PEVector) -> Scalar:
    x1, y1, x2, y2 = unify(v1.dx, v1.dy, v2.dx, v2.dy)
    return x1 * x2 - y1 * y2


def vector_kind(v: PEVector, eps: float = DEFAULT_EPS) -> VectorKind:
    scale = max(abs(float(v.dx)), abs(float(v.dy))) ** 2
    s = sign(pe_dot(v, v), scale, eps)
    if s > 0:
        return VectorKind.SPACELIKE
    if s < 0:
        return VectorKind.TIMELIKE
    return VectorKind.LIGHTLIKE


def pe_norm(v: PEVector, eps: float = DEFAULT_EPS) -> tuple[VectorKind, Scalar]:
    """Norm of ``v`` as ``(kind, sqrt|v.v|)``; timelike norms are imaginary."""
    kind = vector_kind(v, eps)
    if kind is VectorKind.LIGHTLIKE:
        return kind, to_exact(0) if is_exact(v.dx) and is_exact(v.dy) else 0.0
    return kind, sqrt(abs(pe_dot(v, v)))


def pe_distance(t1: PEPoint, t2: PEPoint, eps: float = DEFAULT_EPS) -> tuple[VectorKind, Scalar]:
    return pe_norm(t2 - t1, eps)


def pe_angle(v1: PEVector, v2: PEVector, eps: float = DEFAULT_EPS) -> float:
    """Hyperbolic angle between two spacelike or two timelike vectors."""
    k1, k2 = vector_kind(v1, eps), vector_kind(v2, eps)
    if k1 is VectorKind.LIGHTLIKE or k2 is VectorKind.LIGHTLIKE or k1 is not k2:
        raise KindMismatch(f"angle needs two spacelike or two timelike vectors, got {k1.value}/{k2.value}")
    d = pe_dot(v1, v2)
    q = pe_dot(v1, v1) * pe_dot(v2, v2)
    cosh_sq = d * d / q
    if sign(cosh_sq - 1, 1.0, eps) < 0:
        raise OutOfSector(f"|cosh alpha|^2 = {float(cosh_sq)} < 1")
    return math.acosh(max(1.0, math.sqrt(float(cosh_sq))))


@dataclass(frozen=True)
class Motion:
    """Element of the motion group: hyperbolic rotation, then translation."""

    ch: Scalar
    sh: Scalar
    tx: Scalar
    ty: Scalar

    def __post_init__(self):
        vals = unify(self.ch, self.sh, self.tx, self.ty)
        for name, v in zip(("ch", "sh", "tx", "ty"), vals):
            object.__setattr__(self, name, v)
        det = vals[0] * vals[0] - vals[1] * vals[1]
        if sign(det - 1, max(1.0, float(vals[0]) ** 2)) != 0 or sign(vals[0]) <= 0:
            raise ValueError(f"not a hyperbolic rotation: cosh={vals[0]}, sinh={vals[1]}")

    @classmethod
    def identity(cls) -> Motion:
        return cls(1, 0, 0, 0)

    @classmethod
    def from_phi(cls, phi, tx=0, ty=0) -> Motion:
        if is_exact(phi) and phi == 0:
            return cls(1, 0, tx, ty)
        phi = float(phi)
        return cls(math.cosh(phi), math.sinh(phi), tx, ty)

    @classmethod
    def rotation(cls, phi) -> Motion:
        return cls.from_phi(phi)

    @classmethod
    def from_exp(cls, q, tx=0, ty=0) -> Motion:
        """Exact rotation by ``phi = ln q`` for a rational ``q > 0``."""
        q = to_exact(q)
        if q <= 0:
            raise ValueError("e**phi must be positive")
        inv = 1 / q
        return cls((q + inv) / 2, (q - inv) / 2, tx, ty)

    @classmethod
    def translation(cls, tx, ty) -> Motion:
        return cls(1, 0, tx, ty)

    @property
    def phi(self) -> float:
        return math.asinh(float(self.sh))

    @property
    def is_exact(self) -> bool:
        return is_exact(self.ch)

    @property
    def matrix(self) -> Matrix2:
        return ((self.ch, self.sh), (self.sh, self.ch))

    @property
    def linear(self) -> Motion:
        return Motion(self.ch, self.sh, 0, 0)


def rotation_matrix(phi) -> Matrix2:
    return Motion.from_phi(phi).matrix


def motion_apply(m: Motion, p: PEPoint) -> PEPoint:
    x, y, c, s, tx, ty = unify(p.x, p.y, m.ch, m.sh, m.tx, m.ty)
    return PEPoint(x * c + y * s + tx, x * s + y * c + ty)


def apply_linear(m: Motion, v: PEVector) -> PEVector:
    x, y, c, s = unify(v.dx, v.dy, m.ch, m.sh)
    return PEVector(x * c + y * s, x * s + y * c)


def motion_compose(m1: Motion, m2: Motion) -> Motion:
    """The motion ``p -> m1(m2(p))``."""
    c1, s1, x1, y1, c2, s2, x2, y2 = unify(m1.ch, m1.sh, m1.tx, m1.ty, m2.ch, m2.sh, m2.tx, m2.ty)
    return Motion(
        c1 * c2 + s1 * s2,
        s1 * c2 + c1 * s2,
        c1 * x2 + s1 * y2 + x1,
        s1 * x2 + c1 * y2 + y1,
    )


def motion_inverse(m: Motion) -> Motion:
    c, s, tx, ty = m.ch, m.sh, m.tx, m.ty
    return Motion(c, -s, -(c * tx - s * ty), -(-s * tx + c * ty))
