"""Family assignment, canonical reduction and naming among the 43 types.

Every branch predicate is a sign test on the invariants (computed once from
the input) together with ``t = sign(a11 + a22)``. The trace sign is needed
because ``(I1, I2, I3)`` alone cannot tell a hyperbola of the first type
from one of the second type: ``x^2/4 - y^2 = 1`` and ``x^2 - y^2/4 = 1``
have equal invariants. On families 1 and 2 the trace sign is preserved by
every motion, so the predicates stay invariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .conic import Conic, Invariants, invariants, rotate
from .errors import ClassificationError, InvalidConic, NotApplicable
from .numeric import (
    DEFAULT_EPS,
    Scalar,
    as_json_number,
    sign,
    sqrt,
    unify,
)
from .pe_plane import Motion, PEPoint, motion_compose
from .spectral import CaseKind, diag_case, reducing_rotation
from .taxonomy import ConicClass, Family, lookup

_FAMILY_OF_CASE = {
    CaseKind.CASE_I: Family.FAMILY1,
    CaseKind.CASE_II: Family.FAMILY2,
    CaseKind.CASE_III: Family.FAMILY3,
    CaseKind.FAMILY4_AXIS: Family.FAMILY4,
}


@dataclass(frozen=True)
class SemiAxes:
    a: Scalar
    b: Scalar


@dataclass(frozen=True)
class ClassificationReport:
    input: Conic
    invariants: Invariants
    family: Family
    conic_class: ConicClass
    canonical: Conic
    motion: Optional[Motion] = None
    semiaxes: Optional[SemiAxes] = None
    center: Optional[PEPoint] = None
    notes: tuple = field(default_factory=tuple)

    @property
    def class_id(self) -> str:
        return self.conic_class.id

    def to_dict(self) -> dict:
        cls = self.conic_class
        num = as_json_number
        return {
            "class_id": cls.id,
            "class_name": cls.display_name,
            "family": int(self.family),
            "proper": cls.proper,
            "type_tag": cls.type_tag.value,
            "reconstructed": cls.reconstructed,
            "invariants": {
                name: num(v) for name, v in zip(("I1", "I2", "I3", "I4", "I5"), self.invariants.as_tuple())
            },
            "semiaxes": None if self.semiaxes is None else {"a": num(self.semiaxes.a), "b": num(self.semiaxes.b)},
            "center": None if self.center is None else {"x": num(self.center.x), "y": num(self.center.y)},
            "motion": None
            if self.motion is None
            else {"phi": self.motion.phi, "tx": num(self.motion.tx), "ty": num(self.motion.ty)},
            "canonical": [num(v) for v in self.canonical.coeffs],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class _Signs:
    """Signs of everything the cascade looks at, under one epsilon policy."""

    i1: int
    i2: int
    i3: int
    i4: int
    t: int
    sigma_zero: bool

    @classmethod
    def of(cls, c: Conic, inv: Invariants, eps: float) -> _Signs:
        s = c.scale
        sigma_zero = all(sign(v, s, eps) == 0 for v in (c.a11, c.a12, c.a22))
        return cls(
            sign(inv.I1, s, eps),
            sign(inv.I2, s**2, eps),
            sign(inv.I3, s**3, eps),
            sign(inv.I4, s**2, eps),
            sign(c.a11 + c.a22, s, eps),
            sigma_zero,
        )


def family(c: Conic, eps: float = DEFAULT_EPS) -> Family:
    return _FAMILY_OF_CASE[diag_case(c.sigma, eps, c.scale).kind]


def center(c: Conic, eps: float = DEFAULT_EPS) -> Optional[PEPoint]:
    """The point where both partial derivatives of F vanish, if unique."""
    a01, a02, a11, a12, a22 = c.a01, c.a02, c.a11, c.a12, c.a22
    i2 = a11 * a22 - a12 * a12
    if sign(i2, c.scale**2, eps) == 0:
        return None
    return PEPoint((a12 * a02 - a22 * a01) / i2, (a12 * a01 - a11 * a02) / i2)


def _type_suffix(s: _Signs) -> str:
    if s.i1 == 0:
        return "special"
    return "first" if s.i1 * s.t < 0 else "second"


def _decide(c: Conic, fam: Family, s: _Signs, eps: float) -> str:
    if fam is Family.FAMILY1:
        tag = _type_suffix(s)
        if s.i2 > 0:
            if s.i3 == 0:
                return f"f1-imaginary-lines-{tag}"
            return f"f1-imaginary-ellipse-{tag}" if s.t * s.i3 > 0 else f"f1-real-ellipse-{tag}"
        if tag == "special":
            raise ClassificationError("family 1 with I1 = 0 must have I2 > 0")
        if s.i2 < 0:
            if s.i3 == 0:
                return f"f1-intersecting-lines-{tag}"
            agree = s.i1 * s.i3 > 0
            return f"f1-hyperbola-{'I' if agree == (tag == 'first') else 'IV'}-{tag}"
        if s.i3 != 0:
            return f"f1-parabola-{tag}"
        real = s.i4 * s.i1 * s.t
        if real < 0:
            return f"f1-real-parallel-lines-{tag}"
        if real > 0:
            return f"f1-imaginary-parallel-lines-{tag}"
        return f"f1-double-line-{tag}"

    if fam is Family.FAMILY2:
        if s.i2 != 0:
            if s.i1 == 0:
                raise ClassificationError("family 2 with I2 != 0 must have I1 != 0")
            first = s.i1 * s.t < 0
            if s.i3 == 0:
                return "f2-lines-isotropic-spacelike" if first else "f2-lines-isotropic-timelike"
            agree = s.i1 * s.i3 > 0
            name = "II" if agree == first else "III"
            return f"f2-hyperbola-{name}-{'first' if first else 'second'}"
        if s.i3 != 0:
            return "f2-parabola-isotropic"
        k = _k_invariant(c)
        sk = sign(k, c.scale**2, eps)
        if sk < 0:
            return "f2-real-parallel-isotropic-lines"
        if sk > 0:
            return "f2-imaginary-parallel-isotropic-lines"
        return "f2-double-isotropic-line"

    if fam is Family.FAMILY3:
        return "f3-hyperbola-V" if s.i3 != 0 else "f3-lines-spacelike-timelike"

    if not s.sigma_zero:
        if s.i3 == 0:
            return "f4-pair-isotropic-lines"
        return "f4-hyperbolic-circle-first" if s.i1 * s.i3 > 0 else "f4-hyperbolic-circle-second"
    if s.i4 > 0:
        return "f4-omega-plus-spacelike"
    if s.i4 < 0:
        return "f4-omega-plus-timelike"
    if sign(c.a01, c.scale, eps) != 0:
        return "f4-omega-plus-isotropic"
    if sign(c.a00, c.scale, eps) != 0:
        return "f4-double-omega"
    raise InvalidConic("all coefficients vanish under the epsilon policy")


def _k_invariant(c: Conic) -> Scalar:
    return (c.a00 * c.a11 - c.a01 * c.a01) + (c.a00 * c.a22 - c.a02 * c.a02)


def _conic(*vals) -> Conic:
    return Conic(*unify(*vals))


def _reduce_family1(c: Conic, inv: Invariants, s: _Signs, eps: float):
    rot = reducing_rotation(c.sigma, eps, c.scale)
    notes = [] if rot.is_exact or not c.is_exact else ["reducing rotation is irrational; motion is in floating point"]
    if s.i2 != 0:
        ctr = center(c, eps)
        d = sqrt(inv.I1 * inv.I1 + 4 * inv.I2)
        i1, i2, i3, d = unify(inv.I1, inv.I2, inv.I3, d)
        a11 = (i1 + s.t * d) / 2
        a22 = (-i1 + s.t * d) / 2
        canonical = _conic(i3 / i2, 0, 0, a11, 0, a22)
        if s.i3 == 0:
            canonical = _conic(0, 0, 0, a11, 0, a22)
        return canonical, Motion(rot.ch, rot.sh, ctr.x, ctr.y), notes

    g = rotate(c, rot.ch, rot.sh)
    first = s.i1 * s.t < 0
    i1, i3, i4 = inv.I1, inv.I3, inv.I4
    mu = -i1 if first else i1
    if first:
        y0 = -g.a02 / mu
        x0 = g.a00 - g.a00
        if s.i3 != 0:
            x0 = -(mu * y0 * y0 + 2 * g.a02 * y0 + g.a00) / (2 * g.a01)
    else:
        x0 = -g.a01 / mu
        y0 = g.a00 - g.a00
        if s.i3 != 0:
            y0 = -(mu * x0 * x0 + 2 * g.a01 * x0 + g.a00) / (2 * g.a02)
    motion = motion_compose(rot, Motion.translation(x0, y0))
    if s.i3 != 0:
        if first:
            beta = sign(g.a01) * sqrt(i3 / i1)
            canonical = _conic(0, beta, 0, 0, 0, mu)
        else:
            beta = sign(g.a02) * sqrt(-i3 / i1)
            canonical = _conic(0, 0, beta, mu, 0, 0)
    elif first:
        canonical = _conic(i4 / i1, 0, 0, 0, 0, mu)
    else:
        canonical = _conic(i4 / i1, 0, 0, mu, 0, 0)
    return canonical, motion, notes


def _reduce_family2_parabolic(c: Conic, s: _Signs, eps: float):
    m = (c.a11 + c.a22) / 2
    e = sign(c.a12) * sign(m)
    k = c.a01 - e * c.a02
    if s.i3 == 0:
        x0 = -c.a01 / m
        return _conic(_k_invariant(c) / (2 * m), 0, 0, m, e * m, m), Motion.translation(x0, x0 - x0)
    b = c.a01 + e * c.a02
    u0 = -b / (2 * m)
    w0 = -(m * u0 * u0 + b * u0 + c.a00) / k
    motion = Motion.translation((u0 + w0) / 2, e * (u0 - w0) / 2)
    return _conic(0, k / 2, -e * k / 2, m, e * m, m), motion


def _reduce_omega(c: Conic, eps: float):
    if sign(c.a01, c.scale, eps) != 0:
        return _conic(0, c.a01, c.a02, 0, 0, 0), Motion.translation(-c.a00 / (2 * c.a01), 0)
    if sign(c.a02, c.scale, eps) != 0:
        return _conic(0, 0, c.a02, 0, 0, 0), Motion.translation(0, -c.a00 / (2 * c.a02))
    return _conic(c.a00, 0, 0, 0, 0, 0), None


def _reduce(c: Conic, fam: Family, inv: Invariants, s: _Signs, eps: float):
    if fam is Family.FAMILY1:
        return _reduce_family1(c, inv, s, eps)
    if fam is Family.FAMILY4 and s.sigma_zero:
        canonical, motion = _reduce_omega(c, eps)
        return canonical, motion, []
    if fam is Family.FAMILY2 and s.i2 == 0:
        canonical, motion = _reduce_family2_parabolic(c, s, eps)
        return canonical, motion, []
    # centred conics of families 2, 3 and 4: translation only
    ctr = center(c, eps)
    if ctr is None:
        raise ClassificationError(f"family {int(fam)} conic expected to have a centre")
    a00 = inv.I3 / inv.I2 if s.i3 != 0 else inv.I3 - inv.I3
    motion = Motion.translation(ctr.x, ctr.y)
    if fam is Family.FAMILY4:
        half = inv.I1 / 2
        return _conic(a00, 0, 0, half, 0, -half), motion, []
    return _conic(a00, 0, 0, c.a11, c.a12, c.a22), motion, []


def reduce(c: Conic, eps: float = DEFAULT_EPS) -> tuple[Conic, Optional[Motion]]:
    """Canonical representative and a motion ``m`` with ``F o m`` equal to it."""
    inv = invariants(c)
    s = _Signs.of(c, inv, eps)
    canonical, motion, _ = _reduce(c, family(c, eps), inv, s, eps)
    return canonical, motion


def semiaxes(canonical: Conic, eps: float = DEFAULT_EPS) -> SemiAxes:
    """``(sqrt|a00/a11|, sqrt|a00/a22|)`` of a centred diagonal form."""
    sc = canonical.scale
    off = (canonical.a01, canonical.a02, canonical.a12)
    main = (canonical.a00, canonical.a11, canonical.a22)
    if any(sign(v, sc, eps) != 0 for v in off) or any(sign(v, sc, eps) == 0 for v in main):
        raise NotApplicable("semiaxes need a centred diagonal form with nonzero a00, a11, a22")
    a00, a11, a22 = main
    return SemiAxes(sqrt(abs(a00 / a11)), sqrt(abs(a00 / a22)))


_SEMIAXES_IDS = {
    "f1-imaginary-ellipse-first", "f1-imaginary-ellipse-second", "f1-imaginary-ellipse-special",
    "f1-real-ellipse-first", "f1-real-ellipse-second", "f1-real-ellipse-special",
    "f1-hyperbola-I-first", "f1-hyperbola-I-second", "f1-hyperbola-IV-first", "f1-hyperbola-IV-second",
    "f4-hyperbolic-circle-first", "f4-hyperbolic-circle-second",
}


def classify(c: Conic, eps: float = DEFAULT_EPS) -> ClassificationReport:
    inv = invariants(c)
    s = _Signs.of(c, inv, eps)
    fam = family(c, eps)
    cls = lookup(_decide(c, fam, s, eps))
    canonical, motion, notes = _reduce(c, fam, inv, s, eps)
    notes = list(notes)
    if cls.reconstructed:
        notes.append("reconstructed class")
    if fam is Family.FAMILY2 and cls.proper and s.i2 != 0:
        notes.append("the focal parameter c is not a motion invariant; canonical keeps the centred coefficients")
    if fam is Family.FAMILY4 and s.sigma_zero:
        notes.append("contains the line at infinity")
        if motion is None:
            notes.append("no reducing motion is needed")
    axes = semiaxes(canonical, eps) if cls.id in _SEMIAXES_IDS else None
    return ClassificationReport(
        input=c,
        invariants=inv,
        family=fam,
        conic_class=cls,
        canonical=canonical,
        motion=motion,
        semiaxes=axes,
        center=center(c, eps),
        notes=tuple(notes),
    )


def hyperbola_v_params(c: Conic, eps: float = DEFAULT_EPS) -> tuple[Scalar, Scalar]:
    """Recover ``(a, c)`` of ``(a^2-c^2)x^2 - 2(a^2+c^2)xy + (a^2-c^2)y^2 - a^4 = 0``.

    That family has ``a11 = a22`` identically, so only hyperbolas V with
    ``I1 = 0`` are covered.
    """
    report = classify(c, eps)
    if report.class_id != "f3-hyperbola-V":
        raise NotApplicable(f"{report.conic_class.display_name} is not a hyperbola V")
    inv = report.invariants
    if sign(inv.I1, c.scale, eps) != 0:
        raise NotApplicable("only hyperbolas V with I1 = 0 have the tabulated form")
    a = sqrt(sqrt(abs(inv.I3 / inv.I2)))
    a, root = unify(a, sqrt(-inv.I2))
    return a, root / (2 * a)
