"""Conics built from focal definitions and from the canonical tables.

These constructors never call the classifier, so they serve as independent
oracles for it.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from gmpy2 import mpq

from .conic import Conic, evaluate
from .errors import BadParams, SampleOffConic, UnknownId
from .numeric import DEFAULT_EPS, Scalar, exact_sqrt, is_exact, magnitude, sign, to_exact, unify
from .pe_plane import Motion, PEPoint
from .taxonomy import TypeTag, lookup, taxonomy


class Axis(enum.Enum):
    X_AXIS = "x"
    Y_AXIS = "y"
    ISO_PLUS = "iso+"
    ISO_MINUS = "iso-"


@dataclass(frozen=True)
class FocusParams:
    a: Scalar
    c: Scalar
    type_tag: TypeTag = TypeTag.FIRST
    axis: Axis = Axis.X_AXIS

    def __post_init__(self):
        if sign(self.a) <= 0 or sign(self.c) <= 0:
            raise BadParams(f"a and c must be positive, got a={self.a}, c={self.c}")
        if self.type_tag not in (TypeTag.FIRST, TypeTag.SECOND):
            raise BadParams("focal hyperbolas are of the first or second type")


@dataclass(frozen=True)
class FocalConic:
    """A conic with the data of its focal definition.

    ``timelike`` marks constants of the form ``2ai``: the identity is then
    checked with ``-4a^2`` in place of ``4a^2``. ``seed`` is a rational point
    on the curve, or None when the curve has a rational isotropic direction
    to sweep along instead.
    """

    conic: Conic
    foci: tuple
    two_a: Scalar
    timelike: bool
    seed: Optional[PEPoint]


def _num(*vals):
    return unify(*vals)


def hyperbola_I(p: FocusParams) -> Conic:
    return hyperbola_I_focal(p).conic


def hyperbola_I_focal(p: FocusParams) -> FocalConic:
    a, c, zero = _num(p.a, p.c, 0)
    one = zero + 1
    first = p.type_tag is TypeTag.FIRST
    if p.axis is Axis.X_AXIS:
        foci = (PEPoint(c, zero), PEPoint(-c, zero))
        if first:
            if sign(a - c) <= 0:
                raise BadParams("first type hyperbola I needs a > c")
            conic = Conic(-one, zero, zero, 1 / (a * a), zero, -1 / (a * a - c * c))
            seed = PEPoint(a, zero)
        else:
            conic = Conic(-one, zero, zero, -1 / (a * a), zero, 1 / (a * a + c * c))
            seed = PEPoint(c, (a * a + c * c) / a)
    elif p.axis is Axis.Y_AXIS:
        foci = (PEPoint(zero, c), PEPoint(zero, -c))
        if first:
            conic = Conic(-one, zero, zero, 1 / (a * a + c * c), zero, -1 / (a * a))
            seed = PEPoint((a * a + c * c) / a, c)
        else:
            if sign(a - c) <= 0:
                raise BadParams("second type hyperbola I with foci on the y-axis needs a > c")
            conic = Conic(-one, zero, zero, -1 / (a * a - c * c), zero, 1 / (a * a))
            seed = PEPoint(zero, a)
    else:
        raise BadParams("hyperbola I has its foci on a coordinate axis")
    return FocalConic(conic, foci, 2 * a, not first, seed)


def hyperbola_II(p: FocusParams) -> Conic:
    return hyperbola_II_focal(p).conic


def hyperbola_II_focal(p: FocusParams) -> FocalConic:
    a, c = _num(p.a, p.c)
    if sign(a - c) <= 0:
        raise BadParams("hyperbola II needs a > c")
    if p.axis not in (Axis.ISO_PLUS, Axis.ISO_MINUS):
        raise BadParams("hyperbola II has its foci on an isotropic line")
    a2, c2, a4 = a * a, c * c, a * a * a * a
    s = 1 if p.axis is Axis.ISO_PLUS else -1
    if p.type_tag is TypeTag.FIRST:
        conic = Conic(-a4, 0 * a, 0 * a, a2 - c2, s * c2, -(a2 + c2))
    else:
        conic = Conic(a4, 0 * a, 0 * a, a2 + c2, -s * c2, -(a2 - c2))
    foci = (PEPoint(c, s * c), PEPoint(-c, -s * c))
    return FocalConic(conic, foci, 2 * a, p.type_tag is TypeTag.SECOND, None)


def focus_identity_check(
    c: Conic,
    foci: tuple,
    two_a: Scalar,
    samples: Iterable[PEPoint],
    timelike: bool = False,
    eps: float = DEFAULT_EPS,
    rtol: float = 1e-9,
) -> bool:
    """Check ``(d1^2 + d2^2 - K)^2 = 4 d1^2 d2^2`` at every sample.

    ``di^2`` is the signed squared distance to focus ``i`` and ``K`` is
    ``(2a)^2``, negated for a timelike constant. Exact inputs are compared
    exactly; floats to relative tolerance ``rtol``.
    """
    f1, f2 = foci
    k = two_a * two_a
    if timelike:
        k = -k
    for m in samples:
        value = evaluate(c, m)
        if sign(value, c.scale * max(1.0, magnitude((m.x, m.y))) ** 2, eps) != 0:
            raise SampleOffConic(f"F({m.x}, {m.y}) = {value}")
        x, y, fx1, fy1, fx2, fy2, kk = unify(m.x, m.y, f1.x, f1.y, f2.x, f2.y, k)
        d1 = (x - fx1) ** 2 - (y - fy1) ** 2
        d2 = (x - fx2) ** 2 - (y - fy2) ** 2
        lhs = (d1 + d2 - kk) ** 2
        rhs = 4 * d1 * d2
        if is_exact(lhs):
            if lhs != rhs:
                return False
        elif abs(lhs - rhs) > rtol * max(1.0, abs(lhs), abs(rhs)):
            return False
    return True


def _half_gradient(c: Conic, p: PEPoint):
    x, y = p.x, p.y
    return (c.a11 * x + c.a12 * y + c.a01, c.a12 * x + c.a22 * y + c.a02)


def _q(c: Conic, v1, v2):
    return c.a11 * v1 * v1 + 2 * c.a12 * v1 * v2 + c.a22 * v2 * v2


def _slopes() -> Iterable[tuple]:
    # small rationals in a fixed order, as directions (1, m) and (m, 1)
    for den in itertools.count(1):
        for num in range(-3 * den, 3 * den + 1):
            if math.gcd(num, den) != 1:
                continue
            m = Fraction(num, den)
            yield (1, m)
            if num != 0:
                yield (m, 1)


def isotropic_direction(c: Conic) -> Optional[tuple]:
    """A rational direction ``v`` with ``Q(v) = 0``, if one exists."""
    a11, a12, a22 = c.a11, c.a12, c.a22
    if not c.is_exact:
        return None
    if a22 == 0:
        return (0, 1) if a12 != 0 or a11 != 0 else (1, 0)
    # a22 t^2 + 2 a12 t + a11 = 0 for v = (1, t)
    root = exact_sqrt(a12 * a12 - a11 * a22)
    if root is None:
        return None
    return (1, (-a12 + root) / a22)


def find_rational_point(c: Conic, max_den: int = 12, span: int = 6) -> Optional[PEPoint]:
    """Search small rationals ``x`` (then ``y``) for a rational point on ``c``."""
    if not c.is_exact:
        return None
    for den in range(1, max_den + 1):
        for num in range(-span * den, span * den + 1):
            t = to_exact(Fraction(num, den))
            for swap in (False, True):
                # quadratic in the other coordinate
                if not swap:
                    qa, qb, qc = c.a22, 2 * (c.a12 * t + c.a02), c.a11 * t * t + 2 * c.a01 * t + c.a00
                else:
                    qa, qb, qc = c.a11, 2 * (c.a12 * t + c.a01), c.a22 * t * t + 2 * c.a02 * t + c.a00
                if qa == 0:
                    if qb == 0:
                        continue
                    u = -qc / qb
                else:
                    root = exact_sqrt(qb * qb - 4 * qa * qc)
                    if root is None:
                        continue
                    u = (-qb + root) / (2 * qa)
                return PEPoint(u, t) if swap else PEPoint(t, u)
    return None


def sample_points(c: Conic, n: int, seed: Optional[PEPoint] = None) -> list:
    """``n`` distinct points on ``c``, exact when ``c`` is exact.

    With a seed, the pencil of lines through it cuts one further point per
    line. Without one, lines parallel to a rational isotropic direction are
    swept (each meets the conic once); failing that a rational seed is
    searched for.
    """
    pts = []
    seen = set()

    def add(p):
        key = (p.x, p.y)
        if key not in seen:
            seen.add(key)
            pts.append(p)

    exact = c.is_exact
    if seed is None:
        v = isotropic_direction(c)
        if v is not None:
            v1, v2 = unify(*v)
            for k in itertools.count():
                if len(pts) >= n or k > 50 * n:
                    break
                t = to_exact(Fraction((k + 1) // 2 * (1 if k % 2 else -1), 4))
                base = PEPoint(-v2 * t, v1 * t)
                gx, gy = _half_gradient(c, base)
                lin = 2 * (gx * v1 + gy * v2)
                if lin == 0:
                    continue
                tau = -evaluate(c, base) / lin
                add(PEPoint(base.x + tau * v1, base.y + tau * v2))
            return pts
        seed = find_rational_point(c)
        if seed is None:
            raise BadParams("no rational point found to seed the sampler")
    sx, sy = unify(seed.x, seed.y) if exact else (float(seed.x), float(seed.y))
    if not exact:
        c = c.to_float()
    seed = PEPoint(sx, sy)
    gx, gy = _half_gradient(c, seed)
    for v1, v2 in _slopes():
        if len(pts) >= n:
            break
        v1, v2 = unify(*((v1, v2) if exact else (float(v1), float(v2))))
        q = _q(c, v1, v2)
        lin = 2 * (gx * v1 + gy * v2)
        if sign(q, c.scale) == 0 or sign(lin, c.scale) == 0:
            continue
        tau = -lin / q
        add(PEPoint(sx + tau * v1, sy + tau * v2))
    return pts


# Canonical representatives -------------------------------------------------

GRID = tuple(to_exact(Fraction(s)) for s in ("1/2", "1", "3/2", "2", "3"))

_AB_FORMS = {
    # id: (sign a11, sign a22, a00, relation between a and b)
    "f1-imaginary-ellipse-first": (1, 1, 1, ">"),
    "f1-imaginary-ellipse-second": (1, 1, 1, "<"),
    "f1-imaginary-ellipse-special": (1, 1, 1, "="),
    "f1-real-ellipse-first": (1, 1, -1, ">"),
    "f1-real-ellipse-second": (1, 1, -1, "<"),
    "f1-real-ellipse-special": (1, 1, -1, "="),
    "f1-hyperbola-I-first": (1, -1, -1, ">"),
    "f1-hyperbola-I-second": (-1, 1, -1, "<"),
    "f1-hyperbola-IV-first": (-1, 1, -1, ">"),
    "f1-hyperbola-IV-second": (1, -1, -1, "<"),
    "f1-imaginary-lines-first": (1, 1, 0, ">"),
    "f1-imaginary-lines-second": (1, 1, 0, "<"),
    "f1-imaginary-lines-special": (1, 1, 0, "="),
    "f1-intersecting-lines-first": (1, -1, 0, ">"),
    "f1-intersecting-lines-second": (1, -1, 0, "<"),
}

# id -> (first type quadratic part, sign of a^4 constant or None)
_AC_FORMS = {
    "f2-hyperbola-II-first": ("first", -1),
    "f2-hyperbola-II-second": ("second", 1),
    "f2-hyperbola-III-first": ("first", 1),
    "f2-hyperbola-III-second": ("second", -1),
    "f2-lines-isotropic-spacelike": ("first", 0),
    "f2-lines-isotropic-timelike": ("second", 0),
    "f3-hyperbola-V": ("v", -1),
    "f3-lines-spacelike-timelike": ("v", 0),
}

_PARAMS = {
    **{k: ("a", "b") for k in _AB_FORMS},
    **{k: ("a", "c") for k in _AC_FORMS},
    "f1-parabola-first": ("p",),
    "f1-parabola-second": ("p",),
    "f1-real-parallel-lines-first": ("a",),
    "f1-real-parallel-lines-second": ("a",),
    "f1-imaginary-parallel-lines-first": ("a",),
    "f1-imaginary-parallel-lines-second": ("a",),
    "f1-double-line-first": (),
    "f1-double-line-second": (),
    "f2-parabola-isotropic": ("p",),
    "f2-real-parallel-isotropic-lines": ("a",),
    "f2-imaginary-parallel-isotropic-lines": ("a",),
    "f2-double-isotropic-line": (),
    "f4-hyperbolic-circle-first": ("a",),
    "f4-hyperbolic-circle-second": ("a",),
    "f4-pair-isotropic-lines": (),
    "f4-omega-plus-spacelike": ("a02",),
    "f4-omega-plus-timelike": ("a01",),
    "f4-omega-plus-isotropic": ("a01",),
    "f4-double-omega": ("a00",),
}


def _positive(params: dict, name: str):
    if name not in params:
        raise BadParams(f"missing parameter {name!r}")
    (v,) = unify(params[name])
    if sign(v) <= 0:
        raise BadParams(f"parameter {name} must be positive, got {v}")
    return v


def _nonzero(params: dict, name: str):
    if name not in params:
        raise BadParams(f"missing parameter {name!r}")
    (v,) = unify(params[name])
    if sign(v) == 0:
        raise BadParams(f"parameter {name} must be nonzero")
    return v


def canonical_conic(class_id: str, **params) -> Conic:
    """The tabulated representative of ``class_id`` for the given parameters."""
    lookup(class_id)
    if class_id not in _PARAMS:
        raise UnknownId(f"{class_id!r} has no representative (it is not a locus)")
    expected = set(_PARAMS[class_id])
    if class_id.endswith("-special") and "b" not in params and "a" in params:
        params = {**params, "b": params["a"]}
    extra = set(params) - expected
    if extra:
        raise BadParams(f"unexpected parameters {sorted(extra)} for {class_id}")

    if class_id in _AB_FORMS:
        s11, s22, a00, rel = _AB_FORMS[class_id]
        a, b = _positive(params, "a"), _positive(params, "b")
        a, b = unify(a, b)
        got = ">" if a > b else "<" if a < b else "="
        if got != rel:
            raise BadParams(f"{class_id} needs a {rel} b, got a={a}, b={b}")
        return Conic(a00 + 0 * a, 0 * a, 0 * a, s11 / (a * a), 0 * a, s22 / (b * b))

    if class_id in _AC_FORMS:
        kind, const = _AC_FORMS[class_id]
        a, c = unify(_positive(params, "a"), _positive(params, "c"))
        a2, c2 = a * a, c * c
        if kind != "v" and not a > c:
            raise BadParams(f"{class_id} needs a > c, got a={a}, c={c}")
        if kind == "first":
            return Conic(const * a2 * a2, 0 * a, 0 * a, a2 - c2, c2, -(a2 + c2))
        if kind == "second":
            return Conic(const * a2 * a2, 0 * a, 0 * a, a2 + c2, -c2, -(a2 - c2))
        return Conic(const * a2 * a2, 0 * a, 0 * a, a2 - c2, -(a2 + c2), a2 - c2)

    if class_id == "f1-parabola-first":
        return Conic(0, -_positive(params, "p"), 0, 0, 0, 1)
    if class_id == "f1-parabola-second":
        return Conic(0, 0, -_positive(params, "p"), 1, 0, 0)
    if class_id.startswith("f1-") and "parallel" in class_id:
        a = _positive(params, "a")
        const = -a * a if "real" in class_id else a * a
        return Conic(const, 0, 0, 0, 0, 1) if class_id.endswith("first") else Conic(const, 0, 0, 1, 0, 0)
    if class_id == "f1-double-line-first":
        return Conic(0, 0, 0, 0, 0, 1)
    if class_id == "f1-double-line-second":
        return Conic(0, 0, 0, 1, 0, 0)

    # (x - y)^2 = x^2 - 2xy + y^2
    if class_id == "f2-parabola-isotropic":
        p = _positive(params, "p")
        return Conic(0, -p, -p, 1, -1, 1)
    if class_id == "f2-real-parallel-isotropic-lines":
        a = _positive(params, "a")
        return Conic(-a * a, 0, 0, 1, -1, 1)
    if class_id == "f2-imaginary-parallel-isotropic-lines":
        a = _positive(params, "a")
        return Conic(a * a, 0, 0, 1, -1, 1)
    if class_id == "f2-double-isotropic-line":
        return Conic(0, 0, 0, 1, -1, 1)

    if class_id == "f4-hyperbolic-circle-first":
        a = _positive(params, "a")
        return Conic(-a * a, 0, 0, 1, 0, -1)
    if class_id == "f4-hyperbolic-circle-second":
        a = _positive(params, "a")
        return Conic(a * a, 0, 0, 1, 0, -1)
    if class_id == "f4-pair-isotropic-lines":
        return Conic(0, 0, 0, 1, 0, -1)
    if class_id == "f4-omega-plus-spacelike":
        return Conic(0, 0, _nonzero(params, "a02"), 0, 0, 0)
    if class_id == "f4-omega-plus-timelike":
        return Conic(0, _nonzero(params, "a01"), 0, 0, 0, 0)
    if class_id == "f4-omega-plus-isotropic":
        v = _nonzero(params, "a01")
        return Conic(0, v, v, 0, 0, 0)
    if class_id == "f4-double-omega":
        return Conic(_nonzero(params, "a00"), 0, 0, 0, 0, 0)
    raise UnknownId(class_id)  # pragma: no cover


def parameter_grid(class_id: str, grid: Sequence = GRID) -> list:
    """Every valid parameter dict for ``class_id`` drawn from ``grid``."""
    lookup(class_id)
    names = _PARAMS.get(class_id)
    if names is None:
        return []
    out = []
    for values in itertools.product(grid, repeat=len(names)):
        params = dict(zip(names, values))
        try:
            canonical_conic(class_id, **params)
        except BadParams:
            continue
        out.append(params)
    return out


def constructible_ids() -> list:
    return [c.id for c in taxonomy() if c.id in _PARAMS]


# Random generators ---------------------------------------------------------


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_motion(seed, phi_range=(-2.0, 2.0), t_range=(-5.0, 5.0), exact: bool = False) -> Motion:
    """A seeded motion; exact ones round ``e**phi`` to a multiple of 1/16."""
    rng = _rng(seed)
    phi = rng.uniform(*phi_range)
    tx, ty = rng.uniform(*t_range), rng.uniform(*t_range)
    if not exact:
        return Motion.from_phi(phi, tx, ty) if phi_range[0] != phi_range[1] else Motion(1.0, 0.0, tx, ty)
    q = mpq(max(1, round(math.exp(phi) * 16)), 16)
    return Motion.from_exp(q, mpq(round(tx * 8), 8), mpq(round(ty * 8), 8))


def random_conic(seed, coeff_range=(-5, 5), exact: bool = True) -> Conic:
    """A seeded conic with integer (or float) coefficients; never the zero matrix."""
    rng = _rng(seed)
    lo, hi = coeff_range
    while True:
        if exact:
            vals = [rng.randint(lo, hi) for _ in range(6)]
        else:
            vals = [rng.uniform(lo, hi) for _ in range(6)]
        if any(vals):
            return Conic(*vals)
