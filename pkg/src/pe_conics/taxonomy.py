"""The fixed table of the 43 motion classes of conics.

Conditions use ``t = sign(a11 + a22)``, which is a motion invariant on
families 1 and 2, and ``K = (a00 a11 - a01^2) + (a00 a22 - a02^2)``.
Rows flagged ``reconstructed`` are the twelve centreless family-1/family-2
classes whose names and conditions were derived here rather than read off
a published table.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import UnknownId


class Family(enum.IntEnum):
    FAMILY1 = 1
    FAMILY2 = 2
    FAMILY3 = 3
    FAMILY4 = 4


class TypeTag(enum.Enum):
    FIRST = "first"
    SECOND = "second"
    SPECIAL = "special"
    UNTYPED = "untyped"


@dataclass(frozen=True)
class ConicClass:
    id: str
    family: Family
    proper: bool
    type_tag: TypeTag
    display_name: str
    conditions: str
    canonical_form: str
    reconstructed: bool = False


F1, F2, F3, F4 = Family.FAMILY1, Family.FAMILY2, Family.FAMILY3, Family.FAMILY4
FIRST, SECOND, SPECIAL, UNTYPED = TypeTag.FIRST, TypeTag.SECOND, TypeTag.SPECIAL, TypeTag.UNTYPED


def _c(id, family, proper, tag, name, conditions, form, reconstructed=False):
    return ConicClass(id, family, proper, tag, name, conditions, form, reconstructed)


_TABLE = (
    # family 1, centred (I2 != 0)
    _c("f1-imaginary-ellipse-first", F1, True, FIRST, "first type imaginary ellipse",
       "I2>0, t*I3>0, t*I1<0", "x^2/a^2 + y^2/b^2 = -1, a>b"),
    _c("f1-imaginary-ellipse-second", F1, True, SECOND, "second type imaginary ellipse",
       "I2>0, t*I3>0, t*I1>0", "x^2/a^2 + y^2/b^2 = -1, a<b"),
    _c("f1-imaginary-ellipse-special", F1, True, SPECIAL, "special imaginary ellipse",
       "I2>0, t*I3>0, I1=0", "x^2/a^2 + y^2/a^2 = -1"),
    _c("f1-real-ellipse-first", F1, True, FIRST, "first type real ellipse",
       "I2>0, t*I3<0, t*I1<0", "x^2/a^2 + y^2/b^2 = 1, a>b"),
    _c("f1-real-ellipse-second", F1, True, SECOND, "second type real ellipse",
       "I2>0, t*I3<0, t*I1>0", "x^2/a^2 + y^2/b^2 = 1, a<b"),
    _c("f1-real-ellipse-special", F1, True, SPECIAL, "special real ellipse",
       "I2>0, t*I3<0, I1=0", "x^2/a^2 + y^2/a^2 = 1"),
    _c("f1-hyperbola-I-first", F1, True, FIRST, "first type hyperbola I",
       "I2<0, I1*I3>0, t*I1<0", "x^2/a^2 - y^2/b^2 = 1, a>b"),
    _c("f1-hyperbola-I-second", F1, True, SECOND, "second type hyperbola I",
       "I2<0, I1*I3<0, t*I1>0", "-x^2/a^2 + y^2/b^2 = 1, a<b"),
    _c("f1-hyperbola-IV-first", F1, True, FIRST, "first type hyperbola IV",
       "I2<0, I1*I3<0, t*I1<0", "-x^2/a^2 + y^2/b^2 = 1, a>b"),
    _c("f1-hyperbola-IV-second", F1, True, SECOND, "second type hyperbola IV",
       "I2<0, I1*I3>0, t*I1>0", "x^2/a^2 - y^2/b^2 = 1, a<b"),
    _c("f1-imaginary-lines-first", F1, False, FIRST, "first type pair of imaginary straight lines",
       "I2>0, I3=0, t*I1<0", "a11 x^2 + a22 y^2 = 0, |a11|<|a22|, a11*a22>0"),
    _c("f1-imaginary-lines-second", F1, False, SECOND, "second type pair of imaginary straight lines",
       "I2>0, I3=0, t*I1>0", "a11 x^2 + a22 y^2 = 0, |a11|>|a22|, a11*a22>0"),
    _c("f1-imaginary-lines-special", F1, False, SPECIAL, "special pair of imaginary straight lines",
       "I2>0, I3=0, I1=0", "a11 x^2 + a22 y^2 = 0, a11=a22"),
    _c("f1-intersecting-lines-first", F1, False, FIRST, "first type pair of intersecting straight lines",
       "I2<0, I3=0, t*I1<0", "a11 x^2 + a22 y^2 = 0, |a11|<|a22|, a11*a22<0"),
    _c("f1-intersecting-lines-second", F1, False, SECOND, "second type pair of intersecting straight lines",
       "I2<0, I3=0, t*I1>0", "a11 x^2 + a22 y^2 = 0, |a11|>|a22|, a11*a22<0"),
    # family 1, centreless (I2 = 0)
    _c("f1-parabola-first", F1, True, FIRST, "first type parabola",
       "I2=0, I3!=0, t*I1<0", "y^2 = 2px", True),
    _c("f1-parabola-second", F1, True, SECOND, "second type parabola",
       "I2=0, I3!=0, t*I1>0", "x^2 = 2py", True),
    _c("f1-real-parallel-lines-first", F1, False, FIRST, "first type pair of real parallel lines",
       "I2=0, I3=0, t*I1<0, I4>0", "y^2 = a^2", True),
    _c("f1-real-parallel-lines-second", F1, False, SECOND, "second type pair of real parallel lines",
       "I2=0, I3=0, t*I1>0, I4<0", "x^2 = a^2", True),
    _c("f1-imaginary-parallel-lines-first", F1, False, FIRST, "first type pair of imaginary parallel lines",
       "I2=0, I3=0, t*I1<0, I4<0", "y^2 = -a^2", True),
    _c("f1-imaginary-parallel-lines-second", F1, False, SECOND, "second type pair of imaginary parallel lines",
       "I2=0, I3=0, t*I1>0, I4>0", "x^2 = -a^2", True),
    _c("f1-double-line-first", F1, False, FIRST, "first type double line",
       "I2=0, I3=0, t*I1<0, I4=0", "y^2 = 0", True),
    _c("f1-double-line-second", F1, False, SECOND, "second type double line",
       "I2=0, I3=0, t*I1>0, I4=0", "x^2 = 0", True),
    # family 2
    _c("f2-hyperbola-II-first", F2, True, FIRST, "first type hyperbola II",
       "I2<0, I1*I3>0, t*I1<0",
       "x^2(a^2-c^2) + 2c^2 xy - y^2(a^2+c^2) - a^4 = 0"),
    _c("f2-hyperbola-II-second", F2, True, SECOND, "second type hyperbola II",
       "I2<0, I1*I3<0, t*I1>0",
       "x^2(a^2+c^2) - 2c^2 xy - y^2(a^2-c^2) + a^4 = 0"),
    _c("f2-hyperbola-III-first", F2, True, FIRST, "first type hyperbola III",
       "I2<0, I1*I3<0, t*I1<0",
       "x^2(a^2-c^2) + 2c^2 xy - y^2(a^2+c^2) + a^4 = 0"),
    _c("f2-hyperbola-III-second", F2, True, SECOND, "second type hyperbola III",
       "I2<0, I1*I3>0, t*I1>0",
       "x^2(a^2+c^2) - 2c^2 xy - y^2(a^2-c^2) - a^4 = 0"),
    _c("f2-parabola-isotropic", F2, True, UNTYPED, "parabola with double isotropic direction",
       "I2=0, I3!=0", "(x-y)^2 = 2p(x+y)", True),
    _c("f2-lines-isotropic-spacelike", F2, False, FIRST, "pair of lines, one isotropic, one spacelike",
       "I2<0, I3=0, t*I1<0", "x^2(a^2-c^2) + 2c^2 xy - y^2(a^2+c^2) = 0"),
    _c("f2-lines-isotropic-timelike", F2, False, SECOND, "pair of lines, one isotropic, one timelike",
       "I2<0, I3=0, t*I1>0", "x^2(a^2+c^2) - 2c^2 xy - y^2(a^2-c^2) = 0"),
    _c("f2-real-parallel-isotropic-lines", F2, False, UNTYPED, "pair of real parallel isotropic lines",
       "I2=0, I3=0, K<0", "(x-y)^2 = a^2", True),
    _c("f2-imaginary-parallel-isotropic-lines", F2, False, UNTYPED,
       "pair of imaginary parallel isotropic lines", "I2=0, I3=0, K>0", "(x-y)^2 = -a^2", True),
    _c("f2-double-isotropic-line", F2, False, UNTYPED, "double isotropic line",
       "I2=0, I3=0, K=0", "(x-y)^2 = 0", True),
    # family 3
    _c("f3-hyperbola-V", F3, True, UNTYPED, "hyperbola V",
       "|a11+a22|<2|a12|, I3!=0", "(a^2-c^2)x^2 - 2(a^2+c^2)xy + (a^2-c^2)y^2 - a^4 = 0"),
    _c("f3-lines-spacelike-timelike", F3, False, UNTYPED, "pair of lines, one spacelike and one timelike",
       "|a11+a22|<2|a12|, I3=0", "(a^2-c^2)x^2 - 2(a^2+c^2)xy + (a^2-c^2)y^2 = 0"),
    # family 4
    _c("f4-hyperbolic-circle-first", F4, True, FIRST, "first type hyperbolic circle",
       "a11+a22=0, a12=0, I2!=0, I1*I3>0", "x^2 - y^2 - a^2 = 0"),
    _c("f4-hyperbolic-circle-second", F4, True, SECOND, "second type hyperbolic circle",
       "a11+a22=0, a12=0, I2!=0, I1*I3<0", "x^2 - y^2 + a^2 = 0"),
    _c("f4-pair-isotropic-lines", F4, False, UNTYPED, "pair of isotropic lines",
       "a11+a22=0, a12=0, I2!=0, I3=0", "x^2 - y^2 = 0"),
    _c("f4-omega-plus-spacelike", F4, False, UNTYPED, "ω + spacelike line",
       "sigma=0, I4>0", "x0 (2 a02 y + a00) = 0"),
    _c("f4-omega-plus-timelike", F4, False, UNTYPED, "ω + timelike line",
       "sigma=0, I4<0", "x0 (2 a01 x + a00) = 0"),
    _c("f4-omega-plus-isotropic", F4, False, UNTYPED, "ω + isotropic line",
       "sigma=0, I4=0, a01!=0", "x0 (2 a01 (x + y) + a00) = 0"),
    _c("f4-double-omega", F4, False, UNTYPED, "double absolute line ω",
       "sigma=0, I4=0, a01=0, I5!=0", "a00 x0^2 = 0"),
    _c("f4-zero-polynomial", F4, False, UNTYPED, "zero polynomial",
       "sigma=0, I4=0, a01=0, I5=0", "0 = 0"),
)

_BY_ID = {c.id: c for c in _TABLE}

# reserved so the count is complete; the zero matrix is rejected as input
ZERO_POLYNOMIAL_ID = "f4-zero-polynomial"


def taxonomy() -> tuple[ConicClass, ...]:
    return _TABLE


def lookup(class_id: str) -> ConicClass:
    try:
        return _BY_ID[class_id]
    except KeyError:
        raise UnknownId(f"unknown taxonomy id {class_id!r}") from None
