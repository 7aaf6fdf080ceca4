"""Scalar handling shared by every module.

Two arithmetic modes coexist. Exact values are ``gmpy2.mpq`` rationals
(ints and ``fractions.Fraction`` are promoted); anything else is a float.
Whenever exact and inexact values meet, everything is coerced to float,
never to ``mpfr``.

Sign tests go through :func:`sign`, which is exact for rationals and uses
the epsilon policy for floats: a float is zero iff
``|x| <= eps * max(1, scale)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

import gmpy2
from gmpy2 import mpq

MPQ = type(mpq(0))
Scalar = Union[MPQ, float]

DEFAULT_EPS = 1e-9


def is_exact(x) -> bool:
    return isinstance(x, (MPQ, int, Fraction))


def to_exact(x) -> MPQ:
    if isinstance(x, MPQ):
        return x
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    if isinstance(x, str):
        return mpq(Fraction(x.strip()))
    if isinstance(x, float):
        return mpq(Fraction(x))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def unify(*values) -> tuple:
    """Return ``values`` all exact (mpq) or all float."""
    types = set(map(type, values))
    if types == {MPQ} or types == {float}:
        return values
    if all(is_exact(v) for v in values):
        return tuple(to_exact(v) for v in values)
    return tuple(float(v) for v in values)


def exact_sqrt(x) -> MPQ | None:
    """Square root of a nonnegative rational if it is rational, else None."""
    x = to_exact(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    if gmpy2.is_square(n) and gmpy2.is_square(d):
        return mpq(gmpy2.isqrt(n), gmpy2.isqrt(d))
    return None


def sqrt(x) -> Scalar:
    """Square root that stays exact when the radicand is a rational square."""
    if is_exact(x):
        r = exact_sqrt(x)
        if r is not None:
            return r
    return math.sqrt(float(x))


def magnitude(values: Iterable) -> float:
    return max((abs(float(v)) for v in values), default=0.0)


def sign(x, scale: float = 1.0, eps: float = DEFAULT_EPS) -> int:
    if is_exact(x):
        return (x > 0) - (x < 0)
    x = float(x)
    if abs(x) <= eps * max(1.0, scale):
        return 0
    return 1 if x > 0 else -1


def surd_sign(a, b, d, scale: float = 1.0, eps: float = DEFAULT_EPS) -> int:
    """Sign of ``a + b*sqrt(d)`` for ``d >= 0``, exact on rationals."""
    if not (is_exact(a) and is_exact(b) and is_exact(d)):
        return sign(float(a) + float(b) * math.sqrt(max(float(d), 0.0)), scale, eps)
    sa = sign(a)
    sb = sign(b) if d != 0 else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 against b^2 d
    return sa * sign(a * a - b * b * d)


def fmt(x) -> str:
    if is_exact(x):
        x = to_exact(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return f"{float(x) + 0.0:.12g}"


def as_json_number(x):
    if is_exact(x):
        x = to_exact(x)
        if x.denominator == 1:
            return int(x.numerator)
    return float(x) + 0.0
