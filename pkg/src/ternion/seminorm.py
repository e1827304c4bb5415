"""The multiplicative absolute value on T and the distances it induces.

``abs_value`` vanishes exactly on the ideal D, so it is a seminorm on T and
``distance`` is only a pseudometric. ``quotient_distance`` is the same number
read as a genuine metric on the cosets T/D.
"""
from __future__ import annotations

import math

from .core import Ternion, quad_forms, sub
from .structure import reduce_mod_d

__all__ = ["abs_value", "a_plus_b", "a_minus_b", "a_minus_2b", "distance", "quotient_distance"]


def a_plus_b(x: Ternion) -> float:
    """A + B as the half-sum of squares (x1+xu)^2 + (xu+xv)^2 + (x1-xv)^2.

    Same value as ``sum(quad_forms(x))`` without the cancellation near D.
    """
    x1, xu, xv = x.x1, x.xu, x.xv
    return 0.5 * ((x1 + xu) ** 2 + (xu + xv) ** 2 + (x1 - xv) ** 2)


def a_minus_b(x: Ternion) -> float:
    x1, xu, xv = x.x1, x.xu, x.xv
    return 0.5 * ((x1 - xu) ** 2 + (xu - xv) ** 2 + (x1 + xv) ** 2)


def a_minus_2b(x: Ternion) -> float:
    return (x.x1 - x.xu + x.xv) ** 2


def abs_value(x: Ternion) -> float:
    """||x|| = sqrt(A + B)."""
    s = a_plus_b(x)
    if __debug__:
        a, b = quad_forms(x)
        assert a + b >= -1e-9 * max(1.0, a), f"A + B = {a + b} is negative for {x!r}"
    return math.sqrt(max(0.0, s))


def distance(x: Ternion, y: Ternion) -> float:
    return abs_value(sub(x, y))


def quotient_distance(x: Ternion, y: Ternion) -> float:
    return distance(reduce_mod_d(x), reduce_mod_d(y))
