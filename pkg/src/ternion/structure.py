"""Ideal structure of T: the decomposition T = D + G and the isomorphism T ~ C x R.

D is the line spanned by (1, -1, 1); G is the plane {(a - b, a, b)}. Both are
ideals, they annihilate each other, and their unit elements ONE_D and ONE_G are
orthogonal idempotents summing to ONE. G carries a square root of -ONE_G,
so G is a copy of the complex numbers and D a copy of the reals.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Tuple

from .core import Ternion, mul, sub, sup_norm

__all__ = [
    "NotInvertible",
    "SplitForm",
    "Kind",
    "ONE_D",
    "ONE_G",
    "I_G",
    "D_GENERATOR",
    "G_BASIS",
    "proj_d",
    "proj_g",
    "in_d",
    "in_g",
    "split",
    "from_split",
    "classify",
    "invert",
    "invertible_decomposition",
    "annihilates",
    "reduce_mod_d",
]

DEFAULT_TOL = 1e-9

_THIRD = 1.0 / 3.0
_ROOT_THIRD = math.sqrt(1.0 / 3.0)
_HALF_ROOT3 = math.sqrt(3.0) / 2.0

ONE_D = Ternion(_THIRD, -_THIRD, _THIRD)
ONE_G = Ternion(2.0 / 3.0, _THIRD, -_THIRD)
I_G = Ternion(0.0, _ROOT_THIRD, _ROOT_THIRD)
D_GENERATOR = Ternion(1.0, -1.0, 1.0)
G_BASIS = (Ternion(1.0, 1.0, 0.0), Ternion(-1.0, 0.0, 1.0))


class NotInvertible(ArithmeticError):
    """The element lies (within tolerance) in D or G, so it has no inverse."""


@dataclass(frozen=True, slots=True)
class SplitForm:
    """Image (z, r) of a ternion in C x R; z over {ONE_G, I_G}, r over {ONE_D}."""

    z_re: float
    z_im: float
    r: float

    @property
    def z(self) -> complex:
        return complex(self.z_re, self.z_im)

    def __mul__(self, other: "SplitForm") -> "SplitForm":
        z = self.z * other.z
        return SplitForm(z.real, z.imag, self.r * other.r)


class Kind(enum.Enum):
    ZERO = "Zero"
    ZERO_DIVISOR_D = "ZeroDivisorD"
    ZERO_DIVISOR_G = "ZeroDivisorG"
    INVERTIBLE = "Invertible"


def proj_d(x: Ternion) -> Ternion:
    """Component of x in D, i.e. x (x) ONE_D = gamma*(1, -1, 1), gamma = (x1 - xu + xv)/3."""
    return mul(x, ONE_D)


def proj_g(x: Ternion) -> Ternion:
    return mul(x, ONE_G)


def in_d(x: Ternion, tol: float = 0.0) -> bool:
    return sup_norm(sub(x, proj_d(x))) <= tol


def in_g(x: Ternion, tol: float = 0.0) -> bool:
    return sup_norm(sub(x, proj_g(x))) <= tol


def split(x: Ternion) -> SplitForm:
    """Image of x in C x R.

    With g = proj_g(x): z_re = 3/2 * g1 and z_im = sqrt(3)/2 * (gu + gv),
    expanded below in the coordinates of x; r = x1 - xu + xv.
    """
    return SplitForm(
        0.5 * (2.0 * x.x1 + x.xu - x.xv),
        _HALF_ROOT3 * (x.xu + x.xv),
        x.x1 - x.xu + x.xv,
    )


def from_split(s: SplitForm) -> Ternion:
    """z_re*ONE_G + z_im*I_G + r*ONE_D, summed per coordinate."""
    y = _ROOT_THIRD * s.z_im
    return Ternion(
        (2.0 * s.z_re + s.r) / 3.0,
        (s.z_re - s.r) / 3.0 + y,
        (s.r - s.z_re) / 3.0 + y,
    )


def classify(x: Ternion, tol: float = DEFAULT_TOL) -> Kind:
    """Sort x into Zero, a zero divisor in D or G, or Invertible.

    ``tol`` is absolute for the Zero test and relative to the sup norm of x
    for the ideal-membership tests.
    """
    size = sup_norm(x)
    if size <= tol:
        return Kind.ZERO
    if in_d(x, tol * size):
        return Kind.ZERO_DIVISOR_D
    if in_g(x, tol * size):
        return Kind.ZERO_DIVISOR_G
    return Kind.INVERTIBLE


def invert(x: Ternion, tol: float = DEFAULT_TOL) -> Ternion:
    """Multiplicative inverse of x, computed factorwise in C x R.

    Raises NotInvertible when either factor of split(x) is below
    ``tol * sup_norm(x)``; equivalently (A+B)(A-2B) = |z|**2 r**2 is small.
    """
    size = sup_norm(x)
    s = split(x)
    limit = tol * size
    if size == 0.0 or abs(s.z) <= limit or abs(s.r) <= limit:
        raise NotInvertible(f"{x!r} is a zero divisor or zero (tol={tol})")
    zi = 1.0 / s.z
    return from_split(SplitForm(zi.real, zi.imag, 1.0 / s.r))


def invertible_decomposition(x: Ternion) -> Tuple[float, float, float]:
    """Coefficients (a, b, c) with x = a(1,1,0) + b(-1,0,1) + c(1,-1,1).

    x is invertible exactly when a**2 + b**2 > 0 and c != 0.
    """
    c = (x.x1 - x.xu + x.xv) / 3.0
    return x.xu + c, x.xv - c, c


def annihilates(x: Ternion, y: Ternion, tol: float = 0.0) -> bool:
    return sup_norm(mul(x, y)) <= tol


def reduce_mod_d(x: Ternion) -> Ternion:
    """Representative of the coset x + D whose first coordinate is zero."""
    return Ternion(0.0, x.xu + x.x1, x.xv - x.x1)
