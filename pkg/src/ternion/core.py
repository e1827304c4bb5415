"""Elements of the three-dimensional algebra T and their basis-level arithmetic.

A ternion is written over the basis {1, u, v} with the multiplication table

    1*1 = 1    u*u = v    v*v = -u
    1*u = u    1*v = v    u*v = v*u = -1

which makes T a commutative, associative, unital real algebra.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Tuple

__all__ = [
    "NonFiniteError",
    "Ternion",
    "QuadraticPair",
    "RegularRep",
    "ONE",
    "U",
    "V",
    "ZERO",
    "DELTA",
    "J",
    "add",
    "neg",
    "sub",
    "scale",
    "mul",
    "conj",
    "quad_forms",
    "conj_product",
    "shifted_coeffs",
    "regular_rep",
    "sup_norm",
    "close",
]


class NonFiniteError(ValueError):
    """Raised when a ternion would carry a NaN or infinite component."""


@dataclass(frozen=True, slots=True)
class Ternion:
    x1: float
    xu: float
    xv: float

    def __post_init__(self):
        if not (math.isfinite(self.x1) and math.isfinite(self.xu) and math.isfinite(self.xv)):
            raise NonFiniteError(f"non-finite ternion component in ({self.x1}, {self.xu}, {self.xv})")

    @classmethod
    def of(cls, values: Iterable[float]) -> "Ternion":
        a, b, c = values
        return cls(float(a), float(b), float(c))

    def coords(self) -> Tuple[float, float, float]:
        return (self.x1, self.xu, self.xv)

    def __iter__(self):
        return iter((self.x1, self.xu, self.xv))

    def __add__(self, other):
        if not isinstance(other, Ternion):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Ternion):
            return NotImplemented
        return sub(self, other)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, Ternion):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return scale(other, self)
        return NotImplemented

    def __repr__(self):
        return f"Ternion({self.x1!r}, {self.xu!r}, {self.xv!r})"


class QuadraticPair(NamedTuple):
    """Values of the forms A(x) = |x|_2^2 and B(x) = x1*xu + xu*xv - xv*x1."""

    a: float
    b: float


ONE = Ternion(1.0, 0.0, 0.0)
U = Ternion(0.0, 1.0, 0.0)
V = Ternion(0.0, 0.0, 1.0)
ZERO = Ternion(0.0, 0.0, 0.0)
# delta = u - v, orthogonal to ONE in the Euclidean sense
DELTA = Ternion(0.0, 1.0, -1.0)
# hyperbolic unit of the plane span{ONE, DELTA}: J = ONE/3 + 2*DELTA/3
J = Ternion(1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0)


def add(x: Ternion, y: Ternion) -> Ternion:
    return Ternion(x.x1 + y.x1, x.xu + y.xu, x.xv + y.xv)


def neg(x: Ternion) -> Ternion:
    return Ternion(-x.x1, -x.xu, -x.xv)


def sub(x: Ternion, y: Ternion) -> Ternion:
    return Ternion(x.x1 - y.x1, x.xu - y.xu, x.xv - y.xv)


def scale(gamma: float, x: Ternion) -> Ternion:
    return Ternion(gamma * x.x1, gamma * x.xu, gamma * x.xv)


def mul(x: Ternion, y: Ternion) -> Ternion:
    """Product x (x) y, bilinear and commutative, with ONE as unit."""
    return Ternion(
        x.x1 * y.x1 - x.xu * y.xv - x.xv * y.xu,
        x.x1 * y.xu + x.xu * y.x1 - x.xv * y.xv,
        x.x1 * y.xv + x.xu * y.xu + x.xv * y.x1,
    )


def conj(x: Ternion) -> Ternion:
    """Sigma-conjugation (x1, xu, xv) -> (x1, -xv, -xu); an involutive automorphism."""
    return Ternion(x.x1, -x.xv, -x.xu)


def quad_forms(x: Ternion) -> QuadraticPair:
    x1, xu, xv = x.x1, x.xu, x.xv
    return QuadraticPair(x1 * x1 + xu * xu + xv * xv, x1 * xu + xu * xv - xv * x1)


def conj_product(x: Ternion) -> Ternion:
    """x (x) conj(x), which always equals (A, B, -B) = A*ONE + B*DELTA."""
    return mul(x, conj(x))


def shifted_coeffs(x: Ternion) -> Tuple[float, float]:
    """Coordinates of x (x) conj(x) over the basis (ONE, J).

    Returns ``(A - B/2, 3B/2)``. Their sum is A + B; their difference is
    A - 2B = (x1 - xu + xv)**2, not A - B.
    """
    a, b = quad_forms(x)
    return a - 0.5 * b, 1.5 * b


Matrix3 = Tuple[Tuple[float, float, float], Tuple[float, float, float], Tuple[float, float, float]]


@dataclass(frozen=True, slots=True)
class RegularRep:
    """Matrix of left multiplication by a fixed ternion; column k is x (x) e_k."""

    m: Matrix3

    def apply(self, y: Ternion) -> Ternion:
        (a, b, c), (d, e, f), (g, h, k) = self.m
        return Ternion(
            a * y.x1 + b * y.xu + c * y.xv,
            d * y.x1 + e * y.xu + f * y.xv,
            g * y.x1 + h * y.xu + k * y.xv,
        )

    def __matmul__(self, other: "RegularRep") -> "RegularRep":
        p, q = self.m, other.m
        return RegularRep(
            tuple(
                tuple(sum(p[i][k] * q[k][j] for k in range(3)) for j in range(3))
                for i in range(3)
            )
        )

    def det(self) -> float:
        (a, b, c), (d, e, f), (g, h, k) = self.m
        return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)

    def column(self, k: int) -> Ternion:
        return Ternion(self.m[0][k], self.m[1][k], self.m[2][k])


# Left-multiplication matrices of the basis elements, read off the table above
# rather than from mul(), so that regular_rep stays an independent check on it.
_L_ONE = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
_L_U = ((0, 0, -1), (1, 0, 0), (0, 1, 0))     # u*1 = u, u*u = v, u*v = -1
_L_V = ((0, -1, 0), (0, 0, -1), (1, 0, 0))    # v*1 = v, v*u = -1, v*v = -u


def regular_rep(x: Ternion) -> RegularRep:
    return RegularRep(
        tuple(
            tuple(
                x.x1 * _L_ONE[i][j] + x.xu * _L_U[i][j] + x.xv * _L_V[i][j]
                for j in range(3)
            )
            for i in range(3)
        )
    )


def sup_norm(x: Ternion) -> float:
    return max(abs(x.x1), abs(x.xu), abs(x.xv))


def close(x: Ternion, y: Ternion, tol: float, scale: float = 1.0) -> bool:
    """True when ``x`` and ``y`` agree componentwise within ``tol * scale``."""
    return sup_norm(sub(x, y)) <= tol * scale
