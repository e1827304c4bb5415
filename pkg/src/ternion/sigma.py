"""The hyperbolic plane sigma = span{ONE, DELTA} inside T.

Over the basis (ONE, J) with J = ONE/3 + 2*DELTA/3, the product of T
restricted to sigma is split-complex multiplication: J (x) J = ONE.
"""
from __future__ import annotations

from typing import NamedTuple

from .core import DELTA, J, ONE, Ternion, add, scale, sup_norm

__all__ = [
    "NotInSigma",
    "HyperbolicNumber",
    "in_sigma",
    "to_sigma_coords",
    "from_sigma_coords",
    "hyper_mul",
    "dot",
    "delta_orthogonality_check",
]

DEFAULT_TOL = 1e-9


class NotInSigma(ValueError):
    pass


class HyperbolicNumber(NamedTuple):
    s: float
    t: float


def _default_tol(x: Ternion) -> float:
    return DEFAULT_TOL * sup_norm(x)


def in_sigma(x: Ternion, tol: float | None = None) -> bool:
    """Membership in span{(1,0,0), (0,1,-1)}: xu + xv vanishes.

    ``tol`` defaults to 1e-9 times the sup norm of x.
    """
    if tol is None:
        tol = _default_tol(x)
    return abs(x.xu + x.xv) <= tol


def to_sigma_coords(x: Ternion, tol: float | None = None) -> HyperbolicNumber:
    if not in_sigma(x, tol):
        raise NotInSigma(f"{x!r} is not in span(1, u - v)")
    return HyperbolicNumber(x.x1 - 0.5 * x.xu, 1.5 * x.xu)


def from_sigma_coords(h: HyperbolicNumber) -> Ternion:
    return add(scale(h.s, ONE), scale(h.t, J))


def hyper_mul(h1: HyperbolicNumber, h2: HyperbolicNumber) -> HyperbolicNumber:
    return HyperbolicNumber(h1.s * h2.s + h1.t * h2.t, h1.s * h2.t + h1.t * h2.s)


def dot(x: Ternion, y: Ternion) -> float:
    """Euclidean scalar product of the coordinate vectors."""
    return x.x1 * y.x1 + x.xu * y.xu + x.xv * y.xv


def delta_orthogonality_check() -> bool:
    return dot(DELTA, ONE) == 0.0
