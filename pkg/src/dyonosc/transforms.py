"""Bilinear norm-square coordinate maps in dimensions 1, 2, 4 and 8.

The maps R^D -> R^d (d = 1, 2, 3, 5) square the Euclidean norm,
(sum u^2)^2 = sum x^2, which by Hurwitz's theorem singles out exactly
these four dimensions.  For D >= 2 the map is x = H(u; D) u with H a
D x D matrix linear in u; the rows beyond d annihilate u identically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFiberError, InvalidParameterError, UnsupportedDimensionError

__all__ = [
    "OscPoint",
    "DyonPoint",
    "FiberAngles",
    "OSC_DIMS",
    "DYON_DIM_OF",
    "hurwitz_matrix",
    "forward_map",
    "euler_residual",
    "zero_rows_residual",
    "fiber_angles",
    "ks_point_from_angles",
]

OSC_DIMS = (1, 2, 4, 8)
DYON_DIM_OF = {1: 1, 2: 2, 4: 3, 8: 5}


@dataclass(frozen=True)
class OscPoint:
    """Point u in the oscillator configuration space R^D, D in {1,2,4,8}."""

    u: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.u)
        if len(vals) not in OSC_DIMS:
            raise UnsupportedDimensionError(f"oscillator dimension must be one of {OSC_DIMS}, got {len(vals)}")
        if not all(math.isfinite(v) for v in vals):
            raise InvalidParameterError("coordinates must be finite")
        object.__setattr__(self, "u", vals)

    @property
    def dim(self) -> int:
        return len(self.u)

    def norm2(self) -> float:
        return sum(v * v for v in self.u)


@dataclass(frozen=True)
class DyonPoint:
    """Point x on the charge-dyon side, dimension d in {1,2,3,5}."""

    x: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.x)
        if len(vals) not in (1, 2, 3, 5):
            raise UnsupportedDimensionError(f"dyon dimension must be in (1, 2, 3, 5), got {len(vals)}")
        if not all(math.isfinite(v) for v in vals):
            raise InvalidParameterError("coordinates must be finite")
        object.__setattr__(self, "x", vals)

    @property
    def dim(self) -> int:
        return len(self.x)

    def r(self) -> float:
        return math.sqrt(sum(v * v for v in self.x))


@dataclass(frozen=True)
class FiberAngles:
    """Fiber coordinates (alpha, beta, gamma); ranges [0,2pi), [0,pi), [0,4pi)."""

    alpha: float
    beta: float
    gamma: float


def _as_osc(u) -> OscPoint:
    return u if isinstance(u, OscPoint) else OscPoint(tuple(u))


def hurwitz_matrix(u) -> np.ndarray:
    """The matrix H(u; D) with H(u)u = (x, 0...) and H H^T = u^2 I, D in {2,4,8}."""
    pt = _as_osc(u)
    if pt.dim == 2:
        u1, u2 = pt.u
        return np.array([[u1, -u2], [u2, u1]])
    if pt.dim == 4:
        u1, u2, u3, u4 = pt.u
        return np.array(
            [
                [u3, -u4, u1, -u2],
                [u4, u3, u2, u1],
                [u1, u2, -u3, -u4],
                [u2, -u1, -u4, u3],
            ]
        )
    if pt.dim == 8:
        u0, u1, u2, u3, u4, u5, u6, u7 = pt.u
        return np.array(
            [
                [u0, u1, u2, u3, -u4, -u5, -u6, -u7],
                [u4, u5, -u6, -u7, u0, u1, -u2, -u3],
                [u5, -u4, u7, -u6, -u1, u0, -u3, u2],
                [u6, u7, u4, u5, u2, u3, u0, u1],
                [u7, -u6, -u5, u4, u3, -u2, -u1, u0],
                [u1, -u0, u3, -u2, u5, -u4, u7, -u6],
                [u2, -u3, -u0, u1, -u6, u7, u4, -u5],
                [u3, u2, -u1, -u0, -u7, -u6, u5, u4],
            ]
        )
    raise UnsupportedDimensionError("the D=1 map x=u^2 has no matrix form")


def forward_map(u) -> DyonPoint:
    """Map the oscillator point u to its dyon image x (norm-square map).

    D=1: x = u^2; D=2,4,8: the first d rows of H(u; D) u, written out as the
    Levi-Civita, Kustaanheimo-Stiefel and Hurwitz bilinear formulas.
    """
    pt = _as_osc(u)
    if pt.dim == 1:
        return DyonPoint((pt.u[0] ** 2,))
    if pt.dim == 2:
        u1, u2 = pt.u
        return DyonPoint((u1 * u1 - u2 * u2, 2.0 * u1 * u2))
    if pt.dim == 4:
        u1, u2, u3, u4 = pt.u
        return DyonPoint(
            (
                2.0 * (u1 * u3 - u2 * u4),
                2.0 * (u1 * u4 + u2 * u3),
                u1 * u1 + u2 * u2 - u3 * u3 - u4 * u4,
            )
        )
    u0, u1, u2, u3, u4, u5, u6, u7 = pt.u
    return DyonPoint(
        (
            u0 * u0 + u1 * u1 + u2 * u2 + u3 * u3 - u4 * u4 - u5 * u5 - u6 * u6 - u7 * u7,
            2.0 * (u0 * u4 + u1 * u5 - u2 * u6 - u3 * u7),
            2.0 * (u0 * u5 - u1 * u4 + u2 * u7 - u3 * u6),
            2.0 * (u0 * u6 + u1 * u7 + u2 * u4 + u3 * u5),
            2.0 * (u0 * u7 - u1 * u6 - u2 * u5 + u3 * u4),
        )
    )


def euler_residual(u) -> float:
    """(sum u^2)^2 - sum x^2 for x = forward_map(u); zero up to rounding."""
    pt = _as_osc(u)
    x = forward_map(pt)
    return pt.norm2() ** 2 - sum(v * v for v in x.x)


def zero_rows_residual(u) -> float:
    """Max |row| over the rows d+1..D of H(u; D) u, which vanish identically."""
    pt = _as_osc(u)
    if pt.dim not in (4, 8):
        raise UnsupportedDimensionError("zero rows exist only for D in {4, 8}")
    d = DYON_DIM_OF[pt.dim]
    full = hurwitz_matrix(pt) @ np.asarray(pt.u)
    return float(np.max(np.abs(full[d:])))


def _wrap(angle: float, period: float) -> float:
    wrapped = math.fmod(angle, period)
    if wrapped < 0.0:
        wrapped += period
    return wrapped


def _pair_args(pt: OscPoint, i_first: int):
    p = complex(pt.u[i_first], pt.u[i_first + 1])
    q = complex(pt.u[i_first + 2], pt.u[i_first + 3])
    if p == 0 or q == 0:
        raise DegenerateFiberError("fiber angles undefined where a complex coordinate pair vanishes")
    return p, q


def fiber_angles(u) -> FiberAngles:
    """Extract the fiber angles of the D=4 or D=8 map.

    The complex-logarithm definitions of the angles are evaluated through
    two-argument arctangents, so the results are exactly real with fixed
    branches: alpha in [0, 2pi), beta in (0, pi), gamma in [0, 4pi).  For
    D=4 the angles invert the symmetric-top parametrization (see
    ks_point_from_angles); for D=8 they refer to the pairs
    (u0 + i u1, u2 + i u3).
    """
    pt = _as_osc(u)
    if pt.dim == 4:
        p, q = _pair_args(pt, 0)
        a, b = cmath.phase(p), cmath.phase(q)
        beta = 2.0 * math.atan2(abs(q), abs(p))
        total = a + b
        alpha = _wrap(total, 2.0 * math.pi)
        gamma = _wrap(a - b, 4.0 * math.pi)
        if not (0.0 <= total < 2.0 * math.pi):  # reduction flipped both half-angle signs
            gamma = _wrap(gamma + 2.0 * math.pi, 4.0 * math.pi)
        return FiberAngles(alpha, beta, gamma)
    if pt.dim == 8:
        p, q = _pair_args(pt, 0)
        a, b = cmath.phase(p), cmath.phase(q)
        beta = 2.0 * math.atan2(abs(p), abs(q))
        diff = b - a
        alpha = _wrap(diff, 2.0 * math.pi)
        gamma = _wrap(a + b, 4.0 * math.pi)
        if not (0.0 <= diff < 2.0 * math.pi):
            gamma = _wrap(gamma + 2.0 * math.pi, 4.0 * math.pi)
        return FiberAngles(alpha, beta, gamma)
    raise UnsupportedDimensionError("fiber angles exist only for D in {4, 8}")


def ks_point_from_angles(norm: float, alpha: float, beta: float, gamma: float) -> OscPoint:
    """Rebuild the D=4 point from (|u|, alpha, beta, gamma).

    Uses u1 + i u2 = u cos(beta/2) e^{i(alpha+gamma)/2} and
    u3 + i u4 = u sin(beta/2) e^{i(alpha-gamma)/2}.
    """
    if norm < 0:
        raise InvalidParameterError("norm must be nonnegative")
    p = norm * math.cos(beta / 2.0) * cmath.exp(1j * (alpha + gamma) / 2.0)
    q = norm * math.sin(beta / 2.0) * cmath.exp(1j * (alpha - gamma) / 2.0)
    return OscPoint((p.real, p.imag, q.real, q.imag))
