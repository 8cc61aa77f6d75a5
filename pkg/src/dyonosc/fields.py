"""Monopole vector potentials: 2D vortex, 3D Dirac string, 5D Yang triplet.

The component conventions here make loop circulations come out negative;
they are kept that way since only gauge-invariant magnitudes feed the
cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, QuantizationError, SingularityError
from .specfun import as_twice

__all__ = [
    "MagneticCharge",
    "dirac_charge",
    "vortex_potential",
    "dirac_potential",
    "yang_potentials",
    "goldhaber_term",
    "circulation",
]

_SING_TOL = 1e-12


@dataclass(frozen=True)
class MagneticCharge:
    """Quantized pair (e, g) with g = hbar c s / e, s half-integer."""

    g: float
    s: float
    e: float
    hbar: float = 1.0
    c: float = 1.0


def dirac_charge(s, e, hbar=1.0, c=1.0) -> MagneticCharge:
    """Magnetic charge g = hbar c s / e; rejects s off the half-integer grid."""
    try:
        as_twice(s)
    except Exception as exc:
        raise QuantizationError(f"s={s} violates the half-integer quantization condition") from exc
    if e == 0:
        raise DomainError("electric charge e must be nonzero")
    return MagneticCharge(g=hbar * c * s / e, s=s, e=e, hbar=hbar, c=c)


def vortex_potential(g, x1, x2) -> np.ndarray:
    """2D vortex potential A = (g/r^2)(x2, -x1); curl is the point flux at 0."""
    r2 = x1 * x1 + x2 * x2
    if r2 <= 0.0:
        raise SingularityError("vortex potential is singular at the origin")
    return np.array([g * x2 / r2, -g * x1 / r2])


def dirac_potential(g, r, alpha, beta) -> np.ndarray:
    """Dirac monopole potential (g sin(beta)/(r(1+cos(beta)))) (sin a, -cos a, 0).

    The string lies along beta = pi; points with 1 + cos(beta) below
    tolerance are rejected.
    """
    if r <= 0.0:
        raise SingularityError("r must be positive")
    denom = 1.0 + math.cos(beta)
    if denom < _SING_TOL:
        raise SingularityError("point lies on the Dirac string (beta = pi)")
    pref = g * math.sin(beta) / (r * denom)
    return np.array([pref * math.sin(alpha), -pref * math.cos(alpha), 0.0])


def yang_potentials(x) -> np.ndarray:
    """The SU(2) triplet A^1, A^2, A^3 at a 5-point, stacked as a (3, 5) array.

    Prefactor 1/(r(r+x0)); the singular line is the nonpositive x0 axis.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (5,):
        raise DomainError("yang potentials live on R^5")
    x0, x1, x2, x3, x4 = x
    r = math.sqrt(float(x @ x))
    if r <= 0.0 or (r + x0) < _SING_TOL * r:
        raise SingularityError("point lies on the singular line (nonpositive x0 semiaxis)")
    pref = 1.0 / (r * (r + x0))
    return pref * np.array(
        [
            [0.0, -x4, -x3, x2, x1],
            [0.0, x3, -x4, -x1, x2],
            [0.0, x2, -x1, x4, -x3],
        ]
    )


def goldhaber_term(s, r, mu=1.0, hbar=1.0):
    """Centrifugal-like monopole addition hbar^2 s^2 / (2 mu r^2)."""
    r = np.asarray(r, dtype=float)
    if np.any(r == 0.0):
        raise SingularityError("goldhaber term diverges at r = 0")
    value = hbar ** 2 * s * s / (2.0 * mu * r * r)
    return float(value) if value.ndim == 0 else value


def circulation(kind, g, radius=None, r=None, beta=None, panels=10_000) -> float:
    """Loop integral of A . dl by composite Simpson over a parametrized circle.

    kind="vortex": circle of given radius about the origin (value -2 pi g,
    independent of radius).  kind="dirac": latitude circle at (r, beta)
    (value -2 pi g (1 - cos beta)).  Loops touching a singularity raise.
    """
    if kind == "vortex":
        if radius is None or radius <= 0:
            raise SingularityError("vortex loop must have positive radius")

        def tangent_dot(t):
            x1, x2 = radius * np.cos(t), radius * np.sin(t)
            a = vortex_potential(g, x1, x2)
            return radius * (-a[0] * math.sin(t) + a[1] * math.cos(t))

    elif kind == "dirac":
        if r is None or r <= 0 or beta is None:
            raise SingularityError("dirac loop needs r > 0 and a polar angle beta")
        if 1.0 + math.cos(beta) < _SING_TOL:
            raise SingularityError("latitude circle intersects the Dirac string")
        rho = r * math.sin(beta)

        def tangent_dot(t):
            a = dirac_potential(g, r, t, beta)
            return rho * (-a[0] * math.sin(t) + a[1] * math.cos(t))

    else:
        raise DomainError(f"no loop rule for field kind {kind!r}")

    n = 2 * panels  # Simpson needs an even subinterval count
    h = 2.0 * math.pi / n
    ts = np.arange(n + 1) * h
    vals = np.array([tangent_dot(t) for t in ts])
    weights = np.ones(n + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return float(h / 3.0 * np.sum(weights * vals))
