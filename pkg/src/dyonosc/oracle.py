"""Independent finite-difference eigenvalue oracle for the radial equations.

The radial operator R'' + ((d-1)/u) R' - (Lambda/u^2) R + (2mu/hbar^2)(E - V) R
is brought to 1D Schrodinger form by R = chi * u^{-(d-1)/2}, discretized with
the standard 3-point stencil on a uniform grid with Dirichlet ends, and the
lowest eigenvalues are extracted by Sturm-sequence bisection on the symmetric
tridiagonal matrix.  The inverse-square coefficient (centrifugal plus the
substitution shift) is represented by its exact discrete annihilator of the
regular power u^gamma; the naive pointwise value loses convergence entirely
at the critical coefficient -1/4 (2D s-states).

None of this knows about the closed-form spectra: the oracle is the
brute-force side of every spectrum check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError, InvalidParameterError

__all__ = [
    "RadialProblem",
    "EigenResult",
    "ResidualReport",
    "solve_radial",
    "solve_angular_theta",
    "residual",
    "harmonic_rmax",
    "coulomb_rmax",
    "sturm_lowest",
]


@dataclass(frozen=True)
class RadialProblem:
    """Radial eigenproblem description.

    angular_coeff is the full coefficient Lambda of the -Lambda/u^2 term
    (e.g. L(L+D-2), l(l+d-2), lambda(lambda+3), or -nu(1-nu) for the
    anyon); potential is a vectorized V(u).
    """

    dim_eff: float
    angular_coeff: float
    potential: object
    domain_end: float
    grid_points: int = 4000
    mu: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.grid_points < 100:
            raise InvalidParameterError("grid_points must be at least 100")
        if self.domain_end <= 0:
            raise InvalidParameterError("domain_end must be positive")


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: np.ndarray
    grid: np.ndarray
    est_error: np.ndarray


@dataclass(frozen=True)
class ResidualReport:
    value: float
    refine_ratio: float | None = None


def harmonic_rmax(k, dim_eff, omega, mu=1.0, hbar=1.0) -> float:
    """Domain covering the classical turning point of the k-th level with margin."""
    return 6.0 * math.sqrt(hbar * (2.0 * k + dim_eff) / (mu * omega))

def coulomb_rmax(k, angular_coeff, dim_eff, e2, mu=1.0, hbar=1.0) -> float:
    """Domain for Coulomb problems: 3 (k + root + 2)^2 Bohr-like radii.

    The outermost requested state turns classically near 2 q^2 a with
    q ~ k + root + 1 and a = hbar^2/(mu e2), so this leaves a 50% decay
    margin; a larger constant wastes resolution the 3-point stencil cannot
    spare on desk-scale grids.
    """
    half = (dim_eff - 2.0) / 2.0
    root = -half + math.sqrt(half * half + angular_coeff)  # solves x(x + d - 2) = Lambda
    return 3.0 * (k + root + 2.0) ** 2 * hbar ** 2 / (mu * e2)


def _sturm_counts(diag, off2, shifts, pivmin):
    """Number of eigenvalues below each shift (LDL^T sign counts)."""
    q = diag[0] - shifts
    q = np.where(np.abs(q) < pivmin, -pivmin, q)
    counts = (q < 0).astype(np.int64)
    for i in range(1, diag.size):
        q = diag[i] - shifts - off2[i - 1] / q
        q = np.where(np.abs(q) < pivmin, -pivmin, q)
        counts += q < 0
    return counts


def sturm_lowest(diag, off, k, rtol=1e-13, max_sweeps=60) -> np.ndarray:
    """Lowest k eigenvalues of the symmetric tridiagonal (diag, off).

    Bisection on Sturm-sequence counts; every bracket is probed at 16
    interior points per sweep, so each sweep shrinks all brackets 17-fold.
    Raises ConvergenceError if the sweep budget is exhausted.
    """
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    if k < 1 or k > diag.size:
        raise InvalidParameterError(f"need 1 <= k <= {diag.size}, got {k}")
    off2 = off * off
    pivmin = max(np.max(off2), 1.0) * 1e-30
    pad = np.concatenate(([0.0], np.abs(off)))
    rad = pad + np.concatenate((np.abs(off), [0.0]))
    lo = float(np.min(diag - rad))
    hi = float(np.max(diag + rad))
    los = np.full(k, lo)
    his = np.full(k, hi)
    idx = np.arange(k)
    probes_per = 16
    t = np.arange(1, probes_per + 1) / (probes_per + 1.0)
    for _ in range(max_sweeps):
        scale = np.maximum(np.abs(los), np.abs(his)) + 1e-300
        if np.all(his - los <= rtol * scale):
            return 0.5 * (los + his)
        widths = his - los
        probes = los[:, None] + widths[:, None] * t[None, :]
        counts = _sturm_counts(diag, off2, probes.ravel(), pivmin).reshape(k, probes_per)
        n_below = np.sum(counts <= idx[:, None], axis=1)  # prefix: probes left of eigenvalue
        los = np.where(n_below > 0, probes[idx, np.maximum(n_below - 1, 0)], los)
        his = np.where(n_below < probes_per, probes[idx, np.minimum(n_below, probes_per - 1)], his)
    raise ConvergenceError("Sturm bisection did not reach its tolerance")


def _indicial_centrifugal(lam_eff, n, kinetic):
    """Discrete inverse-square term: annihilates u^gamma exactly on the grid."""
    if lam_eff < -0.25:
        raise DomainError(
            f"effective inverse-square coefficient {lam_eff} below the critical -1/4"
        )
    gamma = 0.5 + math.sqrt(lam_eff + 0.25)
    i = np.arange(1, n + 1, dtype=float)
    return kinetic * ((i + 1.0) ** gamma - 2.0 * i ** gamma + (i - 1.0) ** gamma) / i ** gamma


def _build_tridiag(problem: RadialProblem, grid_points: int):
    h = problem.domain_end / (grid_points + 1)
    u = h * np.arange(1, grid_points + 1)
    kin = problem.hbar ** 2 / (2.0 * problem.mu * h * h)
    shift = (problem.dim_eff - 1.0) * (problem.dim_eff - 3.0) / 4.0
    diag = 2.0 * kin + np.asarray(problem.potential(u), dtype=float)
    diag = diag + _indicial_centrifugal(problem.angular_coeff + shift, grid_points, kin)
    off = np.full(grid_points - 1, -kin)
    return diag, off, u


def solve_radial(problem: RadialProblem, k: int) -> EigenResult:
    """Lowest k eigenvalues with a Richardson error estimate from grids (n, 2n).

    The reported eigenvalues come from the requested grid; the companion
    2n-grid solve only feeds the per-eigenvalue O(h^2) error estimate.
    """
    if k > problem.grid_points // 10:
        raise InvalidParameterError("k must not exceed grid_points / 10")
    diag, off, u = _build_tridiag(problem, problem.grid_points)
    values = sturm_lowest(diag, off, k)
    diag2, off2, _ = _build_tridiag(problem, 2 * problem.grid_points + 1)
    refined = sturm_lowest(diag2, off2, k)
    est = 4.0 / 3.0 * np.abs(values - refined)
    return EigenResult(eigenvalues=values, grid=u, est_error=est)


def solve_angular_theta(L, J, k, grid_points: int = 2000) -> EigenResult:
    """Lowest k values of lambda(lambda+3) of the polar equation on (0, pi).

    Weight sin^3(theta) symmetrized by Z = chi sin^{-3/2}; the 1D operator
    gains +3/4 / sin^2 and its eigenvalues are lambda(lambda+3) + 9/4.
    """
    if L < 0 or J < 0:
        raise InvalidParameterError("L and J must be nonnegative")
    if k > grid_points // 10:
        raise InvalidParameterError("k must not exceed grid_points / 10")

    def build(n):
        h = math.pi / (n + 1)
        th = h * np.arange(1, n + 1)
        cos = np.cos(th)
        pot = (
            2.0 * L * (L + 1.0) / (1.0 - cos)
            + 2.0 * J * (J + 1.0) / (1.0 + cos)
            + 0.75 / np.sin(th) ** 2
        )
        kin = 1.0 / (h * h)
        return 2.0 * kin + pot, np.full(n - 1, -kin), th

    diag, off, th = build(grid_points)
    vals = sturm_lowest(diag, off, k) - 9.0 / 4.0
    diag2, off2, _ = build(2 * grid_points + 1)
    refined = sturm_lowest(diag2, off2, k) - 9.0 / 4.0
    est = 4.0 / 3.0 * np.abs(vals - refined)
    return EigenResult(eigenvalues=vals, grid=th, est_error=est)


# ----------------------------------------------------------------- residuals

def _ode_coefficients(ode: str, grid, p: dict):
    """(c1, c0) of f'' + c1 f' + c0 f = 0 for the named equation."""
    mu = p.get("mu", 1.0)
    hbar = p.get("hbar", 1.0)
    two_mu = 2.0 * mu / hbar ** 2
    g = np.asarray(grid, dtype=float)
    if ode == "osc_radial":
        D, L = p["D"], p["L"]
        c1 = (D - 1.0) / g
        c0 = -L * (L + D - 2.0) / g ** 2 + two_mu * (p["E"] - mu * p["omega"] ** 2 * g ** 2 / 2.0)
    elif ode == "coulomb_radial":
        d, l = p["d"], p["l"]
        c1 = (d - 1.0) / g
        c0 = -l * (l + d - 2.0) / g ** 2 + two_mu * (p["eps"] + p["alpha"] / g)
    elif ode == "anyon":
        nu = p["nu"]
        c1 = np.zeros_like(g)
        c0 = two_mu * (p["eps"] + p["alpha"] / np.abs(g)) + nu * (1.0 - nu) / g ** 2
    elif ode == "dyon2_radial":
        ms = p["m"] + p["s"]
        c1 = 1.0 / g
        c0 = -ms * ms / g ** 2 + two_mu * (p["eps"] + p["e2"] / g)
    elif ode == "dyon3_radial":
        j, s = p["j"], p["s"]
        goldhaber = hbar ** 2 * s * s / (2.0 * mu * g ** 2)
        c1 = 2.0 / g
        c0 = -(j * (j + 1.0) - s * s) / g ** 2 + two_mu * (p["eps"] + p["e2"] / g - goldhaber)
    elif ode == "ycm_theta":
        L, J, lam = p["L"], p["J"], p["lam"]
        cos = np.cos(g)
        c1 = 3.0 * cos / np.sin(g)
        c0 = lam * (lam + 3.0) - 2.0 * L * (L + 1.0) / (1.0 - cos) - 2.0 * J * (J + 1.0) / (1.0 + cos)
    elif ode == "ycm_radial":
        lam = p["lam"]
        c1 = 4.0 / g
        c0 = -lam * (lam + 3.0) / g ** 2 + two_mu * (p["eps"] + p["e2"] / g)
    else:
        raise InvalidParameterError(f"unknown ODE id {ode!r}")
    return c1, c0


def _fd_residual(ode, f, grid, params):
    h = grid[1] - grid[0]
    inner = slice(1, -1)
    f1 = (f[2:] - f[:-2]) / (2.0 * h)
    f2 = (f[2:] - 2.0 * f[1:-1] + f[:-2]) / (h * h)
    c1, c0 = _ode_coefficients(ode, grid[inner], params)
    res = f2 + c1 * f1 + c0 * f[inner]
    scale = np.abs(f2) + np.abs(c1 * f1) + np.abs(c0 * f[inner])
    keep = slice(1, -1)  # drop one more point at each end (2 total per side)
    return float(np.max(np.abs(res[keep])) / np.max(scale))


def residual(ode: str, f, grid, derivs=None, **params) -> ResidualReport:
    """Max normalized pointwise residual of the named ODE on the samples.

    With derivs=(f', f'') the residual is computed from the supplied
    (typically analytic) derivatives.  Otherwise centered differences are
    used, two points are excluded at each end, and the report carries the
    ratio residual(2h)/residual(h) so callers can confirm O(h^2).
    """
    f = np.asarray(f, dtype=float)
    grid = np.asarray(grid, dtype=float)
    if derivs is not None:
        f1, f2 = (np.asarray(a, dtype=float) for a in derivs)
        c1, c0 = _ode_coefficients(ode, grid, params)
        res = f2 + c1 * f1 + c0 * f
        scale = np.abs(f2) + np.abs(c1 * f1) + np.abs(c0 * f)
        inner = slice(2, -2)
        denom = float(np.max(scale))
        if denom == 0.0:  # every term vanishes identically (constant solution)
            return ResidualReport(float(np.max(np.abs(res[inner]))))
        return ResidualReport(float(np.max(np.abs(res[inner])) / denom))
    if grid.size < 54:
        raise InvalidParameterError("need at least 50 interior points for the FD residual")
    steps = np.diff(grid)
    if not np.allclose(steps, steps[0], rtol=1e-9):
        raise InvalidParameterError("FD residual requires a uniform grid")
    fine = _fd_residual(ode, f, grid, params)
    coarse = _fd_residual(ode, f[::2], grid[::2], params)
    return ResidualReport(fine, refine_ratio=coarse / fine)
