"""Closed-form bound-state wavefunctions of the eight dual systems.

Conventions: every radial factor is real and positive near the origin;
normalization constants without a closed form are computed once by
quadrature and cached.  The 1D anyon is defined on the whole line through
the even extension in |x| (an odd extension is available as an option) and
is normalized over (-inf, inf); the variant whose Gamma-function constant
normalizes the x >= 0 half-line instead is exposed via ``halfline=True``.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from ._quad import integrate
from .errors import DomainError, InvalidParameterError, InvalidQuantumNumbersError
from .spectra import PhysicalParams, SystemId, dyon_energy
from .specfun import (
    as_twice,
    gauss2f1_terminating,
    gauss2f1_terminating_deriv,
    hermite,
    kummer_terminating,
    kummer_terminating_deriv,
    log_gamma,
    wigner_small_d,
)

__all__ = [
    "osc1_wavefn",
    "osc2_wavefn",
    "osc2_radial_with_derivs",
    "anyon_wavefn",
    "anyon_radial_with_derivs",
    "dyon2_wavefn",
    "dyon2_radial_with_derivs",
    "osc4_wavefn",
    "osc4_radial_with_derivs",
    "dyon3_wavefn",
    "dyon3_radial_with_derivs",
    "ycm_angular_Z",
    "ycm_Z_with_derivs",
    "ycm_radial_R",
    "ycm_R_with_derivs",
    "normalization",
    "anyon_norm_constant",
]


def _check_n(n, name="n") -> int:
    if not float(n).is_integer() or n < 0:
        raise InvalidQuantumNumbersError(f"{name} must be a nonnegative integer, got {n!r}")
    return int(n)


def _pep_with_derivs(t, p, q, n, c, scale):
    """f = t^p e^{-q t} F(-n, c, scale*t) together with f' and f'' in t.

    Derivatives use the exact term-shifted series of F, no differencing.
    Valid for t > 0 (negative powers of t appear explicitly for p < 2).
    """
    t = np.asarray(t, dtype=float)
    z = scale * t
    F = kummer_terminating(n, c, z)
    F1 = scale * kummer_terminating_deriv(n, c, z, 1)
    F2 = scale * scale * kummer_terminating_deriv(n, c, z, 2)
    damp = np.exp(-q * t)
    f = t ** p * damp * F
    f1 = t ** (p - 1) * damp * ((p - q * t) * F + t * F1)
    f2 = t ** (p - 2) * damp * (
        (p * (p - 1) - 2 * p * q * t + q * q * t * t) * F
        + (2 * p - 2 * q * t) * t * F1
        + t * t * F2
    )
    return f, f1, f2


# ---------------------------------------------------------------- oscillators

def osc1_wavefn(N, omega, u, mu=1.0, hbar=1.0):
    """Normalized 1D oscillator eigenfunction (Hermite form)."""
    N = _check_n(N, "N")
    a2 = mu * omega / hbar
    log_norm = 0.25 * math.log(a2 / math.pi) - 0.5 * (N * math.log(2.0) + log_gamma(N + 1.0))
    u = np.asarray(u, dtype=float)
    value = math.exp(log_norm) * np.exp(-a2 * u * u / 2.0) * hermite(N, np.sqrt(a2) * u)
    return float(value) if value.ndim == 0 else value


@lru_cache(maxsize=256)
def _osc2_norm(n, m_abs, a2):
    # 2 pi * int |f|^2 u du = 1 with f = u^{|M|} e^{-a^2 u^2/2} F(-n, |M|+1, a^2 u^2)
    def dens(u):
        f, _, _ = _pep_with_derivs(a2 * u * u, m_abs / 2.0, 0.5, n, m_abs + 1.0, 1.0)
        return 2.0 * math.pi * f * f * u

    top = math.sqrt((80.0 + 10.0 * (2 * n + m_abs)) / a2)
    value, _ = integrate(dens, 0.0, top, tol=1e-12)
    return 1.0 / math.sqrt(value)


def osc2_wavefn(n, M, omega, u, phi=0.0, mu=1.0, hbar=1.0):
    """Cyclic (2D) oscillator state, E = hbar*omega*(2n+|M|+1)."""
    n = _check_n(n)
    if not float(M).is_integer():
        raise InvalidQuantumNumbersError("M must be an integer")
    M = int(M)
    a2 = mu * omega / hbar
    norm = _osc2_norm(n, abs(M), a2)
    f, _, _ = _pep_with_derivs(a2 * np.asarray(u, float) ** 2, abs(M) / 2.0, 0.5, n, abs(M) + 1.0, 1.0)
    return norm * f * np.exp(1j * M * phi)


def osc2_radial_with_derivs(n, M, omega, u, mu=1.0, hbar=1.0, gaussian="half"):
    """Unnormalized 2D oscillator radial factor and u-derivatives.

    gaussian="half" is the exponent e^{-mu omega u^2 / 2 hbar} consistent
    with the radial equation; gaussian="double" doubles it, a deliberately
    wrong variant kept so residual checks can show they discriminate.
    """
    if gaussian not in ("half", "double"):
        raise InvalidParameterError("gaussian must be 'half' or 'double'")
    q = 0.5 if gaussian == "half" else 1.0
    a2 = mu * omega / hbar
    u = np.asarray(u, dtype=float)
    t = a2 * u * u
    g, g1, g2 = _pep_with_derivs(t, abs(int(M)) / 2.0, q, _check_n(n), abs(int(M)) + 1.0, 1.0)
    dt = 2.0 * a2 * u
    return g, g1 * dt, g2 * dt * dt + g1 * 2.0 * a2


# ------------------------------------------------------------------ 1D anyon

def anyon_norm_constant(n, nu, alpha, mu=1.0, hbar=1.0, halfline=False) -> float:
    """Closed-form constant of the anyon state (Gamma-function form).

    The Gamma form normalizes the x >= 0 half-line; the full-line even
    extension carries an extra 1/sqrt(2).
    """
    n = _check_n(n)
    if nu <= 0:
        raise InvalidParameterError("nu must be positive")
    k = (
        math.sqrt(mu * alpha) / hbar / (n + nu)
        * math.exp(0.5 * (log_gamma(n + 2 * nu) - log_gamma(n + 1.0)) - log_gamma(2 * nu))
    )
    return k if halfline else k / math.sqrt(2.0)


def anyon_wavefn(n, nu, alpha, x, mu=1.0, hbar=1.0, extension="even", halfline=False):
    """1D Coulomb anyon state y^nu e^{-y/2} F(-n, 2nu, y), y = 2 mu alpha |x| / hbar^2 (n+nu)."""
    if extension not in ("even", "odd"):
        raise InvalidParameterError("extension must be 'even' or 'odd'")
    k = anyon_norm_constant(n, nu, alpha, mu=mu, hbar=hbar, halfline=halfline)
    b = 2.0 * mu * alpha / (hbar ** 2 * (n + nu))
    x = np.asarray(x, dtype=float)
    y = b * np.abs(x)
    value = k * y ** nu * np.exp(-y / 2.0) * kummer_terminating(int(n), 2.0 * nu, y)
    if extension == "odd":
        value = value * np.sign(x)
    return float(value) if np.ndim(value) == 0 else value


def anyon_radial_with_derivs(n, nu, alpha, x, mu=1.0, hbar=1.0):
    """Anyon amplitude and x-derivatives on x > 0 (normalized, even branch)."""
    b = 2.0 * mu * alpha / (hbar ** 2 * (n + nu))
    k = anyon_norm_constant(n, nu, alpha, mu=mu, hbar=hbar)
    x = np.asarray(x, dtype=float)
    f, f1, f2 = _pep_with_derivs(b * x, nu, 0.5, _check_n(n), 2.0 * nu, 1.0)
    return k * f, k * b * f1, k * b * b * f2


# ------------------------------------------------------------ 2D charge-dyon

def _dyon2_scale(n, m, s, e2, mu, hbar) -> float:
    # rho = scale * r
    q = n + abs(m + s) + 0.5
    return 2.0 * mu * e2 / (hbar ** 2 * q)


@lru_cache(maxsize=256)
def _dyon2_norm(n, am2, scale):
    # 2 pi int |f(rho(r))|^2 r dr = (2 pi / scale^2) int rho f^2 drho = 1
    am = am2 / 2.0  # |m+s|

    def dens(rho):
        f, _, _ = _pep_with_derivs(rho, am, 0.5, n, 2.0 * am + 1.0, 1.0)
        return rho * f * f

    value, _ = integrate(dens, 0.0, 90.0 + 10.0 * (n + am), tol=1e-12)
    return scale / math.sqrt(2.0 * math.pi * value)


def dyon2_wavefn(n, m, s, e2, r, phi=0.0, mu=1.0, hbar=1.0, prereduced=False):
    """2D charge-dyon state C rho^{|m+s|} e^{-rho/2} F(-n, 2|m+s|+1, rho) e^{i m phi}.

    rho = 2 mu e^2 r / hbar^2 (n+|m+s|+1/2); r is the physical radius.
    With prereduced=True the pre-reduction phase e^{i s phi} is attached,
    which flips sign under phi -> phi + 2 pi when s = 1/2.
    """
    n = _check_n(n)
    if not float(m).is_integer():
        raise InvalidQuantumNumbersError("m must be an integer")
    if s not in (0.0, 0.5):
        raise InvalidQuantumNumbersError("s must be 0 or 1/2")
    am = abs(m + s)
    scale = _dyon2_scale(n, m, s, e2, mu, hbar)
    norm = _dyon2_norm(n, as_twice(am), scale)
    rho = scale * np.asarray(r, dtype=float)
    f, _, _ = _pep_with_derivs(rho, am, 0.5, n, 2.0 * am + 1.0, 1.0)
    angle = (m + s) * phi if prereduced else m * phi
    return norm * f * np.exp(1j * angle)


def dyon2_radial_with_derivs(n, m, s, e2, r, mu=1.0, hbar=1.0):
    """Unnormalized dyon2 radial factor with r-derivatives."""
    am = abs(m + s)
    scale = _dyon2_scale(_check_n(n), m, s, e2, mu, hbar)
    rho = scale * np.asarray(r, dtype=float)
    f, f1, f2 = _pep_with_derivs(rho, am, 0.5, int(n), 2.0 * am + 1.0, 1.0)
    return f, scale * f1, scale * scale * f2


# --------------------------------------------- 4D oscillator / 3D charge-dyon

def _check_jms(j, m, s):
    tj, tm, ts = as_twice(j), as_twice(m), as_twice(s)
    if tj < 0 or abs(tm) > tj or abs(ts) > tj:
        raise InvalidQuantumNumbersError(f"need |m|, |s| <= j, got j={j}, m={m}, s={s}")
    if (tj - tm) % 2 or (tj - ts) % 2:
        raise InvalidQuantumNumbersError("m and s must differ from j by integers")
    return tj


@lru_cache(maxsize=256)
def _radial_moment(n, p, c, weight_power):
    """int_0^inf t^{2p + weight_power} e^{-t} F(-n, c, t)^2 dt (for t-space norms)."""

    def dens(t):
        F = kummer_terminating(n, c, t)
        return t ** (2 * p + weight_power) * np.exp(-t) * F * F

    value, _ = integrate(dens, 0.0, 100.0 + 12.0 * (n + 2 * p + weight_power), tol=1e-12)
    return value


def _osc4_norm(n, j, a2):
    # |Const|^2 * I_rad * 2 pi^2/(2j+1) = 1, radial part in t = a^2 u^2:
    # int (t^j e^{-t/2} F)^2 u^3 du = (1/(2 a2^2)) int t^{2j+1} e^{-t} F^2 dt
    i_rad = _radial_moment(n, j, 2.0 * j + 2.0, 1) / (2.0 * a2 * a2)
    return 1.0 / math.sqrt(i_rad * 2.0 * math.pi ** 2 / (2.0 * j + 1.0))


def osc4_wavefn(n, j, m, s, omega, u, alpha, beta, gamma, mu=1.0, hbar=1.0):
    """4D oscillator state (a u)^{2j} e^{-a^2 u^2/2} F(-n, 2j+2, a^2 u^2) d^j_{ms} e^{i m alpha + i s gamma}."""
    n = _check_n(n)
    _check_jms(j, m, s)
    a2 = mu * omega / hbar
    norm = _osc4_norm(n, float(j), a2)
    t = a2 * np.asarray(u, dtype=float) ** 2
    f, _, _ = _pep_with_derivs(t, float(j), 0.5, n, 2.0 * j + 2.0, 1.0)
    return norm * f * wigner_small_d(j, m, s, beta) * cmath.exp(1j * (m * alpha + s * gamma))


def osc4_radial_with_derivs(n, j, omega, u, mu=1.0, hbar=1.0):
    """Unnormalized 4D oscillator radial factor with u-derivatives."""
    a2 = mu * omega / hbar
    u = np.asarray(u, dtype=float)
    t = a2 * u * u
    g, g1, g2 = _pep_with_derivs(t, float(j), 0.5, _check_n(n), 2.0 * j + 2.0, 1.0)
    dt = 2.0 * a2 * u
    return g, g1 * dt, g2 * dt * dt + g1 * 2.0 * a2


def _dyon3_scale(n, j, e2, mu, hbar) -> float:
    return 2.0 * mu * e2 / (hbar ** 2 * (n + float(j) + 1.0))


@lru_cache(maxsize=256)
def _dyon3_norm(n, tj, scale):
    j = tj / 2.0
    # radial r^2 dr norm in rho: (1/scale^3) int rho^{2j+2} e^{-rho} F^2 drho
    i_rad = _radial_moment(n, j, 2.0 * j + 2.0, 2) / scale ** 3
    return 1.0 / math.sqrt(i_rad * 2.0 * math.pi * 2.0 / (2.0 * j + 1.0))


def dyon3_wavefn(n, j, m, s, e2, r, alpha=0.0, beta=math.pi / 2, mu=1.0, hbar=1.0):
    """3D charge-dyon state C rho^j e^{-rho/2} F(-n, 2j+2, rho) d^j_{ms}(beta) e^{i(m-s)alpha}."""
    n = _check_n(n)
    tj = _check_jms(j, m, s)
    scale = _dyon3_scale(n, j, e2, mu, hbar)
    norm = _dyon3_norm(n, tj, scale)
    rho = scale * np.asarray(r, dtype=float)
    f, _, _ = _pep_with_derivs(rho, float(j), 0.5, n, 2.0 * j + 2.0, 1.0)
    return norm * f * wigner_small_d(j, m, s, beta) * cmath.exp(1j * (m - s) * alpha)


def dyon3_radial_with_derivs(n, j, e2, r, mu=1.0, hbar=1.0):
    """Unnormalized dyon3 radial factor with r-derivatives."""
    scale = _dyon3_scale(_check_n(n), j, e2, mu, hbar)
    rho = scale * np.asarray(r, dtype=float)
    f, f1, f2 = _pep_with_derivs(rho, float(j), 0.5, int(n), 2.0 * j + 2.0, 1.0)
    return f, scale * f1, scale * scale * f2


# ------------------------------------------------------ 5D Yang-Coulomb parts

def _check_ycm_JL(J, L):
    tJ, tL = as_twice(J), as_twice(L)
    if tJ < 0 or tL < 0:
        raise InvalidQuantumNumbersError("J and L must be nonnegative half-integers")
    if (tJ + tL) % 2:
        raise InvalidQuantumNumbersError("J + L must be an integer (N = 2(n_r+n_theta+J+L))")
    return tJ, tL


def ycm_angular_Z(n_theta, J, L, theta, with_derivs=False):
    """Polar factor Z = y^L (1-y)^J F(-n_theta, n_theta+2J+2L+3, 2L+2; y), y = (1-cos theta)/2.

    Regular at both poles because the Gauss series terminates.  Returns Z,
    or (Z, Z', Z'') in theta when with_derivs is set.
    """
    n_theta = _check_n(n_theta, "n_theta")
    _check_ycm_JL(J, L)
    J, L = float(J), float(L)
    b = n_theta + 2.0 * J + 2.0 * L + 3.0
    c = 2.0 * L + 2.0
    theta = np.asarray(theta, dtype=float)
    y = 0.5 * (1.0 - np.cos(theta))
    G = gauss2f1_terminating(n_theta, b, c, y)
    Z = y ** L * (1.0 - y) ** J * G
    if not with_derivs:
        return float(Z) if Z.ndim == 0 else Z
    G1 = gauss2f1_terminating_deriv(n_theta, b, c, y, 1)
    G2 = gauss2f1_terminating_deriv(n_theta, b, c, y, 2)
    fy1 = y ** (L - 1.0) * (1.0 - y) ** (J - 1.0) * (
        L * (1.0 - y) * G - J * y * G + y * (1.0 - y) * G1
    )
    fy2 = y ** (L - 2.0) * (1.0 - y) ** (J - 2.0) * (
        L * (L - 1.0) * (1.0 - y) ** 2 * G
        + J * (J - 1.0) * y * y * G
        - 2.0 * L * J * y * (1.0 - y) * G
        + 2.0 * L * y * (1.0 - y) ** 2 * G1
        - 2.0 * J * y * y * (1.0 - y) * G1
        + y * y * (1.0 - y) ** 2 * G2
    )
    dy = 0.5 * np.sin(theta)
    d2y = 0.5 * np.cos(theta)
    return Z, fy1 * dy, fy2 * dy * dy + fy1 * d2y


def ycm_Z_with_derivs(n_theta, J, L, theta):
    return ycm_angular_Z(n_theta, J, L, theta, with_derivs=True)


def _ycm_k(n_r, lam, e2, mu, hbar) -> float:
    # k = sqrt(-2 mu eps)/hbar with eps at the level N = 2(n_r + lam)
    return mu * e2 / (hbar ** 2 * (n_r + float(lam) + 2.0))


def ycm_radial_R(n_r, lam, e2, r, mu=1.0, hbar=1.0):
    """Radial factor R = r^lam e^{-k r} F(-n_r, 2 lam + 4, 2 k r) (unnormalized)."""
    f, _, _ = ycm_R_with_derivs(n_r, lam, e2, r, mu=mu, hbar=hbar)
    return f


def ycm_R_with_derivs(n_r, lam, e2, r, mu=1.0, hbar=1.0):
    n_r = _check_n(n_r, "n_r")
    if as_twice(lam) < 0:
        raise InvalidQuantumNumbersError("lambda must be a nonnegative half-integer")
    k = _ycm_k(n_r, lam, e2, mu, hbar)
    return _pep_with_derivs(np.asarray(r, dtype=float), float(lam), k, n_r, 2.0 * lam + 4.0, 2.0 * k)


# -------------------------------------------------------------- normalization

def _dsq(j, m, s):
    dvals = np.vectorize(lambda b: wigner_small_d(j, m, s, b) ** 2)
    return dvals


def normalization(system: SystemId, qn: dict, params: PhysicalParams) -> float:
    """Quadrature of |wavefunction|^2 against the system's measure (contract: 1).

    Measures: dx on the line (anyon, even extension); 2 pi r dr (dyon2);
    r^2 dr sin(beta) dbeta dalpha (dyon3); u^3 du (1/8) sin(beta)
    dalpha dbeta dgamma (osc4); r^4 dr and sin^3(theta) dtheta factor by
    factor for the Yang-Coulomb pair (the 6-angle product is out of scope).
    """
    kind = system.kind
    mu, hbar = params.mu, params.hbar
    if kind == "anyon1":
        n = qn["n"]
        nu = qn.get("nu", system.nu)
        alpha = params.coupling()
        b = 2.0 * mu * alpha / (hbar ** 2 * (n + nu))

        def dens(t):  # x = t^2 removes the |x|^(2 nu) kink at the origin
            amp = anyon_wavefn(n, nu, alpha, t * t, mu=mu, hbar=hbar)
            return 2.0 * t * amp * amp

        top = math.sqrt((80.0 + 12.0 * n) / b)
        value, _ = integrate(dens, 0.0, top, tol=1e-9)
        return 2.0 * value
    if kind == "dyon2":
        n, m = qn["n"], qn["m"]
        s = qn.get("s", system.s)
        e2 = params.coupling()
        scale = _dyon2_scale(n, m, s, e2, mu, hbar)

        def dens(r):
            amp = np.abs(dyon2_wavefn(n, m, s, e2, r, mu=mu, hbar=hbar))
            return 2.0 * math.pi * r * amp * amp

        top = (90.0 + 10.0 * (n + abs(m + s))) / scale
        value, _ = integrate(dens, 0.0, top, tol=1e-9)
        return value
    if kind == "dyon3":
        n, j, m, s = qn["n"], qn["j"], qn["m"], qn.get("s", system.s)
        e2 = params.coupling()
        scale = _dyon3_scale(n, j, e2, mu, hbar)

        def dens(r):
            f, _, _ = dyon3_radial_with_derivs(n, j, e2, r, mu=mu, hbar=hbar)
            return r * r * f * f

        top = (100.0 + 12.0 * (n + 2 * j)) / scale
        radial, _ = integrate(dens, 0.0, top, tol=1e-9)
        ang, _ = integrate(lambda b: _dsq(j, m, s)(b) * np.sin(b), 0.0, math.pi, tol=1e-10)
        norm = _dyon3_norm(n, as_twice(j), scale)
        return norm * norm * radial * 2.0 * math.pi * ang
    if kind == "osc4":
        n, j, m, s = qn["n"], qn["j"], qn["m"], qn["s"]
        a2 = mu * params.omega / hbar

        def dens(u):
            f, _, _ = osc4_radial_with_derivs(n, j, params.omega, u, mu=mu, hbar=hbar)
            return u ** 3 * f * f

        top = math.sqrt((100.0 + 12.0 * (2 * n + 2 * j)) / a2)
        radial, _ = integrate(dens, 0.0, top, tol=1e-10)
        ang, _ = integrate(lambda b: _dsq(j, m, s)(b) * np.sin(b), 0.0, math.pi, tol=1e-10)
        norm = _osc4_norm(n, float(j), a2)
        # alpha and gamma integrate to 2 pi * 4 pi, the metric factor is 1/8
        return norm * norm * radial * ang * 2.0 * math.pi * 4.0 * math.pi / 8.0
    if kind == "osc1":
        N = qn["N"]
        a2 = mu * params.omega / hbar
        top = math.sqrt((60.0 + 10.0 * N) / a2)
        value, _ = integrate(lambda u: osc1_wavefn(N, params.omega, u, mu=mu, hbar=hbar) ** 2,
                             0.0, top, tol=1e-10)
        return 2.0 * value
    if kind == "osc2":
        n, M = qn["n"], qn["M"]
        a2 = mu * params.omega / hbar

        def dens(u):
            amp = np.abs(osc2_wavefn(n, M, params.omega, u, mu=mu, hbar=hbar))
            return 2.0 * math.pi * u * amp * amp

        top = math.sqrt((80.0 + 10.0 * (2 * n + abs(M))) / a2)
        value, _ = integrate(dens, 0.0, top, tol=1e-10)
        return value
    if kind == "ycm5":
        n_r, n_theta, J, L = qn["n_r"], qn["n_theta"], qn["J"], qn["L"]
        lam = n_theta + float(J) + float(L)
        e2 = params.coupling()
        k = _ycm_k(n_r, lam, e2, mu, hbar)
        c_rad = _ycm_R_norm(n_r, as_twice(lam), k)
        c_ang = _ycm_Z_norm(n_theta, as_twice(J), as_twice(L))

        def rad(r):
            f = ycm_radial_R(n_r, lam, e2, r, mu=mu, hbar=hbar)
            return r ** 4 * f * f

        def ang(theta):
            z = ycm_angular_Z(n_theta, J, L, theta)
            return np.sin(theta) ** 3 * z * z

        i_rad, _ = integrate(rad, 0.0, (50.0 + 8.0 * (n_r + lam)) / k, tol=1e-10)
        i_ang, _ = integrate(ang, 0.0, math.pi, tol=1e-10)
        return (c_rad ** 2 * i_rad) * (c_ang ** 2 * i_ang)
    raise InvalidParameterError(f"no normalization defined for {kind!r}")


@lru_cache(maxsize=256)
def _ycm_R_norm(n_r, tlam, k):
    # int R^2 r^4 dr in t = 2kr: (2k)^{-(2 lam + 5)} int t^{2 lam + 4} e^{-t} F^2 dt
    lam = tlam / 2.0
    moment = _radial_moment(n_r, lam, 2.0 * lam + 4.0, 4)
    return 1.0 / math.sqrt(moment * (2.0 * k) ** (-(2.0 * lam + 5.0)))


@lru_cache(maxsize=256)
def _ycm_Z_norm(n_theta, tJ, tL):
    # int Z^2 sin^3 theta dtheta = 8 int_0^1 y^{2L+1} (1-y)^{2J+1} G^2 dy
    J, L = tJ / 2.0, tL / 2.0
    b = n_theta + 2.0 * J + 2.0 * L + 3.0
    c = 2.0 * L + 2.0

    def dens(y):
        G = gauss2f1_terminating(n_theta, b, c, y)
        return 8.0 * y ** (2.0 * L + 1.0) * (1.0 - y) ** (2.0 * J + 1.0) * G * G

    value, _ = integrate(dens, 0.0, 1.0, tol=1e-12)
    return 1.0 / math.sqrt(value)
