import cmath
import math

import numpy as np
import pytest

from dyonosc import oracle, transforms
from dyonosc._quad import integrate
from dyonosc.errors import InvalidParameterError, InvalidQuantumNumbersError
from dyonosc.spectra import PhysicalParams, SystemId, dyon_energy
from dyonosc.specfun import gauss2f1_terminating, wigner_small_d
from dyonosc.wavefun import (
    anyon_norm_constant,
    anyon_radial_with_derivs,
    anyon_wavefn,
    dyon2_radial_with_derivs,
    dyon2_wavefn,
    dyon3_radial_with_derivs,
    dyon3_wavefn,
    normalization,
    osc1_wavefn,
    osc2_radial_with_derivs,
    osc2_wavefn,
    osc4_radial_with_derivs,
    osc4_wavefn,
    ycm_R_with_derivs,
    ycm_Z_with_derivs,
    ycm_angular_Z,
    ycm_radial_R,
)

COUPLING = PhysicalParams.dyon_coupling(1.0)


def count_nodes(values):
    signs = np.sign(values)
    signs = signs[signs != 0]
    return int(np.sum(signs[1:] * signs[:-1] < 0))


# -------------------------------------------------------------------- anyon

def test_anyon_ground_state_shape():
    x = np.linspace(0.01, 10, 50)
    vals = anyon_wavefn(0, 0.25, 1.0, x)
    assert np.all(vals > 0)  # nodeless, F = 1


def test_anyon_even_extension_and_odd_option():
    v_plus = anyon_wavefn(1, 0.25, 1.0, 1.3)
    v_minus = anyon_wavefn(1, 0.25, 1.0, -1.3)
    assert v_minus == v_plus
    assert anyon_wavefn(1, 0.25, 1.0, -1.3, extension="odd") == -v_plus
    with pytest.raises(InvalidParameterError):
        anyon_wavefn(0, 0.25, 1.0, 1.0, extension="sideways")


@pytest.mark.parametrize("n,nu", [(0, 0.25), (1, 0.25), (0, 0.75), (2, 0.75)])
def test_anyon_full_line_normalization(n, nu):
    val = normalization(SystemId("anyon1", nu=nu), {"n": n, "nu": nu}, COUPLING)
    assert val == pytest.approx(1.0, abs=1e-6)


def test_anyon_halfline_constant_is_sqrt2_larger():
    assert anyon_norm_constant(2, 0.75, 1.0, halfline=True) == pytest.approx(
        math.sqrt(2.0) * anyon_norm_constant(2, 0.75, 1.0), rel=1e-15
    )


@pytest.mark.parametrize("n,nu", [(0, 0.25), (1, 0.25), (2, 0.75)])
def test_anyon_matches_oscillator_on_half_line(n, nu):
    # half-line-normalized form equals (-1)^n/sqrt(2) sqrt(mu w/hbar(n+nu)) x^{1/4} Psi_N(sqrt(x))
    E = 1.7
    alpha = E / 4.0
    omega = E / (2 * n + 2 * nu)
    N = int(round(2 * n + 2 * nu - 0.5))
    for x in (0.3, 1.0, 2.7, 6.0):
        lhs = anyon_wavefn(n, nu, alpha, x, halfline=True)
        rhs = (
            (-1.0) ** n / math.sqrt(2.0)
            * math.sqrt(omega / (n + nu))
            * x ** 0.25
            * osc1_wavefn(N, omega, math.sqrt(x))
        )
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_anyon_second_moment_closed_form():
    # |C|^2 = 2 (n + nu) hbar / (mu omega) is the oscillator second moment
    for n, nu, omega, mu in ((0, 0.25, 1.0, 1.0), (1, 0.75, 0.7, 1.3), (2, 0.25, 2.0, 0.5)):
        N = int(round(2 * n + 2 * nu - 0.5))
        top = math.sqrt((60.0 + 10.0 * N) / (mu * omega))

        def dens(u):
            psi = osc1_wavefn(N, omega, u, mu=mu)
            return u * u * psi * psi

        moment, _ = integrate(dens, 0.0, top, tol=1e-11)
        expect = 2.0 * (n + nu) / (mu * omega)
        assert 2.0 * moment == pytest.approx(expect, rel=1e-8)


def test_anyon_node_count():
    x = np.linspace(1e-3, 40, 4000)
    for n in range(4):
        vals = anyon_wavefn(n, 0.25, 1.0, x)
        assert count_nodes(vals) == n


def test_anyon_ode_residual():
    x = np.linspace(0.05, 25, 500)
    for n, nu in ((0, 0.25), (3, 0.75), (1, 1.3)):
        eps = dyon_energy(SystemId("anyon1", nu=nu), {"n": n, "nu": nu}, COUPLING)
        f, f1, f2 = anyon_radial_with_derivs(n, nu, 1.0, x)
        rep = oracle.residual("anyon", f, x, derivs=(f1, f2), nu=nu, eps=eps, alpha=1.0)
        assert rep.value < 1e-8


# -------------------------------------------------------------------- dyon2

def test_dyon2_ground_nodeless():
    r = np.linspace(0.01, 5, 200)
    vals = dyon2_wavefn(0, 0, 0.0, 1.0, r)
    assert np.all(np.real(vals) > 0)
    assert np.allclose(np.imag(vals), 0)


def test_dyon2_single_valued():
    v1 = dyon2_wavefn(1, 2, 0.5, 1.0, 0.7, phi=0.4)
    v2 = dyon2_wavefn(1, 2, 0.5, 1.0, 0.7, phi=0.4 + 2 * math.pi)
    assert v2 == pytest.approx(v1, rel=1e-12)


def test_dyon2_prereduced_parity():
    # Psi^(s) = e^{i s phi} Psi-bar flips sign under phi -> phi + 2 pi at s = 1/2
    for s, sign in ((0.0, 1.0), (0.5, -1.0)):
        v1 = dyon2_wavefn(0, 1, s, 1.0, 0.9, phi=0.3, prereduced=True)
        v2 = dyon2_wavefn(0, 1, s, 1.0, 0.9, phi=0.3 + 2 * math.pi, prereduced=True)
        assert v2 == pytest.approx(sign * v1, rel=1e-12)


@pytest.mark.parametrize("qn", [
    {"n": 0, "m": 0, "s": 0.0},
    {"n": 1, "m": 0, "s": 0.0},
    {"n": 0, "m": 0, "s": 0.5},
    {"n": 1, "m": -2, "s": 0.5},
])
def test_dyon2_normalization(qn):
    system = SystemId("dyon2", s=qn["s"])
    assert normalization(system, qn, COUPLING) == pytest.approx(1.0, abs=1e-6)


def test_dyon2_ode_residual():
    r = np.linspace(0.05, 30, 500)
    for n, m, s in ((0, 0, 0.0), (2, 1, 0.5), (1, -1, 0.0)):
        eps = dyon_energy(SystemId("dyon2", s=s), {"n": n, "m": m, "s": s}, COUPLING)
        f, f1, f2 = dyon2_radial_with_derivs(n, m, s, 1.0, r)
        rep = oracle.residual("dyon2_radial", f, r, derivs=(f1, f2), m=m, s=s, eps=eps, e2=1.0)
        assert rep.value < 1e-8


def test_dyon2_node_counts():
    r = np.linspace(1e-3, 60, 4000)
    for n in range(4):
        f, _, _ = dyon2_radial_with_derivs(n, 1, 0.0, 1.0, r)
        assert count_nodes(f) == n


def test_dyon2_wrong_exponent_fails_ode():
    # an |n+m| exponent breaks the radial equation whenever it differs
    # from |m+s|; the residual check discriminates the two
    from dyonosc.wavefun import _dyon2_scale, _pep_with_derivs

    n, m, s = 1, 0, 0.5
    scale = _dyon2_scale(n, m, s, 1.0, 1.0, 1.0)
    r = np.linspace(0.05, 30, 500)
    rho = scale * r
    wrong = abs(n + m)
    f, f1, f2 = _pep_with_derivs(rho, wrong, 0.5, n, 2.0 * wrong + 1.0, 1.0)
    eps = dyon_energy(SystemId("dyon2", s=s), {"n": n, "m": m, "s": s}, COUPLING)
    rep = oracle.residual(
        "dyon2_radial", f, r, derivs=(scale * f1, scale * scale * f2),
        m=m, s=s, eps=eps, e2=1.0,
    )
    assert rep.value > 1e-2


# --------------------------------------------------------------- 2D oscillator

def test_osc2_gaussian_exponent_discrimination():
    u = np.linspace(0.02, 8, 2001)
    good, g1, g2 = osc2_radial_with_derivs(1, 2, 1.0, u, gaussian="half")
    rep = oracle.residual("osc_radial", good, u, derivs=(g1, g2), D=2, L=2, E=5.0, omega=1.0)
    assert rep.value < 1e-8
    bad, b1, b2 = osc2_radial_with_derivs(1, 2, 1.0, u, gaussian="double")
    rep = oracle.residual("osc_radial", bad, u, derivs=(b1, b2), D=2, L=2, E=5.0, omega=1.0)
    assert rep.value > 1e-2


def test_osc2_normalization_and_phase():
    assert normalization(SystemId("osc2"), {"n": 1, "M": 2}, PhysicalParams.oscillator(1.3)) \
        == pytest.approx(1.0, abs=1e-6)
    val = osc2_wavefn(0, 3, 1.0, 0.5, phi=0.7)
    assert abs(val) == pytest.approx(abs(osc2_wavefn(0, 3, 1.0, 0.5, phi=0.0)), rel=1e-12)


# ------------------------------------------------------- osc4 / dyon3 duality

def test_osc4_ground_is_isotropic_gaussian():
    v1 = osc4_wavefn(0, 0, 0, 0, 1.0, 0.8, 0.3, 0.9, 2.2)
    v2 = osc4_wavefn(0, 0, 0, 0, 1.0, 0.8, 1.1, 2.0, 0.4)
    assert v1 == pytest.approx(v2, rel=1e-14)
    assert v1.imag == 0.0


def test_osc4_gamma_periodicity():
    for s in (-1.0, -0.5, 0.5, 1.5):
        j = abs(s) + 1
        v1 = osc4_wavefn(0, j, s, s, 1.0, 0.6, 0.2, 0.8, 1.0)
        v2 = osc4_wavefn(0, j, s, s, 1.0, 0.6, 0.2, 0.8, 1.0 + 4 * math.pi)
        assert v2 == pytest.approx(v1, rel=1e-12)


def test_osc4_radial_ode_residual():
    u = np.linspace(0.02, 7, 500)
    for n, j in ((0, 0.0), (2, 0.5), (1, 1.5)):
        E = 2 * n + 2 * j + 2.0
        f, f1, f2 = osc4_radial_with_derivs(n, j, 1.0, u)
        rep = oracle.residual("osc_radial", f, u, derivs=(f1, f2), D=4, L=2 * j, E=E, omega=1.0)
        assert rep.value < 1e-8


def test_osc4_normalization():
    po = PhysicalParams.oscillator(0.9)
    for qn in ({"n": 0, "j": 0.0, "m": 0.0, "s": 0.0}, {"n": 1, "j": 1.0, "m": 1.0, "s": -1.0}):
        assert normalization(SystemId("osc4"), qn, po) == pytest.approx(1.0, abs=1e-6)


def test_dyon3_reduces_to_hydrogen_like_at_s0():
    # s = 0: angular content is d^j_{m0}(beta), no monopole phase
    val = dyon3_wavefn(0, 1, 1, 0, 1.0, 0.8, alpha=0.5, beta=1.1)
    f, _, _ = dyon3_radial_with_derivs(0, 1, 1.0, 0.8)
    from dyonosc.wavefun import _dyon3_norm, _dyon3_scale

    norm = _dyon3_norm(0, 2, _dyon3_scale(0, 1, 1.0, 1.0, 1.0))
    want = norm * f * wigner_small_d(1, 1, 0, 1.1) * cmath.exp(1j * 1 * 0.5)
    assert val == pytest.approx(want, rel=1e-13)


def test_dyon3_ode_residual_with_goldhaber():
    r = np.linspace(0.05, 40, 500)
    for n, j, s in ((0, 0.5, 0.5), (1, 1.5, 0.5), (2, 1.0, 1.0)):
        eps = dyon_energy(SystemId("dyon3", s=s), {"n": n, "j": j}, COUPLING)
        f, f1, f2 = dyon3_radial_with_derivs(n, j, 1.0, r)
        rep = oracle.residual("dyon3_radial", f, r, derivs=(f1, f2), j=j, s=s, eps=eps, e2=1.0)
        assert rep.value < 1e-8


@pytest.mark.parametrize("qn", [
    {"n": 0, "j": 0.0, "m": 0.0, "s": 0.0},
    {"n": 1, "j": 0.0, "m": 0.0, "s": 0.0},
    {"n": 0, "j": 0.5, "m": 0.5, "s": 0.5},
])
def test_dyon3_normalization(qn):
    system = SystemId("dyon3", s=qn["s"])
    assert normalization(system, qn, COUPLING) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("n,j,m,s", [(1, 1.0, 1.0, 0.0), (0, 0.5, 0.5, -0.5), (1, 1.5, -0.5, 0.5)])
def test_duality_pullback_osc4_to_dyon3(n, j, m, s):
    # osc4 state at u equals (constant ratio) dyon3 state at x = u^2 point
    # times e^{i s (alpha + gamma)}, with e2 = E_N / 4 dual to omega.
    omega = 1.0
    E = omega * (2 * n + 2 * j + 2.0)
    e2 = E / 4.0
    rng = np.random.default_rng(13)
    ratios = []
    for _ in range(100):
        u = rng.normal(size=4) * 0.8
        ang = transforms.fiber_angles(u)
        r = float(np.asarray(u) @ np.asarray(u))
        osc = osc4_wavefn(n, j, m, s, omega, math.sqrt(r), ang.alpha, ang.beta, ang.gamma)
        dyon = dyon3_wavefn(n, j, m, s, e2, r, alpha=ang.alpha, beta=ang.beta)
        pulled = dyon * cmath.exp(1j * s * (ang.alpha + ang.gamma))
        if abs(osc) < 1e-12:
            continue
        ratios.append(pulled / osc)
    ratios = np.asarray(ratios)
    assert np.max(np.abs(ratios - ratios[0])) < 1e-9 * abs(ratios[0])


# ---------------------------------------------------------------- ycm pieces

def test_ycm_Z_constant_mode():
    th = np.linspace(0.1, math.pi - 0.1, 7)
    assert np.allclose(ycm_angular_Z(0, 0, 0, th), 1.0)


def test_ycm_Z_bounded_at_poles():
    th = np.array([1e-6, math.pi - 1e-6])
    vals = ycm_angular_Z(2, 1.0, 1.0, th)
    assert np.all(np.isfinite(vals))
    assert np.max(np.abs(vals)) < 10.0


def test_ycm_Z_ode_residual():
    th = np.linspace(0.02, math.pi - 0.02, 500)
    for n_t, J, L in ((0, 0.5, 0.5), (1, 1.0, 0.0), (2, 1.0, 1.0), (1, 0.5, 1.5)):
        lam = n_t + J + L
        Z, Z1, Z2 = ycm_Z_with_derivs(n_t, J, L, th)
        rep = oracle.residual("ycm_theta", Z, th, derivs=(Z1, Z2), L=L, J=J, lam=lam)
        assert rep.value < 1e-8


def test_ycm_Z_equal_exponents_fail_ode():
    # a (1+cos)^L factor in place of (1+cos)^J breaks the equation
    n_t, J, L = 1, 1.0, 0.0
    lam = n_t + J + L
    th = np.linspace(0.02, math.pi - 0.02, 500)
    y = 0.5 * (1 - np.cos(th))
    b, c = n_t + 2 * J + 2 * L + 3.0, 2 * L + 2.0
    wrong = y ** L * (1 - y) ** L * gauss2f1_terminating(n_t, b, c, y)
    rep = oracle.residual("ycm_theta", wrong, th, L=L, J=J, lam=lam)
    assert rep.value > 1e-2


def test_ycm_R_ode_residual_and_nodes():
    r = np.linspace(0.1, 70, 500)
    for n_r, lam in ((0, 0.0), (1, 2.0), (3, 0.5)):
        eps = dyon_energy(SystemId("ycm5"), {"N": int(2 * (n_r + lam))}, COUPLING)
        f, f1, f2 = ycm_R_with_derivs(n_r, lam, 1.0, r)
        rep = oracle.residual("ycm_radial", f, r, derivs=(f1, f2), lam=lam, eps=eps, e2=1.0)
        assert rep.value < 1e-8
    grid = np.linspace(1e-2, 120, 6000)
    for n_r in range(5):
        vals = ycm_radial_R(n_r, 1.0, 1.0, grid)
        assert count_nodes(vals) == n_r


def test_ycm_ground_radial_is_pure_exponential():
    r = np.linspace(0.1, 5, 20)
    vals = ycm_radial_R(0, 0.0, 1.0, r)
    k = 1.0 / 2.0  # mu e2 / (hbar^2 (0 + 0 + 2))
    assert np.allclose(vals, np.exp(-k * r), rtol=1e-12)


def test_ycm_sector_normalization():
    val = normalization(SystemId("ycm5"), {"n_r": 1, "n_theta": 1, "J": 0.5, "L": 0.5}, COUPLING)
    assert val == pytest.approx(1.0, abs=1e-6)


def test_invalid_quantum_numbers_raise():
    with pytest.raises(InvalidQuantumNumbersError):
        osc4_wavefn(0, 1, 2, 0, 1.0, 1.0, 0, 1, 0)
    with pytest.raises(InvalidQuantumNumbersError):
        dyon3_wavefn(0, 0.5, 0.5, 0.25, 1.0, 1.0)
    with pytest.raises(InvalidQuantumNumbersError):
        ycm_angular_Z(1, 0.5, 1.0, 0.3)  # J + L not an integer
