import math

import numpy as np
import pytest

from dyonosc.errors import DomainError, QuantizationError, SingularityError
from dyonosc.fields import (
    circulation,
    dirac_charge,
    dirac_potential,
    goldhaber_term,
    vortex_potential,
    yang_potentials,
)


# -------------------------------------------------------------------- vortex

def test_vortex_values():
    assert np.allclose(vortex_potential(1.0, 1.0, 0.0), [0.0, -1.0])
    # |A| = g / r everywhere
    rng = np.random.default_rng(2)
    for _ in range(100):
        x1, x2 = rng.normal(size=2)
        r = math.hypot(x1, x2)
        a = vortex_potential(2.5, x1, x2)
        assert np.linalg.norm(a) == pytest.approx(2.5 / r, rel=1e-12)


def test_vortex_singular_origin():
    with pytest.raises(SingularityError):
        vortex_potential(1.0, 0.0, 0.0)


def test_vortex_circulation_radius_independent():
    values = [circulation("vortex", 1.0, radius=a) for a in (0.5, 1.0, 2.0)]
    for v in values:
        assert v == pytest.approx(-2 * math.pi, abs=1e-8)
    assert max(values) - min(values) < 1e-8


# --------------------------------------------------------------------- dirac

def test_dirac_limits():
    assert np.allclose(dirac_potential(1.0, 2.0, 0.7, 0.0), 0.0)
    a = dirac_potential(1.3, 2.0, 0.7, 1.1)
    assert a[2] == 0.0


def test_dirac_transverse():
    rng = np.random.default_rng(8)
    for _ in range(50):
        r = float(rng.uniform(0.5, 3.0))
        alpha = float(rng.uniform(0, 2 * math.pi))
        beta = float(rng.uniform(0.05, 2.9))
        a = dirac_potential(1.0, r, alpha, beta)
        x = np.array([
            r * math.sin(beta) * math.cos(alpha),
            r * math.sin(beta) * math.sin(alpha),
            r * math.cos(beta),
        ])
        assert abs(a @ x) < 1e-12 * np.linalg.norm(a) * r


def test_dirac_string_singularity():
    with pytest.raises(SingularityError):
        dirac_potential(1.0, 1.0, 0.0, math.pi)


def test_dirac_cap_circulation():
    g = 1.0
    for beta in (math.pi / 6, math.pi / 2, 5 * math.pi / 6):
        got = circulation("dirac", g, r=2.0, beta=beta)
        assert got == pytest.approx(-2 * math.pi * g * (1 - math.cos(beta)), abs=1e-6)
    # r-independence
    for r in (0.5, 1.0, 4.0):
        got = circulation("dirac", g, r=r, beta=math.pi / 3)
        assert got == pytest.approx(-2 * math.pi * g * 0.5, abs=1e-8)


def test_dirac_flux_limits():
    # shrinking cap -> 0; cap approaching the string -> total flux -4 pi g
    small = circulation("dirac", 1.0, r=1.0, beta=1e-4)
    assert abs(small) < 1e-7
    near = circulation("dirac", 1.0, r=1.0, beta=math.pi - 0.004)
    assert near == pytest.approx(-4 * math.pi, abs=1e-4)
    with pytest.raises(SingularityError):
        circulation("dirac", 1.0, r=1.0, beta=math.pi)


# ---------------------------------------------------------------------- yang

def test_yang_example_point():
    A = yang_potentials([0.0, 1.0, 0.0, 0.0, 0.0])
    assert np.allclose(A[0], [0, 0, 0, 0, 1.0])


def test_yang_identities():
    rng = np.random.default_rng(12)
    checked = 0
    while checked < 1000:
        x = rng.normal(size=5)
        r = float(np.linalg.norm(x))
        if r == 0.0 or r + x[0] < 0.1 * r:
            continue
        checked += 1
        A = yang_potentials(x)
        expect = (r - x[0]) / (r * r * (r + x[0]))
        assert np.max(np.abs(A @ A.T - expect * np.eye(3))) <= 1e-12 * expect
        assert np.max(np.abs(A @ x)) <= 1e-12 * np.max(np.abs(A)) * r


def test_yang_singular_line():
    with pytest.raises(SingularityError):
        yang_potentials([-1.0, 0.0, 0.0, 0.0, 0.0])
    with pytest.raises(SingularityError):
        yang_potentials([0.0, 0.0, 0.0, 0.0, 0.0])


def test_yang_bounded_off_axis():
    rng = np.random.default_rng(19)
    bound = math.sqrt(2.0 / 0.1)
    for _ in range(300):
        x = rng.normal(size=5) * rng.choice([0.1, 1.0, 10.0])
        r = float(np.linalg.norm(x))
        if r == 0.0 or r + x[0] < 0.1 * r:
            continue
        A = yang_potentials(x)
        assert np.max(np.sqrt(np.sum(A * A, axis=1))) * r <= bound + 1e-12


def test_all_potentials_scale_as_inverse_length():
    rng = np.random.default_rng(21)
    for _ in range(50):
        lam = float(rng.uniform(0.3, 4.0))
        x1, x2 = rng.normal(size=2)
        a = vortex_potential(1.0, x1, x2)
        assert np.allclose(vortex_potential(1.0, lam * x1, lam * x2), a / lam, rtol=1e-12)
        x5 = rng.normal(size=5)
        if np.linalg.norm(x5) + x5[0] < 0.05 * np.linalg.norm(x5):
            continue
        A = yang_potentials(x5)
        assert np.allclose(yang_potentials(lam * x5), A / lam, rtol=1e-12)
        r, al, be = float(rng.uniform(0.5, 2)), 0.3, 1.2
        d = dirac_potential(1.0, r, al, be)
        assert np.allclose(dirac_potential(1.0, lam * r, al, be), d / lam, rtol=1e-12)


# ------------------------------------------------------------ charges & terms

def test_goldhaber_term():
    assert goldhaber_term(0.0, 1.0) == 0.0
    assert goldhaber_term(0.5, 1.0) == 0.125
    assert goldhaber_term(1.0, 1.0) == 4 * goldhaber_term(0.5, 1.0)
    with pytest.raises(SingularityError):
        goldhaber_term(0.5, 0.0)


def test_dirac_charge_quantization():
    mc = dirac_charge(0.5, 1.0)
    assert mc.g == 0.5
    assert dirac_charge(0.0, 1.0).g == 0.0
    assert dirac_charge(-1.5, 2.0, hbar=2.0, c=3.0).g == pytest.approx(-4.5)
    with pytest.raises(QuantizationError):
        dirac_charge(0.3, 1.0)
    with pytest.raises(DomainError):
        dirac_charge(0.5, 0.0)


def test_circulation_rejects_bad_loops():
    with pytest.raises(SingularityError):
        circulation("vortex", 1.0, radius=0.0)
    with pytest.raises(DomainError):
        circulation("yang", 1.0, radius=1.0)
