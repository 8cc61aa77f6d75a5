import math

import numpy as np
import pytest

from dyonosc.errors import (
    DomainError,
    InvalidQuantumNumbersError,
    NoBoundStateError,
    UnsupportedDimensionError,
)
from dyonosc.spectra import (
    PhysicalParams,
    SystemId,
    dual_params,
    duality_identity_residual,
    dyon_energy,
    enumerate_spectrum,
    osc4_degeneracy_brute,
    osc8_degeneracy_brute,
    osc_degeneracy,
    osc_energy,
    quantized_frequencies,
    ycm_degeneracy,
    ycm_degeneracy_sum_check,
)

UNIT = PhysicalParams.oscillator(1.0)
COUPLING = PhysicalParams.dyon_coupling(1.0)


# ------------------------------------------------------------------- energies

def test_osc_energy_examples():
    assert osc_energy(4, {"N": 0}, UNIT) == 2.0
    assert osc_energy(1, {"N": 0}, UNIT) == 0.5
    assert osc_energy(2, {"n": 0, "M": 0}, UNIT) == 1.0
    assert osc_energy(8, {"N": 3}, UNIT) == 7.0
    assert osc_energy(4, {"n": 1, "j": 0.5}, UNIT) == 5.0


def test_osc_energy_invalid():
    with pytest.raises(InvalidQuantumNumbersError):
        osc_energy(4, {"N": -1}, UNIT)
    with pytest.raises(InvalidQuantumNumbersError):
        osc_energy(2, {"n": 0, "M": 0.5}, UNIT)
    with pytest.raises(UnsupportedDimensionError):
        osc_energy(3, {"N": 0}, UNIT)


def test_dyon_energy_examples():
    assert dyon_energy(SystemId("anyon1", nu=0.25), {"n": 0, "nu": 0.25}, COUPLING) == -8.0
    assert dyon_energy(SystemId("dyon2"), {"n": 0, "m": 0, "s": 0.0}, COUPLING) == -2.0
    assert dyon_energy(SystemId("ycm5"), {"N": 0}, COUPLING) == -0.125
    assert dyon_energy(SystemId("dyon3"), {"n": 0, "j": 0}, COUPLING) == -0.5


def test_dyon_energy_accepts_fixed_E_regime():
    # coupling e2 = E/4
    val = dyon_energy(SystemId("dyon3"), {"n": 0, "j": 0}, PhysicalParams.dyon(4.0))
    assert val == -0.5


def test_dyon_energies_increase_toward_zero():
    for system in (SystemId("anyon1", nu=0.75), SystemId("dyon2", s=0.5),
                   SystemId("dyon3", s=0.5), SystemId("ycm5")):
        lines = enumerate_spectrum(system, COUPLING, 12)
        energies = [line.energy for line in lines]
        assert all(e2 > e1 for e1, e2 in zip(energies, energies[1:]))
        assert all(e < 0 for e in energies)


# ------------------------------------------------------------------ dual maps

def test_dual_params_examples():
    assert dual_params(PhysicalParams.dyon(4.0), "osc2dyon").e2 == 1.0
    assert dual_params(PhysicalParams.oscillator(2.0), "osc2dyon").eps == -0.5
    mapped = dual_params(PhysicalParams.modified(C0=1.0, C2=8.0, E=5.0), "osc2dyon")
    assert mapped.eps == -2.0
    assert mapped.e2 == 1.0


def test_dual_params_modified_residual_tail():
    mapped = dual_params(PhysicalParams.modified(C0=0.0, C2=2.0, E=4.0, W=(0.8, 0.0, 0.4)),
                         "osc2dyon")
    # -W(r)/(4r) with W(r) = 0.8 r^2 + 0.4 r^4: monomials (1, -0.2) and (3, -0.1)
    assert mapped.w_residual == ((1, -0.2), (3, -0.1))


def test_dual_params_inverse():
    mapped = dual_params(PhysicalParams.dyon_coupling(1.0), "dyon2osc", eps=-0.5)
    assert mapped.omega == pytest.approx(2.0, rel=1e-15)
    assert mapped.E == 4.0
    with pytest.raises(NoBoundStateError):
        dual_params(PhysicalParams.dyon_coupling(1.0), "dyon2osc", eps=0.5)


def test_quantized_frequencies_examples():
    pairs = quantized_frequencies(SystemId("osc4"), 4.0, 3)
    assert pairs[0] == ({"N": 0}, 2.0)
    pairs = quantized_frequencies(SystemId("anyon1", nu=0.25), 1.0, 2)
    assert pairs[0][1] == pytest.approx(2.0, rel=1e-15)
    pairs = quantized_frequencies(SystemId("osc8"), 8.0, 1)
    assert pairs[0][1] == 2.0
    with pytest.raises(DomainError):
        quantized_frequencies(SystemId("osc4"), -1.0, 2)


def test_duality_identity_examples():
    assert duality_identity_residual(SystemId("dyon3"), {"n": 0, "j": 0}, 4.0) == 0.0
    res = duality_identity_residual(SystemId("anyon1", nu=0.75), {"n": 2, "nu": 0.75}, 1.0)
    assert abs(res) < 1e-15
    res = duality_identity_residual(SystemId("ycm5"), {"N": 6}, 2.0)
    assert abs(res) < 1e-15


def test_duality_identity_random_parameters():
    rng = np.random.default_rng(4)
    systems = [
        SystemId("anyon1", nu=0.25), SystemId("anyon1", nu=0.75),
        SystemId("dyon2", s=0.0), SystemId("dyon2", s=0.5),
        SystemId("dyon3", s=0.5), SystemId("ycm5"),
    ]
    for system in systems:
        for _ in range(50):
            E = float(rng.uniform(0.1, 10))
            mu = float(rng.uniform(0.1, 10))
            hbar = float(rng.uniform(0.1, 10))
            for level in (0, 7, 40):
                if system.kind == "anyon1":
                    qn = {"n": level, "nu": system.nu}
                elif system.kind == "dyon2":
                    qn = {"n": level, "m": 0, "s": system.s}
                elif system.kind == "dyon3":
                    qn = {"n": level, "j": abs(system.s)}
                else:
                    qn = {"N": level}
                res = duality_identity_residual(system, qn, E, mu=mu, hbar=hbar)
                eps = dyon_energy(system, qn, PhysicalParams.dyon(E, mu=mu, hbar=hbar))
                assert abs(res) <= 1e-12 * abs(eps)


# ---------------------------------------------------------------- degeneracy

def test_osc_degeneracy_values():
    assert osc_degeneracy(4, 2) == 10
    assert osc_degeneracy(8, 0) == 1
    assert osc_degeneracy(8, 1) == 8
    assert osc_degeneracy(8, 2) == 36
    with pytest.raises(UnsupportedDimensionError):
        osc_degeneracy(2, 3)


def test_osc4_degeneracy_against_brute_force():
    for N in range(21):
        assert osc_degeneracy(4, N) == osc4_degeneracy_brute(N)


def test_ycm_degeneracy_values():
    assert ycm_degeneracy(2, 0) == 6
    assert ycm_degeneracy(2, 1) == 30
    assert ycm_degeneracy(1, 0.5) == 8
    with pytest.raises(InvalidQuantumNumbersError):
        ycm_degeneracy(2, 0.5)
    with pytest.raises(InvalidQuantumNumbersError):
        ycm_degeneracy(2, 2)


def test_ycm_sum_rule():
    assert ycm_degeneracy_sum_check(0) == (1, 1)
    assert ycm_degeneracy_sum_check(1) == (8, 8)
    assert ycm_degeneracy_sum_check(2) == (36, 36)
    for N in range(31):
        lhs, rhs = ycm_degeneracy_sum_check(N)
        assert lhs == rhs


def test_ycm_t0_matches_coulomb_degeneracy():
    for n in range(16):
        assert ycm_degeneracy(2 * n, 0) == (n + 1) * (n + 2) ** 2 * (n + 3) // 12


def test_osc8_brute_force_matches_formula():
    for N in range(11):
        table = osc8_degeneracy_brute(N, by_T=True)
        assert sum(table.values()) == osc_degeneracy(8, N)
        for twoT, count in table.items():
            assert count == ycm_degeneracy(N, twoT / 2)


# ----------------------------------------------------------------- enumerate

def test_enumerate_osc4():
    lines = enumerate_spectrum(SystemId("osc4"), UNIT, 2)
    assert [line.energy for line in lines] == [2.0, 3.0, 4.0]
    assert [line.degeneracy for line in lines] == [1, 4, 10]


def test_enumerate_ycm5_aggregate():
    lines = enumerate_spectrum(SystemId("ycm5"), COUPLING, 2)
    assert [line.energy for line in lines] == pytest.approx([-0.125, -0.08, -1 / 18])
    assert [line.degeneracy for line in lines] == [1, 8, 36]


def test_enumerate_ycm5_fixed_T():
    lines = enumerate_spectrum(SystemId("ycm5", T=1.0), COUPLING, 2)
    assert [line.qn["N"] for line in lines] == [2, 4, 6]
    assert lines[0].degeneracy == 30


def test_enumerate_osc2_counts():
    lines = enumerate_spectrum(SystemId("osc2"), UNIT, 4)
    assert [line.degeneracy for line in lines] == [1, 2, 3, 4, 5]


def test_enumerate_dyon2_counts_match_osc2_parity_classes():
    # s = 0 collects even M, s = 1/2 odd M; together they tile the 2D oscillator
    even = enumerate_spectrum(SystemId("dyon2", s=0.0), COUPLING, 5)
    odd = enumerate_spectrum(SystemId("dyon2", s=0.5), COUPLING, 5)
    assert [line.degeneracy for line in even] == [1, 3, 5, 7, 9, 11]
    assert [line.degeneracy for line in odd] == [2, 4, 6, 8, 10, 12]


def test_enumerate_dyon3_degeneracy_matches_osc4():
    lines = enumerate_spectrum(SystemId("dyon3", s=0.0), COUPLING, 4)
    assert [line.degeneracy for line in lines] == [1, 10, 35, 84, 165]
    lines = enumerate_spectrum(SystemId("dyon3", s=0.5), COUPLING, 3)
    # dual to odd oscillator levels: g_N at N = 1, 3, 5, 7
    assert [line.degeneracy for line in lines] == [4, 20, 56, 120]


def test_anyon_classes_interleave():
    lines_14 = enumerate_spectrum(SystemId("anyon1", nu=0.25), COUPLING, 3)
    lines_34 = enumerate_spectrum(SystemId("anyon1", nu=0.75), COUPLING, 3)
    merged = sorted(line.energy for line in lines_14 + lines_34)
    expect = sorted(-0.5 / (n + nu) ** 2 for n in range(4) for nu in (0.25, 0.75))
    assert merged == pytest.approx(expect)
    # strict interleaving: 1/4, 3/4, 1/4, 3/4, ...
    tags = [nu for _, nu in sorted(
        [(line.energy, 0.25) for line in lines_14] + [(line.energy, 0.75) for line in lines_34]
    )]
    assert tags == [0.25, 0.75] * 4


# ------------------------------------------------------------------- params

def test_params_validation():
    with pytest.raises(DomainError):
        PhysicalParams.oscillator(-1.0)
    with pytest.raises(DomainError):
        PhysicalParams.dyon(-4.0)
    with pytest.raises(DomainError):
        PhysicalParams(mu=-1.0, regime="oscillator", omega=1.0)
    with pytest.raises(DomainError):
        PhysicalParams.oscillator(1.0).coupling()


def test_system_validation():
    with pytest.raises(InvalidQuantumNumbersError):
        SystemId("dyon2", s=0.3)
    with pytest.raises(InvalidQuantumNumbersError):
        SystemId("dyon3", s=0.3)
    SystemId("dyon3", s=1.5)  # any half-integer monopole number is fine
