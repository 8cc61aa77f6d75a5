"""Closed-form spectra, degeneracies and the duality parameter maps.

The oscillator regime fixes the frequency omega and quantizes the energy
E = hbar*omega*(N + D/2); the dyon regime fixes E (so the Coulomb coupling
is e^2 = E/4) and quantizes omega, turning eps = -mu*omega^2/8 into the
bound-state energy.  Every system's principal quantity q is defined so
that eps = -mu*(e^2)^2 / (2 hbar^2 q^2) and E = 2 hbar omega q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    DomainError,
    InvalidParameterError,
    InvalidQuantumNumbersError,
    NoBoundStateError,
    UnsupportedDimensionError,
)
from .specfun import as_twice

__all__ = [
    "PhysicalParams",
    "SystemId",
    "SpectrumLine",
    "DualMap",
    "osc_energy",
    "osc_degeneracy",
    "dyon_energy",
    "principal_quantity",
    "dual_params",
    "quantized_frequencies",
    "duality_identity_residual",
    "ycm_degeneracy",
    "ycm_degeneracy_sum_check",
    "enumerate_spectrum",
    "osc4_degeneracy_brute",
    "osc8_degeneracy_brute",
]

OSC_KINDS = ("osc1", "osc2", "osc4", "osc8")
DYON_KINDS = ("anyon1", "dyon2", "dyon3", "ycm5")
DUAL_OF = {"osc1": "anyon1", "osc2": "dyon2", "osc4": "dyon3", "osc8": "ycm5"}


@dataclass(frozen=True)
class PhysicalParams:
    """Masses, hbar, c and exactly one fixed parameter for the active regime."""

    mu: float = 1.0
    hbar: float = 1.0
    c: float = 1.0
    regime: str = "oscillator"
    omega: float | None = None
    E: float | None = None
    e2: float | None = None
    C0: float | None = None
    C2: float | None = None
    W: tuple = ()  # (C4, C6, ...) coefficients of u^4, u^6, ...

    def __post_init__(self):
        if self.mu <= 0 or self.hbar <= 0 or self.c <= 0:
            raise DomainError("mu, hbar and c must all be positive")
        if self.regime == "oscillator":
            if self.omega is None or self.omega <= 0:
                raise DomainError("oscillator regime requires omega > 0")
        elif self.regime == "dyon":
            if self.E is None or self.E <= 0:
                raise DomainError("dyon regime requires fixed E > 0")
        elif self.regime == "dyon_coupling":
            if self.e2 is None or self.e2 <= 0:
                raise DomainError("dyon_coupling regime requires e2 > 0")
        elif self.regime == "modified":
            if self.C0 is None or self.C2 is None:
                raise DomainError("modified regime requires C0 and C2")
        else:
            raise InvalidParameterError(f"unknown regime {self.regime!r}")

    @classmethod
    def oscillator(cls, omega, mu=1.0, hbar=1.0, c=1.0):
        return cls(mu=mu, hbar=hbar, c=c, regime="oscillator", omega=omega)

    @classmethod
    def dyon(cls, E, mu=1.0, hbar=1.0, c=1.0):
        return cls(mu=mu, hbar=hbar, c=c, regime="dyon", E=E)

    @classmethod
    def dyon_coupling(cls, e2, mu=1.0, hbar=1.0, c=1.0):
        return cls(mu=mu, hbar=hbar, c=c, regime="dyon_coupling", e2=e2)

    @classmethod
    def modified(cls, C0, C2, E=None, W=(), mu=1.0, hbar=1.0, c=1.0):
        return cls(mu=mu, hbar=hbar, c=c, regime="modified", C0=C0, C2=C2, E=E, W=tuple(W))

    def coupling(self) -> float:
        """Coulomb coupling e^2 on the dyon side."""
        if self.regime == "dyon_coupling":
            return self.e2
        if self.regime == "dyon":
            return self.E / 4.0
        if self.regime == "modified":
            if self.E is None:
                raise DomainError("modified regime needs E to form e2 = (E - C0)/4")
            return (self.E - self.C0) / 4.0
        raise DomainError("oscillator regime fixes omega, not a Coulomb coupling")


@dataclass(frozen=True)
class SystemId:
    """One of the eight systems: osc{1,2,4,8}, anyon1(nu), dyon2(s), dyon3(s), ycm5(T)."""

    kind: str
    nu: float = 0.25
    s: float = 0.0
    T: float | None = None

    def __post_init__(self):
        if self.kind not in OSC_KINDS + DYON_KINDS:
            raise InvalidParameterError(f"unknown system kind {self.kind!r}")
        if self.kind == "anyon1" and self.nu <= 0:
            raise InvalidParameterError("anyon parameter nu must be positive")
        if self.kind == "dyon2" and self.s not in (0.0, 0.5):
            raise InvalidQuantumNumbersError("dyon2 carries s in {0, 1/2}")
        if self.kind == "dyon3":
            as_twice(self.s)  # must sit on the half-integer grid
        if self.kind == "ycm5" and self.T is not None:
            if as_twice(self.T) < 0:
                raise InvalidQuantumNumbersError("ycm5 isospin T must be >= 0")

    @property
    def osc_dim(self) -> int:
        return {"osc1": 1, "osc2": 2, "osc4": 4, "osc8": 8,
                "anyon1": 1, "dyon2": 2, "dyon3": 4, "ycm5": 8}[self.kind]


@dataclass(frozen=True)
class SpectrumLine:
    qn: dict
    energy: float
    degeneracy: int


@dataclass(frozen=True)
class DualMap:
    """Result of the regime swap: whichever quantities the input determined."""

    eps: float | None = None
    e2: float | None = None
    omega: float | None = None
    E: float | None = None
    w_residual: tuple = ()  # (power of r, coefficient) pairs of -W(r)/(4r)


def _need_nonneg_int(qn, key):
    if key not in qn:
        raise InvalidQuantumNumbersError(f"missing quantum number {key!r}")
    value = qn[key]
    if not float(value).is_integer() or value < 0:
        raise InvalidQuantumNumbersError(f"{key} must be a nonnegative integer, got {value!r}")
    return int(value)


def osc_energy(D, qn, params: PhysicalParams) -> float:
    """Oscillator energy: D=1: hw(N+1/2); D=2: hw(2n+|M|+1); D=4: hw(N+2); D=8: hw(N+4)."""
    if params.regime != "oscillator":
        raise DomainError("osc_energy needs oscillator-regime params (fixed omega)")
    hw = params.hbar * params.omega
    if D == 1:
        return hw * (_need_nonneg_int(qn, "N") + 0.5)
    if D == 2:
        n = _need_nonneg_int(qn, "n")
        M = qn.get("M")
        if M is None or not float(M).is_integer():
            raise InvalidQuantumNumbersError("osc2 needs integer M")
        return hw * (2 * n + abs(int(M)) + 1)
    if D == 4:
        return hw * (_osc4_level(qn) + 2)
    if D == 8:
        return hw * (_need_nonneg_int(qn, "N") + 4)
    raise UnsupportedDimensionError(f"no oscillator in dimension {D}")


def _osc4_level(qn) -> int:
    if "N" in qn:
        return _need_nonneg_int(qn, "N")
    n = _need_nonneg_int(qn, "n")
    tj = as_twice(qn.get("j", 0))
    if tj < 0:
        raise InvalidQuantumNumbersError("j must be >= 0")
    return 2 * n + tj


def osc_degeneracy(D, N) -> int:
    """Exact level degeneracy of the D=4 or D=8 oscillator."""
    N = _need_nonneg_int({"N": N}, "N")
    if D == 4:
        return (N + 1) * (N + 2) * (N + 3) // 6
    if D == 8:
        return math.comb(N + 7, 7)
    raise UnsupportedDimensionError("closed-form degeneracy implemented for D in {4, 8}")


def principal_quantity(system: SystemId, qn) -> float:
    """q such that eps = -mu e^4 / (2 hbar^2 q^2) and E_osc = 2 hbar omega q."""
    kind = system.kind
    if kind == "anyon1":
        return _need_nonneg_int(qn, "n") + float(qn.get("nu", system.nu))
    if kind == "dyon2":
        n = _need_nonneg_int(qn, "n")
        m = qn["m"]
        if not float(m).is_integer():
            raise InvalidQuantumNumbersError("dyon2 magnetic number m must be an integer")
        s = float(qn.get("s", system.s))
        return n + abs(m + s) + 0.5
    if kind == "dyon3":
        n = _need_nonneg_int(qn, "n")
        tj = as_twice(qn["j"])
        if tj < 0:
            raise InvalidQuantumNumbersError("j must be >= 0")
        return n + tj / 2.0 + 1.0
    if kind == "ycm5":
        return _need_nonneg_int(qn, "N") / 2.0 + 2.0
    raise InvalidParameterError(f"{kind} is not a dyon-side system")


def dyon_energy(system: SystemId, qn, params: PhysicalParams) -> float:
    """Closed-form bound energy eps = -mu (e^2)^2 / (2 hbar^2 q^2)."""
    e2 = params.coupling()
    q = principal_quantity(system, qn)
    return -params.mu * e2 * e2 / (2.0 * params.hbar ** 2 * q * q)


def dual_params(params: PhysicalParams, direction: str, eps: float | None = None,
                e2: float | None = None) -> DualMap:
    """Swap regimes: oscillator (omega, E) <-> dyon (eps, e2).

    osc2dyon maps whatever the input fixes: omega -> eps = -mu omega^2/8,
    E -> e2 = E/4; in the modified regime eps = -C2/4, e2 = (E - C0)/4 and
    the potential tail W contributes the residual term -W(r)/(4r), returned
    as (power, coefficient) monomials.  dyon2osc inverts those relations;
    eps and e2 may be passed directly since neither is a regime parameter.
    """
    if direction == "osc2dyon":
        if params.regime == "modified":
            out_eps = -params.C2 / 4.0
            out_e2 = None if params.E is None else (params.E - params.C0) / 4.0
            resid = tuple((k + 1, -c2n / 4.0) for k, c2n in enumerate(params.W) if c2n != 0.0)
            return DualMap(eps=out_eps, e2=out_e2, w_residual=resid)
        out_eps = None
        if params.omega is not None:
            out_eps = -params.mu * params.omega ** 2 / 8.0
        out_e2 = None if params.E is None else params.E / 4.0
        if out_eps is None and out_e2 is None:
            raise DomainError("osc2dyon needs omega and/or E")
        return DualMap(eps=out_eps, e2=out_e2)
    if direction == "dyon2osc":
        if e2 is None and params.regime in ("dyon", "dyon_coupling"):
            e2 = params.coupling()
        out_omega = None
        if eps is not None:
            if eps >= 0:
                raise NoBoundStateError("eps >= 0 has no bound oscillator image")
            out_omega = math.sqrt(-8.0 * eps / params.mu)
        out_E = None if e2 is None else 4.0 * e2
        if out_omega is None and out_E is None:
            raise DomainError("dyon2osc needs eps and/or e2")
        return DualMap(omega=out_omega, E=out_E)
    raise InvalidParameterError(f"unknown direction {direction!r}")


def quantized_frequencies(system: SystemId, E_fixed: float, max_levels: int,
                          hbar: float = 1.0) -> list:
    """Frequencies omega solving E = hbar omega (N + D/2) level by level.

    For a dyon-side system the levels are its bound states and
    omega = E / (2 hbar q); for an oscillator system the levels run over
    the principal number N directly.
    """
    if E_fixed <= 0:
        raise DomainError("fixed E must be positive")
    out = []
    if system.kind in OSC_KINDS:
        D = system.osc_dim
        for N in range(max_levels):
            out.append(({"N": N}, E_fixed / (hbar * (N + D / 2.0))))
        return out
    for qn, _deg in _dyon_levels(system, max_levels):
        q = principal_quantity(system, qn)
        out.append((qn, E_fixed / (2.0 * hbar * q)))
    return out


def duality_identity_residual(system: SystemId, qn, E_fixed: float,
                              mu: float = 1.0, hbar: float = 1.0) -> float:
    """eps from the quantized frequency minus eps from the Coulomb closed form."""
    q = principal_quantity(system, qn)
    omega = E_fixed / (2.0 * hbar * q)
    eps_osc = -mu * omega ** 2 / 8.0
    eps_dyon = dyon_energy(system, qn, PhysicalParams.dyon(E_fixed, mu=mu, hbar=hbar))
    return eps_osc - eps_dyon


def ycm_degeneracy(N, T) -> int:
    """Exact degeneracy of the level (N, T) of the 5D Yang-Coulomb monopole."""
    N = _need_nonneg_int({"N": N}, "N")
    twoT = as_twice(T)
    if twoT < 0 or twoT > N or (N - twoT) % 2:
        raise InvalidQuantumNumbersError(f"need T <= N/2 with N - 2T even, got N={N}, T={T}")
    p = (N - twoT) // 2  # = N/2 - T
    num = (twoT + 1) ** 2 * (p + 1) * (p + 2) * ((p + 2) * (p + 3) + twoT * (N + 5))
    assert num % 12 == 0
    return num // 12


def ycm_degeneracy_sum_check(N) -> tuple:
    """(sum_T g_N^T, C(N+7,7)); the two agree exactly."""
    N = _need_nonneg_int({"N": N}, "N")
    total = sum(ycm_degeneracy(N, twoT / 2.0) for twoT in range(N % 2, N + 1, 2))
    return total, math.comb(N + 7, 7)


def _count_osc2(level: int) -> int:
    # explicit count of (n, M) with 2n + |M| = level
    states = 0
    for n in range(level // 2 + 1):
        m_abs = level - 2 * n
        states += 1 if m_abs == 0 else 2
    return states


def _count_dyon2(system: SystemId, kappa: float) -> int:
    # explicit count of (n, m) with n + |m + s| = kappa at the system's s
    states = 0
    n = 0
    while n <= kappa:
        rest = kappa - n
        if rest >= abs(system.s) - 1e-12:
            sols = {rest - system.s, -rest - system.s}
            states += sum(1 for m in sols if abs(m - round(m)) < 1e-9)
        n += 1
    return states


def _dyon_levels(system: SystemId, max_levels: int):
    """Yield (qn, degeneracy) for the lowest levels of a dyon-side system."""
    kind = system.kind
    if kind == "anyon1":
        for n in range(max_levels):
            yield {"n": n, "nu": system.nu}, 1
    elif kind == "dyon2":
        for p in range(max_levels):
            kappa = p + system.s
            yield {"n": p, "m": 0, "s": system.s, "level": p}, _count_dyon2(system, kappa)
    elif kind == "dyon3":
        s_abs = abs(system.s)
        for p in range(max_levels):
            t = s_abs + p  # n + j of the level
            deg = 0
            twoj = as_twice(s_abs)
            while twoj <= as_twice(t):
                deg += (twoj + 1) ** 2
                twoj += 2
            yield {"n": p, "j": s_abs, "level": p}, deg
    elif kind == "ycm5":
        if system.T is None:
            for N in range(max_levels):
                yield {"N": N}, math.comb(N + 7, 7)
        else:
            N = as_twice(system.T)  # lowest level has N = 2T
            for _ in range(max_levels):
                yield {"N": N, "T": system.T}, ycm_degeneracy(N, system.T)
                N += 2
    else:
        raise InvalidParameterError(f"{kind} is not a dyon-side system")


def enumerate_spectrum(system: SystemId, params: PhysicalParams, max_principal: int) -> list:
    """Spectrum lines (qn, energy, degeneracy) up to the given principal number."""
    lines = []
    if system.kind in OSC_KINDS:
        if params.regime != "oscillator":
            raise DomainError("oscillator spectra need oscillator-regime params")
        D = system.osc_dim
        hw = params.hbar * params.omega
        for N in range(max_principal + 1):
            if D == 1:
                deg = 1
            elif D == 2:
                deg = _count_osc2(N)
            else:
                deg = osc_degeneracy(D, N)
            lines.append(SpectrumLine({"N": N}, hw * (N + D / 2.0), deg))
    else:
        for qn, deg in _dyon_levels(system, max_principal + 1):
            lines.append(SpectrumLine(qn, dyon_energy(system, qn, params), deg))
    lines.sort(key=lambda line: line.energy)
    return lines


def osc4_degeneracy_brute(N) -> int:
    """Brute-force count of {(n, j, m, s): 2n + 2j = N, |m| <= j, |s| <= j}."""
    total = 0
    for twoj in range(N % 2, N + 1, 2):
        # n = (N - 2j)/2 fixed by the level; count the (m, s) square
        count_m = sum(1 for twom in range(-twoj, twoj + 1, 2))
        total += count_m * count_m
    return total


def osc8_degeneracy_brute(N, by_T: bool = False):
    """Brute-force count over (n_r, n_theta, J, L, T) with 2(n_r+n_theta+J+L) = N.

    Each tuple carries weight (2J+1)(2L+1)(2T+1); T runs over the
    Clebsch-Gordan triangle |J-L| <= T <= J+L in unit steps.  Returns the
    total, or a {2T: count} table with by_T=True.
    """
    table = {}
    for twoJ in range(0, N + 1):
        for twoL in range(0, N + 1 - twoJ):
            if (N - twoJ - twoL) % 2:
                continue  # n_r + n_theta = N/2 - J - L must be a whole number
            pairs = (N - twoJ - twoL) // 2 + 1  # choices of (n_r, n_theta)
            for twoT in range(abs(twoJ - twoL), twoJ + twoL + 1, 2):
                weight = pairs * (twoJ + 1) * (twoL + 1) * (twoT + 1)
                table[twoT] = table.get(twoT, 0) + weight
    if by_T:
        return table
    return sum(table.values())
