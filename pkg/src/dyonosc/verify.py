"""Verification suites: every closed form against its independent check.

Each suite returns uniform row dicts (suite, check, value, threshold,
passed) so the CLI can emit them as a table.  Randomized suites take an
explicit seed and are fully deterministic given it.
"""

from __future__ import annotations

import math

import numpy as np

from . import fields, oracle, spectra, transforms, wavefun
from .specfun import (
    clebsch_gordan,
    gauss2f1_terminating,
    hermite,
    kummer_terminating,
    kummer_terminating_deriv,
    log_gamma,
    wigner_small_d,
)
from .spectra import PhysicalParams, SystemId

__all__ = ["SUITES", "run_suites"]


def _row(suite, check, value, threshold, larger_is_fail=True):
    passed = bool(value <= threshold) if larger_is_fail else bool(value >= threshold)
    return {
        "suite": suite,
        "check": check,
        "value": float(value),
        "threshold": float(threshold),
        "passed": passed,
    }


# ------------------------------------------------------------------ transforms

def suite_euler(seed=42):
    rng = np.random.default_rng(seed)
    rows = []
    for dim in transforms.OSC_DIMS:
        worst = 0.0
        for _ in range(1000):
            u = rng.normal(size=dim) * rng.choice([0.1, 1.0, 10.0])
            norm2 = float(u @ u)
            if norm2 == 0.0:
                continue
            worst = max(worst, abs(transforms.euler_residual(u)) / norm2 ** 2)
        rows.append(_row("euler", f"euler_identity_D{dim}", worst, 1e-12))
    # homogeneity: forward(lam u) = lam^2 forward(u)
    worst = 0.0
    for dim in transforms.OSC_DIMS:
        for _ in range(200):
            u = rng.normal(size=dim)
            lam = float(rng.uniform(0.2, 3.0))
            x1 = np.asarray(transforms.forward_map(lam * u).x)
            x0 = np.asarray(transforms.forward_map(u).x)
            scale = max(1e-300, float(np.max(np.abs(x1))))
            worst = max(worst, float(np.max(np.abs(x1 - lam * lam * x0))) / scale)
    rows.append(_row("euler", "forward_map_homogeneity", worst, 1e-12))
    # D=4 fiber-angle roundtrip
    worst = 0.0
    for _ in range(500):
        u = rng.normal(size=4)
        ang = transforms.fiber_angles(u)
        rebuilt = transforms.ks_point_from_angles(
            math.sqrt(float(u @ u)), ang.alpha, ang.beta, ang.gamma
        )
        worst = max(worst, float(np.max(np.abs(np.asarray(rebuilt.u) - u))))
    rows.append(_row("euler", "fiber_roundtrip_D4", worst, 1e-12))
    return rows


def suite_matrices(seed=42):
    rng = np.random.default_rng(seed)
    rows = []
    for dim in (2, 4, 8):
        worst_orth = 0.0
        worst_zero = 0.0
        worst_cons = 0.0
        for _ in range(1000):
            u = rng.normal(size=dim)
            norm2 = float(u @ u)
            H = transforms.hurwitz_matrix(u)
            worst_orth = max(
                worst_orth, float(np.max(np.abs(H @ H.T - norm2 * np.eye(dim)))) / norm2
            )
            if dim in (4, 8):
                worst_zero = max(worst_zero, transforms.zero_rows_residual(u) / norm2)
            x = np.asarray(transforms.forward_map(u).x)
            full = H @ u
            worst_cons = max(worst_cons, float(np.max(np.abs(full[: x.size] - x))) / max(norm2, 1e-300))
        rows.append(_row("matrices", f"orthogonality_D{dim}", worst_orth, 1e-12))
        if dim in (4, 8):
            rows.append(_row("matrices", f"zero_rows_D{dim}", worst_zero, 1e-12))
        rows.append(_row("matrices", f"forward_consistency_D{dim}", worst_cons, 1e-12))
    return rows


# --------------------------------------------------------------------- spectra

def _duality_systems(rng):
    yield SystemId("anyon1", nu=0.25), None
    yield SystemId("anyon1", nu=0.75), None
    yield SystemId("dyon2", s=0.0), None
    yield SystemId("dyon2", s=0.5), None
    yield SystemId("dyon3", s=0.5), None
    yield SystemId("ycm5"), None


def _qn_at_level(system, level, rng):
    kind = system.kind
    if kind == "anyon1":
        return {"n": level, "nu": system.nu}
    if kind == "dyon2":
        n = int(rng.integers(0, level + 1))
        m = level - n  # |m + s| = level - n + s for m >= 0
        return {"n": n, "m": m, "s": system.s}
    if kind == "dyon3":
        n = int(rng.integers(0, level + 1))
        return {"n": n, "j": abs(system.s) + (level - n)}
    if kind == "ycm5":
        return {"N": level}
    raise ValueError(kind)


def suite_duality(seed=42):
    rng = np.random.default_rng(seed)
    rows = []
    for system, _ in _duality_systems(rng):
        worst = 0.0
        for _ in range(50):
            E = float(rng.uniform(0.1, 10.0))
            mu = float(rng.uniform(0.1, 10.0))
            hbar = float(rng.uniform(0.1, 10.0))
            for level in range(41):
                qn = _qn_at_level(system, level, rng)
                res = spectra.duality_identity_residual(system, qn, E, mu=mu, hbar=hbar)
                eps = spectra.dyon_energy(system, qn, PhysicalParams.dyon(E, mu=mu, hbar=hbar))
                worst = max(worst, abs(res / eps))
        label = system.kind + (f"_s{system.s}" if system.kind.startswith("dyon") else "")
        label = label if system.kind != "anyon1" else f"anyon1_nu{system.nu}"
        rows.append(_row("duality", f"regime_swap_{label}", worst, 1e-12))
    return rows


def suite_degeneracy(seed=42):
    rows = []
    worst = max(
        abs(spectra.osc_degeneracy(4, N) - spectra.osc4_degeneracy_brute(N)) for N in range(21)
    )
    rows.append(_row("degeneracy", "osc4_formula_vs_brute_N20", worst, 0))
    worst = max(abs(lhs - rhs) for lhs, rhs in (spectra.ycm_degeneracy_sum_check(N) for N in range(31)))
    rows.append(_row("degeneracy", "ycm_sum_rule_N30", worst, 0))
    worst = max(
        abs(spectra.ycm_degeneracy(2 * n, 0) - (n + 1) * (n + 2) ** 2 * (n + 3) // 12)
        for n in range(16)
    )
    rows.append(_row("degeneracy", "ycm_T0_coulomb_n15", worst, 0))
    worst = 0
    for N in range(11):
        table = spectra.osc8_degeneracy_brute(N, by_T=True)
        for twoT, count in table.items():
            worst = max(worst, abs(count - spectra.ycm_degeneracy(N, twoT / 2.0)))
        worst = max(worst, abs(sum(table.values()) - spectra.osc_degeneracy(8, N)))
    rows.append(_row("degeneracy", "ycm_T_resolved_vs_brute_N10", worst, 0))
    return rows


# ---------------------------------------------------------------------- fields

def suite_fields(seed=42):
    rng = np.random.default_rng(seed)
    rows = []
    g = 1.0
    circs = [fields.circulation("vortex", g, radius=a) for a in (0.1, 1.0, 10.0)]
    rows.append(_row("fields", "vortex_circulation_radius_spread", np.ptp(circs) / (2 * math.pi * g), 1e-8))
    rows.append(
        _row("fields", "vortex_circulation_value", max(abs(c + 2 * math.pi * g) for c in circs), 1e-8)
    )
    worst = max(
        abs(fields.circulation("dirac", g, r=2.0, beta=b) + 2 * math.pi * g * (1 - math.cos(b)))
        for b in (math.pi / 6, math.pi / 2, 5 * math.pi / 6)
    )
    rows.append(_row("fields", "dirac_cap_circulation", worst, 1e-6))
    near = fields.circulation("dirac", g, r=1.5, beta=math.pi - 0.004)
    rows.append(_row("fields", "dirac_total_flux_limit", abs(near + 4 * math.pi * g), 1e-4))
    worst_orth = 0.0
    worst_transverse = 0.0
    worst_scale = 0.0
    worst_bound = 0.0
    count = 0
    while count < 1000:
        x = rng.normal(size=5) * rng.choice([0.3, 1.0, 3.0])
        r = float(np.linalg.norm(x))
        if r == 0.0 or r + x[0] < 0.1 * r:
            continue
        count += 1
        A = fields.yang_potentials(x)
        expect = (r - x[0]) / (r * r * (r + x[0]))
        worst_orth = max(worst_orth, float(np.max(np.abs(A @ A.T - expect * np.eye(3)))) / expect)
        worst_transverse = max(
            worst_transverse, float(np.max(np.abs(A @ x))) / (float(np.max(np.abs(A))) * r)
        )
        A2 = fields.yang_potentials(2.0 * x)
        worst_scale = max(worst_scale, float(np.max(np.abs(A2 - A / 2.0))) / float(np.max(np.abs(A))))
        worst_bound = max(worst_bound, float(np.max(np.sqrt(np.sum(A * A, axis=1)))) * r)
    rows.append(_row("fields", "yang_orthogonality_1000pts", worst_orth, 1e-12))
    rows.append(_row("fields", "yang_transversality_1000pts", worst_transverse, 1e-12))
    rows.append(_row("fields", "yang_scaling_degree", worst_scale, 1e-12))
    rows.append(_row("fields", "yang_bounded_by_const_over_r", worst_bound, math.sqrt(2.0 / 0.1) + 1e-9))
    # vortex and dirac scale as 1/lambda as well
    worst = 0.0
    for _ in range(100):
        x1, x2 = rng.normal(size=2)
        if x1 == 0 and x2 == 0:
            continue
        a0 = fields.vortex_potential(g, x1, x2)
        a1 = fields.vortex_potential(g, 2 * x1, 2 * x2)
        worst = max(worst, float(np.max(np.abs(a1 - a0 / 2))) / float(np.max(np.abs(a0))))
        r, al, be = rng.uniform(0.5, 2.0), rng.uniform(0, 2 * math.pi), rng.uniform(0.1, 2.8)
        d0 = fields.dirac_potential(g, r, al, be)
        d1 = fields.dirac_potential(g, 2 * r, al, be)
        worst = max(worst, float(np.max(np.abs(d1 - d0 / 2))) / float(np.max(np.abs(d0))))
    rows.append(_row("fields", "abelian_scaling_degree", worst, 1e-12))
    return rows


# ------------------------------------------------------------------------ odes

def _analytic_residual_cases():
    pd = PhysicalParams.dyon_coupling(1.0)
    x = np.linspace(0.05, 25.0, 500)
    for n, nu in ((0, 0.25), (2, 0.75)):
        eps = spectra.dyon_energy(SystemId("anyon1", nu=nu), {"n": n, "nu": nu}, pd)
        f, f1, f2 = wavefun.anyon_radial_with_derivs(n, nu, 1.0, x)
        yield f"anyon_n{n}_nu{nu}", "anyon", f, x, (f1, f2), dict(nu=nu, eps=eps, alpha=1.0)
    r = np.linspace(0.05, 30.0, 500)
    for n, m, s in ((0, 0, 0.0), (1, 1, 0.5)):
        eps = spectra.dyon_energy(SystemId("dyon2", s=s), {"n": n, "m": m, "s": s}, pd)
        f, f1, f2 = wavefun.dyon2_radial_with_derivs(n, m, s, 1.0, r)
        yield f"dyon2_n{n}_m{m}_s{s}", "dyon2_radial", f, r, (f1, f2), dict(m=m, s=s, eps=eps, e2=1.0)
    for n, j, s in ((0, 0.0, 0.0), (1, 1.5, 0.5)):
        eps = spectra.dyon_energy(SystemId("dyon3", s=s), {"n": n, "j": j}, pd)
        f, f1, f2 = wavefun.dyon3_radial_with_derivs(n, j, 1.0, r)
        yield f"dyon3_n{n}_j{j}", "dyon3_radial", f, r, (f1, f2), dict(j=j, s=s, eps=eps, e2=1.0)
    u = np.linspace(0.02, 7.0, 500)
    for n, j in ((0, 0.0), (1, 1.0)):
        E = 2 * n + 2 * j + 2.0
        f, f1, f2 = wavefun.osc4_radial_with_derivs(n, j, 1.0, u)
        yield f"osc4_n{n}_j{j}", "osc_radial", f, u, (f1, f2), dict(D=4, L=2 * j, E=E, omega=1.0)
    for n, M in ((0, 0), (2, 1)):
        E = 2 * n + abs(M) + 1.0
        f, f1, f2 = wavefun.osc2_radial_with_derivs(n, M, 1.0, u)
        yield f"osc2_n{n}_M{M}", "osc_radial", f, u, (f1, f2), dict(D=2, L=abs(M), E=E, omega=1.0)
    th = np.linspace(0.02, math.pi - 0.02, 500)
    for n_t, J, L in ((0, 0.0, 0.0), (1, 0.5, 0.5), (2, 1.0, 1.0)):
        lam = n_t + J + L
        Z, Z1, Z2 = wavefun.ycm_Z_with_derivs(n_t, J, L, th)
        yield f"ycmZ_nt{n_t}_J{J}_L{L}", "ycm_theta", Z, th, (Z1, Z2), dict(L=L, J=J, lam=lam)
    rr = np.linspace(0.1, 70.0, 500)
    for n_r, lam in ((0, 0.0), (1, 2.0), (2, 0.5)):
        eps = spectra.dyon_energy(SystemId("ycm5"), {"N": int(2 * (n_r + lam))}, pd)
        f, f1, f2 = wavefun.ycm_R_with_derivs(n_r, lam, 1.0, rr)
        yield f"ycmR_nr{n_r}_lam{lam}", "ycm_radial", f, rr, (f1, f2), dict(lam=lam, eps=eps, e2=1.0)


def suite_odes(seed=42):
    rows = []
    for name, ode, f, grid, derivs, params in _analytic_residual_cases():
        rep = oracle.residual(ode, f, grid, derivs=derivs, **params)
        rows.append(_row("odes", f"residual_{name}", rep.value, 1e-8))
    # centered differences on a fixed sample must lose a factor ~4 per h doubling
    u = np.linspace(0.02, 8.0, 2001)
    f, _, _ = wavefun.osc2_radial_with_derivs(1, 2, 1.0, u)
    rep = oracle.residual("osc_radial", f, u, D=2, L=2, E=5.0, omega=1.0)
    rows.append(_row("odes", "fd_refinement_ratio_minus_4", abs(rep.refine_ratio - 4.0), 0.5))
    # a doubled Gaussian exponent must fail the equation loudly
    f_bad, _, _ = wavefun.osc2_radial_with_derivs(1, 2, 1.0, u, gaussian="double")
    rep = oracle.residual("osc_radial", f_bad, u, D=2, L=2, E=5.0, omega=1.0)
    rows.append(_row("odes", "gaussian_exponent_discrimination", rep.value, 1e-2, larger_is_fail=False))
    f_bad2, _, _ = wavefun.osc2_radial_with_derivs(1, 2, 1.0, u, gaussian="half")
    rep = oracle.residual("osc_radial", f_bad2, u, D=2, L=2, E=5.0, omega=2.0)  # wrong frequency
    rows.append(_row("odes", "wrong_parameter_discrimination", rep.value, 1e-2, larger_is_fail=False))
    return rows


# -------------------------------------------------------------------- specfun

def suite_specfun(seed=42):
    rng = np.random.default_rng(seed)
    rows = []
    # Hermite <-> Kummer: H_{2n+2s}(z) = (-1)^n ((2n+2s)!/n!) (2z)^{2s} F(-n, 2s+1/2, z^2)
    worst = 0.0
    for n in range(11):
        for s in (0, 0.5):
            N = int(2 * n + 2 * s)
            if N > 20:
                continue
            for z in np.linspace(-3.0, 3.0, 25):
                if z == 0.0 and s:
                    continue
                lhs = hermite(N, z)
                log_fac = log_gamma(N + 1.0) - log_gamma(n + 1.0)
                rhs = (
                    (-1.0) ** n
                    * math.exp(log_fac)
                    * (2.0 * z) ** (2 * s)
                    * kummer_terminating(n, 2 * s + 0.5, z * z)
                )
                scale = max(abs(lhs), abs(rhs), 1e-30)
                worst = max(worst, abs(lhs - rhs) / scale)
    rows.append(_row("specfun", "hermite_kummer_identity_N20", worst, 1e-9))
    worst = 0.0
    for z in np.linspace(0.3, 50.0, 120):
        lhs = log_gamma(2 * z)
        rhs = (2 * z - 1) * math.log(2.0) - 0.5 * math.log(math.pi) + log_gamma(z) + log_gamma(z + 0.5)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    rows.append(_row("specfun", "gamma_duplication", worst, 1e-12))
    # Kummer ODE: z F'' + (c - z) F' + n F = 0 via exact term-shifted derivatives
    worst = 0.0
    for _ in range(60):
        n = int(rng.integers(0, 12))
        c = float(rng.uniform(0.3, 6.0))
        z = float(rng.uniform(0.0, 25.0))
        F = kummer_terminating(n, c, z)
        F1 = kummer_terminating_deriv(n, c, z, 1)
        F2 = kummer_terminating_deriv(n, c, z, 2)
        res = z * F2 + (c - z) * F1 + n * F
        scale = max(abs(z * F2), abs((c - z) * F1), abs(n * F), 1.0)
        worst = max(worst, abs(res) / scale)
    rows.append(_row("specfun", "kummer_ode_residual", worst, 1e-9))
    # Wigner-d unitarity and symmetry for j <= 3
    worst_u = 0.0
    worst_sym = 0.0
    for twoj in range(0, 7):
        j = twoj / 2.0
        for beta in (0.3, 0.9, 2.2):
            for twom in range(-twoj, twoj + 1, 2):
                m = twom / 2.0
                total = sum(
                    wigner_small_d(j, m, twos / 2.0, beta) ** 2
                    for twos in range(-twoj, twoj + 1, 2)
                )
                worst_u = max(worst_u, abs(total - 1.0))
                for twos in range(-twoj, twoj + 1, 2):
                    s = twos / 2.0
                    sym = wigner_small_d(j, m, s, beta) - (-1.0) ** (m - s) * wigner_small_d(j, s, m, beta)
                    worst_sym = max(worst_sym, abs(sym))
    rows.append(_row("specfun", "wigner_d_unitarity_j3", worst_u, 1e-12))
    rows.append(_row("specfun", "wigner_d_symmetry_j3", worst_sym, 1e-12))
    worst = 0.0
    for twoj1, twoj2 in ((1, 1), (2, 2), (3, 1), (4, 2), (6, 6), (5, 3)):
        j1, j2 = twoj1 / 2.0, twoj2 / 2.0
        couplings = [
            (tJ / 2.0, tM / 2.0)
            for tJ in range(abs(twoj1 - twoj2), twoj1 + twoj2 + 1, 2)
            for tM in range(-tJ, tJ + 1, 2)
        ]
        for (J, M) in couplings:
            for (Jp, Mp) in couplings:
                total = 0.0
                for tm1 in range(-twoj1, twoj1 + 1, 2):
                    m1 = tm1 / 2.0
                    m2 = M - m1
                    m2p = Mp - m1
                    if abs(m2) > j2 or m2 != m2p:
                        continue
                    total += clebsch_gordan(j1, m1, j2, m2, J, M) * clebsch_gordan(j1, m1, j2, m2, Jp, Mp)
                expect = 1.0 if (J == Jp and M == Mp) else 0.0
                worst = max(worst, abs(total - expect))
    rows.append(_row("specfun", "cg_orthogonality_j3", worst, 1e-12))
    return rows


# -------------------------------------------------------------- normalization

def suite_normalization(seed=42):
    rows = []
    pd = PhysicalParams.dyon_coupling(1.0)
    cases = [
        (SystemId("anyon1", nu=0.25), {"n": 0, "nu": 0.25}),
        (SystemId("anyon1", nu=0.25), {"n": 1, "nu": 0.25}),
        (SystemId("anyon1", nu=0.75), {"n": 0, "nu": 0.75}),
        (SystemId("dyon2"), {"n": 0, "m": 0, "s": 0.0}),
        (SystemId("dyon2"), {"n": 1, "m": 0, "s": 0.0}),
        (SystemId("dyon2", s=0.5), {"n": 1, "m": 1, "s": 0.5}),
        (SystemId("dyon3"), {"n": 0, "j": 0, "m": 0, "s": 0}),
        (SystemId("dyon3"), {"n": 1, "j": 0, "m": 0, "s": 0}),
        (SystemId("dyon3", s=0.5), {"n": 0, "j": 0.5, "m": 0.5, "s": 0.5}),
    ]
    for system, qn in cases:
        value = wavefun.normalization(system, qn, pd)
        label = "_".join(f"{k}{v}" for k, v in qn.items() if k != "nu")
        name = f"norm_{system.kind}_{label}" if system.kind != "anyon1" else \
            f"norm_anyon1_nu{qn['nu']}_n{qn['n']}"
        rows.append(_row("normalization", name, abs(value - 1.0), 1e-6))
    # closed-form |C|^2 = 2 (n+nu) hbar / (mu omega) against the oscillator second moment
    from ._quad import integrate

    worst = 0.0
    for n, nu, omega, mu in ((0, 0.25, 1.0, 1.0), (1, 0.75, 0.7, 1.3), (2, 0.25, 2.0, 0.5)):
        N = int(round(2 * n + 2 * nu - 0.5))
        top = math.sqrt((60.0 + 10.0 * N) / (mu * omega))

        def dens(u):
            psi = wavefun.osc1_wavefn(N, omega, u, mu=mu)
            return u * u * psi * psi

        moment, _ = integrate(dens, 0.0, top, tol=1e-11)
        expect = 2.0 * (n + nu) / (mu * omega)
        worst = max(worst, abs(2.0 * moment - expect) / expect)
    rows.append(_row("normalization", "closed_form_C2_second_moment", worst, 1e-8))
    return rows


# --------------------------------------------------------------------- oracle

def _oracle_cases():
    # (label, problem factory, k, analytic eigenvalues)
    harm = lambda u: 0.5 * u * u
    coul = lambda r: -1.0 / r

    def osc_problem(dim_eff, lam, k, n=4000):
        rmax = oracle.harmonic_rmax(k, dim_eff, 1.0)
        return oracle.RadialProblem(dim_eff, lam, harm, rmax, n)

    def coul_problem(dim_eff, lam, k, pot=coul, n=4000):
        rmax = oracle.coulomb_rmax(k, lam, dim_eff, 1.0)
        return oracle.RadialProblem(dim_eff, lam, pot, rmax, n)

    yield "osc2_M0", osc_problem(2, 0.0, 5), [2 * n + 1.0 for n in range(5)]
    yield "osc4_j0", osc_problem(4, 0.0, 5), [2 * n + 2.0 for n in range(5)]
    yield "osc8_L0", osc_problem(8, 0.0, 5), [2 * n + 4.0 for n in range(5)]
    yield "dyon3_s0_j0", coul_problem(3, 0.0, 5), [-0.5 / (n + 1.0) ** 2 for n in range(5)]

    def coul_gold(r):  # Coulomb plus the explicit Goldhaber addition at s = 1/2
        return -1.0 / r + fields.goldhaber_term(0.5, r)

    j, s = 0.5, 0.5
    lam_monopole = j * (j + 1.0) - s * s  # gauge-Laplacian eigenvalue; Goldhaber restores j(j+1)
    yield (
        "dyon3_s05_j05_goldhaber",
        coul_problem(3, lam_monopole, 5, pot=coul_gold),
        [-0.5 / (n + j + 1.0) ** 2 for n in range(5)],
    )
    yield "ycm5_lam0", coul_problem(5, 0.0, 5), [-0.5 / (n + 2.0) ** 2 for n in range(5)]
    yield "dyon2_s05", coul_problem(2, 0.25, 5), [-0.5 / (n + 1.0) ** 2 for n in range(5)]


def suite_oracle(seed=42):
    rows = []
    for label, problem, exact in _oracle_cases():
        res = oracle.solve_radial(problem, len(exact))
        worst = float(np.max(np.abs(res.eigenvalues - np.asarray(exact)) / np.abs(exact)))
        rows.append(_row("oracle", f"agreement_{label}", worst, 1e-3))
    for L, J in ((0.0, 0.0), (0.5, 0.5), (1.0, 1.0)):
        res = oracle.solve_angular_theta(L, J, 4)
        lam = -1.5 + np.sqrt(res.eigenvalues + 2.25)
        exact = np.array([L + J + n for n in range(4)])
        worst = float(np.max(np.abs(lam - exact) / np.maximum(np.abs(exact), 1.0)))
        rows.append(_row("oracle", f"agreement_theta_L{L}_J{J}", worst, 1e-3))
    # O(h^2): error vs the analytic value over a 4x refinement, ground states
    for label, dim_eff, exact in (("osc2", 2, 1.0), ("osc4", 4, 2.0)):
        errs = []
        for n in (1000, 4000):
            rmax = oracle.harmonic_rmax(4, dim_eff, 1.0)
            prob = oracle.RadialProblem(dim_eff, 0.0, lambda u: 0.5 * u * u, rmax, n)
            res = oracle.solve_radial(prob, 1)
            errs.append(abs(res.eigenvalues[0] - exact))
        order = math.log(errs[0] / errs[1]) / math.log(4.0)
        rows.append(_row("oracle", f"convergence_order_{label}_minus_2", abs(order - 2.0), 0.4))
    return rows


SUITES = {
    "euler": suite_euler,
    "matrices": suite_matrices,
    "duality": suite_duality,
    "degeneracy": suite_degeneracy,
    "fields": suite_fields,
    "odes": suite_odes,
    "specfun": suite_specfun,
    "normalization": suite_normalization,
    "oracle": suite_oracle,
}


def run_suites(names, seed=42, max_workers=None):
    """Run the named suites (or all); returns (rows, all_passed)."""
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    rows = []
    if max_workers is not None and max_workers > 1 and len(names) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            for chunk in pool.map(lambda n: SUITES[n](seed=seed), names):
                rows.extend(chunk)
    else:
        for name in names:
            rows.extend(SUITES[name](seed=seed))
    return rows, all(r["passed"] for r in rows)
