"""Command-line front end: spectra, duality maps, sampling, oracle, verify.

Every command emits one OutputRecord: JSON by default, CSV (rows only,
RFC-4180) with --format csv.  Floats are serialized with shortest
round-trip precision (up to 17 significant digits), so records parse back
losslessly.  Exit codes: 0 success, 1 domain or verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import fields, oracle, verify, wavefun
from .errors import DyonOscError
from .spectra import PhysicalParams, SystemId, dual_params, enumerate_spectrum

SCHEMA_VERSION = "1.0"


def _record(command: str, params: dict, rows: list) -> dict:
    flat = {
        k: (list(v) if isinstance(v, tuple) else v)
        for k, v in params.items()
        if k not in ("func", "command")
        and v is not None
        and isinstance(v, (str, int, float, bool, list, tuple))
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": flat,
        "rows": rows,
    }


def _format_value(value):
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return json.dumps(value)
    return value


def emit(record: dict, fmt: str = "json", out=None) -> str:
    if fmt == "json":
        text = json.dumps(record, indent=2)
    elif fmt == "csv":
        buf = io.StringIO()
        rows = record["rows"]
        fieldnames = list(rows[0].keys()) if rows else []
        writer = csv.DictWriter(buf, fieldnames=fieldnames)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _format_value(v) for k, v in row.items()})
        text = buf.getvalue()
    else:
        raise DyonOscError(f"unknown format {fmt!r}")
    if out:
        with open(out, "w") as handle:
            handle.write(text + ("\n" if not text.endswith("\n") else ""))
    else:
        print(text)
    return text


def worker_count() -> int:
    env = os.environ.get("DYONOSC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _build_params(args) -> PhysicalParams:
    mu, hbar, c = args.mu, args.hbar, args.c
    if getattr(args, "C0", None) is not None or getattr(args, "C2", None) is not None:
        return PhysicalParams.modified(
            C0=args.C0 or 0.0, C2=args.C2 or 0.0, E=getattr(args, "E", None),
            W=getattr(args, "W", ()) or (), mu=mu, hbar=hbar, c=c,
        )
    if getattr(args, "omega", None) is not None:
        return PhysicalParams.oscillator(args.omega, mu=mu, hbar=hbar, c=c)
    if getattr(args, "E", None) is not None:
        return PhysicalParams.dyon(args.E, mu=mu, hbar=hbar, c=c)
    if getattr(args, "e2", None) is not None:
        return PhysicalParams.dyon_coupling(args.e2, mu=mu, hbar=hbar, c=c)
    raise DyonOscError("no regime parameter given (need --omega, --E or --e2)")


def _build_system(args) -> SystemId:
    kwargs = {}
    if args.system == "anyon1":
        kwargs["nu"] = args.nu
    if args.system in ("dyon2", "dyon3"):
        kwargs["s"] = args.s
    if args.system == "ycm5":
        kwargs["T"] = args.T
    return SystemId(args.system, **kwargs)


def cmd_spectrum(args) -> int:
    system = _build_system(args)
    params = _build_params(args)
    lines = enumerate_spectrum(system, params, args.levels - 1)
    rows = [{**line.qn, "energy": line.energy, "degeneracy": line.degeneracy} for line in lines]
    emit(_record("spectrum", vars(args), rows), args.format, args.out)
    return 0


def cmd_map(args) -> int:
    if args.direction == "osc2dyon":
        params = _build_params(args)
        mapped = dual_params(params, "osc2dyon")
    else:
        params = PhysicalParams(mu=args.mu, hbar=args.hbar, c=args.c,
                                regime="dyon_coupling", e2=args.e2 or 1.0)
        mapped = dual_params(params, "dyon2osc", eps=args.eps, e2=args.e2)
    row = {
        "eps": mapped.eps,
        "e2": mapped.e2,
        "omega": mapped.omega,
        "E": mapped.E,
        "w_residual": list(map(list, mapped.w_residual)),
    }
    rows = [row]
    if args.levels and args.direction == "osc2dyon" and args.E is not None:
        from .spectra import quantized_frequencies

        system = SystemId(args.system) if args.system else SystemId("dyon3")
        pairs = quantized_frequencies(system, args.E, args.levels, hbar=args.hbar)
        rows = [
            {**qn, "omega_N": omega, "eps_N": -args.mu * omega ** 2 / 8.0}
            for qn, omega in pairs
        ]
    emit(_record("map", vars(args), rows), args.format, args.out)
    return 0


def _parse_grid(spec: str):
    try:
        start, stop, count = spec.split(":")
        return np.linspace(float(start), float(stop), int(count))
    except ValueError as exc:
        raise DyonOscError(f"bad grid spec {spec!r}, expected start:stop:count") from exc


def cmd_wavefn(args) -> int:
    grid = _parse_grid(args.grid)
    mu, hbar = args.mu, args.hbar
    e2 = args.e2 if args.e2 is not None else 1.0
    omega = args.omega if args.omega is not None else 1.0
    rows = []
    if args.system == "anyon1":
        vals = wavefun.anyon_wavefn(args.n, args.nu, e2, grid, mu=mu, hbar=hbar,
                                    extension=args.extension)
        rows = [{"x": float(x), "re": float(v), "im": 0.0} for x, v in zip(grid, vals)]
    elif args.system == "dyon2":
        for r in grid:
            v = wavefun.dyon2_wavefn(args.n, args.m, args.s, e2, r, phi=args.phi, mu=mu, hbar=hbar)
            rows.append({"r": float(r), "re": float(np.real(v)), "im": float(np.imag(v))})
    elif args.system == "dyon3":
        for r in grid:
            v = wavefun.dyon3_wavefn(args.n, args.j, args.m, args.s, e2, r,
                                     alpha=args.alpha, beta=args.beta, mu=mu, hbar=hbar)
            rows.append({"r": float(r), "re": float(np.real(v)), "im": float(np.imag(v))})
    elif args.system == "osc4":
        for u in grid:
            v = wavefun.osc4_wavefn(args.n, args.j, args.m, args.s, omega, u,
                                    args.alpha, args.beta, args.gamma, mu=mu, hbar=hbar)
            rows.append({"u": float(u), "re": float(np.real(v)), "im": float(np.imag(v))})
    elif args.system == "osc2":
        for u in grid:
            v = wavefun.osc2_wavefn(args.n, args.m, omega, u, phi=args.phi, mu=mu, hbar=hbar)
            rows.append({"u": float(u), "re": float(np.real(v)), "im": float(np.imag(v))})
    elif args.system == "osc1":
        vals = wavefun.osc1_wavefn(args.N, omega, grid, mu=mu, hbar=hbar)
        rows = [{"u": float(u), "re": float(v), "im": 0.0} for u, v in zip(grid, vals)]
    elif args.system == "ycm5":
        if args.part == "radial":
            lam = args.lam
            vals = wavefun.ycm_radial_R(args.nr, lam, e2, grid, mu=mu, hbar=hbar)
            rows = [{"r": float(r), "re": float(v), "im": 0.0} for r, v in zip(grid, vals)]
        else:
            vals = wavefun.ycm_angular_Z(args.ntheta, args.J, args.L, grid)
            rows = [{"theta": float(t), "re": float(v), "im": 0.0} for t, v in zip(grid, vals)]
    else:
        raise DyonOscError(f"no wavefunction sampler for system {args.system!r}")
    emit(_record("wavefn", vars(args), rows), args.format, args.out)
    return 0


def cmd_field(args) -> int:
    at = [float(v) for v in args.at.split(",")]
    if args.kind == "vortex":
        if len(at) != 2:
            raise DyonOscError("vortex needs --at x1,x2")
        a = fields.vortex_potential(args.g, *at)
        rows = [{"component": i + 1, "value": float(v)} for i, v in enumerate(a)]
    elif args.kind == "dirac":
        if len(at) != 3:
            raise DyonOscError("dirac needs --at r,alpha,beta")
        a = fields.dirac_potential(args.g, *at)
        rows = [{"component": i + 1, "value": float(v)} for i, v in enumerate(a)]
    elif args.kind == "yang":
        if len(at) != 5:
            raise DyonOscError("yang needs --at x0,x1,x2,x3,x4")
        triplet = fields.yang_potentials(at)
        rows = [
            {"a": a + 1, **{f"A{i}": float(v) for i, v in enumerate(vec)}}
            for a, vec in enumerate(triplet)
        ]
    else:
        raise DyonOscError(f"unknown field kind {args.kind!r}")
    emit(_record("field", vars(args), rows), args.format, args.out)
    return 0


def cmd_solve_radial(args) -> int:
    mu, hbar = args.mu, args.hbar
    omega = args.omega if args.omega is not None else 1.0
    e2 = args.e2 if args.e2 is not None else 1.0
    k = args.k
    if args.system == "theta":
        res = oracle.solve_angular_theta(args.L, args.J, k, grid_points=args.grid_points)
        lam = -1.5 + np.sqrt(res.eigenvalues + 2.25)
        rows = [
            {"index": i, "lambda_lambda_plus_3": float(v), "lambda": float(l), "est_error": float(e)}
            for i, (v, l, e) in enumerate(zip(res.eigenvalues, lam, res.est_error))
        ]
        emit(_record("solve-radial", vars(args), rows), args.format, args.out)
        return 0
    harm = lambda u: 0.5 * mu * omega ** 2 * u * u
    coul = lambda r: -e2 / r
    if args.system == "osc2":
        dim_eff, lam, pot = 2, float(args.m) ** 2, harm
        rmax = args.rmax or oracle.harmonic_rmax(k, dim_eff, omega, mu, hbar)
    elif args.system == "osc4":
        dim_eff, lam, pot = 4, 4.0 * args.j * (args.j + 1.0), harm
        rmax = args.rmax or oracle.harmonic_rmax(k, dim_eff, omega, mu, hbar)
    elif args.system == "osc8":
        dim_eff, lam, pot = 8, args.L * (args.L + 6.0), harm
        rmax = args.rmax or oracle.harmonic_rmax(k, dim_eff, omega, mu, hbar)
    elif args.system == "dyon2":
        dim_eff, lam, pot = 2, (args.m + args.s) ** 2, coul
        rmax = args.rmax or oracle.coulomb_rmax(k, lam, dim_eff, e2, mu, hbar)
    elif args.system == "dyon3":
        s = args.s
        dim_eff, lam = 3, args.j * (args.j + 1.0) - s * s
        pot = lambda r: -e2 / r + fields.goldhaber_term(s, r, mu=mu, hbar=hbar)
        rmax = args.rmax or oracle.coulomb_rmax(k, args.j * (args.j + 1.0), dim_eff, e2, mu, hbar)
    elif args.system == "ycm5":
        dim_eff, lam, pot = 5, args.lam * (args.lam + 3.0), coul
        rmax = args.rmax or oracle.coulomb_rmax(k, lam, dim_eff, e2, mu, hbar)
    elif args.system == "anyon1":
        dim_eff, lam = 1, -args.nu * (1.0 - args.nu)
        pot = lambda x: -e2 / x
        rmax = args.rmax or oracle.coulomb_rmax(k, 0.0, 1, e2, mu, hbar)
    else:
        raise DyonOscError(f"no radial problem for system {args.system!r}")
    problem = oracle.RadialProblem(dim_eff, lam, pot, rmax, args.grid_points, mu=mu, hbar=hbar)
    res = oracle.solve_radial(problem, k)
    rows = [
        {"index": i, "eigenvalue": float(v), "est_error": float(e)}
        for i, (v, e) in enumerate(zip(res.eigenvalues, res.est_error))
    ]
    emit(_record("solve-radial", vars(args), rows), args.format, args.out)
    return 0


def cmd_verify(args) -> int:
    names = [args.suite]
    rows, ok = verify.run_suites(names, seed=args.seed, max_workers=worker_count())
    emit(_record("verify", vars(args), rows), args.format, args.out)
    return 0 if ok else 1


def _add_common(sub):
    sub.add_argument("--mu", type=float, default=1.0)
    sub.add_argument("--hbar", type=float, default=1.0)
    sub.add_argument("--c", type=float, default=1.0)
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", default=None, help="write the record to this file instead of stdout")


def _add_system(sub, systems):
    sub.add_argument("--system", choices=systems, required=True)
    sub.add_argument("--nu", type=float, default=0.25, help="anyon statistics parameter")
    sub.add_argument("--s", type=float, default=0.0, help="inner momentum / monopole number")
    sub.add_argument("--T", type=float, default=None, help="ycm5 isospin (omit to aggregate)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyonosc",
        description="Oscillator / charge-dyon duality: spectra, maps, wavefunctions, fields, oracle.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("spectrum", help="closed-form spectrum table")
    _add_system(sp, ("osc1", "osc2", "osc4", "osc8", "anyon1", "dyon2", "dyon3", "ycm5"))
    sp.add_argument("--levels", type=int, default=5)
    sp.add_argument("--omega", type=float, default=None)
    sp.add_argument("--E", type=float, default=None)
    sp.add_argument("--e2", type=float, default=None)
    _add_common(sp)
    sp.set_defaults(func=cmd_spectrum)

    mp = subs.add_parser("map", help="duality parameter map between regimes")
    mp.add_argument("--direction", choices=("osc2dyon", "dyon2osc"), required=True)
    mp.add_argument("--omega", type=float, default=None)
    mp.add_argument("--E", type=float, default=None)
    mp.add_argument("--eps", type=float, default=None)
    mp.add_argument("--e2", type=float, default=None)
    mp.add_argument("--C0", type=float, default=None)
    mp.add_argument("--C2", type=float, default=None)
    mp.add_argument("--W", type=float, nargs="*", default=None, help="C4 C6 ... tail coefficients")
    mp.add_argument("--levels", type=int, default=0, help="emit the paired (omega_N, eps_N) table")
    mp.add_argument("--system", default=None, help="system for the --levels table")
    _add_common(mp)
    mp.set_defaults(func=cmd_map)

    wf = subs.add_parser("wavefn", help="sample a wavefunction on a grid")
    _add_system(wf, ("osc1", "osc2", "osc4", "anyon1", "dyon2", "dyon3", "ycm5"))
    wf.add_argument("--grid", required=True, help="start:stop:count")
    wf.add_argument("--n", type=int, default=0)
    wf.add_argument("--N", type=int, default=0)
    wf.add_argument("--m", type=float, default=0.0)
    wf.add_argument("--j", type=float, default=0.0)
    wf.add_argument("--omega", type=float, default=None)
    wf.add_argument("--e2", type=float, default=None)
    wf.add_argument("--phi", type=float, default=0.0)
    wf.add_argument("--alpha", type=float, default=0.0)
    wf.add_argument("--beta", type=float, default=math.pi / 2)
    wf.add_argument("--gamma", type=float, default=0.0)
    wf.add_argument("--extension", choices=("even", "odd"), default="even")
    wf.add_argument("--part", choices=("radial", "angular"), default="radial")
    wf.add_argument("--nr", type=int, default=0)
    wf.add_argument("--ntheta", type=int, default=0)
    wf.add_argument("--lam", type=float, default=0.0)
    wf.add_argument("--J", type=float, default=0.0)
    wf.add_argument("--L", type=float, default=0.0)
    _add_common(wf)
    wf.set_defaults(func=cmd_wavefn)

    fd = subs.add_parser("field", help="evaluate a monopole vector potential")
    fd.add_argument("--kind", choices=("vortex", "dirac", "yang"), required=True)
    fd.add_argument("--at", required=True, help="comma-separated coordinates")
    fd.add_argument("--g", type=float, default=1.0, help="magnetic charge")
    _add_common(fd)
    fd.set_defaults(func=cmd_field)

    sr = subs.add_parser("solve-radial", help="finite-difference eigenvalues (the oracle)")
    sr.add_argument("--system", required=True,
                    choices=("osc2", "osc4", "osc8", "dyon2", "dyon3", "ycm5", "anyon1", "theta"))
    sr.add_argument("--k", type=int, default=5)
    sr.add_argument("--grid-points", type=int, default=4000, dest="grid_points")
    sr.add_argument("--rmax", type=float, default=None)
    sr.add_argument("--omega", type=float, default=None)
    sr.add_argument("--e2", type=float, default=None)
    sr.add_argument("--m", type=float, default=0.0)
    sr.add_argument("--j", type=float, default=0.0)
    sr.add_argument("--s", type=float, default=0.0)
    sr.add_argument("--L", type=float, default=0.0)
    sr.add_argument("--J", type=float, default=0.0)
    sr.add_argument("--lam", type=float, default=0.0)
    sr.add_argument("--nu", type=float, default=0.25)
    _add_common(sr)
    sr.set_defaults(func=cmd_solve_radial)

    vf = subs.add_parser("verify", help="run a verification suite")
    vf.add_argument("--suite", default="all",
                    choices=tuple(verify.SUITES) + ("all",))
    vf.add_argument("--seed", type=int, default=42)
    _add_common(vf)
    vf.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    # let "--grid -5:5:101" through argparse's option heuristic
    for i in range(len(argv) - 1):
        if argv[i] == "--grid" and argv[i + 1].startswith("-"):
            argv[i : i + 2] = [f"--grid={argv[i + 1]}"]
            break
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DyonOscError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
