"""Command-line interface.

Usage:
    abdisk spectrum --b 2 --nu -0.5
    abdisk dos --b 0 --nu -0.5 --emin 0 --emax 10 --n 21
    abdisk green --nu -0.5 --k2-re -1 --z-r 0.3 --zp-r 0.4 --zp-phi 0.5 --check
    abdisk verify --suite all

Exit codes: 0 success, 1 a verify check failed, 2 invalid flags,
3 the computation was refused (domain, seam, pole or convergence errors).
"""

import argparse
import cmath
import csv
import json
import sys

from . import __version__
from .errors import AbdiskError, EdgeSingularityError
from .radial import PhysicalConfig

FORMAT_VERSION = 1


def fmt(x):
    """Locale-independent rendering with 15 significant digits."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return f"{float(x):.15g}"


def _num(x):
    # JSON numbers with the same 15 digits as the CSV output
    return None if x is None else float(fmt(x))


def _allowed_text(am):
    vals = am.first(3)
    text = ",".join(str(v) for v in vals)
    if am.infinite:
        text += ",..."
    return text


def _allowed_json(am):
    return {"start": am.start, "step": am.step, "count": am.count}


def _emit_csv(out, blocks):
    w = csv.writer(out, lineterminator="\n")
    for header, columns, rows in blocks:
        out.write(f"# abdisk {header} v{FORMAT_VERSION} columns={','.join(columns)}\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([fmt(v) if not isinstance(v, str) else v for v in row])


def _emit_json(out, payload):
    json.dump(payload, out, indent=2, sort_keys=True, allow_nan=True)
    out.write("\n")


# -- commands ----------------------------------------------------------------


def run_spectrum(args, cfg, out):
    from .spectrum import FAMILIES, continuum_edge, landau_levels, vortex_levels

    levels = sorted(landau_levels(cfg) + vortex_levels(cfg),
                    key=lambda lv: (FAMILIES.index(lv.family), lv.n))
    edge = continuum_edge(cfg)
    if args.format == "json":
        _emit_json(out, {
            "format": f"abdisk-spectrum/{FORMAT_VERSION}",
            "config": {"b": _num(cfg.b), "nu": _num(cfg.nu), "R": _num(cfg.R)},
            "continuum_edge": _num(edge),
            "levels": [{"family": lv.family, "n": lv.n, "E": _num(lv.value),
                        "allowed_l": _allowed_json(lv.allowed_l), "weight": _num(lv.weight)}
                       for lv in levels],
        })
        return 0
    rows = [(lv.family, lv.n, lv.value, _allowed_text(lv.allowed_l), lv.weight) for lv in levels]
    rows.append(("continuum-edge", "", edge, "", ""))
    _emit_csv(out, [("spectrum", ["family", "n", "E", "allowed_l", "weight"], rows)])
    return 0


def _energies(args):
    if args.n == 1:
        return [args.emin]
    step = (args.emax - args.emin) / (args.n - 1)
    return [args.emin + i * step for i in range(args.n)]


def run_dos(args, cfg, out):
    from .dos import rho0_continuous, rho0_discrete, rho_nu_continuous, rho_nu_discrete
    from .spectrum import continuum_edge

    edge = continuum_edge(cfg)
    rows = []
    for E in _energies(args):
        vals = []
        for fn in (rho0_continuous, rho_nu_continuous):
            try:
                vals.append(fn(E, cfg))
            except EdgeSingularityError:
                vals.append(float("inf"))
        rows.append((E, vals[0], vals[1], E >= edge))
    discrete = [(t.energy, t.weight, t.family, "rho0") for t in rho0_discrete(cfg)]
    discrete += [(t.energy, t.weight, t.family, "rho_nu") for t in rho_nu_discrete(cfg)]
    if args.format == "json":
        _emit_json(out, {
            "format": f"abdisk-dos/{FORMAT_VERSION}",
            "config": {"b": _num(cfg.b), "nu": _num(cfg.nu), "R": _num(cfg.R)},
            "continuum_edge": _num(edge),
            "continuous": [{"E": _num(E), "rho0_c": _num(a), "rho_nu_c": _num(c), "above_edge": ab}
                           for E, a, c, ab in rows],
            "discrete": [{"energy": _num(e), "weight": _num(w), "family": f, "part": p}
                         for e, w, f, p in discrete],
        })
        return 0
    _emit_csv(out, [
        ("dos-continuous", ["E", "rho0_c", "rho_nu_c", "above_edge"], rows),
        ("dos-discrete", ["energy", "weight", "family", "part"], discrete),
    ])
    return 0


def run_green(args, cfg, out):
    from .resolvent import green_closed, green_mode_sum

    k2 = complex(args.k2_re, args.k2_im)
    z = args.z_r * cmath.exp(1j * args.z_phi)
    zp = args.zp_r * cmath.exp(1j * args.zp_phi)
    g = green_closed(z, zp, cfg, k2)
    fields = [("g0", g.g0), ("delta", g.delta), ("branch", g.branch), ("total", g.total)]
    if args.check:
        m = green_mode_sum(z, zp, cfg, k2)
        fields += [("mode_sum", m), ("discrepancy", abs(g.total - m) / max(1.0, abs(m)))]
    if args.format == "json":
        payload = {"format": f"abdisk-green/{FORMAT_VERSION}"}
        for name, v in fields:
            if isinstance(v, complex):
                payload[name] = {"re": _num(v.real), "im": _num(v.imag)}
            else:
                payload[name] = v if isinstance(v, int) else _num(v)
        _emit_json(out, payload)
        return 0
    columns, row = [], []
    for name, v in fields:
        if isinstance(v, complex):
            columns += [f"{name}_re", f"{name}_im"]
            row += [v.real, v.imag]
        else:
            columns.append(name)
            row.append(v)
    _emit_csv(out, [("green", columns, [row])])
    return 0


def run_verify(args, cfg, out):
    from .verify import run_suite

    checks = run_suite(args.suite)
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return 1 if failed else 0


# -- argument parsing --------------------------------------------------------


def build_parser():
    from .verify import SUITES

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--b", type=float, default=0.0, help="dimensionless field b = B R^2 / 4")
    common.add_argument("--nu", type=float, default=0.0, help="vortex flux in (-1, 0]")
    common.add_argument("--R", type=float, default=1.0, help="curvature radius")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    p = argparse.ArgumentParser(prog="abdisk", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"abdisk {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("spectrum", parents=[common], help="discrete levels and continuum edge")

    d = sub.add_parser("dos", parents=[common], help="densities of states on an energy grid")
    d.add_argument("--emin", type=float, default=0.0)
    d.add_argument("--emax", type=float, default=10.0)
    d.add_argument("--n", type=int, default=11, help="number of grid points")

    g = sub.add_parser("green", parents=[common], help="Green function at a point pair")
    g.add_argument("--k2-re", type=float, default=-1.0)
    g.add_argument("--k2-im", type=float, default=0.0)
    g.add_argument("--z-r", type=float, default=0.3)
    g.add_argument("--z-phi", type=float, default=0.0)
    g.add_argument("--zp-r", type=float, default=0.4)
    g.add_argument("--zp-phi", type=float, default=0.5)
    g.add_argument("--check", action="store_true", help="add the mode-sum value and discrepancy")

    v = sub.add_parser("verify", parents=[common], help="run self-check suites")
    v.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    return p


COMMANDS = {"spectrum": run_spectrum, "dos": run_dos, "green": run_green, "verify": run_verify}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = PhysicalConfig(args.b, args.nu, args.R)
    except AbdiskError as exc:
        parser.error(str(exc))
    if args.command == "dos" and args.n < 1:
        parser.error("--n must be at least 1")
    try:
        return COMMANDS[args.command](args, cfg, out)
    except AbdiskError as exc:
        print(f"abdisk {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
