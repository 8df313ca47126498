"""Command-line surface: coefficient tables, pointwise evaluation, Gram
reports, circle integrals, weight families, limit studies, and the named
verification suites.

Output is CSV (RFC 4180, one header row, 17-significant-digit lowercase
scientific numbers) or a single JSON object with a "schema": "qgauss/1"
marker. Identical flags produce byte-identical output; nothing here
depends on time, locale, or environment.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .context import QContext
from .chain import evaluate
from .circle import circle_gram_dg, circle_gram_mac
from .dg import (_limit_grid, build_phi, dg_coefficients, gram_phi,
                 harmonic_limit_scan, limit_ratio_curve)
from .macfarlane import (build_Bn, indefinite_gram, mac_coeffs,
                         mac_harmonic_limit, mac_limit_ratio_curve)
from .weights import gamma_family_gram, orthonormal_weight_family
from .report import GramReport
from .verify import SUITES, run_suite

SCHEMA = "qgauss/1"
DEFAULT_C_LIST = (0.2, 0.1, 0.05)


@dataclass
class RunConfig:
    """One resolved invocation: the supplied scale plus its derived twin,
    and every knob a subcommand might read."""

    c: float
    q: float
    supplied: str
    defaulted: bool = False
    family: str | None = None
    n: int | None = None
    nmax: int | None = None
    digits: int | None = None
    points: int | None = None
    fmt: str = "json"
    out: str | None = None
    seed: int = 12345
    count: int | None = None
    nweights: int | None = None

    def context(self) -> QContext:
        if self.supplied == "c":
            return QContext(c=self.c, digits=self.digits)
        return QContext(q=self.q, digits=self.digits)

    def echo(self) -> dict:
        return {"c": self.c, "q": self.q, "supplied": self.supplied,
                "defaulted": self.defaulted, "digits": self.digits,
                "seed": self.seed}


def _fmt(x: float) -> str:
    return f"{float(x):.16e}"


def _resolve_scale(args) -> tuple:
    if getattr(args, "q", None) is not None and getattr(args, "c", None) is not None:
        raise SystemExit("error: give exactly one of --q and --c, not both")
    if getattr(args, "q", None) is not None:
        q = float(args.q)
        return math.sqrt(-math.log(q)), q, "q", False
    if getattr(args, "c", None) is not None:
        c = float(args.c)
        return c, math.exp(-c * c), "c", False
    return math.sqrt(math.log(2.0)), 0.5, "q", True


def _config(args) -> RunConfig:
    c, q, supplied, defaulted = _resolve_scale(args)
    return RunConfig(
        c=c, q=q, supplied=supplied, defaulted=defaulted,
        family=getattr(args, "family", None),
        n=getattr(args, "n", None),
        nmax=getattr(args, "nmax", None),
        digits=getattr(args, "digits", None),
        points=getattr(args, "points", None),
        fmt=getattr(args, "format", "json"),
        out=getattr(args, "out", None),
        seed=getattr(args, "seed", 12345),
        count=getattr(args, "count", None),
        nweights=getattr(args, "nweights", None),
    )


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, out: str | None):
    payload = {"schema": SCHEMA, **payload}
    _write(json.dumps(payload, sort_keys=True, indent=2) + "\n", out)


def _emit_csv(header: list, rows: list, out: str | None):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    _write(buf.getvalue(), out)


def _parse_grid(text: str) -> np.ndarray:
    try:
        lo_s, hi_s, count_s = text.split(":")
        lo, hi, count = float(lo_s), float(hi_s), int(count_s)
    except ValueError:
        raise SystemExit(f"error: grid must be min:max:count, got {text!r}")
    if count < 1:
        raise SystemExit("error: empty grid")
    return np.linspace(lo, hi, count)


# -- subcommands -------------------------------------------------------------

def cmd_coeffs(cfg: RunConfig) -> int:
    ctx = cfg.context()
    n = cfg.n
    if cfg.family == "dg":
        table = dg_coefficients(ctx, n)
        coeffs = [complex(float(v), 0.0) for v in table.normalized]
        normalization = "phi-unit-norm"
    elif cfg.family == "mac":
        table = mac_coeffs(ctx, n)
        coeffs = [complex(float(table.zeta * e), 0.0) for e in table.E]
        normalization = "zeta-times-E"
    else:
        raise SystemExit(f"error: coeffs supports families dg and mac, "
                         f"got {cfg.family!r}")
    if cfg.fmt == "json":
        _emit_json({
            "command": "coeffs", "config": cfg.echo(),
            "family": cfg.family, "n": n, "normalization": normalization,
            "rows": [{"k": k, "center": float(k), "re": v.real, "im": v.imag}
                     for k, v in enumerate(coeffs)],
        }, cfg.out)
    else:
        header = ["c", "q", "family", "n", "normalization", "k", "center",
                  "coefficient_re", "coefficient_im"]
        rows = [[_fmt(cfg.c), _fmt(cfg.q), cfg.family, n, normalization,
                 k, _fmt(k), _fmt(v.real), _fmt(v.imag)]
                for k, v in enumerate(coeffs)]
        _emit_csv(header, rows, cfg.out)
    return 0


def _family_chain(cfg: RunConfig, ctx: QContext):
    if cfg.family == "dg":
        return build_phi(ctx, cfg.n)
    if cfg.family == "mac":
        return build_Bn(ctx, cfg.n)
    raise SystemExit(f"error: unknown family {cfg.family!r}")


def cmd_eval(cfg: RunConfig, grid: np.ndarray) -> int:
    ctx = cfg.context()
    chain = _family_chain(cfg, ctx)
    if ctx.digits is None:
        values = np.atleast_1d(np.asarray(evaluate(chain, grid), dtype=complex))
    else:
        values = np.array([complex(evaluate(chain, float(x))) for x in grid])
    if cfg.fmt == "json":
        _emit_json({
            "command": "eval", "config": cfg.echo(), "family": cfg.family,
            "n": cfg.n,
            "rows": [{"x": float(x), "re": v.real, "im": v.imag}
                     for x, v in zip(grid, values)],
        }, cfg.out)
    else:
        header = ["c", "q", "family", "n", "x", "value_re", "value_im"]
        rows = [[_fmt(cfg.c), _fmt(cfg.q), cfg.family, cfg.n,
                 _fmt(x), _fmt(v.real), _fmt(v.imag)]
                for x, v in zip(grid, values)]
        _emit_csv(header, rows, cfg.out)
    return 0


def _emit_gram(cfg: RunConfig, command: str, report: GramReport) -> int:
    if cfg.fmt == "json":
        _emit_json({"command": command, "config": cfg.echo(),
                    "report": report.to_dict()}, cfg.out)
        return 0
    header = ["c", "q", "i", "j", "label_i", "label_j", "value", "target",
              "deviation"]
    rows = []
    for i, label_i in enumerate(report.labels):
        for j, label_j in enumerate(report.labels):
            v = float(report.matrix[i][j])
            t = float(report.target[i][j])
            rows.append([_fmt(cfg.c), _fmt(cfg.q), i, j,
                         str(label_i), str(label_j),
                         _fmt(v), _fmt(t), _fmt(v - t)])
    _emit_csv(header, rows, cfg.out)
    return 0


def cmd_gram(cfg: RunConfig) -> int:
    ctx = cfg.context()
    nmax = 8 if cfg.nmax is None else cfg.nmax
    if cfg.family == "dg":
        report = gram_phi(ctx, nmax)
    elif cfg.family == "mac":
        report = indefinite_gram(ctx, nmax)
    elif cfg.family == "gamma":
        report = gamma_family_gram(ctx, 3 if cfg.nweights is None
                                   else cfg.nweights, nmax)
    else:
        raise SystemExit(f"error: gram supports dg, mac, gamma; "
                         f"got {cfg.family!r}")
    return _emit_gram(cfg, "gram", report)


def cmd_circle(cfg: RunConfig, conjugate_first: bool) -> int:
    ctx = cfg.context()
    points = 512 if cfg.points is None else cfg.points
    if cfg.family == "dg":
        nmax = 8 if cfg.nmax is None else cfg.nmax
        report = circle_gram_dg(ctx, nmax, points)
    elif cfg.family == "mac":
        nmax = 5 if cfg.nmax is None else cfg.nmax
        report = circle_gram_mac(ctx, nmax, points, conjugate_first)
    else:
        raise SystemExit(f"error: circle supports dg and mac; "
                         f"got {cfg.family!r}")
    return _emit_gram(cfg, "circle", report)


def cmd_weights(cfg: RunConfig) -> int:
    ctx = cfg.context()
    count = 3 if cfg.count is None else cfg.count
    family = orthonormal_weight_family(ctx, count)
    if cfg.fmt == "json":
        _emit_json({
            "command": "weights", "config": cfg.echo(), "count": count,
            "weights": [{"index": i,
                         "modes": [[m, v.real, v.imag]
                                   for m, v in sorted(w.modes.items())]}
                        for i, w in enumerate(family)],
        }, cfg.out)
    else:
        header = ["c", "q", "weight_index", "mode", "coeff_re", "coeff_im"]
        rows = []
        for i, w in enumerate(family):
            for m, v in sorted(w.modes.items()):
                rows.append([_fmt(cfg.c), _fmt(cfg.q), i, m,
                             _fmt(v.real), _fmt(v.imag)])
        _emit_csv(header, rows, cfg.out)
    return 0


def cmd_limit(cfg: RunConfig, c_list: list, grid: np.ndarray | None) -> int:
    base_grid = np.arange(0.3, 3.31, 0.15) if grid is None else grid
    if cfg.family == "dg":
        scan = harmonic_limit_scan(cfg.n, c_list, base_grid)
        curve = limit_ratio_curve
    elif cfg.family == "mac":
        scan = mac_harmonic_limit(cfg.n, c_list, base_grid)
        curve = mac_limit_ratio_curve
    else:
        raise SystemExit(f"error: limit supports dg and mac; "
                         f"got {cfg.family!r}")
    if cfg.fmt == "json":
        _emit_json({"command": "limit", "config": cfg.echo(),
                    "family": cfg.family, "n": cfg.n, "c_list": list(c_list),
                    "rows": scan}, cfg.out)
        return 0
    pts = _limit_grid(cfg.n, base_grid)
    curves = [curve(cfg.n, c, pts) for c in c_list]
    header = ["s"] + [f"rho_c{c:g}" for c in c_list]
    rows = [[_fmt(s)] + [_fmt(col[i]) for col in curves]
            for i, s in enumerate(pts)]
    _emit_csv(header, rows, cfg.out)
    return 0


def cmd_verify(cfg: RunConfig, suite: str, conjugate_first: bool) -> int:
    ctx = cfg.context()
    result = run_suite(
        suite, ctx=ctx, nmax=cfg.nmax, points=cfg.points, seed=cfg.seed,
        count=cfg.count, nweights=cfg.nweights, c=float(ctx.c),
        conjugate_first=conjugate_first, digits=cfg.digits)
    out = cfg.out or f"verify_{suite}.json"
    payload = {"command": "verify", "config": cfg.echo(),
               "result": result.to_dict()}
    _emit_json(payload, out)
    status = "PASS" if result.passed else "FAIL"
    print(f"{suite}: {status} max_deviation={result.max_deviation:.3e} "
          f"tolerance={result.tolerance:g} report={out}")
    return 0 if result.passed else 1


# -- parser ------------------------------------------------------------------

def _add_scale(sp):
    sp.add_argument("--q", type=float, default=None,
                    help="deformation parameter in (0,1); exactly one of "
                         "--q/--c (default: --q 0.5)")
    sp.add_argument("--c", type=float, default=None,
                    help="Gaussian width parameter, q = exp(-c^2)")
    sp.add_argument("--digits", type=int, default=None,
                    help="decimal digits for the high-precision backend "
                         "(default: double precision)")


def _add_output(sp, default_fmt: str):
    sp.add_argument("--format", choices=("csv", "json"), default=default_fmt,
                    help=f"output format (default {default_fmt})")
    sp.add_argument("--out", default=None,
                    help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qgauss",
        description="Gaussian-chain oscillator eigenfunctions: coefficient "
                    "tables, Gram reports, circle integrals, weighted "
                    "families, limit studies, and verification suites.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("coeffs", help="coefficient table for one function")
    sp.add_argument("--family", choices=("dg", "mac"), required=True)
    sp.add_argument("--n", type=int, required=True)
    _add_scale(sp)
    _add_output(sp, "csv")

    sp = sub.add_parser("eval", help="evaluate one function on a grid")
    sp.add_argument("--family", choices=("dg", "mac"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--grid", required=True, help="min:max:count")
    _add_scale(sp)
    _add_output(sp, "csv")

    sp = sub.add_parser("gram", help="Gram matrix report")
    sp.add_argument("--family", choices=("dg", "mac", "gamma"), default="dg")
    sp.add_argument("--nmax", type=int, default=None)
    sp.add_argument("--nweights", type=int, default=None,
                    help="weight count for the gamma family (default 3)")
    _add_scale(sp)
    _add_output(sp, "json")

    sp = sub.add_parser("circle", help="unit-circle Gram report")
    sp.add_argument("--family", choices=("dg", "mac"), default="dg")
    sp.add_argument("--nmax", type=int, default=None)
    sp.add_argument("--points", type=int, default=None,
                    help="quadrature points, power of two >= 64 (default 512)")
    sp.add_argument("--conjugate-first", action="store_true",
                    help="flip the first factor's phase in the mac relation "
                         "(comparison variant)")
    _add_scale(sp)
    _add_output(sp, "json")

    sp = sub.add_parser("weights", help="orthonormal weight family modes")
    sp.add_argument("--count", type=int, default=3)
    _add_scale(sp)
    _add_output(sp, "json")

    sp = sub.add_parser("limit", help="harmonic-oscillator limit study")
    sp.add_argument("--family", choices=("dg", "mac"), default="dg")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--c-list", default="0.2,0.1,0.05",
                    help="comma-separated widths (default 0.2,0.1,0.05)")
    sp.add_argument("--grid", default=None,
                    help="min:max:count sample points (default 0.3:3.3:21)")
    _add_scale(sp)
    _add_output(sp, "csv")

    sp = sub.add_parser("verify", help="run one verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--nmax", type=int, default=None)
    sp.add_argument("--points", type=int, default=None)
    sp.add_argument("--seed", type=int, default=12345)
    sp.add_argument("--count", type=int, default=None,
                    help="random chains for the commutator suite (default 20)")
    sp.add_argument("--nweights", type=int, default=None)
    sp.add_argument("--conjugate-first", action="store_true")
    _add_scale(sp)
    sp.add_argument("--out", default=None,
                    help="report path (default verify_<suite>.json)")

    return p


def _join_grid_values(argv: list) -> list:
    """Fold `--grid -3:3:7` into `--grid=-3:3:7` so a leading minus in the
    grid spec is not mistaken for an option."""
    out = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--grid" and i + 1 < len(argv) and argv[i + 1].count(":") == 2:
            out.append(f"--grid={argv[i + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_join_grid_values(list(argv)))
    cfg = _config(args)
    if args.command == "coeffs":
        return cmd_coeffs(cfg)
    if args.command == "eval":
        return cmd_eval(cfg, _parse_grid(args.grid))
    if args.command == "gram":
        return cmd_gram(cfg)
    if args.command == "circle":
        return cmd_circle(cfg, bool(getattr(args, "conjugate_first", False)))
    if args.command == "weights":
        return cmd_weights(cfg)
    if args.command == "limit":
        c_list = [float(tok) for tok in args.c_list.split(",") if tok]
        grid = _parse_grid(args.grid) if args.grid else None
        return cmd_limit(cfg, c_list, grid)
    if args.command == "verify":
        return cmd_verify(cfg, args.suite,
                          bool(getattr(args, "conjugate_first", False)))
    raise SystemExit(f"error: unknown command {args.command!r}")
