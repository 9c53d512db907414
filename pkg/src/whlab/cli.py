"""Command line front end.

Exit status: 0 when every item passes, 1 on a verification failure,
2 on a configuration error (including parameter sets the algebra rejects).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import suites
from .errors import WHLabError
from .fock import AlgebraParams, fock_space
from .mub import write_overlap_csv
from .report import VerificationReport

REPORT_VERSION = 1
TEXT_WIDTH = 120
EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(Exception):
    pass


def _default_tol() -> float:
    raw = os.environ.get("WHLAB_TOL")
    if raw is None:
        return suites.DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"WHLAB_TOL={raw!r} is not a number") from None


def _complex(s: str) -> complex:
    try:
        return complex(s.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {s!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kappa", type=float, action="append",
                        help="deformation parameter; repeat for kappa_1, kappa_2, ...")
    common.add_argument("--phi", type=float, default=0.0)
    common.add_argument("--dim", "--trunc", dest="dim_or_trunc", type=int, default=None,
                        help="finite dimension d (checked) or truncation order s")
    common.add_argument("--tol", type=float, default=None,
                        help="tolerance (default: $WHLAB_TOL or 1e-10)")
    common.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--out", dest="out_path", default=None, help="write report here")

    parser = _Parser(prog="whlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    sub.add_parser("verify", parents=[common], help="algebra relations")
    ph = sub.add_parser("phase", parents=[common], help="phase operators and states")
    ph.add_argument("--grid", type=int, default=None, help="theta grid (default 4s)")
    mb = sub.add_parser("mub", parents=[common], help="quadratic DFT bases")
    mb.add_argument("--csv", dest="csv_path", default=None, help="dump overlap moduli")
    co = sub.add_parser("coherent", parents=[common], help="coherent states")
    co.add_argument("--type", dest="flavor", choices=("I", "II"), default="II")
    co.add_argument("--z", type=_complex, action="append", default=None,
                    help="complex label, e.g. 0.3+0.2j; repeatable (default: 5 random)")
    tm = sub.add_parser("twomode", parents=[common], help="A_kappa(2) relations")
    tm.add_argument("--jmax", type=int, default=None)
    sub.add_parser("all", parents=[common], help="every suite at desk scale")
    return parser


def make_config(ns: argparse.Namespace) -> suites.RunConfig:
    tol = ns.tol if ns.tol is not None else _default_tol()
    if not tol > 0:
        raise ConfigError("tol must be positive")
    if ns.dim_or_trunc is not None and ns.dim_or_trunc < 2:
        raise ConfigError("--dim/--trunc must be at least 2")
    cfg = suites.RunConfig(
        subcommand=ns.subcommand,
        kappa=list(ns.kappa) if ns.kappa else [0.0],
        phi=ns.phi,
        dim_or_trunc=ns.dim_or_trunc,
        tol=tol,
        seed=ns.seed,
        output=ns.output,
        out_path=ns.out_path,
    )
    cfg.flavor = getattr(ns, "flavor", "II")
    cfg.z = list(getattr(ns, "z", None) or [])
    cfg.jmax = getattr(ns, "jmax", None)
    cfg.csv_path = getattr(ns, "csv_path", None)
    cfg.grid = getattr(ns, "grid", None)
    return cfg


def execute(cfg: suites.RunConfig) -> VerificationReport:
    rng = np.random.default_rng(cfg.seed)
    sc = cfg.subcommand
    if sc == "all":
        return suites.run_all(cfg.tol, cfg.seed)
    if sc == "mub":
        if cfg.dim_or_trunc is None:
            raise ConfigError("mub needs --dim")
        rep, mub_rep = suites.mub_suite(cfg.dim_or_trunc, cfg.tol)
        if cfg.csv_path:
            write_overlap_csv(mub_rep, cfg.csv_path)
        return rep
    if sc == "twomode":
        if len(cfg.kappa) != 1:
            raise ConfigError("twomode takes a single --kappa")
        jmax = cfg.jmax if cfg.jmax is not None else (None if cfg.kappa[0] < 0 else 6)
        return suites.twomode_suite(cfg.kappa[0], jmax, cfg.tol)

    p = AlgebraParams(tuple(cfg.kappa), cfg.phi)
    trunc = cfg.dim_or_trunc
    if not p.finite and trunc is None:
        trunc = 16
    if sc == "verify":
        return suites.algebra_suite(p, trunc, cfg.tol)
    if sc == "phase":
        if p.r != 1:
            raise ConfigError("phase operators are defined for a single kappa")
        if p.finite:
            fock_space(p, trunc)  # validates --dim against d
            return suites.finite_phase_suite(p, cfg.tol, rng)
        return suites.truncated_phase_suite(p, trunc, cfg.tol, rng, grid=cfg.grid)
    if sc == "coherent":
        zs = cfg.z or suites.sample_z(p, rng, 5)
        return suites.coherent_suite(p, trunc, cfg.flavor, zs, cfg.tol, rng)
    raise ConfigError(f"unknown subcommand {sc!r}")


def render_json(cfg: suites.RunConfig, report: VerificationReport) -> str:
    report = report.sorted()
    doc = {
        "version": REPORT_VERSION,
        "config": cfg.to_dict(),
        "items": [it.to_dict() for it in report.items],
        "summary": report.summary(),
    }
    return json.dumps(doc, indent=2) + "\n"


def _clip(s: str, width: int) -> str:
    return s if len(s) <= width else s[: width - 3] + "..."


def render_text(cfg: suites.RunConfig, report: VerificationReport) -> str:
    report = report.sorted()
    lines = [_clip(f"whlab {cfg.subcommand}  kappa={cfg.kappa} phi={cfg.phi} "
                   f"tol={cfg.tol:g} seed={cfg.seed}", TEXT_WIDTH)]
    name_w = TEXT_WIDTH - 34
    lines.append(f"{'check':<{name_w}} {'max_dev':>11} {'tol':>9} {'':>4}")
    for it in report.items:
        lines.append(f"{_clip(it.name, name_w):<{name_w}} {it.max_deviation:>11.3e} "
                     f"{it.tolerance:>9.1e} {'PASS' if it.passed else 'FAIL':>4}")
    s = report.summary()
    lines.append(f"summary: {s['passed']}/{s['total']} passed")
    return "\n".join(lines) + "\n"


def emit_report(cfg: suites.RunConfig, report: VerificationReport,
                fmt: str | None = None, path: str | None = None) -> str:
    fmt = fmt or cfg.output
    text = render_json(cfg, report) if fmt == "json" else render_text(cfg, report)
    if path:
        try:
            with open(path, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {path}: {exc}") from exc
    return text


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = make_config(ns)
        report = execute(cfg)
    except (ConfigError, WHLabError) as exc:
        print(f"whlab: configuration error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        text = emit_report(cfg, report, path=cfg.out_path)
    except OSError as exc:
        print(f"whlab: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if not cfg.out_path:
        sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
