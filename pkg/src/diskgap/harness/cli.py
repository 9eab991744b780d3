"""Command-line interface.

Subcommands:
    solve   one configuration, print a summary (optionally write a report)
    sweep   run the configured parameter sweep and write a report
    verify  run a verification suite; exit status reflects overall pass
    asym    evaluate the closed-form predictors only (no solve)
    report  convert a structured JSON report to CSV (or re-emit structured)
"""

from __future__ import annotations

import argparse
import sys

from .. import __version__
from ..asymptotics import predicted_lambda_gap
from ..errors import ConfigError
from ..geometry import DiskPair
from .config import load_config
from .report import emit, load_structured
from .sweep import run_sweep
from .verify import SUITES, run_suite


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diskgap",
                                description="Two nearly touching disks: Helmholtz scattering, "
                                            "gap asymptotics, verification harness")
    p.add_argument("--version", action="version", version=f"diskgap {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve a single configuration")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=("csv", "structured"), default=None)

    sw = sub.add_parser("sweep", help="run the configured parameter sweep")
    sw.add_argument("--config", required=True)
    sw.add_argument("--out")
    sw.add_argument("--format", choices=("csv", "structured"), default=None)
    sw.add_argument("--jobs", type=int, default=1)

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("suite", nargs="?", default="all", choices=SUITES)
    vf.add_argument("--seed", type=int, default=1234,
                    help="seed for the randomized closed-form checks")
    vf.add_argument("--jobs", type=int, default=1)

    ay = sub.add_parser("asym", help="evaluate predictors only")
    ay.add_argument("--config", required=True)

    rp = sub.add_parser("report", help="convert a structured report")
    rp.add_argument("input", help="structured JSON report to read")
    rp.add_argument("--out", required=True)
    rp.add_argument("--format", choices=("csv", "structured"), default="csv")
    return p


def _cmd_solve(args) -> int:
    cfg = load_config(args.config)
    if cfg.swept_parameter is not None:
        raise ConfigError("'solve' needs a point configuration; use 'sweep' for grids",
                          "config.pair.eps" if cfg.swept_parameter == "eps" else "config.k")
    records = run_sweep(cfg)
    r = records[0]
    if r.error is not None:
        print(f"solve failed: {r.error}")
        return 1
    print(f"eps={r.eps:g} k={r.k:g} model={r.model} incident={r.incident}")
    print(f"N={r.N} boundary_residual={r.boundary_residual:.3e} cond~{r.condition_estimate:.2e}")
    print(f"lambda1 = {r.lambda1:.8e}")
    print(f"lambda2 = {r.lambda2:.8e}")
    print(f"|lambda2-lambda1| = {r.lambda_gap_abs:.6e}  (predicted {r.pred_lambda_gap_abs:.6e}, "
          f"ratio {r.ratio_lambda:.4f})")
    print(f"max |grad u| = {r.max_grad:.6e} at ({r.max_grad_x1:.3e}, {r.max_grad_x2:.3e})  "
          f"(predicted scale {r.pred_grad_scale:.6e})")
    print(f"|reciprocity defect| = {r.recip_defect_abs:.3e}")
    for w in r.warnings:
        print(f"warning: {w}")
    _maybe_emit(cfg, records, args)
    return 0


def _cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    records = run_sweep(cfg, jobs=max(1, args.jobs))
    failures = sum(1 for r in records if r.error is not None)
    print(f"{len(records)} grid points, {failures} failures")
    if not _maybe_emit(cfg, records, args):
        raise ConfigError("no output path given (config output.path or --out)")
    return 0


def _maybe_emit(cfg, records, args) -> bool:
    out = getattr(args, "out", None) or cfg.out_path
    fmt = getattr(args, "format", None) or cfg.out_format
    if out is None:
        return False
    emit(records, out, fmt, config_echo=cfg.echo())
    print(f"wrote {fmt} report: {out}")
    return True


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, jobs=args.jobs)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


def _cmd_asym(args) -> int:
    cfg = load_config(args.config)
    print("eps,k,pred_lambda_gap_abs,pred_grad_scale,order_only,quasi_static,blowup_regime,mitigation_ok")
    for eps, k in cfg.grid():
        pred = predicted_lambda_gap(DiskPair(cfg.r1, cfg.r2, eps), k, cfg.incident_field(k))
        rg = pred.regime
        print(f"{eps!r},{k!r},{abs(pred.lambda_gap)!r},{pred.gradient_scale!r},"
              f"{pred.order_only},{rg.quasi_static},{rg.blowup_regime},{rg.mitigation_ok}")
    return 0


def _cmd_report(args) -> int:
    config_echo, records = load_structured(args.input)
    emit(records, args.out, args.format, config_echo=config_echo)
    print(f"wrote {args.format} report: {args.out}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"solve": _cmd_solve, "sweep": _cmd_sweep, "verify": _cmd_verify,
                "asym": _cmd_asym, "report": _cmd_report}
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
