"""Sweep execution: one measured + predicted record per grid point.

Grid points are independent solves, optionally dispatched to a process pool;
results are collected in grid order either way.  A failing point is recorded
in-band with its error cause rather than dropped: the partial table from a
sweep that walks off the solver's envelope is still useful.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..asymptotics import predicted_lambda_gap
from ..geometry import DiskPair, fixed_points
from ..solver import (
    BoundaryModel,
    SolverOptions,
    assemble_and_solve,
    max_gap_gradient,
    reciprocity_defect,
)
from .config import ExperimentConfig, build_incident


@dataclass
class SweepRecord:
    eps: float
    k: float
    r1: float
    r2: float
    model: str
    incident: str
    N: int = 0
    boundary_residual: float = float("nan")
    lambda1: complex = complex("nan")
    lambda2: complex = complex("nan")
    lambda_gap_abs: float = float("nan")
    max_grad: float = float("nan")
    max_grad_x1: float = float("nan")
    max_grad_x2: float = float("nan")
    pred_lambda_gap_abs: float = float("nan")
    pred_grad_scale: float = float("nan")
    ratio_lambda: float = float("nan")
    ratio_grad: float = float("nan")
    recip_defect_abs: float = float("nan")
    recip_scale: float = float("nan")
    pred_order_only: bool = False
    condition_estimate: float = float("nan")
    warnings: tuple[str, ...] = ()
    error: str | None = None
    spec: dict = field(default_factory=dict)   # re-runnable parameter echo


def measure_point(r1: float, r2: float, eps: float, k: float, model: BoundaryModel,
                  incident_spec: dict, opts: SolverOptions) -> SweepRecord:
    """Solve one configuration and fill a complete record."""
    incident = build_incident(incident_spec, k)
    rec = SweepRecord(eps=eps, k=k, r1=r1, r2=r2, model=model.label(), incident=incident.label(),
                      spec={"r1": r1, "r2": r2, "eps": eps, "k": k,
                            "model": {"kind": model.kind, **({"tau": model.tau} if model.tau is not None else {})},
                            "incident": dict(incident_spec),
                            "solver": {"residual_target": opts.residual_target,
                                       "start_order": opts.start_order,
                                       "max_order": opts.max_order}})
    try:
        pair = DiskPair(r1, r2, eps)
        sol = assemble_and_solve(pair, k, model, incident, opts)
        pred = predicted_lambda_gap(pair, k, incident)
        grad, loc = max_gap_gradient(sol)
        defect = reciprocity_defect(sol)
        fp = fixed_points(pair)
        scale = 1.0 + abs(complex(incident.value(fp.P1))) + abs(complex(incident.value(fp.P2)))
        gap = abs(sol.lambda2 - sol.lambda1)
        rec.N = sol.N
        rec.boundary_residual = sol.boundary_residual
        rec.lambda1 = complex(sol.lambda1)
        rec.lambda2 = complex(sol.lambda2)
        rec.lambda_gap_abs = gap
        rec.max_grad = grad
        rec.max_grad_x1 = float(loc[0])
        rec.max_grad_x2 = float(loc[1])
        rec.pred_lambda_gap_abs = abs(pred.lambda_gap)
        rec.pred_grad_scale = pred.gradient_scale
        rec.ratio_lambda = gap / abs(pred.lambda_gap) if pred.lambda_gap != 0 else float("nan")
        rec.ratio_grad = grad / pred.gradient_scale if pred.gradient_scale != 0 else float("nan")
        rec.recip_defect_abs = abs(defect)
        rec.recip_scale = scale
        rec.pred_order_only = pred.order_only
        rec.condition_estimate = sol.condition_estimate
        rec.warnings = sol.warnings
    except Exception as exc:  # in-band failure policy
        rec.error = f"{type(exc).__name__}: {exc}"
    return rec


def _point_task(args):
    r1, r2, eps, k, model_kind, tau, incident_spec, opts_tuple = args
    model = BoundaryModel(kind=model_kind, tau=tau)
    opts = SolverOptions(*opts_tuple)
    return measure_point(r1, r2, eps, k, model, incident_spec, opts)


def run_sweep(config: ExperimentConfig, jobs: int = 1) -> list[SweepRecord]:
    """One record per grid point, ordered by grid index."""
    o = config.solver
    opts_tuple = (o.residual_target, o.start_order, o.max_order,
                  o.condition_threshold, o.raise_on_nonconvergence)
    tasks = [(config.r1, config.r2, eps, k, config.model.kind, config.model.tau,
              config.incident, opts_tuple) for eps, k in config.grid()]
    if jobs <= 1 or len(tasks) == 1:
        return [_point_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_point_task, tasks))


def fit_columns(records: list[SweepRecord], x: str, y: str) -> list[tuple[float, float]]:
    """Extract (x, y) pairs from successful records for power-law fitting."""
    out = []
    for r in records:
        if r.error is None:
            xv, yv = getattr(r, x), getattr(r, y)
            if np.isfinite(xv) and np.isfinite(yv):
                out.append((float(xv), float(yv)))
    return out
