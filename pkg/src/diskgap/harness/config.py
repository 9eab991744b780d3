"""Experiment configuration: strict YAML schema with typo-proof key checking.

Exactly one of ``pair.eps`` or ``k`` may carry a sweep spec
``{from, to, points}`` (logarithmic grid); every other key is scalar.
Unknown keys anywhere are errors, with the offending field path reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import yaml

from ..errors import ConfigError
from ..incident import IncidentField
from ..solver import BoundaryModel, SolverOptions


@dataclass(frozen=True)
class SweepSpec:
    start: float
    stop: float
    points: int

    def grid(self) -> list[float]:
        if self.points == 1:
            return [self.start]
        lo, hi = math.log(self.start), math.log(self.stop)
        return [math.exp(lo + (hi - lo) * i / (self.points - 1)) for i in range(self.points)]


@dataclass
class ExperimentConfig:
    r1: float
    r2: float
    eps: float | SweepSpec
    k: float | SweepSpec
    model: BoundaryModel
    incident: dict                      # normalized incident spec (k-independent)
    solver: SolverOptions = field(default_factory=SolverOptions)
    out_path: str | None = None
    out_format: str = "csv"

    @property
    def swept_parameter(self) -> str | None:
        if isinstance(self.eps, SweepSpec):
            return "eps"
        if isinstance(self.k, SweepSpec):
            return "k"
        return None

    def grid(self) -> list[tuple[float, float]]:
        """(eps, k) tuples in grid order."""
        if isinstance(self.eps, SweepSpec):
            return [(e, self.k) for e in self.eps.grid()]
        if isinstance(self.k, SweepSpec):
            return [(self.eps, kk) for kk in self.k.grid()]
        return [(self.eps, self.k)]

    def incident_field(self, k: float) -> IncidentField:
        return build_incident(self.incident, k)

    def echo(self) -> dict:
        """Round-trippable plain-dict form of this configuration."""
        def spec_or_val(v):
            if isinstance(v, SweepSpec):
                return {"from": v.start, "to": v.stop, "points": v.points}
            return v
        model = {"kind": self.model.kind}
        if self.model.tau is not None:
            model["tau"] = self.model.tau
        doc = {
            "pair": {"r1": self.r1, "r2": self.r2, "eps": spec_or_val(self.eps)},
            "k": spec_or_val(self.k),
            "model": model,
            "incident": dict(self.incident),
            "solver": {
                "residual_target": self.solver.residual_target,
                "start_order": self.solver.start_order,
                "max_order": self.solver.max_order,
            },
        }
        if self.out_path is not None:
            doc["output"] = {"path": self.out_path, "format": self.out_format}
        return doc


def build_incident(spec: dict, k: float) -> IncidentField:
    kind = spec["kind"]
    if kind == "plane_wave":
        return IncidentField.plane_wave(k, direction=tuple(spec["direction"]),
                                        amplitude=complex(*spec["amplitude"]))
    if kind == "sinusoid":
        return IncidentField.sinusoid(k, amplitude=spec["amplitude"],
                                      direction=tuple(spec["direction"]))
    return IncidentField.bessel_mode(k, n=spec["n"], a_n=complex(*spec["a_n"]))


def _require_keys(d: dict, allowed: dict, path: str) -> None:
    if not isinstance(d, dict):
        raise ConfigError(f"expected a mapping, got {type(d).__name__}", path)
    for key in d:
        if key not in allowed:
            raise ConfigError(f"unknown key {key!r} (allowed: {sorted(allowed)})", f"{path}.{key}")
    for key, required in allowed.items():
        if required and key not in d:
            raise ConfigError(f"missing required key {key!r}", f"{path}.{key}")


def _positive(v, path: str) -> float:
    if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v) or v <= 0:
        raise ConfigError(f"expected a positive number, got {v!r}", path)
    return float(v)


def _value_or_sweep(v, path: str):
    if isinstance(v, dict):
        _require_keys(v, {"from": True, "to": True, "points": True}, path)
        lo = _positive(v["from"], f"{path}.from")
        hi = _positive(v["to"], f"{path}.to")
        pts = v["points"]
        if not isinstance(pts, int) or isinstance(pts, bool) or pts < 1:
            raise ConfigError(f"points must be a positive integer, got {pts!r}", f"{path}.points")
        if pts > 1 and lo >= hi:
            raise ConfigError("sweep grid must be strictly increasing (from < to)", path)
        return SweepSpec(start=lo, stop=hi, points=pts)
    return _positive(v, path)


def _complex_amplitude(v, path: str) -> tuple[float, float]:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return (float(v), 0.0)
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(isinstance(t, (int, float)) for t in v):
        return (float(v[0]), float(v[1]))
    raise ConfigError(f"expected a number or [re, im] pair, got {v!r}", path)


def _unit_direction(v, path: str) -> tuple[float, float]:
    if not (isinstance(v, (list, tuple)) and len(v) == 2):
        raise ConfigError(f"expected a 2-vector, got {v!r}", path)
    dx, dy = float(v[0]), float(v[1])
    n = math.hypot(dx, dy)
    if n == 0:
        raise ConfigError("direction must be nonzero", path)
    return (dx / n, dy / n)


def parse_config(doc: dict, path: str = "config") -> ExperimentConfig:
    _require_keys(doc, {"pair": True, "k": True, "model": True, "incident": True,
                        "solver": False, "output": False}, path)
    pair = doc["pair"]
    _require_keys(pair, {"r1": True, "r2": True, "eps": True}, f"{path}.pair")
    r1 = _positive(pair["r1"], f"{path}.pair.r1")
    r2 = _positive(pair["r2"], f"{path}.pair.r2")
    eps = _value_or_sweep(pair["eps"], f"{path}.pair.eps")
    k = _value_or_sweep(doc["k"], f"{path}.k")
    if isinstance(eps, SweepSpec) and isinstance(k, SweepSpec):
        raise ConfigError("at most one of pair.eps and k may be a sweep", f"{path}.k")

    mdoc = doc["model"]
    _require_keys(mdoc, {"kind": True, "tau": False}, f"{path}.model")
    kind = mdoc["kind"]
    if kind == "flux_coupled":
        if "tau" not in mdoc:
            raise ConfigError("flux_coupled requires tau", f"{path}.model.tau")
        model = BoundaryModel.flux_coupled(_positive(mdoc["tau"], f"{path}.model.tau"))
    elif kind in ("zero_flux", "pec"):
        if "tau" in mdoc:
            raise ConfigError(f"tau is not a parameter of {kind}", f"{path}.model.tau")
        model = BoundaryModel.zero_flux() if kind == "zero_flux" else BoundaryModel.pec()
    else:
        raise ConfigError(f"unknown model kind {kind!r}", f"{path}.model.kind")

    idoc = doc["incident"]
    ipath = f"{path}.incident"
    if not isinstance(idoc, dict) or "kind" not in idoc:
        raise ConfigError("incident must be a mapping with a 'kind'", ipath)
    ikind = idoc["kind"]
    if ikind == "plane_wave":
        _require_keys(idoc, {"kind": True, "direction": True, "amplitude": False}, ipath)
        spec = {"kind": ikind,
                "direction": list(_unit_direction(idoc["direction"], f"{ipath}.direction")),
                "amplitude": list(_complex_amplitude(idoc.get("amplitude", 1.0), f"{ipath}.amplitude"))}
    elif ikind == "sinusoid":
        _require_keys(idoc, {"kind": True, "direction": True, "amplitude": False}, ipath)
        amp = idoc.get("amplitude", 1.0)
        if not isinstance(amp, (int, float)) or isinstance(amp, bool):
            raise ConfigError(f"sinusoid amplitude must be real, got {amp!r}", f"{ipath}.amplitude")
        spec = {"kind": ikind,
                "direction": list(_unit_direction(idoc["direction"], f"{ipath}.direction")),
                "amplitude": float(amp)}
    elif ikind == "bessel_mode":
        _require_keys(idoc, {"kind": True, "n": True, "a_n": False}, ipath)
        n = idoc["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ConfigError(f"mode order n must be an integer, got {n!r}", f"{ipath}.n")
        spec = {"kind": ikind, "n": n,
                "a_n": list(_complex_amplitude(idoc.get("a_n", 1.0), f"{ipath}.a_n"))}
    else:
        raise ConfigError(f"unknown incident kind {ikind!r}", f"{ipath}.kind")

    opts = SolverOptions()
    if "solver" in doc:
        sdoc = doc["solver"]
        _require_keys(sdoc, {"residual_target": False, "start_order": False,
                             "max_order": False, "condition_threshold": False}, f"{path}.solver")
        kw = {}
        for key in ("residual_target", "condition_threshold"):
            if key in sdoc:
                kw[key] = _positive(sdoc[key], f"{path}.solver.{key}")
        for key in ("start_order", "max_order"):
            if key in sdoc:
                v = sdoc[key]
                if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                    raise ConfigError(f"{key} must be a positive integer, got {v!r}", f"{path}.solver.{key}")
                kw[key] = v
        opts = SolverOptions(**kw)

    out_path, out_format = None, "csv"
    if "output" in doc:
        odoc = doc["output"]
        _require_keys(odoc, {"path": True, "format": False}, f"{path}.output")
        out_path = str(odoc["path"])
        out_format = odoc.get("format", "csv")
        if out_format not in ("csv", "structured"):
            raise ConfigError(f"format must be csv or structured, got {out_format!r}", f"{path}.output.format")

    return ExperimentConfig(r1=r1, r2=r2, eps=eps, k=k, model=model, incident=spec,
                            solver=opts, out_path=out_path, out_format=out_format)


def load_config(path: str) -> ExperimentConfig:
    try:
        with open(path) as fh:
            doc = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}", path)
    except yaml.YAMLError as exc:
        raise ConfigError(f"malformed YAML: {exc}", path)
    if not isinstance(doc, dict):
        raise ConfigError("top level of the config must be a mapping", path)
    return parse_config(doc)
