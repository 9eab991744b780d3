"""Report emission: pinned-schema CSV and lossless structured JSON.

The CSV column order is part of the external interface and must not change;
complex values are split into _re/_im columns.  The structured format embeds
the config echo and tool version and round-trips records exactly (complex
values as [re, im] pairs).
"""

from __future__ import annotations

import csv
import json
from dataclasses import fields

from .. import __version__
from ..errors import ConfigError
from .sweep import SweepRecord

CSV_HEADER = (
    "eps,k,r1,r2,model,incident,N,boundary_residual,"
    "lambda1_re,lambda1_im,lambda2_re,lambda2_im,lambda_gap_abs,"
    "max_grad,max_grad_x1,max_grad_x2,pred_lambda_gap_abs,pred_grad_scale,"
    "ratio_lambda,ratio_grad,recip_defect_abs"
)


def _csv_row(r: SweepRecord) -> list:
    return [
        repr(r.eps), repr(r.k), repr(r.r1), repr(r.r2), r.model, r.incident, r.N,
        repr(r.boundary_residual),
        repr(r.lambda1.real), repr(r.lambda1.imag),
        repr(r.lambda2.real), repr(r.lambda2.imag),
        repr(r.lambda_gap_abs),
        repr(r.max_grad), repr(r.max_grad_x1), repr(r.max_grad_x2),
        repr(r.pred_lambda_gap_abs), repr(r.pred_grad_scale),
        repr(r.ratio_lambda), repr(r.ratio_grad), repr(r.recip_defect_abs),
    ]


def emit_csv(records: list[SweepRecord], path: str) -> None:
    if not records:
        raise ConfigError("no records to emit")
    with open(path, "w", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        for r in records:
            writer.writerow(_csv_row(r))


def _record_doc(r: SweepRecord) -> dict:
    doc = {}
    for f in fields(SweepRecord):
        v = getattr(r, f.name)
        if isinstance(v, complex):
            v = [v.real, v.imag]
        elif isinstance(v, tuple):
            v = list(v)
        doc[f.name] = v
    return doc


def _record_from_doc(doc: dict) -> SweepRecord:
    kw = dict(doc)
    for key in ("lambda1", "lambda2"):
        if isinstance(kw.get(key), list):
            kw[key] = complex(kw[key][0], kw[key][1])
    if isinstance(kw.get("warnings"), list):
        kw["warnings"] = tuple(kw["warnings"])
    return SweepRecord(**kw)


def emit_structured(records: list[SweepRecord], path: str, config_echo: dict | None = None) -> None:
    if not records:
        raise ConfigError("no records to emit")
    doc = {
        "tool": "diskgap",
        "version": __version__,
        "config": config_echo or {},
        "records": [_record_doc(r) for r in records],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_structured(path: str) -> tuple[dict, list[SweepRecord]]:
    with open(path) as fh:
        doc = json.load(fh)
    for key in ("records", "config"):
        if key not in doc:
            raise ConfigError(f"structured report missing {key!r}", path)
    return doc["config"], [_record_from_doc(d) for d in doc["records"]]


def emit(records: list[SweepRecord], path: str, fmt: str, config_echo: dict | None = None) -> None:
    if fmt == "csv":
        emit_csv(records, path)
    elif fmt == "structured":
        emit_structured(records, path, config_echo)
    else:
        raise ConfigError(f"unknown report format {fmt!r}")
