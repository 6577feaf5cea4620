#!/usr/bin/env python3
"""
Display helpers: coefficient text and json/csv/md rendering of wire models
"""
from typing import Any, Dict, List, Sequence

import pandas as pd
from pydantic import BaseModel

from schemas import (
    ClassificationOut,
    ClassOut,
    EnumerationOut,
    ErrorOut,
    FamilyScanOut,
    MinPolyOut,
    ModTestOut,
    OutputFormat,
    PointCountsOut,
    VerificationOut,
)


def coeff_text(coeffs: Sequence[int]) -> str:
    """Ascending comma-separated coefficients, the CLI's polynomial format"""
    return ",".join(str(c) for c in coeffs)


def _class_row(cls: ClassOut) -> Dict[str, Any]:
    return {
        "h": coeff_text(cls.h),
        "e": cls.e,
        "g": cls.g,
        "P": coeff_text(cls.P),
        "order_L": cls.order_L,
        "k": cls.k,
        "d": cls.local.d,
        "r": cls.local.r,
        "invariant": cls.local.invariant,
        "has_real_place": cls.local.has_real_place,
        "m": cls.m,
    }


def table_rows(model: BaseModel) -> List[Dict[str, Any]]:
    """Flatten a wire model into rows; csv and md are rendered from these"""
    if isinstance(model, EnumerationOut):
        return [{"p": model.q.p, "n": model.q.n, **_class_row(c)} for c in model.classes]
    if isinstance(model, MinPolyOut):
        return [{"p": model.q.p, "n": model.q.n, **_class_row(model.isogeny_class)}]
    if isinstance(model, ClassificationOut):
        return [
            {
                "p": model.q.p,
                "n": model.q.n,
                "P": coeff_text(model.P),
                "supersingular": model.supersingular,
                "simple": model.simple,
                "realizable": model.realizable,
                "root_orders": coeff_text(model.root_orders or []),
                "factors": "; ".join(
                    f"({coeff_text(f.isogeny_class.h)})^{f.multiplicity} e={f.isogeny_class.e}"
                    for f in model.factors
                ),
            }
        ]
    if isinstance(model, VerificationOut):
        rows = []
        for report in model.reports:
            summary = {"p": report.q.p, "n": report.q.n, "g": report.g, "ok": report.ok, "matched": report.matched}
            rows.append({**summary, "kind": "matched", "template": "", "P": "", "related": "", "detail": ""})
            entries = (
                report.missing_from_enumeration + report.missing_from_paper + report.refuted + report.errata
            )
            for entry in entries:
                rows.append({
                    **summary,
                    "kind": entry.kind.value,
                    "template": entry.template_key or "",
                    "P": coeff_text(entry.P),
                    "related": coeff_text(entry.related or []),
                    "detail": entry.detail or "",
                })
        return rows
    if isinstance(model, FamilyScanOut):
        rows = []
        for family in model.families:
            for member in family.members:
                rows.append({
                    "p": family.p,
                    "n": member.n,
                    "formula": family.formula,
                    "template": family.template_key or "",
                    "sign": member.sign,
                    "P": coeff_text(member.P),
                })
        for residual in model.residuals:
            rows.append({
                "p": residual.p, "n": residual.n, "formula": "", "template": "",
                "sign": 0, "P": coeff_text(residual.P),
            })
        return rows
    if isinstance(model, PointCountsOut):
        return [{
            "q": model.q,
            "f": model.f,
            "modulus": model.modulus,
            "generator_exponent": model.generator_exponent,
            "genus": model.genus,
            "counts": coeff_text(model.counts),
            "P": coeff_text(model.P or []),
        }]
    if isinstance(model, ModTestOut):
        return [{"poly": model.poly, "verdict": model.verdict.value}]
    if isinstance(model, ErrorOut):
        return [{"error": model.error, "message": model.message}]
    raise TypeError(f"no tabular form for {type(model).__name__}")


_EMPTY_COLUMNS = {
    EnumerationOut: ["p", "n", "h", "e", "g", "P", "order_L", "k", "d", "r", "invariant", "has_real_place", "m"],
    FamilyScanOut: ["p", "n", "formula", "template", "sign", "P"],
}


def render(model: BaseModel, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return model.model_dump_json(by_alias=True, indent=2)
    rows = table_rows(model)
    frame = pd.DataFrame(rows) if rows else pd.DataFrame(columns=_EMPTY_COLUMNS.get(type(model)))
    if fmt is OutputFormat.CSV:
        return frame.to_csv(index=False).rstrip("\n")
    return frame.to_markdown(index=False)
