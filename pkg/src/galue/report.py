"""Report serialization (json, csv, markdown) and the per-identity findings."""
from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence

from .errors import IoError
from .identities import (BASE_CASES, CaseId, IdentityCase, IdentityReport, QuadResult,
                         Status)

CSV_COLUMNS = (
    "case_id", "parameters", "lhs", "rhs_printed", "rhs_derived", "rel_err_printed",
    "rel_err_derived", "status_printed", "status_derived", "lhs_error_estimate", "evaluations",
)
REPORT_VERSION = 1


@dataclass(frozen=True)
class Finding:
    case_id: CaseId
    points: int
    printed: Dict[Status, int]
    derived: Dict[Status, int]
    verdict_printed: str
    verdict_derived: str
    max_rel_err_printed: float
    max_rel_err_derived: float

    @property
    def sentence(self) -> str:
        if self.case_id in BASE_CASES:
            return f"base formula {self.verdict_derived.lower()} by quadrature at {self._count(self.derived)}"
        printed = {
            "CONFIRMED": "printed closed form matches quadrature",
            "DISCREPANT": "printed closed form disagrees with quadrature",
            "MIXED": "printed closed form matches quadrature only at some points",
            "INCONCLUSIVE": "printed closed form could not be classified",
        }[self.verdict_printed]
        derived = {
            "CONFIRMED": "term-wise derived series matches quadrature",
            "DISCREPANT": "term-wise derived series disagrees with quadrature",
            "MIXED": "term-wise derived series matches quadrature only at some points",
            "INCONCLUSIVE": "term-wise derived series could not be classified",
        }[self.verdict_derived]
        return f"{printed} ({self._count(self.printed)}); {derived} ({self._count(self.derived)})"

    def _count(self, counts: Dict[Status, int]) -> str:
        parts = [f"{counts.get(s, 0)} {s.value.lower()}" for s in Status if counts.get(s, 0)]
        return ", ".join(parts) + f" of {self.points}"


def _verdict(counts: Dict[Status, int]) -> str:
    ok, bad = counts.get(Status.CONFIRMED, 0), counts.get(Status.DISCREPANT, 0)
    if ok == 0 and bad == 0:
        return "INCONCLUSIVE"
    if bad == 0:
        return "CONFIRMED"
    if ok == 0:
        return "DISCREPANT"
    return "MIXED"


def _nanmax(values: Iterable[float]) -> float:
    finite = [v for v in values if not math.isnan(v)]
    return max(finite) if finite else math.nan


def summarize(reports: Sequence[IdentityReport]) -> List[Finding]:
    """One Finding per case id, in first-appearance order."""
    groups: Dict[CaseId, List[IdentityReport]] = {}
    for r in reports:
        groups.setdefault(r.case.case_id, []).append(r)
    out = []
    for cid, rs in groups.items():
        printed = Counter(r.status_printed for r in rs)
        derived = Counter(r.status_derived for r in rs)
        out.append(Finding(
            case_id=cid,
            points=len(rs),
            printed=dict(printed),
            derived=dict(derived),
            verdict_printed=_verdict(printed),
            verdict_derived=_verdict(derived),
            max_rel_err_printed=_nanmax(r.rel_err_printed for r in rs),
            max_rel_err_derived=_nanmax(r.rel_err_derived for r in rs),
        ))
    return out


# -- json --------------------------------------------------------------------

def report_to_dict(r: IdentityReport) -> Dict[str, Any]:
    return {
        "case_id": r.case.case_id.value,
        "parameters": r.case.parameters(),
        "lhs": {"value": r.lhs.value, "abs_error_estimate": r.lhs.abs_error_estimate,
                "evaluations": r.lhs.evaluations},
        "rhs_printed": r.rhs_printed,
        "rhs_derived": r.rhs_derived,
        "rel_err_printed": r.rel_err_printed,
        "rel_err_derived": r.rel_err_derived,
        "status_printed": r.status_printed.value,
        "status_derived": r.status_derived.value,
        "note": r.note,
    }


def report_from_dict(d: Dict[str, Any]) -> IdentityReport:
    from .config import build_case  # late import: config depends on identities only

    cid = CaseId(d["case_id"])
    case = build_case(cid, d["parameters"])
    lhs = QuadResult(d["lhs"]["value"], d["lhs"]["abs_error_estimate"], d["lhs"]["evaluations"])
    return IdentityReport(
        case=case, lhs=lhs,
        rhs_printed=d["rhs_printed"], rhs_derived=d["rhs_derived"],
        rel_err_printed=d["rel_err_printed"], rel_err_derived=d["rel_err_derived"],
        status_printed=Status(d["status_printed"]), status_derived=Status(d["status_derived"]),
        note=d.get("note", ""),
    )


def to_json(reports: Sequence[IdentityReport], meta: Dict[str, Any] | None = None) -> str:
    """Serialize reports.  Floats use repr, which round-trips bit for bit."""
    findings = [{
        "case_id": f.case_id.value,
        "points": f.points,
        "verdict_printed": f.verdict_printed,
        "verdict_derived": f.verdict_derived,
        "max_rel_err_printed": f.max_rel_err_printed,
        "max_rel_err_derived": f.max_rel_err_derived,
        "finding": f.sentence,
    } for f in summarize(reports)]
    doc = {"report_version": REPORT_VERSION, **(meta or {}),
           "findings": findings, "reports": [report_to_dict(r) for r in reports]}
    return json.dumps(doc, indent=2) + "\n"


def from_json(text: str) -> List[IdentityReport]:
    return [report_from_dict(d) for d in json.loads(text)["reports"]]


# -- csv / markdown ----------------------------------------------------------

def _flat_params(case: IdentityCase) -> str:
    return ";".join(f"{k}={v!r}" for k, v in case.parameters().items())


def to_csv(reports: Sequence[IdentityReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow([
            r.case.case_id.value, _flat_params(r.case), repr(r.lhs.value), repr(r.rhs_printed),
            repr(r.rhs_derived), repr(r.rel_err_printed), repr(r.rel_err_derived),
            r.status_printed.value, r.status_derived.value, repr(r.lhs.abs_error_estimate),
            r.lhs.evaluations,
        ])
    return buf.getvalue()


_SECTION_ORDER = [CaseId.BASE_OBER, CaseId.T1, CaseId.T2, CaseId.T3, CaseId.T4,
                  CaseId.C31, CaseId.C32, CaseId.C33, CaseId.C34]
_TITLES = {
    CaseId.T1: "T1: Oberhettinger kernel, Struve argument y/K",
    CaseId.T2: "T2: Oberhettinger kernel, Struve argument xy/K",
    CaseId.T3: "T3: Lavoie-Trottier weight, argument y(1-x/4)(1-x)^2",
    CaseId.T4: "T4: Lavoie-Trottier weight, argument yx(1-x/3)^2",
    CaseId.C31: "C31: T1 for H_{p,b,c}",
    CaseId.C32: "C32: T2 for H_{p,b,c}",
    CaseId.C33: "C33: T3 for H_{p,b,c}",
    CaseId.C34: "C34: T4 for H_{p,b,c}",
}


def to_markdown(reports: Sequence[IdentityReport]) -> str:
    findings = {f.case_id: f for f in summarize(reports)}
    lines = ["# Unified integrals of the generalized Struve function: verification report", ""]
    lines += ["| case | points | printed | derived |", "|---|---|---|---|"]
    for f in findings.values():
        lines.append(f"| {f.case_id.value} | {f.points} | {f.verdict_printed} | {f.verdict_derived} |")
    lines.append("")
    groups: Dict[str, List[IdentityReport]] = {}
    for r in reports:
        key = "BASE" if r.case.case_id in BASE_CASES else r.case.case_id.value
        groups.setdefault(key, []).append(r)
    for cid in _SECTION_ORDER:
        key = "BASE" if cid is CaseId.BASE_OBER else cid.value
        rs = groups.get(key)
        if not rs:
            continue
        lines.append("## Base formulas" if key == "BASE" else f"## {_TITLES[cid]}")
        lines.append("")
        for f in findings.values():
            if (key == "BASE" and f.case_id in BASE_CASES) or f.case_id.value == key:
                lines.append(f"- {f.case_id.value}: {f.sentence}; max rel. error printed "
                             f"{f.max_rel_err_printed:.3e}, derived {f.max_rel_err_derived:.3e}")
        lines += ["", "| case | parameters | lhs | rhs printed | rhs derived | rel err printed "
                      "| rel err derived | printed | derived |",
                  "|---|---|---|---|---|---|---|---|---|"]
        for r in rs:
            params = ", ".join(f"{k}={v:g}" for k, v in r.case.parameters().items())
            lines.append(
                f"| {r.case.case_id.value} | {params} | {r.lhs.value:.12g} | {r.rhs_printed:.12g} "
                f"| {r.rhs_derived:.12g} | {r.rel_err_printed:.2e} | {r.rel_err_derived:.2e} "
                f"| {r.status_printed.value} | {r.status_derived.value} |")
        lines.append("")
    return "\n".join(lines)


def render(reports: Sequence[IdentityReport], fmt: str, meta: Dict[str, Any] | None = None) -> str:
    if fmt == "json":
        return to_json(reports, meta)
    if fmt == "csv":
        return to_csv(reports)
    if fmt in ("markdown", "md"):
        return to_markdown(reports)
    raise ValueError(f"unknown report format {fmt!r}")


def emit_report(reports: Sequence[IdentityReport], fmt: str, path, meta: Dict[str, Any] | None = None) -> None:
    """Write ``reports`` to ``path`` in ``fmt`` (json, csv or markdown)."""
    text = render(reports, fmt, meta)
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write report to {path}: {exc.strerror or exc}") from None
