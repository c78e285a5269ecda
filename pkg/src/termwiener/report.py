"""Verification reports: a deterministic, serializable record of a campaign.

The canonical JSON form excludes wall-clock timing so that a report is
byte-identical across runs and across worker counts; the timing stays on
the in-memory object for logging.  CSV output carries one row per
(parameter tuple, status).
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from typing import Any

from ._version import __version__
from .errors import BadArgError

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_PARTIAL = "partial"
STATUS_INFO = "info"  # row-level only: recorded evidence outside the asserted claim


@dataclass
class VerificationReport:
    check_id: str
    parameters: dict[str, Any]
    status: str
    rows: list[dict[str, Any]]
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    tool_version: str = __version__
    wall_time_s: float = 0.0

    def validate(self) -> None:
        if self.status not in (STATUS_PASS, STATUS_FAIL, STATUS_PARTIAL):
            raise BadArgError(f"bad report status {self.status!r}")
        if (self.status == STATUS_FAIL) != bool(self.counterexamples):
            raise BadArgError("status is 'fail' exactly when counterexamples exist")

    def to_dict(self) -> dict[str, Any]:
        # wall_time_s is deliberately left out: reports must be byte-identical
        # across runs and worker counts
        return {
            "check_id": self.check_id,
            "parameters": self.parameters,
            "status": self.status,
            "rows": self.rows,
            "witnesses": self.witnesses,
            "counterexamples": self.counterexamples,
            "counts": self.counts,
            "tool_version": self.tool_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "VerificationReport":
        return cls(
            check_id=data["check_id"],
            parameters=data["parameters"],
            status=data["status"],
            rows=data["rows"],
            witnesses=data.get("witnesses", []),
            counterexamples=data.get("counterexamples", []),
            counts=data.get("counts", {}),
            tool_version=data.get("tool_version", __version__),
        )

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


def make_row(
    params: dict[str, Any],
    status: str,
    observed: Any = None,
    expected: Any = None,
    note: str = "",
) -> dict[str, Any]:
    return {
        "params": params,
        "status": status,
        "observed": observed,
        "expected": expected,
        "note": note,
    }


def params_label(params: dict[str, Any]) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def report_to_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check_id", "params", "status", "observed", "expected", "note"])
    for row in report.rows:
        writer.writerow(
            [
                report.check_id,
                params_label(row.get("params", {})),
                row.get("status", ""),
                _csv_cell(row.get("observed")),
                _csv_cell(row.get("expected")),
                row.get("note", ""),
            ]
        )
    return buf.getvalue()


def emit_report(report: VerificationReport, fmt: str, path: str | os.PathLike) -> None:
    """Write the report as canonical JSON or as CSV (stable field order)."""
    if fmt == "json":
        payload = report.to_json()
    elif fmt == "csv":
        payload = report_to_csv(report)
    else:
        raise BadArgError(f"format must be 'json' or 'csv', got {fmt!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload)


def render_report_figures(report: VerificationReport, out_dir: str | os.PathLike) -> list[str]:
    """Render one PNG per report next to the delimited output.

    Rows carrying numeric observed/expected values are plotted against
    their parameter tuples; otherwise row statuses are summarized as a bar
    chart.
    """
    from matplotlib.figure import Figure  # imported here: headless, no pyplot state

    os.makedirs(out_dir, exist_ok=True)
    fig = Figure(figsize=(8, 4.5))
    ax = fig.add_subplot()
    numeric = [
        r
        for r in report.rows
        if isinstance(r.get("observed"), int) and isinstance(r.get("expected"), int)
    ]
    if len(numeric) >= 2:
        labels = [params_label(r.get("params", {})) for r in numeric]
        xs = range(len(numeric))
        ax.plot(xs, [r["expected"] for r in numeric], "o-", label="expected", markersize=3)
        ax.plot(xs, [r["observed"] for r in numeric], "x", label="observed", markersize=5)
        step = max(1, len(numeric) // 24)
        ax.set_xticks(list(xs)[::step])
        ax.set_xticklabels(labels[::step], rotation=60, fontsize=6, ha="right")
        ax.set_ylabel("value")
        ax.legend(fontsize=8)
    else:
        statuses = sorted({r.get("status", "?") for r in report.rows})
        counts = [sum(1 for r in report.rows if r.get("status") == s) for s in statuses]
        ax.bar(statuses, counts)
        ax.set_ylabel("rows")
    ax.set_title(f"{report.check_id}: {report.status}")
    fig.tight_layout()
    out_path = os.path.join(os.fspath(out_dir), f"{report.check_id}.png")
    fig.savefig(out_path, dpi=140)
    return [out_path]


def summarize_exit_code(reports: list[VerificationReport]) -> int:
    """0 all-pass, 1 any fail, 3 partial-only (usage errors exit 2 elsewhere)."""
    if any(r.status == STATUS_FAIL for r in reports):
        return 1
    if any(r.status == STATUS_PARTIAL for r in reports):
        return 3
    return 0


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)
