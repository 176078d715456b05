"""Report document assembly and deterministic serialization.

Every integer is serialized as a decimal string (the bounds overflow every
fixed-width type).  The timestamp lives in the header only, so two runs with
the same configuration have byte-identical bodies.
"""

from __future__ import annotations

import csv
import io
import json
from datetime import datetime, timezone

from . import __version__
from .verifier import CampaignReport, GridConfig


class IoError(RuntimeError):
    pass


def build_document(reports: list[CampaignReport], grid: GridConfig) -> dict:
    body = {
        "grid": {
            "q_set": [str(q) for q in grid.q_set],
            "r_max": str(grid.r_max),
            "campaigns": sorted(grid.campaigns) if grid.campaigns else "all",
        },
        "campaigns": [_campaign_dict(r) for r in sorted(reports, key=lambda r: r.campaign)],
        "all_acceptable": all(r.acceptable() for r in reports),
    }
    return {
        "header": {
            "tool": "weylcert",
            "version": __version__,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        },
        "body": body,
    }


def _campaign_dict(rep: CampaignReport) -> dict:
    return {
        "id": rep.campaign,
        "description": rep.description,
        "cells_checked": str(rep.cells_checked),
        "verdict": rep.verdict,
        "expected_exceptions": [list(k) for k in sorted(rep.expected_exceptions)],
        "violations": [
            {"family": c.family, "r": str(c.r), "q": str(c.q),
             "lhs": str(c.lhs), "rhs": str(c.rhs), "extra": _extra(c)}
            for c in rep.violations
        ],
        "edge_margin": {k: [str(a), str(b)] for k, (a, b) in sorted(rep.edge_margin.items())},
        "cells": [
            {"family": c.family, "r": str(c.r), "q": str(c.q), "variant": c.variant,
             "lhs": str(c.lhs), "rhs": str(c.rhs), "status": c.status, "note": c.note}
            for c in rep.cells
        ],
    }


def _extra(cell) -> str:
    return f"{cell.variant}; {cell.note}".strip("; ")


def body_bytes(doc: dict) -> bytes:
    """Canonical serialization of the body alone (for byte comparisons)."""
    return json.dumps(doc["body"], sort_keys=True, separators=(",", ":")).encode()


def emit_report(doc: dict, out_format: str = "json") -> bytes:
    if out_format == "json":
        return json.dumps(doc, sort_keys=True, indent=1).encode()
    if out_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["campaign", "family", "r", "q", "variant", "lhs", "rhs",
                         "status", "note"])
        for camp in doc["body"]["campaigns"]:
            for c in camp["cells"]:
                writer.writerow([camp["id"], c["family"], c["r"], c["q"], c["variant"],
                                 c["lhs"], c["rhs"], c["status"], c["note"]])
        return buf.getvalue().encode()
    raise IoError(f"unknown format {out_format!r}")


def parse_report(blob: bytes) -> dict:
    return json.loads(blob.decode())


def write_report(doc: dict, path: str, out_format: str = "json") -> None:
    try:
        with open(path, "wb") as fh:
            fh.write(emit_report(doc, out_format))
    except OSError as exc:
        raise IoError(str(exc)) from None
