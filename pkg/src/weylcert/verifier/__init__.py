"""Campaign registry and runner.

``run_campaign`` evaluates one registered campaign on a grid; ``run_all``
evaluates a selection (default: all) either serially or on a process pool.
Reports are deterministic: cells are sorted, and parallel and serial runs
produce identical violation sets.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from . import campaigns, selfcheck
from .grid import ConfigError, DEFAULT_Q_SET, DEFAULT_R_MAX, GridConfig, load_config, parse_config
from .model import (
    Cell,
    CampaignReport,
    STATUS_OK,
    STATUS_SKIPPED,
    STATUS_VIOLATION,
    VERDICT_CONFIRMED,
    VERDICT_EXPECTED,
    VERDICT_REFUTED,
)

REGISTRY = {
    "bc-app": campaigns.run_bc_app,
    "bc-lower": campaigns.run_bc_lower,
    "lem-bB": campaigns.run_lem_bB,
    "lem-b2": campaigns.run_lem_b2,
    "rlambda": campaigns.run_rlambda,
    "e-bd-asB2": campaigns.run_e_bd_asB2,
    "lin-la-gen-claim": campaigns.run_lin_la_gen_claim,
    "nr-atmost2": campaigns.run_nr_atmost2,
    "nr-sandwich": campaigns.run_nr_sandwich,
    "q2-identity": campaigns.run_q2_identity,
    "prop-final": campaigns.run_prop_final,
    "5cases-constants": campaigns.run_5cases_constants,
    "mmt-bounds": campaigns.run_mmt_bounds,
    "tables-selfcheck": selfcheck.run_selfcheck,
}


class UnknownCampaign(ValueError):
    pass


def run_campaign(name: str, grid: GridConfig) -> CampaignReport:
    try:
        runner = REGISTRY[name]
    except KeyError:
        raise UnknownCampaign(f"unknown campaign {name!r}; known: {', '.join(sorted(REGISTRY))}")
    return runner(grid)


def _run_one(args: tuple[str, GridConfig]) -> CampaignReport:
    return run_campaign(*args)


def run_all(grid: GridConfig, jobs: int = 1) -> list[CampaignReport]:
    names = grid.campaigns or tuple(REGISTRY)
    for name in names:
        if name not in REGISTRY:
            raise UnknownCampaign(f"unknown campaign {name!r}")
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, [(n, grid) for n in names]))
    else:
        reports = [run_campaign(n, grid) for n in names]
    return sorted(reports, key=lambda r: r.campaign)


def all_acceptable(reports: list[CampaignReport]) -> bool:
    return all(r.acceptable() for r in reports)


__all__ = [
    "REGISTRY", "Cell", "CampaignReport", "ConfigError", "GridConfig",
    "DEFAULT_Q_SET", "DEFAULT_R_MAX", "UnknownCampaign", "all_acceptable",
    "load_config", "parse_config", "run_all", "run_campaign",
    "STATUS_OK", "STATUS_SKIPPED", "STATUS_VIOLATION",
    "VERDICT_CONFIRMED", "VERDICT_EXPECTED", "VERDICT_REFUTED",
]
