"""Report data model shared by the campaigns and the emitters."""

from __future__ import annotations

from dataclasses import dataclass, field

VERDICT_CONFIRMED = "CONFIRMED"
VERDICT_EXPECTED = "CONFIRMED_WITH_EXPECTED_EXCEPTIONS"
VERDICT_REFUTED = "REFUTED"

STATUS_OK = "ok"
STATUS_VIOLATION = "violation"
STATUS_SKIPPED = "skipped"


@dataclass(frozen=True)
class Cell:
    """One checked (or skipped) grid cell.

    family/r/q identify the instance for group sweeps; parameter-only
    campaigns leave family empty and reuse r/q for their two sweep
    parameters (stated in the note).  lhs/rhs are the exact compared
    quantities, stringified in reports.
    """

    campaign: str
    family: str
    r: int
    q: int
    variant: str
    lhs: int
    rhs: int
    status: str
    note: str = ""

    @property
    def sort_key(self):
        return (self.campaign, self.family, self.r, self.q, self.variant)


@dataclass
class CampaignReport:
    campaign: str
    description: str
    cells: list[Cell] = field(default_factory=list)
    expected_exceptions: tuple[tuple[str, int, int], ...] = ()
    edge_margin: dict[str, tuple[int, int]] = field(default_factory=dict)

    @property
    def cells_checked(self) -> int:
        return len(self.cells)

    @property
    def violations(self) -> list[Cell]:
        return [c for c in self.cells if c.status == STATUS_VIOLATION]

    @property
    def violation_keys(self) -> frozenset[tuple[str, int, int]]:
        return frozenset((c.family, c.r, c.q) for c in self.violations)

    @property
    def verdict(self) -> str:
        expected = frozenset(self.expected_exceptions)
        got = self.violation_keys
        if got == expected:
            return VERDICT_EXPECTED if expected else VERDICT_CONFIRMED
        return VERDICT_REFUTED

    def finalize(self) -> "CampaignReport":
        self.cells.sort(key=lambda c: c.sort_key)
        return self

    def acceptable(self) -> bool:
        return self.verdict in (VERDICT_CONFIRMED, VERDICT_EXPECTED)
