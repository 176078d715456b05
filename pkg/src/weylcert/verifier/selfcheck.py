"""Internal consistency campaign for the group-data tables.

The minimal-degree override list and the cited degree constants are typed
twice: once in ``tables`` (the runtime source) and once here, transcribed
independently.  Any divergence, a broken b2 >= b1 relation, or a failed
product-form cross-check flips the campaign to REFUTED, so a single corrupted
constant fails the whole verification run.
"""

from __future__ import annotations

from .. import tables
from ..tables import FAMILIES, b1_value, bound_table, iter_instances, parabolic_data
from .grid import GridConfig
from .model import Cell, CampaignReport, STATUS_OK, STATUS_VIOLATION

# independent transcription of the minimal-degree override list
B1_EXCEPTIONS_COPY = {
    ("Lin", 1, 4): 2,
    ("Lin", 1, 9): 3,
    ("Lin", 2, 2): 2,
    ("Lin", 2, 4): 4,
    ("Lin", 3, 2): 7,
    ("Lin", 3, 3): 26,
    ("Oodd", 2, 2): 2,
    ("U", 3, 2): 4,
    ("U", 3, 3): 6,
    ("OplusEven", 4, 2): 8,
    ("Oodd", 3, 3): 27,
}

MAX_DEGREE_COPY = {
    ("Oodd", 3, 2): 720,
    ("OplusEven", 4, 2): 6075,
    ("Oodd", 4, 2): 68850,
    ("Lin", 4, 2): 1240,
    ("Lin", 5, 2): 41664,
}

MIN_QLL_COPY = {
    ("Oodd", 3, 2): 14,
    ("OplusEven", 4, 2): 104,
    ("Oodd", 4, 2): 118,
    ("Lin", 4, 2): 94,
    ("Lin", 5, 2): 217,
}

# the known b2 = b1 equality case (rank-4 plus type at q = 3); everywhere
# else the refined bound is strictly larger
B2_EQUALITY_CASES = {("OplusEven", 4, 3)}


def run_selfcheck(grid: GridConfig) -> CampaignReport:
    rep = CampaignReport(
        "tables-selfcheck",
        "dual-transcription check of the cited constants, b2 >= b1 (strict "
        "outside the known equality case), and the product form b2 = "
        "b1(factor) * orbit length on the generic linear/unitary/symplectic "
        "rows; exercises every divisibility assertion in the tables",
    )

    def compare_tables(tag: str, live: dict, copy: dict) -> None:
        for key in sorted(set(live) | set(copy)):
            lv, cv = live.get(key, -1), copy.get(key, -1)
            fam, r, q = key
            rep.cells.append(Cell("tables-selfcheck", fam, r, q, tag, lv, cv,
                                  STATUS_OK if lv == cv else STATUS_VIOLATION,
                                  "transcriptions diverge" if lv != cv else ""))

    compare_tables("b1-override", tables.B1_EXCEPTIONS, B1_EXCEPTIONS_COPY)
    compare_tables("max-degree", tables.MAX_IRREDUCIBLE_DEGREE, MAX_DEGREE_COPY)
    compare_tables("min-qll-dim", tables.MIN_QLL_MODULE_DIM, MIN_QLL_COPY)

    for g in iter_instances(FAMILIES, grid.r_max, grid.q_set):
        bt = bound_table(g)  # integrality assertions fire inside
        if bt.betterB is not None:
            ok = bt.b1 <= bt.betterB <= bt.B
            rep.cells.append(Cell("tables-selfcheck", g.family, g.r, g.q, "betterB-range",
                                  bt.betterB, bt.B, STATUS_OK if ok else STATUS_VIOLATION,
                                  "refined upper bound between b1 and B"))
        if bt.b2 is None:
            continue
        if g.key in B2_EQUALITY_CASES:
            ok = bt.b2 == bt.b1
            note = "known equality case"
        else:
            ok = bt.b2 > bt.b1
            note = ""
        rep.cells.append(Cell("tables-selfcheck", g.family, g.r, g.q, "b2-vs-b1",
                              bt.b2, bt.b1, STATUS_OK if ok else STATUS_VIOLATION, note))
        expected = _product_form(g)
        if expected is not None:
            rep.cells.append(Cell("tables-selfcheck", g.family, g.r, g.q, "b2-product",
                                  bt.b2, expected,
                                  STATUS_OK if bt.b2 == expected else STATUS_VIOLATION,
                                  "factor degree times singular orbit length"))
    return rep.finalize()


def _product_form(g) -> int | None:
    if g.family == "Lin" and g.r >= 4:
        pass
    elif g.family == "U" and g.r >= 6:
        pass
    elif g.family == "Sp" and g.r >= 3:
        pass
    else:
        return None
    v = parabolic_data(g).variants[0]
    fam, rk = v.factor
    return b1_value(fam, rk, g.q, use_exceptions=False) * v.length
