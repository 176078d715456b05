"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline.
"""

import random
import time

from weylcert import tables
from weylcert.bounds import check_bc_app_part1, check_bc_app_part2, check_bc_lower
from weylcert.cli import main
from weylcert.oracles import count_points, orbit_bfs
from weylcert.orbits import orbit_length
from weylcert.report import body_bytes, parse_report
from weylcert.roots import InvalidDatum, RootDatum
from weylcert.tables import (
    FAMILIES,
    h_mod_p_index,
    iter_instances,
    levi_module_form,
    natural_form,
    parabolic_data,
)
from weylcert.verifier import GridConfig, run_campaign, run_all, all_acceptable
from weylcert.verifier.selfcheck import run_selfcheck
from weylcert.weights import (
    Weight,
    is_restricted,
    is_subdominant,
    lemma_old1_step,
    lemma_wt1_step,
    lemma_wt2_chain,
    lemma_wt3_fundamental,
    stats,
)

_ENUM_GUARD = 10**8


def _report(num: int, label: str, started: float, limit: float | None = None) -> None:
    elapsed = time.monotonic() - started
    budget = f" ({elapsed:.1f}s{f' < {limit:.0f}s' if limit else ''})"
    print(f"PASS criterion {num}: {label}{budget}")
    if limit is not None:
        assert elapsed < limit, f"criterion {num} exceeded its {limit}s budget"


def _data(family, rank):
    try:
        return RootDatum(family, rank)
    except InvalidDatum:
        return None


def test_criterion_1_orbit_oracle_equivalence():
    t0 = time.monotonic()
    checked = 0
    for family in "ABCD":
        for rank in range(1, 7):
            d = _data(family, rank)
            if d is None:
                continue
            for i in range(1, rank + 1):
                w = Weight(d, tuple(int(j == i) for j in range(1, rank + 1)))
                assert orbit_length(w).length == orbit_bfs(w), str(w)
                checked += 1
    rng = random.Random(20260809)
    done = 0
    while done < 200:
        family = rng.choice("ABCD")
        rank = rng.randint(1, 6)
        d = _data(family, rank)
        if d is None:
            continue
        w = Weight(d, tuple(rng.randint(0, 2) for _ in range(rank)))
        assert orbit_length(w).length == orbit_bfs(w), str(w)
        done += 1
    _report(1, f"orbit formula == enumeration on {checked} fundamental + 200 random weights",
            t0, 60)


# --- criterion 2: random subdominant chains ---------------------------------

def _rand_old1(rng, family):
    lo = {"A": 6, "B": 5, "C": 5, "D": 6}[family]
    n = rng.randint(lo, 40)
    d = RootDatum(family, n)
    hi = (n - 1) // 2 if family == "A" else (n - 2 if family in "BC" else n - 3)
    d0 = rng.randint(1, hi)
    coeffs = [0] * n
    coeffs[d0 - 1] = rng.randint(2, 4)
    for i in range(d0 - 1):
        coeffs[i] = rng.randint(0, 2)
    return Weight(d, tuple(coeffs)), None


def _rand_wt1(rng, family):
    lo = {"A": 7, "B": 6, "C": 6, "D": 6}[family]
    n = rng.randint(lo, 40)
    d = RootDatum(family, n)
    hi = (n - 1) // 2 if family == "A" else n - 3
    top = rng.randint(2, hi)
    coeffs = [0] * n
    coeffs[top - 1] = 1
    coeffs[rng.randint(1, top - 1) - 1] = rng.randint(1, 4)
    return Weight(d, tuple(coeffs)), top


def _rand_wt2(rng, family):
    w, top = _rand_wt1(rng, family)
    n = w.datum.rank
    cap = min(stats(w).e, n // 2 if family == "A" else n - 3)
    return w, rng.randint(top, max(top, cap))


def _rand_wt3(rng, family):
    lo = {"A": 5, "B": 7, "C": 7, "D": 7}[family]
    n = rng.randint(lo, 40)
    d = RootDatum(family, n)
    cap = (n + 1) // 2 if family == "A" else n - 3
    budget = rng.randint(1, cap)
    coeffs = [0] * n
    while budget:
        # keep the weight restricted for characteristic 5
        choices = [i for i in range(1, min(budget, (n + 1) // 2) + 1) if coeffs[i - 1] < 4]
        if not choices:
            break
        i = rng.choice(choices)
        coeffs[i - 1] += 1
        budget -= i
    return Weight(d, tuple(coeffs)), None


def test_criterion_2_subdominant_chain_soundness():
    t0 = time.monotonic()
    rng = random.Random(97)
    per_op = 250
    total = 0
    for family in "ABCD":
        for gen, op in ((_rand_old1, "old1"), (_rand_wt1, "wt1"),
                        (_rand_wt2, "wt2"), (_rand_wt3, "wt3")):
            for _ in range(per_op):
                w, arg = gen(rng, family)
                assert is_restricted(w, 5), str(w)
                if op == "old1":
                    out = lemma_old1_step(w)
                elif op == "wt1":
                    out = lemma_wt1_step(w, arg)
                elif op == "wt2":
                    out = lemma_wt2_chain(w, arg)
                else:
                    out = lemma_wt3_fundamental(w)
                assert all(c >= 0 for c in out.coeffs)
                assert stats(out).e == stats(w).e, f"{op} changed e on {w}"
                assert is_subdominant(out, w), f"{op} output not subdominant on {w}"
                total += 1
    _report(2, f"{total} random restricted-weight constructions sound (1000 per family)",
            t0, 60)


def test_criterion_3_binomial_lemmas_exhaustive():
    t0 = time.monotonic()
    part1 = part2 = 0
    for m in range(2, 201):
        j = 1
        while j * j <= m:
            assert check_bc_app_part1(m, j), (m, j)
            part1 += 1
            j += 1
        for a in range(1, (m + 1) // 2):
            if 2 * a >= m + 1:
                continue
            for b in range(1, (m + 1) // 2):
                if 2 * b >= m + 1 or not (m < 2 * (a + b) <= 2 * m):
                    continue
                assert check_bc_app_part2(m, a, b), (m, a, b)
                part2 += 1
    for rank in range(2, 501):
        assert check_bc_lower(rank), rank
    _report(3, f"binomial lemmas exhaustive: {part1} + {part2} cells, ranks to 500", t0, 30)


def test_criterion_4_tables_match_oracle():
    t0 = time.monotonic()
    checked = 0
    for g in iter_instances(FAMILIES, 10, (2, 3, 4, 5)):
        if g.natural_dimension > 9:
            continue
        nf = natural_form(g)
        if nf.alphabet**nf.n <= _ENUM_GUARD:
            pc = count_points(nf)
            assert pc.singular_1spaces == h_mod_p_index(g), f"[H:P] mismatch at {g}"
            checked += 1
        lm = levi_module_form(g)
        if lm is None or lm.alphabet**lm.n > _ENUM_GUARD:
            continue
        pc = count_points(lm)
        pd = parabolic_data(g)
        v = pd.variants
        assert v[0].length == pc.singular_vectors, f"singular variant mismatch at {g}"
        if g.family == "U":
            assert v[1].length == sum(pc.nonsingular_buckets), f"nonsingular mismatch at {g}"
        elif g.family == "Oodd":
            if g.q % 2:
                assert sorted(x.length for x in v[1:]) == sorted(pc.nonsingular_buckets), g
            else:
                assert v[1].length + v[2].length == sum(pc.nonsingular_buckets), g
        elif g.family in ("OplusEven", "OminusEven"):
            if g.q % 2:
                assert pc.nonsingular_buckets == (v[1].length, v[1].length), g
            else:
                assert pc.nonsingular_buckets == (v[1].length,), g
        checked += 1
    assert checked > 60
    _report(4, f"[H:P] and every orbit-length variant match the oracle on {checked} modules",
            t0, 300)


def test_criterion_5_lem_b2_exception_set():
    t0 = time.monotonic()
    grid = GridConfig(q_set=(2, 3, 4, 5, 7, 8, 9, 11, 13, 16), r_max=20)
    rep = run_campaign("lem-b2", grid)
    assert rep.violation_keys == {("Oodd", 3, 2), ("Oodd", 3, 3)}
    assert rep.verdict == "CONFIRMED_WITH_EXPECTED_EXCEPTIONS"
    _report(5, "lem-b2 violations are exactly the two rank-3 groups at q=2,3", t0)


def test_criterion_6_claim_no_violations():
    t0 = time.monotonic()
    rep = run_campaign("lin-la-gen-claim", GridConfig())
    assert not rep.violations
    assert rep.verdict == "CONFIRMED"
    _report(6, f"orbit-claim clean on {rep.cells_checked} cells (q <= 32, r <= 30)", t0)


def test_criterion_7_tensor_square_contradiction():
    t0 = time.monotonic()
    rep = run_campaign("prop-final", GridConfig())
    assert not rep.violations and rep.verdict == "CONFIRMED"
    halved = [c for c in rep.cells if c.q == 4]
    assert halved and all(c.status == "ok" for c in halved)
    _report(7, f"tensor-square contradiction on {rep.cells_checked} cells incl. halved q=4", t0)


def test_criterion_8_five_cases_replay():
    t0 = time.monotonic()
    rep = run_campaign("5cases-constants", GridConfig())
    assert rep.verdict == "CONFIRMED" and rep.cells_checked == 9
    by_tag = {c.variant: c for c in rep.cells}
    assert by_tag["dim-cap"].lhs == 10640 and by_tag["dim-cap"].rhs == 720
    assert by_tag["e3-forced"].lhs == 560 and by_tag["e3-forced"].rhs == 512
    assert by_tag["dim94"].rhs == 1240
    assert by_tag["dim217"].rhs == 41664
    assert by_tag["dim118"].rhs == 68850
    assert by_tag["dim104"].rhs == by_tag["dim112"].rhs == 6075
    _report(8, "all cited arithmetic steps replayed", t0)


def test_criterion_9_negative_control(monkeypatch):
    t0 = time.monotonic()
    small = GridConfig(q_set=(2, 3), r_max=5)
    for key in sorted(tables.B1_EXCEPTIONS):
        bad = dict(tables.B1_EXCEPTIONS)
        bad[key] += 1
        with monkeypatch.context() as mp:
            mp.setattr(tables, "B1_EXCEPTIONS", bad)
            rep = run_selfcheck(small)
            assert rep.verdict == "REFUTED", f"corrupting {key} not detected"
    # end-to-end: one corrupted value must flip the full run to exit 1
    bad = dict(tables.B1_EXCEPTIONS)
    bad[("Lin", 3, 2)] = 8
    monkeypatch.setattr(tables, "B1_EXCEPTIONS", bad)
    rc = main(["verify", "all", "--q-max", "3", "--r-max", "5"])
    assert rc == 1
    _report(9, "each of the 11 corrupted override values flips verify-all to exit 1", t0)


def test_criterion_10_determinism(tmp_path):
    t0 = time.monotonic()
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        rc = main(["verify", "all", "--jobs", "8", "--out", str(p)])
        assert rc == 0
    docs = [parse_report(p.read_bytes()) for p in paths]
    assert body_bytes(docs[0]) == body_bytes(docs[1])
    assert docs[0]["header"]["timestamp"] != "" and docs[1]["body"] == docs[0]["body"]
    _report(10, "two verify-all --jobs 8 runs have byte-identical bodies", t0)


def test_full_default_run_under_budget():
    t0 = time.monotonic()
    reports = run_all(GridConfig())
    assert all_acceptable(reports)
    elapsed = time.monotonic() - t0
    print(f"PASS full verify-all on the default grid in {elapsed:.1f}s (< 600s)")
    assert elapsed < 600
