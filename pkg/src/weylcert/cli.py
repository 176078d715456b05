"""Command-line surface.

Subcommands:

* ``verify <campaign|all>`` -- run inequality campaigns and emit a report
* ``orbit``           -- closed-form Weyl-orbit length (optionally vs BFS)
* ``chain``           -- run one subdominant-weight construction
* ``tables``          -- dump the group-data record for one instance
* ``count-isotropic`` -- exhaustive point counts for a standard form
* ``bounds``          -- evaluate one of the bound formulas

Exit codes: 0 all verdicts acceptable, 1 refuted verdict or oracle mismatch,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import bounds as bnd
from . import report as rpt
from .orbits import orbit_length
from .roots import InvalidDatum, RootDatum
from .tables import bound_table, make_instance, parabolic_data, qll_admissible
from .verifier import (
    GridConfig,
    REGISTRY,
    UnknownCampaign,
    all_acceptable,
    load_config,
    run_all,
)
from .verifier.grid import ConfigError
from .weights import (
    NotDominant,
    PreconditionViolated,
    Weight,
    is_subdominant,
    lemma_old1_step,
    lemma_wt1_step,
    lemma_wt2_chain,
    lemma_wt3_fundamental,
    stats,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2


def _parse_weight(family: str, rank: int, coeffs: str) -> Weight:
    datum = RootDatum(family, rank)
    parts = tuple(int(tok) for tok in coeffs.split(","))
    return Weight(datum, parts)


def _add_weight_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=("A", "B", "C", "D"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--weight", required=True,
                   help="comma-separated fundamental-basis coefficients")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weylcert", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run inequality campaigns")
    pv.add_argument("campaign", help="a registered campaign id, or 'all'")
    pv.add_argument("--out", help="write the report to this path")
    pv.add_argument("--format", choices=("json", "csv"), default=None)
    pv.add_argument("--jobs", type=int, default=1)
    pv.add_argument("--grid", help="path to a key=value grid config")
    pv.add_argument("--q-max", type=int, default=None,
                    help="restrict the default q set to q <= Q")
    pv.add_argument("--r-max", type=int, default=None)

    po = sub.add_parser("orbit", help="Weyl orbit length of a dominant weight")
    _add_weight_args(po)
    po.add_argument("--oracle", action="store_true",
                    help="also enumerate the orbit (rank <= 8)")

    pc = sub.add_parser("chain", help="subdominant-weight constructions")
    _add_weight_args(pc)
    pc.add_argument("--op", required=True, choices=("old1", "wt1", "wt2", "wt3"))
    pc.add_argument("--d", type=int, help="top node for wt1")
    pc.add_argument("--m", type=int, help="target node for wt2")

    pt = sub.add_parser("tables", help="group-data record for one instance")
    pt.add_argument("--family", required=True,
                    choices=("Lin", "U", "Sp", "Oodd", "OplusEven", "OminusEven"))
    pt.add_argument("--r", required=True, type=int)
    pt.add_argument("--q", required=True, type=int)
    pt.add_argument("--json", action="store_true")

    pi = sub.add_parser("count-isotropic", help="exhaustive form point counts")
    pi.add_argument("--form", required=True,
                    choices=("trivial", "alternating", "quadratic_odd",
                             "quadratic_plus", "quadratic_minus", "hermitian"))
    pi.add_argument("--n", required=True, type=int)
    pi.add_argument("--q", required=True, type=int)

    pb = sub.add_parser("bounds", help="evaluate a bound formula")
    pb.add_argument("op", choices=("binom", "bc-app", "bc-lower", "easy-lower",
                                   "easy-upper", "lowerbd1", "lowerbd2", "newupper",
                                   "prop-final"))
    for flag in ("--m", "--j", "--a", "--b", "--rank", "--e", "--dim-w", "--dim-s",
                 "--index", "--q", "--r"):
        pb.add_argument(flag, type=int)
    pb.add_argument("--family", choices=("A", "B", "C", "D"))
    pb.add_argument("--r-nonzero", action="store_true")

    return ap


def cmd_verify(args) -> int:
    if args.grid:
        grid = load_config(args.grid)
    else:
        grid = GridConfig()
    if args.q_max is not None:
        grid = dataclasses.replace(grid, q_set=tuple(q for q in grid.q_set if q <= args.q_max))
    if args.r_max is not None:
        grid = dataclasses.replace(grid, r_max=args.r_max)
    if args.campaign != "all":
        if args.campaign not in REGISTRY:
            print(f"unknown campaign {args.campaign!r}; known: {', '.join(sorted(REGISTRY))}",
                  file=sys.stderr)
            return EXIT_USAGE
        grid = dataclasses.replace(grid, campaigns=(args.campaign,))
    reports = run_all(grid, jobs=args.jobs)
    for rep in reports:
        marks = f"{len(rep.violations)} violation(s)" if rep.violations else "clean"
        print(f"{rep.campaign:20s} cells={rep.cells_checked:6d}  {marks:18s} {rep.verdict}")
        for cell in rep.violations[:5]:
            tag = f" [{cell.variant}]" if cell.variant else ""
            print(f"    {cell.family} r={cell.r} q={cell.q}{tag}: {cell.note or 'violated'}")
        if len(rep.violations) > 5:
            print(f"    ... {len(rep.violations) - 5} more (see the report)")
    doc = rpt.build_document(reports, grid)
    out_format = args.format or grid.out_format
    out_path = args.out or grid.out_path
    if out_path:
        rpt.write_report(doc, out_path, out_format)
        print(f"report written to {out_path} ({out_format})")
    return EXIT_OK if all_acceptable(reports) else EXIT_REFUTED


def cmd_orbit(args) -> int:
    w = _parse_weight(args.family, args.rank, args.weight)
    res = orbit_length(w)
    comps = ", ".join(f"{f}{r}" for f, r in res.stabilizer_components.components) or "trivial"
    print(f"weight {w}")
    print(f"orbit length (formula): {res.length}")
    print(f"stabilizer sub-diagram: {comps}")
    if args.oracle:
        from .oracles import orbit_bfs

        enum = orbit_bfs(w)
        print(f"orbit length (enumerated): {enum}")
        if enum != res.length:
            print("MISMATCH between formula and enumeration", file=sys.stderr)
            return EXIT_REFUTED
    return EXIT_OK


def cmd_chain(args) -> int:
    w = _parse_weight(args.family, args.rank, args.weight)
    st = stats(w)
    print(f"input {w}: e={st.e} l={st.l} r={st.r} d0={st.d0}")
    if w.datum.rank % 2 and w.coeff((w.datum.rank + 1) // 2):
        print("note: the middle node is supported (boundary of the l/r split)")
    if args.op == "old1":
        out = lemma_old1_step(w)
    elif args.op == "wt1":
        if args.d is None:
            print("--d is required for wt1", file=sys.stderr)
            return EXIT_USAGE
        out = lemma_wt1_step(w, args.d)
    elif args.op == "wt2":
        if args.m is None:
            print("--m is required for wt2", file=sys.stderr)
            return EXIT_USAGE
        out = lemma_wt2_chain(w, args.m)
    else:
        out = lemma_wt3_fundamental(w)
    so = stats(out)
    print(f"output {out}: e={so.e} l={so.l} r={so.r} d0={so.d0}")
    print(f"subdominant to input: {is_subdominant(out, w)}")
    print(f"e preserved: {so.e == st.e}")
    return EXIT_OK


def cmd_tables(args) -> int:
    g = make_instance(args.family, args.r, args.q)
    pd = parabolic_data(g)
    bt = bound_table(g)
    record = {
        "instance": {"family": g.family, "r": str(g.r), "q": str(g.q), "p": str(g.p),
                     "name": str(g), "natural_dimension": str(g.natural_dimension),
                     "admissible": qll_admissible(g)},
        "parabolic": {
            "Q_order": str(pd.Q_order),
            "H_P_index": str(pd.H_P_index),
            "variants": [{"structure": v.structure, "length": str(v.length),
                          "singular": v.singular} for v in pd.variants],
        },
        "bounds": {
            "b1": str(bt.b1),
            "b1_is_exception": bt.b1_is_exception,
            "B": str(bt.B),
            "b2": None if bt.b2 is None else str(bt.b2),
            "b2_reason": bt.b2_reason,
            "betterB": None if bt.betterB is None else str(bt.betterB),
        },
    }
    if args.json:
        print(json.dumps(record, indent=1, sort_keys=True))
    else:
        print(f"{g}: natural dim {g.natural_dimension}, admissible={qll_admissible(g)}")
        print(f"  |Q| = {pd.Q_order}, [H:P] = {pd.H_P_index}")
        for v in pd.variants:
            tag = "singular" if v.singular else "nonsingular"
            print(f"  orbit {v.length} ({tag}): {v.structure}")
        print(f"  b1 = {bt.b1}{' (override)' if bt.b1_is_exception else ''}, B = {bt.B}")
        print(f"  b2 = {bt.b2 if bt.b2 is not None else f'undefined ({bt.b2_reason})'}")
        print(f"  betterB = {bt.betterB}")
    return EXIT_OK


def cmd_count_isotropic(args) -> int:
    from .oracles import FormSpec, count_points

    spec = FormSpec(args.form, args.n, args.q)
    pc = count_points(spec)
    print(f"{args.form} form, dimension {args.n} over F_{spec.alphabet}:")
    print(f"  singular vectors: {pc.singular_vectors}")
    print(f"  singular 1-spaces: {pc.singular_1spaces}")
    print(f"  nonsingular buckets: {list(pc.nonsingular_buckets)}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    def need(*names):
        missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
        if missing:
            raise ConfigError(f"missing {'/'.join('--' + n for n in missing)} for {args.op}")

    if args.op == "binom":
        need("m", "j")
        print(bnd.binom(args.m, args.j))
    elif args.op == "bc-app":
        need("m", "j", "a", "b")
        print(bnd.check_bc_app(args.m, args.j, args.a, args.b))
    elif args.op == "bc-lower":
        need("rank")
        print(bnd.check_bc_lower(args.rank))
    elif args.op == "easy-lower":
        need("rank", "e")
        if not args.family:
            raise ConfigError("missing --family for easy-lower")
        print(bnd.easy_lower(args.family, args.rank, args.e))
    elif args.op == "easy-upper":
        need("dim-w", "e")
        print(bnd.easy_upper(args.dim_w, args.e))
    elif args.op == "lowerbd1":
        need("rank", "e")
        print(bnd.lowerbd1(args.rank, args.e))
    elif args.op == "lowerbd2":
        need("rank", "e")
        print(bnd.lowerbd2(args.rank, args.e, args.r_nonzero))
    elif args.op == "newupper":
        need("dim-s", "e", "index")
        print(bnd.newupper(args.dim_s, args.e, args.index))
    else:
        need("q", "r")
        print(bnd.propfinal_check(args.q, args.r))
    return EXIT_OK


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "orbit": cmd_orbit,
        "chain": cmd_chain,
        "tables": cmd_tables,
        "count-isotropic": cmd_count_isotropic,
        "bounds": cmd_bounds,
    }
    try:
        return handlers[args.command](args)
    except (ConfigError, UnknownCampaign, InvalidDatum, NotDominant,
            PreconditionViolated, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except rpt.IoError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
