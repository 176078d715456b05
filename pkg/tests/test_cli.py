import json

from weylcert.cli import main
from weylcert.report import body_bytes, build_document, emit_report, parse_report
from weylcert.verifier import GridConfig, run_all


def test_orbit_subcommand(capsys):
    rc = main(["orbit", "--family", "D", "--rank", "4", "--weight", "0,0,0,1", "--oracle"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "orbit length (formula): 8" in out
    assert "orbit length (enumerated): 8" in out


def test_orbit_bad_weight(capsys):
    rc = main(["orbit", "--family", "A", "--rank", "3", "--weight", "1,2"])
    assert rc == 2


def test_chain_subcommand(capsys):
    rc = main(["chain", "--family", "B", "--rank", "8", "--weight",
               "1,1,0,0,0,0,0,0", "--op", "wt2", "--m", "3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "B8[0,0,1,0,0,0,0,0]" in out
    assert "subdominant to input: True" in out


def test_chain_precondition_exit(capsys):
    rc = main(["chain", "--family", "A", "--rank", "6", "--weight",
               "0,0,2,0,0,0", "--op", "old1"])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_tables_json(capsys):
    rc = main(["tables", "--family", "Sp", "--r", "4", "--q", "5", "--json"])
    assert rc == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["bounds"]["b2"] == "187488"
    assert rec["parabolic"]["H_P_index"] == "97656"


def test_tables_parity_error(capsys):
    assert main(["tables", "--family", "Sp", "--r", "4", "--q", "4"]) == 2


def test_count_isotropic(capsys):
    rc = main(["count-isotropic", "--form", "quadratic_plus", "--n", "4", "--q", "2"])
    out = capsys.readouterr().out
    assert rc == 0 and "singular 1-spaces: 9" in out


def test_bounds_subcommand(capsys):
    assert main(["bounds", "binom", "--m", "9", "--j", "3"]) == 0
    assert capsys.readouterr().out.strip() == "84"
    assert main(["bounds", "prop-final", "--q", "8", "--r", "3"]) == 0
    assert main(["bounds", "binom", "--m", "9"]) == 2  # missing --j


def test_verify_single_campaign(tmp_path, capsys):
    out = tmp_path / "r.json"
    rc = main(["verify", "lem-b2", "--q-max", "5", "--r-max", "8",
               "--out", str(out)])
    assert rc == 0
    doc = parse_report(out.read_bytes())
    camp = doc["body"]["campaigns"][0]
    assert camp["id"] == "lem-b2"
    assert camp["verdict"] == "CONFIRMED_WITH_EXPECTED_EXCEPTIONS"
    keys = {(v["family"], int(v["r"]), int(v["q"])) for v in camp["violations"]}
    assert keys == {("Oodd", 3, 2), ("Oodd", 3, 3)}


def test_verify_unknown_campaign(capsys):
    assert main(["verify", "bogus"]) == 2


def test_verify_grid_config(tmp_path):
    cfg = tmp_path / "grid.cfg"
    cfg.write_text("grid.q_set = 2,3\ngrid.r_max = 6\ncampaigns = prop-final\n")
    assert main(["verify", "all", "--grid", str(cfg)]) == 0


def test_report_roundtrip_and_determinism(tmp_path):
    grid = GridConfig(q_set=(2, 3), r_max=6, campaigns=("lem-bB", "prop-final"))
    docs = [build_document(run_all(grid), grid) for _ in range(2)]
    assert body_bytes(docs[0]) == body_bytes(docs[1])
    blob = emit_report(docs[0], "json")
    assert parse_report(blob)["body"] == docs[0]["body"]
    # serializing the same document twice is byte-identical
    assert emit_report(docs[0], "json") == blob


def test_csv_row_count(tmp_path):
    grid = GridConfig(q_set=(2, 3), r_max=6, campaigns=("lem-bB",))
    reports = run_all(grid)
    doc = build_document(reports, grid)
    csv_blob = emit_report(doc, "csv").decode()
    rows = [line for line in csv_blob.splitlines() if line][1:]
    assert len(rows) == sum(r.cells_checked for r in reports)


def test_csv_empty_campaign_list():
    grid = GridConfig(q_set=(3,), r_max=4, campaigns=("mmt-bounds",))
    reports = run_all(grid)  # q=2 absent: campaign has zero cells
    doc = build_document(reports, grid)
    assert doc["body"]["campaigns"][0]["cells_checked"] == "0"
    assert emit_report(doc, "csv").decode().count("\n") == 1  # header only


def test_big_integers_as_strings():
    grid = GridConfig(q_set=(32,), r_max=30, campaigns=("lem-bB",))
    doc = build_document(run_all(grid), grid)
    cells = doc["body"]["campaigns"][0]["cells"]
    assert all(isinstance(c["lhs"], str) and isinstance(c["rhs"], str) for c in cells)
    assert any(len(c["rhs"]) > 100 for c in cells)  # the q^(r^2+r) scale


def test_orbit_oracle_mismatch_exit(monkeypatch, capsys):
    # a formula/enumeration disagreement must exit 1
    import weylcert.cli as cli
    from weylcert.orbits import OrbitResult
    from weylcert.roots import SubDiagram

    def fake_orbit_length(w):
        return OrbitResult(length=5, stabilizer_components=SubDiagram(frozenset(), ()))

    monkeypatch.setattr(cli, "orbit_length", fake_orbit_length)
    rc = main(["orbit", "--family", "A", "--rank", "3", "--weight", "1,0,0", "--oracle"])
    assert rc == 1
    assert "MISMATCH" in capsys.readouterr().err
