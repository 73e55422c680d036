import json

import pytest

from macp2p.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bounds_command(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--n1", "5", "--n2", "4", "--ni", "2")
    assert code == 0
    rec = json.loads(out)
    assert rec["params"] == {"n1": 5, "n2": 4, "ni": 2, "q": 5}
    assert rec["branch"] == "Weak"
    assert rec["sum_rate_bound"]["exact"] == "7/1"


def test_classify_command(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n1", "23", "--n2", "21",
                           "--ni", "13")
    rec = json.loads(out)
    assert code == 0
    assert rec["branch"] == "AlignHigh"
    assert rec["subcase"] == "RhoPosHigh"
    assert rec["derived"]["alpha"]["exact"] == "13/23"


def test_invalid_params_exit_code(capsys):
    code, _, err = run_cli(capsys, "bounds", "--n1", "3", "--n2", "5", "--ni", "1")
    assert code == 2
    assert "error" in json.loads(err)


def test_construction_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "construct", "--n1", "5", "--n2", "5",
                           "--ni", "3")
    assert code == 1
    assert "error" in json.loads(err)


def test_construct_verify_roundtrip(tmp_path, capsys):
    pre = tmp_path / "precoders.txt"
    code, out, _ = run_cli(capsys, "construct", "--n1", "12", "--n2", "11",
                           "--ni", "7", "--verify", "--precoder-file", str(pre))
    assert code == 0
    rec = json.loads(out)
    assert rec["meets_bound"] is True
    assert rec["rates"]["sum"] == 16
    assert rec["zero_error"]["mac_ok"] and rec["zero_error"]["p2p_ok"]

    code, out, _ = run_cli(capsys, "verify", "--precoders", str(pre))
    assert code == 0
    rec = json.loads(out)
    assert rec["meets_bound"] is True
    assert rec["zero_error"]["mac_ok"]


def test_verify_refuses_over_budget(tmp_path, capsys):
    pre = tmp_path / "big.txt"
    code, _, _ = run_cli(capsys, "construct", "--n1", "23", "--n2", "21",
                         "--ni", "13", "--precoder-file", str(pre))
    assert code == 0
    code, _, err = run_cli(capsys, "verify", "--precoders", str(pre))
    assert code == 2
    assert "rank-only" in json.loads(err)["error"]
    code, out, _ = run_cli(capsys, "verify", "--precoders", str(pre),
                           "--rank-only")
    assert code == 0
    assert json.loads(out)["rates"]["sum"] == 30


def test_search_command(capsys):
    code, out, _ = run_cli(capsys, "search", "--n1", "3", "--n2", "3", "--ni", "2")
    rec = json.loads(out)
    assert code == 0
    assert rec["best_sum_rate"] == rec["bound"] == 4
    assert rec["match"] and rec["complete"]


def test_gdof_command(capsys):
    code, out, _ = run_cli(capsys, "gdof", "--a", "11/20", "--b", "0.8")
    rec = json.loads(out)
    assert code == 0
    assert rec["d_lower"]["exact"] == "13/10"
    assert rec["branch"] == "AlignLow"


def test_sweep_command(tmp_path, capsys):
    out_file = tmp_path / "grid.csv"
    code, _, _ = run_cli(capsys, "sweep", "--a-min", "0", "--a-max", "0.1",
                         "--b-min", "0.9", "--b-max", "1", "--step", "1/10",
                         "--out", str(out_file))
    assert code == 0
    lines = out_file.read_text().strip().split("\n")
    assert lines[0] == "a,b,d_lower,w_ref,branch"
    assert len(lines) == 1 + 2 * 2


def test_lemma1_command(capsys):
    code, out, _ = run_cli(capsys, "lemma1", "--n", "2", "--delta", "1",
                           "--m", "1", "--instances", "30")
    rec = json.loads(out)
    assert code == 0
    assert rec["all_hold"] is True
    assert rec["instances"] == 30


def test_repro_figs_outputs(tmp_path, capsys):
    out = tmp_path / "figs"
    code, _, _ = run_cli(capsys, "repro-figs", "--out", str(out))
    assert code == 0
    names = sorted(f.name for f in out.iterdir())
    assert names == ["fig2_precoders.txt", "fig2_report.json",
                     "fig3_gdof_grid.csv", "fig4_gdof_b08.csv"]
    report = json.loads((out / "fig2_report.json").read_text())
    assert report["meets_bound"] is True
    assert report["rates"]["sum"] == 30
    grid = (out / "fig3_gdof_grid.csv").read_text().strip().split("\n")
    assert len(grid) == 1 + 71 * 21
