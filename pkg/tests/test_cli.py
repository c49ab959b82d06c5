import json

import pytest

from qlattice.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_weight(capsys):
    code, out, _ = run(capsys, "weight", "UHDHUUHDD")
    assert code == 0 and out.strip() == "q^4 + q^5"


def test_weight_json(capsys):
    code, out, _ = run(capsys, "weight", "UHUDHD", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload == {"path": "UHUDHD", "downs": 2,
                       "weight": [0, 0, 0, 1, 1], "pretty": "q^3 + q^4"}


def test_weight_bad_path_exits_2(capsys):
    code, _, err = run(capsys, "weight", "DU")
    assert code == 2 and "error:" in err


def test_paths(capsys):
    code, out, _ = run(capsys, "paths", "--n", "3")
    assert code == 0
    assert out.split() == ["HHH", "HUD", "UDH", "UHD"]
    code, out, _ = run(capsys, "paths", "--n", "4", "--json")
    payload = json.loads(out)
    assert payload["count"] == 9 and len(payload["paths"]) == 9


def test_involutions(capsys):
    code, out, _ = run(capsys, "involutions", "--n", "3")
    assert code == 0
    assert set(out.split()) == {"[]", "[1,2]", "[1,3]", "[2,3]"}


def test_biane(capsys):
    code, out, _ = run(capsys, "biane", "[1,6][3,5]")
    assert code == 0 and out.strip() == "UHUHDD"
    code, out, _ = run(capsys, "biane", "[1,2]", "--n", "3")
    assert code == 0 and out.strip() == "UDH"


def test_psi_and_classify(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("2 6 3\n1 0 0 1 0 0\n0 0 1 1 0 1\n0 0 0 0 1 0\n")
    code, out, _ = run(capsys, "psi", "--matrix", str(f), "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["path"] == "UHUDHD"
    assert payload["left_pivots"] == [1, 3, 5]
    assert payload["right_pivots"] == [4, 5, 6]
    assert payload["set"] == [2, 5] and payload["subset"] == [5]
    code, out, _ = run(capsys, "psi", "--matrix", str(f))
    assert "UHUDHD" in out
    code, out, _ = run(capsys, "classify", "--matrix", str(f), "--json")
    cols = json.loads(out)["columns"]
    assert [c["essential"] for c in cols] == [True, False, True, True,
                                              False, True]


def test_psi_q_mismatch_exits_2(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("3 2 1\n0 1\n")
    code, _, err = run(capsys, "psi", "--matrix", str(f), "--q", "2")
    assert code == 2 and "disagrees" in err


def test_cover_golden(tmp_path, capsys):
    f = tmp_path / "span.txt"
    f.write_text("2 3 1\n0 1 1\n")
    code, out, _ = run(capsys, "cover", "--q", "2", "--matrix", str(f))
    assert code == 0
    assert out.strip().splitlines() == ["2 3 2", "1 0 0", "0 1 1"]


def test_cover_accepts_redundant_spanning_set(tmp_path, capsys):
    f = tmp_path / "span.txt"
    f.write_text("2 3 3\n0 1 1\n0 1 1\n0 0 0\n")
    code, out, _ = run(capsys, "cover", "--matrix", str(f))
    assert code == 0 and out.strip().splitlines()[0] == "2 3 2"


def test_cover_top(tmp_path, capsys):
    f = tmp_path / "full.txt"
    f.write_text("2 2 2\n1 0\n0 1\n")
    code, out, _ = run(capsys, "cover", "--matrix", str(f))
    assert code == 0 and out.strip() == "TOP"
    code, out, _ = run(capsys, "cover", "--matrix", str(f), "--json")
    assert json.loads(out) == {"top": True, "cover": None}


def test_identity_commands(capsys):
    code, out, _ = run(capsys, "identity", "fs", "--n", "5")
    assert code == 0 and "ok" in out
    code, out, _ = run(capsys, "identity", "ds", "--n", "4", "--json")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = run(capsys, "identity", "fs", "--n", "6", "--k", "3")
    assert code == 0 and "k=3" in out


def test_census_csv_frozen(capsys):
    code, out, _ = run(capsys, "census", "--q", "2", "--n", "3", "--csv")
    assert code == 0
    assert out.strip().splitlines() == [
        "path,downs,predicted_poly,primary_count,block_size,fiber_size",
        "HHH,0,[1],1,8,8",
        "HUD,1,[-1,1],1,2,2",
        "UDH,1,[-1,1],1,2,2",
        "UHD,1,[0,-1,1],2,2,4",
    ]


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--q", "3", "--n", "2", "--json")
    rows = json.loads(out)
    assert code == 0
    assert [r["path"] for r in rows] == ["HH", "UD"]
    assert rows[1]["primary_count"] == 2          # (q-1) * w(UD) at q=3
    assert sum(r["fiber_size"] for r in rows) == 6


def test_sbd_json_schema(capsys):
    code, out, _ = run(capsys, "sbd", "--q", "2", "--n", "3", "--json")
    blocks = json.loads(out)
    assert code == 0
    assert sorted(b["path"] for b in blocks) == \
        ["HHH", "HUD", "UDH", "UHD", "UHD"]
    for b in blocks:
        assert set(b) == {"path", "primary_rref", "set", "members"}
        assert b["members"] == 2 ** (3 - 2 * b["path"].count("D"))


def test_scd_output(capsys):
    code, out, _ = run(capsys, "scd", "--q", "2", "--n", "2", "--json")
    payload = json.loads(out)
    assert code == 0
    assert sorted(len(c) for c in payload["chains"]) == [1, 1, 3]
    code, out, _ = run(capsys, "scd", "--q", "2", "--n", "1")
    assert "chain 1" in out


def test_max_size_flag_and_env(capsys, monkeypatch):
    code, _, err = run(capsys, "census", "--q", "2", "--n", "4",
                       "--max-size", "10")
    assert code == 2 and "above the ceiling" in err
    monkeypatch.setenv("QLATTICE_MAX_SIZE", "10")
    code, _, err = run(capsys, "census", "--q", "2", "--n", "4")
    assert code == 2 and "above the ceiling" in err
    monkeypatch.delenv("QLATTICE_MAX_SIZE")
    code, _, _ = run(capsys, "census", "--q", "2", "--n", "4")
    assert code == 0


def test_unknown_flag_is_an_error():
    with pytest.raises(SystemExit) as exc:
        main(["paths", "--n", "3", "--bogus"])
    assert exc.value.code == 2


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "psi", "--matrix", "/nonexistent/m.txt")
    assert code == 2 and "error:" in err


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "c03")
    assert code == 0
    assert out.startswith("PASS [c03]")
    code, out, _ = run(capsys, "selftest", "--only", "c03", "c09", "--json")
    results = json.loads(out)
    assert code == 0
    assert [r["key"] for r in results] == ["c03", "c09"]
    assert all(r["ok"] for r in results)


def test_selftest_unknown_key(capsys):
    code, _, err = run(capsys, "selftest", "--only", "c99")
    assert code == 2 and "unknown check keys" in err
