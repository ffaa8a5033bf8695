import io
import json

import pytest

from constacyclic import exists_type2, make_setting
from constacyclic.cli import main

import oracles


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestExists:
    def test_golden_true(self, capsys):
        code, out, _ = run(capsys, "exists", "--q", "13", "--n", "14", "--lambda", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["exists"] is True
        assert payload["reason"] == "n_r-even"
        assert payload["witness"]["s"]

    def test_golden_false(self, capsys):
        code, out, _ = run(capsys, "exists", "--q", "2", "--n", "5", "--lambda", "1")
        assert code == 1
        assert json.loads(out)["exists"] is False

    def test_extension_field_lambda(self, capsys):
        code, out, _ = run(capsys, "exists", "--q", "4", "--n", "21", "--lambda", "0 1")
        assert code == 0
        payload = json.loads(out)
        assert payload["reason"] == "odd-square"

    def test_witness_payload_verifies(self, capsys):
        from constacyclic import verify_certificate

        code, out, _ = run(capsys, "exists", "--q", "5", "--n", "6", "--lambda", "2")
        assert code == 0
        res, _ = verify_certificate(json.loads(out)["witness"])
        assert res.ok


class TestSplitVerify:
    def test_round_trip_via_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "split", "--q", "4", "--n", "21", "--lambda", "0 1")
        assert code == 0
        path = tmp_path / "cert.json"
        path.write_text(out)
        code, out, _ = run(capsys, "verify", "--file", str(path))
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_round_trip_via_stdin(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "split", "--q", "13", "--n", "14", "--lambda", "5")
        assert code == 0
        monkeypatch.setattr("sys.stdin", io.StringIO(out))
        code, out, _ = run(capsys, "verify")
        assert code == 0

    def test_tampered_certificate_exits_one(self, capsys, tmp_path):
        code, out, _ = run(capsys, "split", "--q", "13", "--n", "14", "--lambda", "5")
        cert = json.loads(out)
        cert["s"] = 3
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(cert))
        code, out, _ = run(capsys, "verify", "--file", str(path))
        assert code == 1
        assert json.loads(out)["ok"] is False

    def test_split_without_splitting_exits_one(self, capsys):
        code, out, err = run(capsys, "split", "--q", "2", "--n", "5", "--lambda", "1")
        assert code == 1
        assert out == ""
        assert "no Type-II splitting" in err

    def test_round_trip_across_small_sweep(self, capsys):
        for st in oracles.sweep_settings(5, 12):
            if not exists_type2(st, with_witness=False).exists:
                continue
            from constacyclic import gf

            lam_text = gf.element_to_text(st.field, st.lam.label)
            code, out, _ = run(
                capsys,
                "split",
                "--q",
                str(st.q),
                "--n",
                str(st.n),
                "--lambda",
                lam_text,
            )
            assert code == 0
            # verify in-process to keep the sweep quick
            from constacyclic import verify_certificate

            verdict, _ = verify_certificate(json.loads(out))
            assert verdict.ok, (st, verdict.first_failure)


class TestCodeReports:
    def test_code_with_distance(self, capsys):
        code, out, _ = run(
            capsys,
            "code",
            "--q",
            "13",
            "--n",
            "14",
            "--lambda",
            "5",
            "--P",
            "25,29,33,37,41,45",
            "--distance",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["dimension"] == 6
        assert payload["min_distance"] == 9
        assert payload["check_set"] == [25, 29, 33, 37, 41, 45]

    def test_dual_report(self, capsys):
        code, out, _ = run(
            capsys,
            "dual",
            "--q",
            "5",
            "--n",
            "6",
            "--lambda",
            "2",
            "--P",
            "9,21",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["check_set"] == [7, 11, 19, 23]
        assert payload["t"] == 23

    def test_iso_true_false(self, capsys):
        code, out, _ = run(
            capsys,
            "iso",
            "--q",
            "13",
            "--n",
            "14",
            "--lambda",
            "5",
            "--P",
            "25,29,33,37,41,45",
            "--iso-t",
            "27",
        )
        assert code == 0 and json.loads(out)["iso_orthogonal"] is True
        code, out, _ = run(
            capsys,
            "iso",
            "--q",
            "13",
            "--n",
            "14",
            "--lambda",
            "5",
            "--P",
            "1,5,9,13,17,53",
            "--iso-t",
            "1",
        )
        assert code == 1 and json.loads(out)["iso_orthogonal"] is False


class TestMds:
    def test_q5(self, capsys):
        code, out, _ = run(capsys, "mds", "--q", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["d_found"] == 5 and payload["mds"] is True

    def test_q17_bound(self, capsys):
        code, out, _ = run(capsys, "mds", "--q", "17")
        assert code == 0
        payload = json.loads(out)
        assert payload["d_lower_bound"] == 11


class TestAtlas:
    def test_lines_match_library(self, capsys):
        code, out, _ = run(capsys, "atlas", "--max-q", "4", "--max-n", "8")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert lines
        for entry in lines:
            st = make_setting(entry["q"], entry["n"], entry["lambda"])
            assert entry["type2"] == exists_type2(st, with_witness=False).exists

    def test_default_bounds_cover_the_sweep(self, capsys, sweep):
        code, out, _ = run(capsys, "atlas")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == len(sweep)
        true_count = sum(1 for e in lines if e["type2"])
        expected = sum(
            1 for st in sweep if exists_type2(st, with_witness=False).exists
        )
        assert true_count == expected

    def test_deterministic(self, capsys):
        _, out1, _ = run(capsys, "atlas", "--max-q", "3", "--max-n", "6")
        _, out2, _ = run(capsys, "atlas", "--max-q", "3", "--max-n", "6")
        assert out1 == out2


class TestUsageErrors:
    def test_bad_lambda_text(self, capsys):
        code, out, err = run(
            capsys, "exists", "--q", "4", "--n", "21", "--lambda", "9"
        )
        assert code == 2
        assert out == ""
        assert "error" in err

    def test_bad_q(self, capsys):
        code, out, err = run(capsys, "mds", "--q", "7")
        assert code == 2
        assert "error" in err

    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
