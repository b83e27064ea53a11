import json

import pytest

from gradinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestClassifyCommand:
    def test_n3_json(self, capsys):
        code, out, _ = run(capsys, "classify", "--n", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["command"] == "classify"
        assert doc["result"]["counts"]["equivalence_classes"] == 1
        assert doc["match"] is True

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "classify", "--n", "2", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0].startswith("orbit,lambda_a_order")

    def test_deterministic(self, capsys):
        _, out1, _ = run(capsys, "classify", "--n", "2")
        _, out2, _ = run(capsys, "classify", "--n", "2")
        assert out1 == out2

    def test_cap(self, capsys):
        code, _, err = run(capsys, "classify", "--n", "50")
        assert code == 2 and "error" in err

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        code, out, _ = run(capsys, "classify", "--n", "3", "--out", str(path))
        assert code == 0 and out == ""
        doc = json.loads(path.read_text())
        assert doc["result"]["counts"]["equivalence_classes"] == 1


class TestOrbitCommand:
    def test_theta3_fixed_point(self, capsys):
        code, out, _ = run(capsys, "orbit", "--n", "4", "--matrix", "1,2,2,-1")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["canonical_form"] == "theta3"
        assert doc["result"]["witness"] == [[1, 0], [0, 1]]
        assert doc["result"]["certified"] is True

    def test_negative_entries_reduced(self, capsys):
        code, out, _ = run(capsys, "orbit", "--n", "8", "--matrix", "1,4,0,-1")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["canonical_form"] == "theta1"
        assert doc["result"]["witness_det"] == 1

    def test_outside_locus(self, capsys):
        code, _, err = run(capsys, "orbit", "--n", "4", "--matrix", "1,0,0,1")
        assert code == 2 and "locus" in err

    def test_bad_matrix(self, capsys):
        code, _, err = run(capsys, "orbit", "--n", "4", "--matrix", "1,2,3")
        assert code == 2


class TestCheckCommand:
    def test_worked_example_accepts(self, capsys):
        code, out, _ = run(
            capsys,
            "check", "--group", "Z2^2", "--tau", "1,1,0,1",
            "--lambda", "za:4:1,zb:4:0",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["valid"] is True

    def test_exit_code_matches_verdict(self, capsys):
        code, out, _ = run(
            capsys,
            "check", "--group", "Z2^2", "--tau", "1,1,0,1",
            "--lambda", "za:1:0,zb:1:0",
        )
        assert code == 1
        assert json.loads(out)["result"]["verdict"] is False

    def test_involution_flag(self, capsys):
        code, out, _ = run(
            capsys,
            "check", "--group", "Z4^2", "--tau", "1,0,0,-1",
            "--lambda", "za:1:0,zb:1:0", "--involution",
        )
        assert code == 0
        assert json.loads(out)["result"]["involution"] is True

    def test_auto_mode(self, capsys):
        code, out, _ = run(
            capsys,
            "check", "--group", "Z3^2", "--tau", "1,0,0,1",
            "--lambda", "za:1:0,zb:1:0", "--mode", "auto",
        )
        assert code == 0

    def test_bad_group(self, capsys):
        code, _, err = run(
            capsys,
            "check", "--group", "D8", "--tau", "1,0,0,1", "--lambda", "za:1:0,zb:1:0",
        )
        assert code == 2

    def test_bad_lambda_literal(self, capsys):
        code, _, err = run(
            capsys,
            "check", "--group", "Z2^2", "--tau", "1,0,0,1", "--lambda", "za:4",
        )
        assert code == 2


class TestRealizeCommand:
    def test_basis_document(self, capsys):
        code, out, _ = run(capsys, "realize", "--n", "2")
        assert code == 0
        doc = json.loads(out)
        basis = doc["result"]["basis"]
        assert len(basis) == 4
        assert basis[0]["element"] == [0, 0]

    def test_ambient_override(self, capsys):
        code, out, _ = run(capsys, "realize", "--n", "2", "--ambient-order", "16")
        assert code == 0
        assert json.loads(out)["result"]["ambient_order"] == 16
        code, _, _ = run(capsys, "realize", "--n", "3", "--ambient-order", "4")
        assert code == 2


class TestSec3Command:
    def _write(self, tmp_path, doc):
        p = tmp_path / "datum.json"
        p.write_text(json.dumps(doc))
        return str(p)

    def test_valid_transpose_datum(self, tmp_path, capsys):
        path = self._write(
            tmp_path,
            {
                "G": "Z4",
                "tau": [[-1]],
                "g0": [0],
                "psi0": None,
                "gamma": {"self_dual": [[0], [1]], "dual_first": [], "dual_second": []},
                "t_seq": [[], []],
                "kind": "orthogonal",
            },
        )
        code, out, _ = run(capsys, "sec3", "--spec", path)
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["verified"] is True
        assert doc["result"]["epsilon"] == 1

    def test_symplectic_datum(self, tmp_path, capsys):
        path = self._write(
            tmp_path,
            {
                "G": "Z4",
                "tau": [[1]],
                "g0": [0],
                "psi0": None,
                "gamma": {"self_dual": [], "dual_first": [[1]], "dual_second": [[3]]},
                "t_seq": [],
                "kind": "symplectic",
            },
        )
        code, out, _ = run(capsys, "sec3", "--spec", path)
        assert code == 0
        assert json.loads(out)["result"]["epsilon"] == -1

    def test_pauli_datum(self, tmp_path, capsys):
        path = self._write(
            tmp_path,
            {
                "G": "Z2^2",
                "tau": [[1, 0], [0, 1]],
                "g0": [0, 0],
                "psi0": {
                    "pair_orders": [2],
                    "tau": [[1, 0], [0, 1]],
                    "lambda": [{"M": 1, "e": 0}, {"M": 1, "e": 0}],
                    "mode": "anti",
                },
                "gamma": {"self_dual": [[0, 0]], "dual_first": [], "dual_second": []},
                "t_seq": [[0, 0]],
                "kind": "orthogonal",
            },
        )
        code, out, _ = run(capsys, "sec3", "--spec", path)
        assert code == 0

    def test_invalid_datum_exits_one(self, tmp_path, capsys):
        path = self._write(
            tmp_path,
            {
                "G": "Z4",
                "tau": [[1]],
                "g0": [0],
                "psi0": None,
                "gamma": {"self_dual": [], "dual_first": [[1]], "dual_second": [[1]]},
                "t_seq": [],
                "kind": "orthogonal",
            },
        )
        code, out, _ = run(capsys, "sec3", "--spec", path)
        assert code == 1
        assert json.loads(out)["result"]["valid"] is False

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "sec3", "--spec", "/nonexistent.json")
        assert code == 2


class TestVerifyTablesCommand:
    @pytest.mark.parametrize("n", [2, 3, 4, 8])
    def test_moduli(self, n, capsys):
        code, out, _ = run(capsys, "verify-tables", "--n", str(n))
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["pairwise_nonconjugate"] is True
        assert doc["result"]["locus_scan"]["all_certified"] is True

    def test_conjugator_table_only_for_two_powers(self, capsys):
        _, out, _ = run(capsys, "verify-tables", "--n", "6")
        assert json.loads(out)["result"]["conjugator_table"] is None
        _, out, _ = run(capsys, "verify-tables", "--n", "8")
        assert json.loads(out)["result"]["conjugator_table"] is True


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify", "--n", "3", "--bogus"])
        assert exc.value.code == 2

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
