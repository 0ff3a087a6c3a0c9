import json
import os

import jsonschema
import pytest

from thetacycles.cli import run

SCHEMA_DIR = os.path.join(
    os.path.dirname(__file__), "..", "src", "thetacycles", "schemas"
)


def load_schema(name):
    with open(os.path.join(SCHEMA_DIR, f"{name}.schema.json")) as fh:
        return json.load(fh)


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def invoke_json(capsys, schema, *argv):
    code, out = invoke(capsys, *argv)
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema(schema))
    return code, payload


class TestSymfun:
    def test_schur(self, capsys):
        code, payload = invoke_json(capsys, "symfun", "symfun", "schur", "1,1")
        assert code == 0
        assert payload["terms"] == [[[2], "-1/2"], [[1, 1], "1/2"]]

    def test_partitions(self, capsys):
        code, payload = invoke_json(capsys, "symfun", "symfun", "partitions", "4")
        assert code == 0
        assert len(payload["partitions"]) == 5

    def test_elementary(self, capsys):
        code, payload = invoke_json(capsys, "symfun", "symfun", "elementary", "3")
        assert code == 0


class TestRepCommands:
    def test_rep_dim_20(self, capsys):
        code, payload = invoke_json(capsys, "rep_dim", "rep-dim", "A5", "0,0,1,0,0")
        assert code == 0 and payload["dim"] == 20

    def test_rep_dim_text(self, capsys):
        code, out = invoke(capsys, "--format", "text", "rep-dim", "A5", "0,0,1,0,0")
        assert code == 0 and out.strip() == "20"

    def test_rep_char(self, capsys):
        code, payload = invoke_json(capsys, "rep_char", "rep-char", "A2", "1,1")
        assert code == 0
        assert sum(m for _, m in payload["weights"]) == 8

    def test_rep_classify(self, capsys):
        code, payload = invoke_json(
            capsys, "rep_classify", "rep-classify", "--max-rank", "3", "--max-dim", "30"
        )
        assert code == 0
        assert any(r["dim"] == 14 and r["type"] == "C3" for r in payload["rows"])

    def test_wmf_tables_csv(self, capsys):
        code, out = invoke(
            capsys, "--format", "csv", "wmf-tables", "--max-rank", "3", "--max-dim", "15"
        )
        assert code == 0
        assert out.startswith("table,family,G,dimW")

    def test_qm_search(self, capsys):
        code, payload = invoke_json(
            capsys, "qm_search", "qm-search", "--dim", "7", "--max-rank", "3"
        )
        assert code == 0
        assert {"type": "G2", "weight": [1, 0]} in payload["matches"]


class TestThetaCommands:
    def test_theta_group(self, capsys):
        code, payload = invoke_json(
            capsys, "theta_group", "theta-group", "--g", "4", "--k", "1"
        )
        assert code == 0 and payload["label"] == "Sp22"

    def test_cc_odp(self, capsys):
        code, payload = invoke_json(
            capsys, "cc_odp", "cc-odp", "--g", "5", "--k", "2", "--sum-zero"
        )
        assert code == 0
        assert len(payload["components"]) == 3

    def test_genus5_exits_one(self, capsys):
        code, payload = invoke_json(capsys, "genus5", "genus5")
        assert code == 1
        assert payload["c1_coefficient"] == "96/5"
        assert payload["integral"] is False

    def test_fourfold_table(self, capsys):
        code, payload = invoke_json(capsys, "fourfold_table", "fourfold-table")
        assert code == 0
        assert len(payload["rows"]) == 4

    def test_fourfold_table_csv(self, capsys):
        code, out = invoke(capsys, "--format", "csv", "fourfold-table")
        assert code == 0
        assert len(out.strip().splitlines()) == 5

    def test_s_sets(self, capsys):
        code, payload = invoke_json(capsys, "s_sets", "s-sets", "--bound", "100")
        assert code == 0
        assert payload["s_minus"] == [2, 4, 20, 32, 56, 64]


class TestFakeJacobian:
    def test_solvable(self, capsys):
        code, payload = invoke_json(
            capsys, "fake_jacobian", "fake-jacobian", "--g", "5", "--degree", "70"
        )
        assert code == 0 and payload["c0"] == 8

    def test_infeasible_exits_one(self, capsys):
        code, payload = invoke_json(
            capsys, "fake_jacobian", "fake-jacobian", "--g", "5", "--degree", "69"
        )
        assert code == 1 and payload["feasible"] is False


class TestSummandAndSimplicity:
    def test_summand(self, capsys):
        code, payload = invoke_json(
            capsys, "summand_bound", "summand-bound", "--dims", "2", "--dz", "3"
        )
        assert code == 0 and payload["delta"] == "1"

    def test_summand_exclusion_exits_one(self, capsys):
        code, payload = invoke_json(
            capsys, "summand_bound", "summand-bound", "--dims", "5", "--dz", "5"
        )
        assert code == 1 and payload["no_decomposition"] is True

    def test_simplicity_roundtrip(self, capsys, tmp_path):
        code, out = invoke(capsys, "cc-odp", "--g", "5", "--k", "2", "--sum-zero",
                           "--gauss-finite")
        cycle_path = tmp_path / "cycle.json"
        cycle_path.write_text(out)
        code, payload = invoke_json(
            capsys, "simplicity", "simplicity", "--input", str(cycle_path)
        )
        assert code == 0
        assert payload["established"] is True


class TestCycleFiles:
    def test_convolve(self, capsys, tmp_path):
        _, theta = invoke(capsys, "cc-odp", "--g", "4", "--k", "0", "--gauss-finite")
        c = json.loads(theta)
        path = tmp_path / "in.json"
        path.write_text(json.dumps({"c1": c, "c2": c, "d_trunc": 3}))
        code, payload = invoke_json(
            capsys, "cycle_convolve", "cycle-convolve", "--input", str(path)
        )
        assert code == 0
        total = sum(
            comp["mult"] * int(comp["cm"][0]) for comp in payload["components"]
        )
        assert total == 24 * 24

    def test_cycle_schur(self, capsys, tmp_path):
        _, theta = invoke(capsys, "cc-odp", "--g", "5", "--k", "0", "--gauss-finite")
        path = tmp_path / "in.json"
        path.write_text(
            json.dumps({"cycle": json.loads(theta), "alpha": [1, 1], "d_trunc": 1})
        )
        code, payload = invoke_json(
            capsys, "cycle_schur", "cycle-schur", "--input", str(path)
        )
        assert code == 0

    def test_invalid_cycle_rejected(self, capsys, tmp_path):
        bad = {
            "g": 3,
            "components": [
                {"label": "x", "dim": 1, "mult": 1, "cm": ["2", "1", "1"],
                 "gauss_finite": False}
            ],
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"c1": bad, "c2": bad, "d_trunc": 1}))
        code, out = invoke(capsys, "cycle-convolve", "--input", str(path))
        assert code == 2

    def test_fiber_degree_mismatch_rejected(self, capsys, tmp_path):
        bad = {
            "g": 3,
            "components": [
                {"label": "x", "dim": 0, "mult": 1, "cm": ["1", "0", "0"],
                 "gauss_finite": True}
            ],
            "fiber": {"group": {"rank": 1, "torsion": []},
                      "coeffs": [[[0], 2]]},
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"c1": bad, "c2": bad, "d_trunc": 1}))
        code, _ = invoke(capsys, "cycle-convolve", "--input", str(path))
        assert code == 2


class TestLambdaEval:
    def test_adams(self, capsys, tmp_path):
        elem = {"group": {"rank": 1, "torsion": []}, "coeffs": [[[1], 1], [[-1], 1]]}
        path = tmp_path / "in.json"
        path.write_text(json.dumps({"element": elem, "op": {"kind": "adams", "n": 2}}))
        code, payload = invoke_json(
            capsys, "lambda_eval", "lambda-eval", "--input", str(path)
        )
        assert code == 0
        assert sorted(payload["coeffs"]) == [[[-2], 1], [[2], 1]]

    def test_lambda_beyond_dimension(self, capsys, tmp_path):
        elem = {"group": {"rank": 1, "torsion": []}, "coeffs": [[[1], 1], [[2], 1]]}
        path = tmp_path / "in.json"
        path.write_text(json.dumps({"element": elem, "op": {"kind": "lambda", "k": 3}}))
        code, payload = invoke_json(
            capsys, "lambda_eval", "lambda-eval", "--input", str(path)
        )
        assert code == 0
        assert payload["coeffs"] == []


class TestVerifyIg:
    def test_roundtrip(self, capsys, tmp_path):
        elem = {"group": {"rank": 1, "torsion": []}, "coeffs": [[[1], 1], [[-1], 1]]}
        cand = {"group": {"rank": 1, "torsion": []}, "coeffs": [[[2], 1], [[-2], 1]]}
        path = tmp_path / "in.json"
        path.write_text(
            json.dumps(
                {
                    "target": elem,
                    "construction": {"kind": "var", "index": 0},
                    "e": 2,
                    "candidates": [cand],
                }
            )
        )
        code, payload = invoke_json(capsys, "verify_ig", "verify-ig", "--input", str(path))
        assert code == 0 and payload["verified"] is True

    def test_failure_exits_one(self, capsys, tmp_path):
        elem = {"group": {"rank": 1, "torsion": []}, "coeffs": [[[1], 1], [[-1], 1]]}
        cand = {"group": {"rank": 1, "torsion": []}, "coeffs": [[[2], 1]]}
        path = tmp_path / "in.json"
        path.write_text(
            json.dumps(
                {
                    "target": elem,
                    "construction": {"kind": "var", "index": 0},
                    "e": 2,
                    "candidates": [cand],
                }
            )
        )
        code, payload = invoke_json(capsys, "verify_ig", "verify-ig", "--input", str(path))
        assert code == 1 and payload["verified"] is False


class TestLoaders:
    def test_cycle_round_trip(self, capsys, tmp_path):
        from thetacycles.cli import load_cycle

        _, out = invoke(capsys, "cc-odp", "--g", "5", "--k", "2", "--sum-zero")
        path = tmp_path / "cycle.json"
        path.write_text(out)
        cycle = load_cycle(str(path))
        assert cycle.to_json() == json.loads(out)

    def test_character_round_trip(self, capsys, tmp_path):
        from thetacycles.cli import load_character

        _, out = invoke(capsys, "rep-char", "A2", "1,1")
        path = tmp_path / "char.json"
        path.write_text(out)
        ch = load_character(str(path))
        assert ch.to_json() == json.loads(out)

    def test_character_invariant_violation_named(self, capsys, tmp_path):
        from thetacycles.cli import InputError, load_character

        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"type": "A2", "weights": [[[1, 0], 1]]}))
        with pytest.raises(InputError, match="invariant"):
            load_character(str(path))

    def test_cycle_invariant_violation_named(self, capsys, tmp_path):
        from thetacycles.cli import InputError, load_cycle

        bad = {
            "g": 3,
            "components": [
                {"label": "x", "dim": 1, "mult": 1, "cm": ["2", "1", "5"],
                 "gauss_finite": False}
            ],
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        with pytest.raises(InputError, match="invariant"):
            load_cycle(str(path))


class TestCliContract:
    def test_unknown_subcommand_usage_error(self, capsys):
        assert run(["no-such-command"]) == 2

    def test_missing_input_usage_error(self, capsys):
        assert run(["cycle-convolve", "--input", "/nonexistent.json"]) == 2

    def test_malformed_json_usage_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert run(["cycle-convolve", "--input", str(path)]) == 2

    def test_wmf_tables_json_schema(self, capsys):
        code, payload = invoke_json(
            capsys, "wmf_tables", "wmf-tables", "--max-rank", "3", "--max-dim", "15"
        )
        assert code == 0

    def test_determinism(self, capsys):
        _, out1 = invoke(capsys, "genus5")
        _, out2 = invoke(capsys, "genus5")
        assert out1 == out2

    def test_no_floats_in_output(self, capsys):
        _, out = invoke(capsys, "genus5")
        payload = json.loads(out)

        def walk(node):
            assert not isinstance(node, float)
            if isinstance(node, dict):
                for v in node.values():
                    walk(v)
            elif isinstance(node, list):
                for v in node:
                    walk(v)

        walk(payload)
