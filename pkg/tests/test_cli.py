import json

import pytest

from quivermoduli.cli import main

K3 = json.dumps({"vertices": ["i", "j"],
                 "arrows": [{"from": "i", "to": "j"}] * 3})
A2 = json.dumps({"vertices": ["i", "j"],
                 "arrows": [{"from": "i", "to": "j"}]})
D11 = '{"i": 1, "j": 1}'
THETA = '{"i": 1}'


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    assert set(doc) == {"command", "inputs", "result", "timing_ms"}
    return doc


class TestBasicCommands:
    def test_euler(self, capsys):
        doc = run_json(capsys, "euler", "--quiver", K3, "--d", D11, "--e", D11)
        assert doc["command"] == "euler"
        assert doc["result"]["value"] == "-1"

    def test_root_classify(self, capsys):
        doc = run_json(capsys, "root", "classify", "--quiver", K3,
                       "--dim", '{"i": 2, "j": 3}')
        assert doc["result"]["kind"] == "imaginary"
        assert doc["command"] == "root classify"

    def test_ext_and_schur(self, capsys):
        doc = run_json(capsys, "ext", "--quiver", K3,
                       "--d", '{"i": 1}', "--e", '{"j": 1}')
        assert doc["result"]["value"] == "3"
        doc = run_json(capsys, "schur", "--quiver", K3,
                       "--dim", '{"i": 2, "j": 3}')
        assert doc["result"]["schur"] is True

    def test_decompose(self, capsys):
        doc = run_json(capsys, "decompose", "--quiver", A2,
                       "--dim", '{"i": 2, "j": 1}')
        parts = [{k: v for k, v in p.items() if v != "0"}
                 for p in doc["result"]["parts"]]
        assert parts == [{"i": "1"}, {"i": "1", "j": "1"}]

    def test_mass_and_betti(self, capsys):
        doc = run_json(capsys, "mass", "--quiver", K3, "--dim", D11)
        assert doc["result"]["mass"]["num"]["variable"] == "q"
        closed = run_json(capsys, "betti", "--quiver", K3, "--dim", D11,
                          "--theta", THETA)
        via_mass = run_json(capsys, "betti", "--quiver", K3, "--dim", D11,
                            "--theta", THETA, "--method", "mass")
        assert closed["result"]["coefficients"] == ["1", "1", "1"]
        assert closed["result"]["coefficients"] == \
            via_mass["result"]["coefficients"]

    def test_mass_ss_methods_agree(self, capsys):
        rec = run_json(capsys, "mass-ss", "--quiver", K3, "--dim",
                       '{"i": 2, "j": 3}', "--theta", THETA)
        clo = run_json(capsys, "mass-ss", "--quiver", K3, "--dim",
                       '{"i": 2, "j": 3}', "--theta", THETA,
                       "--method", "closed")
        assert rec["result"]["mass_ss"] == clo["result"]["mass_ss"]

    def test_word_and_monoid(self, capsys):
        doc = run_json(capsys, "word", "leq", "--quiver", A2,
                       "--w", "ij", "--w2", "ji")
        assert doc["result"]["leq"] is True
        doc = run_json(capsys, "monoid", "equal", "--quiver", A2,
                       "--w", "iij", "--w2", "iji")
        assert doc["result"]["equal"] is True

    def test_oracle_count(self, capsys):
        doc = run_json(capsys, "oracle", "count-ss", "--quiver", A2,
                       "--dim", D11, "--theta", THETA, "--q", "3")
        assert doc["result"] == {"count": "2", "total": "3"}

    def test_series(self, capsys):
        doc = run_json(capsys, "series", "two-row", "--n", "6")
        assert doc["result"]["coefficients"] == \
            ["1", "1", "3", "5", "10", "16", "29"]

    def test_all_numbers_are_strings(self, capsys):
        doc = run_json(capsys, "hn-types", "--quiver", A2, "--dim", D11,
                       "--theta", THETA)

        def only_strings(obj):
            if isinstance(obj, bool) or obj is None:
                return True
            if isinstance(obj, (int, float)):
                return False
            if isinstance(obj, list):
                return all(only_strings(x) for x in obj)
            if isinstance(obj, dict):
                return all(only_strings(v) for v in obj.values())
            return True

        assert only_strings(doc)


class TestExitCodes:
    def test_input_error_is_2(self, capsys):
        code, out, err = run(capsys, "euler", "--quiver", K3,
                             "--d", '{"i": -1}', "--e", D11)
        assert code == 2
        assert json.loads(err)["error_class"] == "input"

    def test_budget_error_is_3(self, capsys):
        code, out, err = run(capsys, "oracle", "count-ss", "--quiver", K3,
                             "--dim", '{"i": 3, "j": 3}', "--theta", THETA,
                             "--q", "5", "--budget", "10")
        assert code == 3
        doc = json.loads(err)
        assert doc["error_class"] == "budget"
        assert doc["budget"] == "10"

    def test_monoid_undecided_is_3(self, capsys):
        code, out, err = run(capsys, "monoid", "equal", "--quiver", A2,
                             "--w", "iijj", "--w2", "jjii", "--budget", "1")
        assert code == 3

    def test_bad_json_is_2(self, capsys):
        code, out, err = run(capsys, "euler", "--quiver", "{oops",
                             "--d", D11, "--e", D11)
        assert code == 2


class TestFixtures:
    def test_bundled_fixtures_pass(self, capsys):
        code, out, err = run(capsys, "fixtures", "run")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["failed"] == "0"
        assert int(doc["result"]["total"]) >= 10

    def test_failing_fixture_file(self, capsys, tmp_path):
        path = tmp_path / "fx.json"
        path.write_text(json.dumps([{
            "name": "wrong",
            "argv": ["euler", "--quiver", K3, "--d", D11, "--e", D11],
            "expected": {"value": "999"}}]))
        code, out, err = run(capsys, "fixtures", "run", str(path))
        assert code == 1
        doc = json.loads(out)
        assert doc["result"]["failed"] == "1"


class TestFormats:
    def test_table_format(self, capsys):
        code, out, err = run(capsys, "--format", "table", "euler",
                             "--quiver", K3, "--d", D11, "--e", D11)
        assert code == 0
        assert "value: -1" in out

    def test_quiver_from_file(self, capsys, tmp_path):
        path = tmp_path / "quiver.json"
        path.write_text(K3)
        doc = run_json(capsys, "euler", "--quiver", str(path),
                       "--d", D11, "--e", D11)
        assert doc["result"]["value"] == "-1"
