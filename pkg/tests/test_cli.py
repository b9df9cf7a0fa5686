"""Command line behaviour: formats, determinism, exit codes, schema."""

import json
from importlib import resources

import jsonschema
import pytest

from dualcox import cli


@pytest.fixture(scope="module")
def schema():
    text = (
        resources.files("dualcox") / "schema" / "dualcox.schema.json"
    ).read_text()
    return json.loads(text)


def run_json(capsys, argv, schema=None, expect_code=0):
    code = cli.run(argv)
    out = capsys.readouterr().out
    assert code == expect_code, out
    document = json.loads(out)
    if schema is not None:
        jsonschema.validate(document, schema)
    return document


class TestInfo:
    def test_a2_json_is_byte_exact(self, capsys):
        assert cli.run(["info", "A2", "--json"]) == 0
        out = capsys.readouterr().out
        assert out == '{"type":"A2","rank":2,"n_pos_roots":3,"order":6}\n'

    def test_roots_flag_emits_scalar_text(self, capsys, schema):
        doc = run_json(capsys, ["info", "H3", "--json", "--roots"], schema)
        assert doc["n_pos_roots"] == 15
        assert len(doc["positive_roots"]) == 15

    def test_dihedral_info(self, capsys, schema):
        doc = run_json(capsys, ["info", "I2(7)", "--json"], schema)
        assert doc == {"type": "I2(7)", "rank": 2, "n_pos_roots": 7, "order": 14}


class TestElementVerbs:
    def test_reflen_of_the_empty_word(self, capsys, schema):
        doc = run_json(capsys, ["reflen", "A2", "-w", "", "--json"], schema)
        assert doc == {"element": [], "reflen": 0}

    def test_word_spellings_agree(self, capsys):
        outs = []
        for word in ("0 1 0 1", "s0 s1 s0 s1", "s*t*s*t", "s t s t"):
            assert cli.run(["reflen", "G2", "-w", word, "--json"]) == 0
            outs.append(capsys.readouterr().out)
        assert len(set(outs)) == 1

    def test_reflection_word_letters(self, capsys, schema):
        doc = run_json(capsys, ["reflen", "G2", "-r", "t0 (s1 s0 s1)", "--json"], schema)
        assert doc["reflen"] == 2

    def test_cycle_input(self, capsys, schema):
        doc = run_json(
            capsys,
            ["perm", "B4", "-c", "(1,-2,-1,2)(3,4,-3,-4)", "--json"],
            schema,
        )
        assert doc["cycles"] == "(1,-2,-1,2)(3,4,-3,-4)"
        assert doc["window"] == [-2, 1, 4, -3]

    def test_closure_verb(self, capsys, schema):
        doc = run_json(capsys, ["closure", "G2", "-w", "s t s t", "--json"], schema)
        assert doc["reflen"] == 2
        assert doc["closure"]["type"] == "G2"
        assert doc["closure"]["parabolic"] is True

    def test_reds_verb(self, capsys, schema):
        doc = run_json(capsys, ["reds", "G2", "-w", "s t s t", "--json"], schema)
        assert doc["n_reds"] == 6 and doc["truncated"] is False

    def test_orbits_verb(self, capsys, schema, tmp_path):
        dot = tmp_path / "orbits.dot"
        doc = run_json(
            capsys,
            ["orbits", "G2", "-w", "s t s t", "--json", "--with-subgroups",
             "--dot", str(dot)],
            schema,
        )
        assert [o["size"] for o in doc["orbits"]] == [3, 3]
        assert all(o["subgroup"]["type"] == "A2" for o in doc["orbits"])
        text = dot.read_text()
        assert text.startswith("graph hurwitz {") and '"t' in text

    def test_cycledec_all_orbits(self, capsys, schema):
        doc = run_json(
            capsys, ["cycledec", "G2", "-w", "s t s t", "--all-orbits", "--json"],
            schema,
        )
        assert len(doc["entries"]) == 2
        assert doc["equal_factor_pairs"] == [[0, 1]]
        assert doc["closure_sets_distinct"] is True
        for entry in doc["entries"]:
            assert len(entry["decomposition"]["factors"]) == 1

    def test_cycledec_with_check(self, capsys, schema):
        doc = run_json(
            capsys, ["cycledec", "A3", "-w", "0 2", "--check", "--json"], schema
        )
        assert len(doc["factors"]) == 2
        assert doc["verification"]["passed"] is True

    def test_indec_verb(self, capsys, schema):
        doc = run_json(capsys, ["indec", "A3", "-w", "0 1", "--json"], schema)
        assert doc["indecomposable"] is True

    def test_perm_verb_type_a(self, capsys, schema):
        doc = run_json(capsys, ["perm", "A3", "-w", "0 1", "--json"], schema)
        assert doc["model"] == "permutation"
        assert doc["cycles"] == "(1,2,3)"


class TestVerifyVerb:
    def test_g2_suite_passes(self, capsys, schema):
        doc = run_json(capsys, ["verify", "g2-two-orbits", "--json"], schema)
        assert doc["passed"] is True
        assert len(doc["checks"]) == 7

    def test_text_output_has_pass_lines(self, capsys):
        assert cli.run(["verify", "g2-two-orbits"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") >= 7 and "FAIL" not in out

    def test_unknown_suite_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.run(["verify", "no-such-suite"])
        assert exc.value.code == 2


class TestDeterminismAndErrors:
    def test_identical_invocations_give_identical_bytes(self, capsys):
        def once():
            assert cli.run(
                ["cycledec", "B4", "-c", "(1,-2,-1,2)(3,4,-3,-4)",
                 "--all-orbits", "--json"]
            ) == 0
            return capsys.readouterr().out

        assert once() == once()

    def test_unknown_type_is_a_usage_error(self, capsys):
        assert cli.run(["info", "Q5"]) == 2
        assert "usage error" in capsys.readouterr().err

    def test_bad_word_is_a_usage_error(self, capsys):
        assert cli.run(["reflen", "A2", "-w", "0 bogus"]) == 2
        assert cli.run(["reflen", "A2", "-w", "5"]) == 2
        assert cli.run(["reflen", "A2"]) == 2  # no element given

    def test_cap_exceeded_is_a_domain_error(self, capsys):
        assert cli.run(["orbits", "G2", "-w", "s t s t", "--cap", "3"]) == 1
        assert "cap" in capsys.readouterr().err

    def test_environment_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("DUALCOX_CAP", "3")
        assert cli.run(["orbits", "G2", "-w", "s t s t"]) == 1
        capsys.readouterr()
        # an explicit flag wins over the environment
        monkeypatch.setenv("DUALCOX_CAP", "3")
        assert cli.run(["orbits", "G2", "-w", "s t s t", "--cap", "100"]) == 0

    def test_non_quasi_coxeter_is_a_domain_error(self, capsys):
        assert cli.run(["cycledec", "G2", "-w", "s t s t"]) == 1
        err = capsys.readouterr().err
        assert "quasi-Coxeter" in err

    def test_matrixless_model_is_a_domain_error(self, capsys):
        assert cli.run(["info", "I2(7)", "--roots"]) == 1

    def test_missing_verb_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.run([])
        assert exc.value.code == 2
