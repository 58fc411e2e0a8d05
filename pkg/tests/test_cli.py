"""Command line: consultations, explanation verbs, structured output, replay and exit codes."""

import json
from pathlib import Path

import pytest

from possibilist.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, main

pytestmark = pytest.mark.usefixtures("fresh_settings")

LETTERS_KB = """\
DOMAIN answer = yes, no
DOMAIN letters = a, b
ATTRIBUTE x OF answer CLOSED
ATTRIBUTE z OF letters CLOSED
TERM answer.yes = yes
TERM letters.mostly_a = a, b=0.5
RULE R1
  IF x IS yes
  THEN z IS mostly_a
END
"""

CAPPED = (
    "FACT profession = business_man=0.1, lawyer, doctor, professor, researcher, engineer, "
    "architect, others\n"
)


@pytest.fixture
def run(capsys, paths):
    """Run the command line on the shipped example; returns (exit code, stdout, stderr)."""

    def _run(*argv: str, kb: bool = True, facts: bool = True):
        args = list(argv)
        if kb:
            args += ["--kb", paths["kb"]]
        if facts:
            args += ["--facts", paths["facts"]]
        code = main(args)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


class TestConsult:
    def test_human_output(self, run):
        code, out, _ = run("consult")
        assert code == EXIT_OK
        assert out.startswith("profession:\n")
        assert "  business_man  0.6" in out
        assert "  others        0.5" in out

    def test_structured_output_is_deterministic(self, run):
        _, first, _ = run("consult", "--format", "structured")
        _, second, _ = run("consult", "--format", "structured")
        assert first == second
        document = json.loads(first)
        profession = document["attributes"]["profession"]
        assert profession["distribution"]["professor"] == "1"
        assert profession["height"] == "1"
        assert profession["layer"] == 0

    def test_atom_tables(self, run):
        code, out, _ = run("consult", "--atoms", "--format", "structured")
        assert code == EXIT_OK
        profession = json.loads(out)["attributes"]["profession"]
        assert [atom["degree"] for atom in profession["atoms"]] == ["0.6", "1", "0.2", "0.2", "0.5"]
        assert profession["inputs"]["columns"] == ["λ_R1", "ρ_R1", "λ_R2", "ρ_R2", "λ_R3", "ρ_R3"]
        assert profession["inputs"]["solution"]["solvable"] is True

    def test_atoms_in_human_output(self, run):
        _, out, _ = run("consult", "--atoms")
        assert "atoms of profession:" in out
        assert "{researcher}  0.2" in out

    def test_without_facts_everything_stays_possible(self, run):
        _, out, _ = run("consult", "--format", "structured", facts=False)
        distribution = json.loads(out)["attributes"]["profession"]["distribution"]
        assert set(distribution.values()) == {"1"}

    def test_output_file(self, run, tmp_path):
        target = tmp_path / "consultation.json"
        code, out, _ = run("consult", "--output", str(target))
        assert code == EXIT_OK
        assert out.startswith("profession:")
        assert "trace" in json.loads(target.read_text(encoding="utf-8"))


class TestExplain:
    def test_mainly_with_bare_element(self, run):
        code, out, _ = run("explain", "mainly", "business_man")
        assert code == EXIT_OK
        assert "somewhat certain (at the degree 0.4)" in out

    def test_why_at_least(self, run):
        _, out, _ = run("explain", "why-at-least", "profession=researcher", "0.8")
        assert "the person does not like meeting people" in out
        assert "the person is fond of creation/invention" in out

    def test_threshold_option(self, run):
        _, positional, _ = run("explain", "why-at-most", "business_man", "0.2")
        _, option, _ = run("explain", "why-at-most", "business_man", "--threshold", "0.2")
        assert positional == option
        assert "cannot go below 0.3" in positional

    def test_structured_query_document(self, run):
        _, out, _ = run("explain", "certainty", "professor", "--format", "structured")
        document = json.loads(out)
        assert document["query"]["kind"] == "certainty"
        assert document["query"]["attribute"] == "profession"
        assert "kb_path" not in document["query"]
        assert document["report"]["necessity"] == "0.4"

    def test_how(self, run):
        _, out, _ = run("explain", "how", "profession")
        assert out.startswith("profession (layer 0)")
        assert "fact likes_meeting (stated): yes=1, no=0.5" in out

    def test_diagnose(self, run):
        _, out, _ = run("explain", "diagnose", "profession")
        assert "cardinality 3.9, specificity 0.488" in out

    def test_surprise(self, run, paths):
        code, out, _ = run("explain", "surprise", "profession", "--belief", paths["belief"])
        assert code == EXIT_OK
        assert "surprise 0.8" in out

    def test_surprise_needs_beliefs(self, run):
        code, _, err = run("explain", "surprise", "profession")
        assert code == EXIT_FAILURE
        assert "belief" in err

    def test_with_rules(self, run):
        _, plain, _ = run("explain", "mainly", "researcher")
        _, detailed, _ = run("explain", "mainly", "researcher", "--with-rules")
        assert "rule R2 still leaves" not in plain
        assert "rule R2 still leaves" in detailed

    def test_sensitivity(self, run):
        code, out, _ = run("sensitivity", "researcher", "--rule", "R2", "--side", "lambda")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "profession = researcher = min(max(λ_R2, 0.2), 0.5)"

    def test_sensitivity_by_the_written_id_of_a_fuzzy_rule(self, run, tmp_path):
        kb = tmp_path / "letters.kb"
        kb.write_text(LETTERS_KB, encoding="utf-8")
        facts = tmp_path / "letters.facts"
        facts.write_text("FACT x = yes, no=0.4\n", encoding="utf-8")
        args = ["sensitivity", "z=b", "--rule", "R1", "--side", "rho"]
        code, out, _ = run(*args, "--kb", str(kb), "--facts", str(facts), kb=False, facts=False)
        assert code == EXIT_OK
        assert out.splitlines()[0] == "z = b = min(max(ρ_R1, 0.5), 1)"

    def test_stated_conclusion_is_explained(self, run, paths, tmp_path):
        facts = tmp_path / "capped.facts"
        profile = Path(paths["facts"]).read_text(encoding="utf-8")
        facts.write_text(profile + "\n" + CAPPED, encoding="utf-8")
        code, out, _ = run("explain", "mainly", "business_man", "--facts", str(facts), facts=False)
        assert code == EXIT_OK
        assert (
            "possible at the degree 0.1, mainly because the fact stated on profession only allows "
            "it at the degree 0.1"
        ) in out


class TestReplay:
    def test_replay_gives_the_same_answers(self, run, tmp_path):
        saved = tmp_path / "run.json"
        run("consult", "--format", "structured", "--output", str(saved))
        queries = [
            ("explain", "mainly", "business_man", "--format", "structured"),
            ("explain", "why-at-least", "researcher", "0.8", "--format", "structured"),
            ("explain", "how", "profession", "--format", "structured"),
        ]
        for query in queries:
            _, direct, _ = run(*query)
            code, replayed, _ = run(*query, "--replay", str(saved), kb=False, facts=False)
            assert code == EXIT_OK
            assert replayed == direct

    def test_replay_with_beliefs(self, run, paths, tmp_path):
        saved = tmp_path / "run.json"
        run("consult", "--format", "structured", "--output", str(saved))
        _, out, _ = run(
            "explain",
            "surprise",
            "profession",
            "--replay",
            str(saved),
            "--belief",
            paths["belief"],
            kb=False,
            facts=False,
        )
        assert "surprise 0.8" in out

    def test_corrupt_replay(self, run, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text("{not json", encoding="utf-8")
        code, _, err = run("consult", "--replay", str(broken), kb=False, facts=False)
        assert code == EXIT_FAILURE
        assert "cannot replay" in err


class TestExitCodes:
    def test_missing_threshold_is_a_usage_error(self, run):
        code, _, err = run("explain", "why-at-least", "researcher")
        assert code == EXIT_USAGE
        assert "threshold" in err

    def test_bad_degree_is_a_usage_error(self, run):
        code, _, _ = run("explain", "why-at-least", "researcher", "1.5")
        assert code == EXIT_USAGE

    def test_no_knowledge_base(self, run):
        code, _, err = run("consult", kb=False, facts=False)
        assert code == EXIT_USAGE
        assert "--kb" in err

    def test_unknown_target(self, run):
        code, _, err = run("explain", "mainly", "astronaut")
        assert code == EXIT_FAILURE
        assert "astronaut" in err

    def test_unknown_rule(self, run):
        code, _, _ = run("sensitivity", "researcher", "--rule", "R7", "--side", "rho")
        assert code == EXIT_FAILURE

    def test_missing_file(self, run, tmp_path):
        code, _, err = main_with(run, "consult", "--kb", str(tmp_path / "absent.kb"))
        assert code == EXIT_FAILURE
        assert "E501" in err

    def test_invalid_knowledge_base(self, run, tmp_path):
        broken = tmp_path / "broken.kb"
        broken.write_text("DOMAIN answer = yes\nDOMAIN answer = no\n", encoding="utf-8")
        code, _, err = main_with(run, "consult", "--kb", str(broken))
        assert code == EXIT_FAILURE
        assert f"{broken}:2:8: E205" in err

    def test_unknown_command(self, run):
        code, _, _ = run("explode", kb=False, facts=False)
        assert code == EXIT_USAGE


def main_with(run, *argv):
    return run(*argv, kb=False, facts=False)


def test_parser_reads_explain_verbs():
    parser = build_parser()
    args = parser.parse_args(["explain", "diagnose", "profession", "--kb", "x.kb"])
    assert (args.command, args.verb, args.target) == ("explain", "diagnose", "profession")
