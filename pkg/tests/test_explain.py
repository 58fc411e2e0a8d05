"""Explanations on Peter's consultation: blame, thresholds, certainty, surprise and diagnosis."""

from decimal import Decimal

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from possibilist.engine import run_layers
from possibilist.errors import NotDerivedError, UnknownElementError, UnknownRuleError
from possibilist.explain import (
    certainty_view,
    diagnose_imprecision,
    explain_mainly,
    explain_negative,
    explain_positive,
    replay,
    row_blame,
    sensitivity,
    surprise,
    surprise_degree,
    trace_how,
)
from possibilist.explain.render import (
    render_blame,
    render_certainty,
    render_diagnosis,
    render_how,
    render_sensitivity,
    render_surprise,
    render_threshold,
)
from possibilist.models import Degree, FuzzySubset, PossibilityDistribution
from possibilist.models.degree import ONE, ZERO, degree_grid
from possibilist.models.explanation import Cause, ContributorKind, Verdict
from possibilist.models.rules import BeliefModel
from possibilist.models.system import Bound, Side
from possibilist.ruleio import parse_facts, parse_kb
from possibilist.solver import eval_minmax

CLASHING_KB = """
DOMAIN answer = yes, no
DOMAIN colour = red, blue
ATTRIBUTE a OF answer CLOSED
ATTRIBUTE b OF answer CLOSED
ATTRIBUTE colour OF colour CLOSED
TERM answer.yes = yes
TERM colour.red = red
TERM colour.blue = blue

RULE C1
  IF a IS yes
  THEN colour IS red
  WITH s = 1, r = 0.2
END

RULE C2
  IF b IS yes
  THEN colour IS blue
  WITH s = 1, r = 0.3
END
"""

FUZZY_KB = """
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

PLAIN_KB = """
DOMAIN answer = yes, no
DOMAIN letters = a, b
ATTRIBUTE x OF answer CLOSED
ATTRIBUTE z OF letters CLOSED
TERM answer.yes = yes
TERM letters.a = a

RULE Q1
  IF x IS yes
  THEN z IS a
END
"""

# Peter's profile plus a stated fact on the derived attribute.
CAPPED_PROFESSION = (
    "FACT profession = business_man=0.1, lawyer, doctor, professor, researcher, engineer, "
    "architect, others\n"
)

PROFESSIONS = (
    "business_man",
    "lawyer",
    "doctor",
    "professor",
    "researcher",
    "engineer",
    "architect",
    "others",
)

grid = st.sampled_from(degree_grid(11))


def d(text: str) -> Degree:
    return Degree.parse(text)


def consult_text(kb_text: str, facts_text: str):
    kb = parse_kb(kb_text).unwrap()
    return run_layers(kb, parse_facts(facts_text, kb).unwrap())


def entries(blame) -> list[tuple[str, Side, ContributorKind, str]]:
    return [(c.rule_id, c.side, c.kind, str(c.value)) for c in blame.contributors]


class TestMainly:
    def test_business_man(self, consultation, group):
        blame = explain_mainly(consultation, "profession", "business_man")
        assert blame.achieved == d("0.6")
        assert entries(blame) == [("R3", Side.RHO, ContributorKind.FACT, "0.6")]
        assert render_blame(blame, group) == (
            "profession = business_man is possible at the degree 0.6, mainly because it is "
            "somewhat certain (at the degree 0.4) that the person looks for job security "
            "and is fond of intellectual speculation"
        )

    def test_ties_are_blamed_on_both_sides(self, consultation):
        blame = explain_mainly(consultation, "profession", "researcher")
        assert entries(blame) == [
            ("R2", Side.LAMBDA, ContributorKind.FACT, "0.2"),
            ("R2", Side.LAMBDA, ContributorKind.RULE, "0.2"),
        ]
        assert blame.rules[0].parameter == "s"
        assert blame.rules[0].label == "s_R2"

    def test_rule_side_is_hidden_unless_asked(self, consultation, group):
        blame = explain_mainly(consultation, "profession", "researcher")
        plain = render_blame(blame, group)
        assert "still leaves its conclusion possible" not in plain
        assert "still leaves its conclusion possible" in render_blame(blame, group, True)

    def test_fully_possible_element_is_vacuous(self, consultation, group):
        blame = explain_mainly(consultation, "profession", "professor")
        assert blame.vacuous
        assert blame.contributors == ()
        assert render_blame(blame, group).endswith("no constraint binds")

    def test_row_blame_without_element(self, group):
        blame = row_blame(group, 4)
        assert blame.atom == ("others",)
        assert entries(blame) == [("R1", Side.RHO, ContributorKind.FACT, "0.5")]

    def test_unknown_element(self, consultation):
        with pytest.raises(UnknownElementError):
            explain_mainly(consultation, "profession", "astronaut")

    def test_attribute_without_rules(self, consultation):
        with pytest.raises(NotDerivedError):
            explain_mainly(consultation, "likes_meeting", "yes")


class TestThresholds:
    def test_why_not_at_least(self, consultation):
        explanation = explain_positive(consultation, "profession", "researcher", d("0.8"))
        assert explanation.verdict is Verdict.CONSTRAINED
        assert explanation.achieved == d("0.2")
        assert not explanation.currently_met
        (clause,) = explanation.clauses
        assert [item.symbolic for item in clause] == ["ρ_R1 ≥ 0.8", "λ_R2 ≥ 0.8"]
        assert [item.text for item in clause] == [
            "it should be possible at least at the degree 0.8 that the person does not like "
            "meeting people",
            "it should be possible at least at the degree 0.8 that the person is fond of "
            "creation/invention",
        ]
        rendered = render_threshold(explanation)
        assert rendered.startswith("profession = researcher is possible at the degree 0.2")
        assert "\n    and " in rendered

    def test_already_guaranteed(self, consultation):
        explanation = explain_positive(consultation, "profession", "professor", d("0.3"))
        assert explanation.verdict is Verdict.SATISFIED
        assert explanation.currently_met
        assert "whatever the facts" in render_threshold(explanation)

    def test_cannot_go_low_enough(self, consultation):
        explanation = explain_negative(consultation, "profession", "business_man", d("0.2"))
        assert explanation.verdict is Verdict.INFEASIBLE
        assert explanation.floor == d("0.3")
        assert explanation.clauses == ()
        assert "cannot go below 0.3" in render_threshold(explanation)

    def test_researcher_at_most(self, consultation):
        explanation = explain_negative(consultation, "profession", "researcher", d("0.2"))
        assert explanation.verdict is Verdict.CONSTRAINED
        assert explanation.currently_met
        clauses = [[(c.rule_id, c.side, c.bound) for c in clause] for clause in explanation.clauses]
        assert clauses == [[("R2", Side.LAMBDA, Bound.AT_MOST)]]

    def test_atom_is_reported(self, consultation):
        explanation = explain_negative(consultation, "profession", "lawyer", d("0.5"))
        assert explanation.atom == ("business_man", "lawyer", "doctor")


class TestCertainty:
    def test_professor(self, consultation, group):
        report = certainty_view(consultation, "profession", "professor")
        assert report.possibility == ONE
        assert report.necessity == d("0.4")
        assert [(c.members, str(c.degree)) for c in report.competitors] == [
            (("business_man", "lawyer", "doctor"), "0.6"),
            (("others",), "0.5"),
        ]
        assert report.competitors[0].blame.achieved == d("0.6")
        rendered = render_certainty(report, group)
        assert "certain at 0.4" in rendered
        assert "business_man, lawyer, doctor at 0.6" in rendered

    def test_stated_fact(self, consultation):
        report = certainty_view(consultation, "likes_meeting", "no")
        assert report.necessity == ZERO
        assert [(c.members, c.degree) for c in report.competitors] == [(("yes",), ONE)]
        assert report.competitors[0].blame is None
        assert "possible at 0.5, certain at 0" in render_certainty(report, None)

    def test_strongest_competitor_is_listed_when_certainty_is_high(self):
        consultation = consult_text(FUZZY_KB, "FACT x = yes, no=0.4\n")
        report = certainty_view(consultation, "z", "a")
        assert (report.possibility, report.necessity) == (ONE, d("0.5"))
        assert [(c.members, str(c.degree)) for c in report.competitors] == [(("b",), "0.5")]
        assert entries(report.competitors[0].blame) == [
            ("R1@1", Side.RHO, ContributorKind.RULE, "0.5")
        ]
        rendered = render_certainty(report, consultation.group("z"))
        assert rendered.splitlines()[2] == "    b at 0.5"

    @pytest.mark.parametrize("element", PROFESSIONS)
    def test_competitors_reach_one_minus_certainty(self, consultation, element):
        report = certainty_view(consultation, "profession", element)
        if report.necessity < ONE:
            strongest = max(c.degree for c in report.competitors)
            assert strongest == report.necessity.complement()


class TestSurprise:
    def test_expected_researcher(self, consultation, beliefs):
        report = surprise(consultation, "profession", beliefs)
        assert report.consistency == d("0.2")
        assert report.surprise == d("0.8")
        assert render_surprise(report) == (
            "profession: expected {researcher}; compatibility 0.2, surprise 0.8"
        )

    def test_no_belief_means_no_surprise(self, consultation):
        report = surprise(consultation, "profession", BeliefModel())
        assert report.surprise == ZERO

    def test_degree_alone(self, consultation):
        profession = consultation.distribution("profession")
        belief = FuzzySubset.crisp(profession.domain, ["professor"])
        assert surprise_degree(profession, belief) == ZERO


class TestDiagnosis:
    def test_input_uncertainty(self, consultation, group):
        diagnosis = diagnose_imprecision(consultation, "profession")
        assert diagnosis.causes == (Cause.INPUT_UNCERTAINTY,)
        assert [(e.rule_id, e.side, str(e.value)) for e in diagnosis.uncertain_inputs] == [
            ("R1", Side.RHO, "0.5"),
            ("R3", Side.RHO, "0.6"),
        ]
        assert diagnosis.conflict is None
        assert not diagnosis.ignorance
        assert diagnosis.cardinality == Decimal("3.9")
        assert diagnosis.specificity == Decimal("0.488")
        rendered = render_diagnosis(diagnosis, group)
        assert "cardinality 3.9, specificity 0.488" in rendered
        assert "combined with each other" in rendered

    def test_total_ignorance(self, kb):
        consultation = run_layers(kb, {})
        diagnosis = diagnose_imprecision(consultation, "profession")
        assert diagnosis.ignorance
        assert diagnosis.causes == (Cause.INPUT_UNCERTAINTY,)
        assert consultation.distribution("profession").height == ONE

    def test_conflict(self):
        kb = parse_kb(CLASHING_KB).unwrap()
        facts = parse_facts("FACT a = yes\nFACT b = yes\n", kb).unwrap()
        consultation = run_layers(kb, facts)
        colour = consultation.distribution("colour")
        assert [str(x) for x in colour.pi] == ["0.3", "0.2"]
        diagnosis = diagnose_imprecision(consultation, "colour")
        assert diagnosis.causes == (Cause.CONFLICT,)
        assert diagnosis.conflict.subnormality == d("0.7")
        assert diagnosis.conflict.clashing_rules == (("C1", "C2"),)
        assert diagnosis.conflict.pair_height == d("0.3")

    def test_unphrased_input_is_named_once(self):
        consultation = consult_text(PLAIN_KB, "FACT x = yes, no=0.4\n")
        diagnosis = diagnose_imprecision(consultation, "z")
        assert [(e.rule_id, e.side, str(e.value)) for e in diagnosis.uncertain_inputs] == [
            ("Q1", Side.RHO, "0.4")
        ]
        rendered = render_diagnosis(diagnosis, consultation.group("z"))
        assert "  uncertain input: ρ_Q1 = 0.4\n" in rendered


class TestSensitivity:
    def test_creativity_drives_researcher(self, consultation):
        report = sensitivity(consultation, "profession", "researcher", "R2", Side.LAMBDA)
        curve = report.curve
        assert (curve.floor, curve.ceiling) == (d("0.2"), d("0.5"))
        assert (curve.current_input, curve.current_output) == (d("0.2"), d("0.2"))
        rendered = render_sensitivity(report)
        assert rendered.splitlines()[0] == "profession = researcher = min(max(λ_R2, 0.2), 0.5)"

    def test_meeting_people_does_not_matter(self, consultation):
        report = sensitivity(consultation, "profession", "researcher", "R1", Side.RHO)
        assert report.curve.is_constant
        assert render_sensitivity(report) == "profession = researcher stays at 0.2 whatever ρ_R1 is"

    def test_unknown_rule(self, consultation):
        with pytest.raises(UnknownRuleError, match="R1, R2, R3"):
            sensitivity(consultation, "profession", "researcher", "R9", Side.RHO)

    def test_split_rule_answers_to_its_written_id(self):
        consultation = consult_text(FUZZY_KB, "FACT x = yes, no=0.4\n")
        report = sensitivity(consultation, "z", "b", "R1", Side.RHO)
        curve = report.curve
        assert curve.columns == (1, 3)
        assert (curve.floor, curve.ceiling) == (d("0.5"), ONE)
        assert (curve.current_input, curve.current_output) == (d("0.4"), d("0.5"))
        assert render_sensitivity(report).splitlines()[0] == "z = b = min(max(ρ_R1, 0.5), 1)"
        piece = sensitivity(consultation, "z", "b", "R1@1", Side.RHO)
        assert piece.curve.columns == (1,)

    def test_folded_partner_reads_the_opposite_side(self, consultation, group):
        report = sensitivity(consultation, "profession", "researcher", "R2'", Side.RHO)
        assert report.curve.columns == (group.matrix.column_index("R2", Side.LAMBDA),)
        assert report.curve.floor == d("0.2")


class TestHow:
    def test_tree_reads_every_fact(self, consultation):
        tree = trace_how(consultation, "profession")
        assert tree.layer == 0
        assert [node.attribute for node in tree.facts] == [
            "likes_meeting",
            "creativity",
            "job_security",
            "speculation",
        ]
        assert all(node.stated and node.upstream is None for node in tree.facts)
        assert tree.pruned == ()

    def test_replay_is_exact(self, consultation):
        tree = trace_how(consultation, "profession")
        assert replay(tree) == consultation.distribution("profession")

    def test_display_threshold_hides_steps_but_keeps_them(self, consultation):
        tree = trace_how(consultation, "profession", d("0.5"))
        assert tree.pruned == ("R1", "R3")
        assert replay(tree) == consultation.distribution("profession")
        rendered = render_how(tree)
        assert "rule R1: hidden (alpha=1, beta=0.5)" in rendered
        assert "rule R2 (s=0.2, r=0.4)" in rendered

    def test_leaf_attribute(self, consultation):
        tree = trace_how(consultation, "likes_meeting")
        assert tree.group is None
        assert replay(tree) == consultation.distribution("likes_meeting")
        assert render_how(tree).startswith("likes_meeting: stated fact")


class TestStatedConclusion:
    @pytest.fixture
    def capped(self, kb, facts_text):
        return run_layers(kb, parse_facts(facts_text + "\n" + CAPPED_PROFESSION, kb).unwrap())

    def test_blame_names_the_stated_fact(self, capped):
        blame = explain_mainly(capped, "profession", "business_man")
        assert blame.achieved == d("0.1") == capped.distribution("profession")["business_man"]
        assert [(c.kind, str(c.value)) for c in blame.contributors] == [
            (ContributorKind.STATED, "0.1")
        ]
        assert blame.contributors[0].label == "stated"
        assert render_blame(blame, capped.group("profession")) == (
            "profession = business_man is possible at the degree 0.1, mainly because the fact "
            "stated on profession only allows it at the degree 0.1"
        )

    def test_loose_fact_leaves_the_inputs_to_blame(self, capped):
        blame = explain_mainly(capped, "profession", "lawyer")
        assert entries(blame) == [("R3", Side.RHO, ContributorKind.FACT, "0.6")]

    def test_tie_with_the_inputs(self, kb, facts_text):
        tied = CAPPED_PROFESSION.replace("business_man=0.1", "business_man=0.6")
        consultation = run_layers(kb, parse_facts(facts_text + "\n" + tied, kb).unwrap())
        blame = explain_mainly(consultation, "profession", "business_man")
        assert entries(blame) == [
            (None, None, ContributorKind.STATED, "0.6"),
            ("R3", Side.RHO, ContributorKind.FACT, "0.6"),
        ]

    def test_at_least_above_the_cap_is_infeasible(self, capped):
        explanation = explain_positive(capped, "profession", "business_man", d("0.5"))
        assert explanation.verdict is Verdict.INFEASIBLE
        assert (explanation.achieved, explanation.cap) == (d("0.1"), d("0.1"))
        assert not explanation.currently_met
        assert explanation.clauses == ()
        assert render_threshold(explanation) == (
            "profession = business_man is possible at the degree 0.1; the fact stated on "
            "profession allows it at most at the degree 0.1 in any case"
        )

    def test_at_least_up_to_the_cap(self, capped):
        explanation = explain_positive(capped, "profession", "business_man", d("0.1"))
        assert explanation.verdict is Verdict.SATISFIED
        assert explanation.currently_met

    def test_at_most_above_the_cap_always_holds(self, capped):
        explanation = explain_negative(capped, "profession", "business_man", d("0.2"))
        assert explanation.verdict is Verdict.SATISFIED
        assert explanation.currently_met
        assert render_threshold(explanation).endswith(
            "the fact stated on profession keeps it at most at 0.1 whatever the other facts"
        )

    def test_sensitivity_is_capped(self, capped):
        report = sensitivity(capped, "profession", "business_man", "R3", Side.RHO)
        assert report.cap == d("0.1")
        assert report.curve.is_constant
        assert report.curve.current_output == d("0.1")
        assert render_sensitivity(report) == (
            "profession = business_man stays at 0.1 whatever ρ_R3 is\n"
            "  capped at 0.1 by the fact stated on profession"
        )

    def test_certainty_splits_an_atom_by_its_cap(self, capped):
        report = certainty_view(capped, "profession", "professor")
        assert report.necessity == d("0.4")
        assert [(c.members, str(c.degree)) for c in report.competitors] == [
            (("lawyer", "doctor"), "0.6"),
            (("others",), "0.5"),
        ]


class TestSoundness:
    @settings(
        max_examples=100, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture]
    )
    @given(st.sampled_from(PROFESSIONS), grid, st.sampled_from(list(Bound)), st.data())
    def test_threshold_constraints_are_exact_on_coupled_inputs(
        self, consultation, group, element, t, bound, data
    ):
        ask = explain_positive if bound is Bound.AT_LEAST else explain_negative
        explanation = ask(consultation, "profession", element, t)
        v = data.draw(st.lists(grid, min_size=6, max_size=6))
        for pair in group.input_vector.coupling:
            v[data.draw(st.sampled_from(pair))] = ONE
        b = eval_minmax(group.matrix.rows, v)[group.output.atom_of(element)]
        expected = b >= t if bound is Bound.AT_LEAST else b <= t
        assert explanation.constraint.satisfied_by(v) == expected

    @settings(
        max_examples=60, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture]
    )
    @given(
        st.lists(st.tuples(grid, st.booleans()), min_size=4, max_size=4),
        st.sampled_from(PROFESSIONS),
        grid,
    )
    def test_blame_reproduces_the_reported_degree(self, kb, answers, capped_element, cap):
        names = ("likes_meeting", "creativity", "job_security", "speculation")
        answer = kb.attributes["likes_meeting"].domain
        profession = kb.attributes["profession"].domain
        facts = {
            name: PossibilityDistribution.from_mapping(
                answer, {"yes": ONE, "no": x} if yes_sure else {"yes": x, "no": ONE}
            )
            for name, (x, yes_sure) in zip(names, answers)
        }
        stated = PossibilityDistribution.from_mapping(
            profession, {label: cap if label == capped_element else ONE for label in profession}
        )
        consultation = run_layers(kb, {**facts, "profession": stated})
        group = consultation.group("profession")
        v = group.input_vector.flatten()
        for element in PROFESSIONS:
            blame = explain_mainly(consultation, "profession", element)
            assert blame.achieved == consultation.distribution("profession")[element]
            if blame.vacuous:
                assert blame.achieved == ONE
                continue
            assert blame.contributors
            assert all(c.value == blame.achieved for c in blame.contributors)
            row = group.matrix.rows[group.output.atom_of(element)]
            terms = [max(entry, value) for entry, value in zip(row, v)]
            for c in blame.contributors:
                if c.kind is not ContributorKind.STATED:
                    assert terms[group.matrix.column_index(c.rule_id, c.side)] == blame.achieved
            assert min(*terms, stated[element]) == blame.achieved
            named = any(c.kind is ContributorKind.STATED for c in blame.contributors)
            assert named == (stated[element] == blame.achieved)
