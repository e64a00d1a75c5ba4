import pytest
from hypothesis import given, settings

from polarity.calculi import Sequent, check_lj, check_lk
from polarity.corpus import CorpusSpec, first_order_examples, generate
from polarity.prover import (
    SearchBudget, decide_classical_prop, decide_intuitionistic_prop, prove_lj, prove_lk,
)
from polarity.syntax import Atom, Not, parse_formula
from polarity.translations import goal_wrapper

from conftest import prop_formulas

F = parse_formula


class TestExamples:
    def test_lk(self):
        assert prove_lk(F("P | ~P")).status == "proved"
        assert prove_lk(F("P")).status == "refuted"
        assert prove_lk(F("((P -> Q) -> P) -> P")).status == "proved"

    def test_lj(self):
        assert prove_lj(F("P | ~P")).status == "refuted"
        assert prove_lj(F("~~(P | ~P)")).status == "proved"
        gg = goal_wrapper("gg", F("P | ~P"))
        assert gg == F("~(~~~P & ~~~~P)")
        assert prove_lj(gg).status == "proved"
        # with ~~~P in both conjuncts the goal collapses to ~~P
        assert prove_lj(F("~(~~~P & ~~~P)")).status == "refuted"

    def test_truth_table(self):
        assert decide_classical_prop(F("P -> P"))
        assert not decide_classical_prop(F("P & ~P"))
        assert decide_classical_prop(F("A & B -> A | B"))
        with pytest.raises(ValueError):
            decide_classical_prop(F("forall x. P(x)"))

    @pytest.mark.parametrize("text", [
        "((P -> Q) -> P) -> P", "~~P -> P", "(P -> Q) | (Q -> P)", "~(P & Q) -> ~P | ~Q",
    ])
    def test_intuitionistic_non_theorems(self, text):
        assert decide_classical_prop(F(text))
        assert prove_lj(F(text)).status == "refuted"

    @pytest.mark.parametrize("text", [
        "~~~P -> ~P", "~(P | Q) -> ~P & ~Q", "(P -> Q) -> ~Q -> ~P", "~~(~~P -> P)",
    ])
    def test_intuitionistic_theorems(self, text):
        r = prove_lj(F(text))
        assert r.proved and check_lj(r.proof).valid

    def test_sequent_input(self):
        r = prove_lk(Sequent((F("A"), F("A -> B")), (F("B"), F("C"))))
        assert r.proved and check_lk(r.proof).valid
        with pytest.raises(ValueError):
            prove_lj(Sequent((), (F("A"), F("B"))))

    def test_lj_with_hypotheses(self):
        assert decide_intuitionistic_prop([F("A"), F("A -> B")], F("B"))
        assert not decide_intuitionistic_prop([F("~~A")], F("A"))
        r = prove_lj(Sequent((F("A"), F("A -> B")), (F("B"),)))
        assert r.proved and r.proof.conclusion == Sequent((F("A"), F("A -> B")), (F("B"),))


class TestFirstOrder:
    def test_examples_proved_classically(self):
        for f in first_order_examples():
            r = prove_lk(f)
            assert r.proved, f
            assert check_lk(r.proof).valid

    def test_intuitionistic_first_order(self):
        r = prove_lj(F("(forall x. P(x)) -> P(a) & P(b)"))
        assert r.proved and check_lj(r.proof).valid

    def test_first_order_never_refuted(self):
        # the drinker formula is not intuitionistic; search gives up honestly
        r = prove_lj(F("exists x. (D(x) -> forall y. D(y))"), SearchBudget(max_depth=12))
        assert r.status == "unknown"

    def test_lk_unknown_on_small_budget(self):
        r = prove_lk(F("exists x. (D(x) -> forall y. D(y))"), SearchBudget(max_contractions_per_formula=0))
        assert r.status == "unknown"


class TestBudget:
    def test_negative_bounds_rejected(self):
        with pytest.raises(ValueError):
            SearchBudget(max_depth=-1)

    def test_monotone(self):
        # each budget dominates the previous one in every bound
        chain = [SearchBudget(4, 0, 0), SearchBudget(12, 1, 1), SearchBudget(60, 2, 1), SearchBudget(200, 3, 2)]
        formulas = generate(CorpusSpec(count=60, seed=5)) + first_order_examples()
        for f in formulas:
            seen_proof = False
            for b in chain:
                r = prove_lk(f, b)
                if seen_proof:
                    assert r.proved, (f, b)
                seen_proof = seen_proof or r.proved


class TestOracles:
    def test_lk_agrees_with_truth_table(self):
        for f in generate(CorpusSpec(count=1000, seed=1)):
            r = prove_lk(f)
            assert r.status != "unknown"
            assert r.proved == decide_classical_prop(f)
            if r.proved:
                assert check_lk(r.proof).valid

    def test_glivenko(self):
        for f in generate(CorpusSpec(count=150, seed=2)):
            lk = prove_lk(f)
            lj = prove_lj(Not(Not(f)))
            assert lk.proved == lj.proved
            if lj.proved:
                assert check_lj(lj.proof).valid
            lj_ku = prove_lj(goal_wrapper("ku", f))
            assert lj_ku.proved == lk.proved

    @settings(max_examples=150)
    @given(prop_formulas(8))
    def test_soundness(self, f):
        lk, lj = prove_lk(f), prove_lj(f)
        if lk.proved:
            assert check_lk(lk.proof).valid
        if lj.proved:
            assert check_lj(lj.proof).valid
            assert lk.proved
        assert lk.proved == decide_classical_prop(f)
        assert lj.proved == decide_intuitionistic_prop([], f)

    def test_atoms_alone(self):
        assert prove_lj(Atom("P")).status == "refuted"
