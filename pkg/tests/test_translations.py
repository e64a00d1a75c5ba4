import pytest
from hypothesis import given

from polarity.syntax import (
    And, Atom, Exists, Forall, Implies, Not, Or, Var, antinegate, parse_formula, size,
)
from polarity.translations import Scheme, goal_wrapper, lift_sequent, translate, untranslate

from conftest import fo_formulas, prop_formulas

A, B, P, Q, R = (Atom(n) for n in "ABPQR")
Px = Atom("P", (Var("x"),))


def nn(f):
    return Not(Not(f))


class TestTranslate:
    def test_kolmogorov_disjunction(self):
        assert translate("ko", Or(A, B)) == nn(Or(nn(A), nn(B)))

    def test_gg_negative_disjunction(self):
        assert translate("n", Or(A, B)) == Not(And(Not(nn(A)), Not(nn(B))))

    def test_gg_positive_atom(self):
        assert translate("p", P) == P

    def test_k_neg_exists(self):
        assert translate("k-", Exists("x", Px)) == Exists("x", nn(Px))

    def test_kuroda_forall(self):
        assert translate("ku", Forall("x", Px)) == Forall("x", nn(Px))

    def test_krivine_conjunction(self):
        assert translate("kr", And(A, B)) == Or(Not(A), Not(B))

    def test_krivine_forall_reads_as_exists(self):
        assert translate("kr", Forall("x", Px)) == Exists("x", Not(Px))

    def test_unknown_scheme(self):
        with pytest.raises(ValueError, match="unknown scheme"):
            translate("xx", A)

    def test_scheme_names(self):
        assert [s.value for s in Scheme] == ["ko", "gg", "ku", "kr", "k+", "k-", "p", "n"]


class TestGoalWrapper:
    def test_examples(self):
        assert goal_wrapper("ku", P) == nn(P)
        assert goal_wrapper("gg", P) == nn(P)
        assert goal_wrapper("kr", P) == nn(P)

    def test_polarized_halves_have_no_goal_form(self):
        with pytest.raises(ValueError):
            goal_wrapper("k+", P)


class TestLift:
    def test_gg_with_stoup(self):
        s = lift_sequent("gg-polarized", [P], [], stoup=P)
        assert s.left == (P,) and s.right == (nn(P),)

    def test_gg_disjunction_on_the_right(self):
        s = lift_sequent("gg-polarized", [], [Or(Q, R)])
        assert s.left == (And(Not(nn(Q)), Not(nn(R))),) and s.right == ()
        assert s.left[0] == antinegate(translate("n", Or(Q, R)))

    def test_kolmogorov(self):
        s = lift_sequent("kolmogorov-polarized", [], [P])
        assert s.left == (Not(P),) and s.right == ()

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            lift_sequent("sideways", [], [])


class TestProperties:
    @given(fo_formulas())
    def test_gg_negative_head_is_never_or_exists(self, f):
        assert not isinstance(translate("n", f), (Or, Exists))

    @given(fo_formulas())
    def test_polarized_duality(self, f):
        assert translate("k+", Not(f)) == Not(translate("k-", f))
        assert translate("k-", Not(f)) == Not(translate("k+", f))
        assert translate("p", Not(f)) == Not(translate("n", f))
        assert translate("n", Not(f)) == Not(translate("p", f))

    @given(fo_formulas())
    def test_size_bound(self, f):
        for s in Scheme:
            assert size(translate(s, f)) <= 5 * size(f)

    @given(prop_formulas())
    def test_kuroda_is_identity_without_quantifiers(self, f):
        assert translate("ku", f) == f

    def test_positive_gg_fixes_conjunctive_formulas(self):
        f = parse_formula("forall x. P(x) & (Q & forall y. R(y))")
        assert translate("p", f) == f

    @given(fo_formulas())
    def test_untranslate_recovers_the_source(self, f):
        for s in ("k+", "k-", "p", "n"):
            assert f in untranslate(s, translate(s, f))
