import json
import random

import pytest

from polarity import proofio
from polarity.calculi import (
    STOUP, FocusedSequent, Handle, ProofNode, Rule, Sequent, check_lj, check_lk, check_lkf,
    end_sequent, height, iter_nodes,
)
from polarity.proofs import lj_as_lk, proof_symbols, rename_constant
from polarity.prover import prove_lj
from polarity.syntax import And, Atom, Const, Exists, Forall, Not, Or, Var, parse_formula
from polarity.translations import goal_wrapper

P, Q, A, B = (Atom(n) for n in "PQAB")
L0, R0 = Handle("left", 0), Handle("right", 0)


def ax(left, right, h=R0):
    return ProofNode(Rule.AX, Sequent(left, right), (), h)


def fax(left, right):
    return ProofNode(Rule.AX, FocusedSequent(left, None, right), (), R0)


class TestLK:
    def test_atomic_axiom(self):
        assert check_lk(ax((P,), (P,))).valid

    def test_compound_axiom_allowed(self):
        ab = And(A, B)
        assert check_lk(ax((Q, ab), (ab, P), Handle("right", 0))).valid

    def test_eigen_clash(self):
        px = Atom("P", (Var("x"),))
        pc = Atom("P", (Const("c"),))
        leaf = ax((pc,), (pc,))
        bad = ProofNode(Rule.FORALL_R, Sequent((pc,), (Forall("x", px),)), (leaf,), R0, None, "c")
        report = check_lk(bad)
        assert not report.valid and "eigenvariable" in str(report)

    def test_missing_axiom_partner(self):
        assert not check_lk(ax((Q,), (P,))).valid

    def test_wrong_arity(self):
        leaf = ax((A,), (A,))
        p = ProofNode(Rule.AND_R, Sequent((A,), (And(A, A),)), (leaf,), R0)
        assert "premise" in str(check_lk(p))

    def test_or_r1_is_not_lk(self):
        p = ProofNode(Rule.OR_R1, Sequent((A,), (Or(A, B),)), (ax((A,), (A,)),), R0)
        assert not check_lk(p).valid


class TestLJ:
    def test_or_r1(self):
        p = ProofNode(Rule.OR_R1, Sequent((A,), (Or(A, B),)), (ax((A,), (A,)),), R0)
        assert check_lj(p).valid

    def test_contr_r_rejected(self):
        p = ProofNode(Rule.CONTR_R, Sequent((A,), (A,)), (ax((A,), (A, A)),), R0)
        assert not check_lj(p).valid

    def test_not_r(self):
        leaf = ProofNode(Rule.NOT_L, Sequent((A, Not(A)), ()), (ax((A,), (A,)),), Handle("left", 1))
        p = ProofNode(Rule.NOT_R, Sequent((A,), (Not(Not(A)),)), (leaf,), R0)
        assert check_lj(p).valid

    def test_two_conclusions_rejected(self):
        assert not check_lj(ax((A,), (A, B))).valid

    def test_lj_proofs_embed_into_lk(self):
        for text in ["~~(P | ~P)", "(A -> B) -> ~B -> ~A", "A & B -> A | B", "~~~A -> ~A"]:
            r = prove_lj(parse_formula(text))
            assert r.proved and check_lj(r.proof).valid
            assert check_lk(lj_as_lk(r.proof)).valid

    def test_gg_image_embeds(self):
        r = prove_lj(goal_wrapper("gg", parse_formula("P | ~P")))
        assert check_lk(lj_as_lk(r.proof)).valid


class TestLKF:
    def test_release_on_conjunction_rejected(self):
        ab = And(A, B)
        inner = ProofNode(Rule.AX, FocusedSequent((ab,), None, (ab,)), (), R0)
        p = ProofNode(Rule.RELEASE, FocusedSequent((ab,), ab, ()), (inner,), STOUP)
        assert not check_lkf(p).valid

    def test_focus_on_exists_rejected(self):
        ex = Exists("x", Atom("P", (Var("x"),)))
        inner = ProofNode(Rule.WEAK_R, FocusedSequent((), ex, ()), (fax((), ()),), STOUP)
        p = ProofNode(Rule.FOCUS, FocusedSequent((), None, (ex,)), (inner,), R0)
        assert not check_lkf(p).valid

    def test_compound_axiom_rejected(self):
        ab = And(A, B)
        assert not check_lkf(fax((ab,), (ab,))).valid
        assert check_lkf(fax((P,), (P,))).valid

    def test_release_atom(self):
        p = ProofNode(Rule.RELEASE, FocusedSequent((P,), P, ()), (fax((P,), (P,)),), STOUP)
        assert check_lkf(p).valid

    def test_plain_sequent_rejected(self):
        assert not check_lkf(ax((P,), (P,))).valid


class TestShape:
    def test_height(self):
        leaf = ax((P,), (P,))
        assert height(leaf) == 1
        a = ProofNode(Rule.AND_R, Sequent((P,), (And(P, P),)), (leaf, leaf), R0)
        assert height(a) == 2
        chain = leaf
        for _ in range(3):
            s = chain.conclusion
            chain = ProofNode(Rule.WEAK_L, Sequent(s.left + (Q,), s.right), (chain,), Handle("left", len(s.left)))
        assert height(chain) == 4

    def test_end_sequent(self):
        leaf = ax((P,), (P,))
        assert end_sequent(leaf) == Sequent((P,), (P,))
        f = fax((P,), (P,))
        assert end_sequent(f) == FocusedSequent((P,), None, (P,))


def _shuffle_contexts(p: ProofNode, rng: random.Random) -> ProofNode:
    """Permute the root's left multiset, moving the active handle along."""
    s = p.conclusion
    if p.active is None or p.active.side != "left" or len(s.left) < 2:
        return p
    idx = list(range(len(s.left)))
    rng.shuffle(idx)
    left = tuple(s.left[i] for i in idx)
    h = Handle("left", idx.index(p.active.index))
    return ProofNode(p.rule, Sequent(left, s.right), p.premises, h, p.witness, p.eigen)


class TestProperties:
    def test_deterministic(self, lk_proofs):
        for p in lk_proofs[:20]:
            assert check_lk(p) == check_lk(p)

    def test_context_permutation_keeps_validity(self, lk_proofs):
        rng = random.Random(0)
        for p in lk_proofs:
            q = _shuffle_contexts(p, rng)
            assert check_lk(q).valid == check_lk(p).valid

    def test_eigen_renaming(self, lk_proofs):
        checked = 0
        for p in lk_proofs:
            eigens = {n.eigen for n in iter_nodes(p) if n.eigen}
            used = proof_symbols(p)
            for e in eigens:
                fresh = e + "_r"
                assert fresh not in used
                assert check_lk(rename_constant(p, e, fresh)).valid
                checked += 1
        assert checked > 0


class TestJson:
    def test_roundtrip(self, lk_proofs):
        for p in lk_proofs[:30]:
            q = proofio.loads(proofio.dumps(p))
            assert q == p

    def test_focused_roundtrip(self):
        p = ProofNode(Rule.RELEASE, FocusedSequent((P,), P, ()), (fax((P,), (P,)),), STOUP)
        text = proofio.dumps(p)
        assert json.loads(text)["active"] == "stoup"
        assert proofio.loads(text) == p

    @pytest.mark.parametrize("text", [
        "{", "[]", '{"rule": "cut", "conclusion": {}}', '{"rule": "ax"}',
        '{"rule": "ax", "conclusion": {"left": ["P &"], "right": []}}',
        '{"rule": "ax", "conclusion": {"left": [], "right": []}, "active": {"side": "up"}}',
    ])
    def test_malformed(self, text):
        with pytest.raises(proofio.MalformedProof):
            proofio.loads(text)
