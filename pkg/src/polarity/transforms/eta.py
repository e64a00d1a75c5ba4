"""Eta-expansion: push every axiom down to an atomic ``P |- P``."""

from __future__ import annotations

from typing import Optional

from ..calculi import ProofNode, Rule, Sequent, formula_at, remove_one
from ..proofs import Fresh, node, proof_symbols, weak_chain
from ..syntax import (
    And, Const, Exists, Forall, Formula, Implies, Not, Or, is_atomic, substitute,
)

__all__ = ["eta_expand", "expand_axiom", "is_eta_expanded", "eta_expand_lj"]


def _inst(f, c: str) -> Formula:
    return substitute(f.body, f.var, Const(c))


def expand_axiom(seq: Sequent, a: Formula, fresh: Fresh) -> ProofNode:
    """LK proof of ``seq`` (which holds ``a`` on both sides) with atomic, context-free axioms."""
    L, R = seq.left, seq.right
    if is_atomic(a):
        top = node(Rule.AX, Sequent((a,), (a,)), (), "right", a)
        return weak_chain(top, seq)
    cl, cr = remove_one(L, a), remove_one(R, a)
    if isinstance(a, And):
        s1 = Sequent(cl + (a.left, a.right), R)
        c1 = Sequent(s1.left, cr + (a.left,))
        c2 = Sequent(s1.left, cr + (a.right,))
        mid = node(Rule.AND_R, s1, [expand_axiom(c1, a.left, fresh),
                                    expand_axiom(c2, a.right, fresh)], "right", a)
        return node(Rule.AND_L, seq, [mid], "left", a)
    if isinstance(a, Or):
        s1 = Sequent(L, cr + (a.left, a.right))
        c1 = Sequent(cl + (a.left,), s1.right)
        c2 = Sequent(cl + (a.right,), s1.right)
        mid = node(Rule.OR_L, s1, [expand_axiom(c1, a.left, fresh),
                                   expand_axiom(c2, a.right, fresh)], "left", a)
        return node(Rule.OR_R, seq, [mid], "right", a)
    if isinstance(a, Implies):
        s1 = Sequent(L + (a.left,), cr + (a.right,))
        ctx = remove_one(s1.left, a)
        c1 = Sequent(ctx, s1.right + (a.left,))
        c2 = Sequent(ctx + (a.right,), s1.right)
        mid = node(Rule.IMP_L, s1, [expand_axiom(c1, a.left, fresh),
                                    expand_axiom(c2, a.right, fresh)], "left", a)
        return node(Rule.IMP_R, seq, [mid], "right", a)
    if isinstance(a, Not):
        s1 = Sequent(L + (a.body,), cr)
        c1 = Sequent(remove_one(s1.left, a), cr + (a.body,))
        mid = node(Rule.NOT_L, s1, [expand_axiom(c1, a.body, fresh)], "left", a)
        return node(Rule.NOT_R, seq, [mid], "right", a)
    c = fresh.const()
    b = _inst(a, c)
    if isinstance(a, Forall):
        s1 = Sequent(L, cr + (b,))
        c1 = Sequent(cl + (b,), s1.right)
        mid = node(Rule.FORALL_L, s1, [expand_axiom(c1, b, fresh)], "left", a, witness=Const(c))
        return node(Rule.FORALL_R, seq, [mid], "right", a, eigen=c)
    assert isinstance(a, Exists)
    s1 = Sequent(cl + (b,), R)
    c1 = Sequent(s1.left, cr + (b,))
    mid = node(Rule.EXISTS_R, s1, [expand_axiom(c1, b, fresh)], "right", a, witness=Const(c))
    return node(Rule.EXISTS_L, seq, [mid], "left", a, eigen=c)


def _ax_formula(p: ProofNode) -> Formula:
    return formula_at(p.conclusion, p.active)


def eta_expand(p: ProofNode, fresh: Optional[Fresh] = None) -> ProofNode:
    """Rewrite every LK axiom as an atomic ``P |- P`` plus explicit weakenings.

    Weakenings of compound formulas are kept as they are.  The end sequent
    is unchanged.
    """
    if fresh is None:
        fresh = Fresh(proof_symbols(p))
    return _eta(p, fresh)


def _eta(p: ProofNode, fresh: Fresh) -> ProofNode:
    if p.rule is Rule.AX:
        a = _ax_formula(p)
        if is_atomic(a) and len(p.conclusion.left) == 1 and len(p.conclusion.right) == 1:
            return p
        return expand_axiom(p.conclusion, a, fresh)
    prem = tuple(_eta(q, fresh) for q in p.premises)
    if all(a is b for a, b in zip(prem, p.premises)):
        return p
    return ProofNode(p.rule, p.conclusion, prem, p.active, p.witness, p.eigen)


def is_eta_expanded(p: ProofNode) -> bool:
    """Every axiom is ``P |- P`` on an atom with no context."""
    if p.rule is Rule.AX:
        s = p.conclusion
        return len(s.left) == 1 and len(s.right) == 1 and is_atomic(s.left[0])
    return all(is_eta_expanded(q) for q in p.premises)


# --------------------------------------------------------------------------
# intuitionistic variant (context is kept, only the axiom formula is split)


def _lj_axiom(seq: Sequent, a: Formula, fresh: Fresh) -> ProofNode:
    L = seq.left
    if is_atomic(a):
        return node(Rule.AX, seq, (), "right", a)
    cl = remove_one(L, a)
    if isinstance(a, And):
        s1 = Sequent(cl + (a.left, a.right), (a,))
        mid = node(Rule.AND_R, s1, [_lj_axiom(Sequent(s1.left, (a.left,)), a.left, fresh),
                                    _lj_axiom(Sequent(s1.left, (a.right,)), a.right, fresh)],
                   "right", a)
        return node(Rule.AND_L, seq, [mid], "left", a)
    if isinstance(a, Or):
        b1 = node(Rule.OR_R1, Sequent(cl + (a.left,), (a,)),
                  [_lj_axiom(Sequent(cl + (a.left,), (a.left,)), a.left, fresh)], "right", a)
        b2 = node(Rule.OR_R2, Sequent(cl + (a.right,), (a,)),
                  [_lj_axiom(Sequent(cl + (a.right,), (a.right,)), a.right, fresh)], "right", a)
        return node(Rule.OR_L, seq, [b1, b2], "left", a)
    if isinstance(a, Implies):
        s1 = Sequent(L + (a.left,), (a.right,))
        ctx = remove_one(s1.left, a)
        mid = node(Rule.IMP_L, s1, [_lj_axiom(Sequent(ctx, (a.left,)), a.left, fresh),
                                    _lj_axiom(Sequent(ctx + (a.right,), (a.right,)), a.right, fresh)],
                   "left", a)
        return node(Rule.IMP_R, seq, [mid], "right", a)
    if isinstance(a, Not):
        s1 = Sequent(L + (a.body,), ())
        ctx = remove_one(s1.left, a)
        mid = node(Rule.NOT_L, s1, [_lj_axiom(Sequent(ctx, (a.body,)), a.body, fresh)], "left", a)
        return node(Rule.NOT_R, seq, [mid], "right", a)
    c = fresh.const()
    b = _inst(a, c)
    if isinstance(a, Forall):
        s1 = Sequent(L, (b,))
        mid = node(Rule.FORALL_L, s1, [_lj_axiom(Sequent(cl + (b,), (b,)), b, fresh)],
                   "left", a, witness=Const(c))
        return node(Rule.FORALL_R, seq, [mid], "right", a, eigen=c)
    s1 = Sequent(cl + (b,), (a,))
    mid = node(Rule.EXISTS_R, s1, [_lj_axiom(Sequent(s1.left, (b,)), b, fresh)],
               "right", a, witness=Const(c))
    return node(Rule.EXISTS_L, seq, [mid], "left", a, eigen=c)


def eta_expand_lj(p: ProofNode, fresh: Optional[Fresh] = None) -> ProofNode:
    """Split every LJ axiom down to atomic axioms, keeping contexts."""
    if fresh is None:
        fresh = Fresh(proof_symbols(p))

    def go(q: ProofNode) -> ProofNode:
        if q.rule is Rule.AX:
            a = _ax_formula(q)
            return q if is_atomic(a) else _lj_axiom(q.conclusion, a, fresh)
        return ProofNode(q.rule, q.conclusion, tuple(go(r) for r in q.premises),
                         q.active, q.witness, q.eigen)

    return go(p)
