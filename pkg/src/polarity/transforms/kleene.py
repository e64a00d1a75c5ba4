"""Kleene inversion of the right rules for conjunction, implication and forall."""

from __future__ import annotations

from typing import Optional

from ..calculi import Handle, ProofNode, Rule, Sequent, formula_at, remove_one
from ..proofs import Fresh, node, proof_symbols, rename_constant, weaken
from ..syntax import (
    And, Const, Forall, Formula, Implies, alpha_equal, print_formula, substitute,
)
from .eta import expand_axiom

__all__ = ["kleene_invert", "invert_with_eigen", "InversionError"]

_RULE_FOR = {And: Rule.AND_R, Implies: Rule.IMP_R, Forall: Rule.FORALL_R}


class InversionError(ValueError):
    pass


def _targets(f: Formula, c: Optional[str]) -> list:
    """(added-left, added-right) per premise of the right rule on ``f``."""
    if isinstance(f, And):
        return [((), (f.left,)), ((), (f.right,))]
    if isinstance(f, Implies):
        return [((f.left,), (f.right,))]
    return [((), (substitute(f.body, f.var, Const(c)),))]


def _apply(seq: Sequent, f: Formula, add: tuple) -> Sequent:
    al, ar = add
    return Sequent(seq.left + al, remove_one(seq.right, f) + ar)


def invert_with_eigen(p: ProofNode, occ: Handle, fresh: Optional[Fresh] = None):
    """Like :func:`kleene_invert` but also return the eigen constant chosen for forall."""
    if occ.side != "right":
        raise InversionError("only right occurrences are invertible here")
    f = formula_at(p.conclusion, occ)
    if type(f) not in _RULE_FOR:
        raise InversionError(f"no inversion for head of {print_formula(f)}")
    if fresh is None:
        fresh = Fresh(proof_symbols(p))
    c = fresh.const() if isinstance(f, Forall) else None
    out = [_inv(p, f, i, add, c, fresh) for i, add in enumerate(_targets(f, c))]
    return out, c


def kleene_invert(p: ProofNode, occ: Handle, fresh: Optional[Fresh] = None) -> list:
    """Proofs of the premises of the right rule on the formula at ``occ``.

    For ``B&C`` two proofs (of ``B`` and of ``C`` in place of the
    occurrence), for ``B->C`` one proof with ``B`` moved left, for
    ``forall x.B`` one proof of ``B[c/x]`` with a fresh ``c``.
    """
    return invert_with_eigen(p, occ, fresh)[0]


def _principal(p: ProofNode) -> Optional[Formula]:
    return None if p.active is None else formula_at(p.conclusion, p.active)


def _inv(p: ProofNode, f: Formula, i: int, add: tuple, c: Optional[str], fresh: Fresh) -> ProofNode:
    seq = p.conclusion
    a = _principal(p)
    on_f = p.active.side == "right" and alpha_equal(a, f)
    target = _apply(seq, f, add)
    if on_f and p.rule is _RULE_FOR[type(f)]:
        if isinstance(f, And):
            return p.premises[i]
        if isinstance(f, Forall):
            return rename_constant(p.premises[0], p.eigen, c)
        return p.premises[0]
    if on_f and p.rule is Rule.WEAK_R:
        return weaken(p.premises[0], add[0], add[1], fresh)
    if on_f and p.rule is Rule.CONTR_R:
        once = _inv(p.premises[0], f, i, add, c, fresh)
        twice = _inv(once, f, i, add, c, fresh)
        cur = twice
        L, R = twice.conclusion.left, twice.conclusion.right
        for g in add[0]:
            L = remove_one(L, g)
            cur = node(Rule.CONTR_L, Sequent(L, R), [cur], "left", g)
        for g in add[1]:
            R = remove_one(R, g)
            cur = node(Rule.CONTR_R, Sequent(L, R), [cur], "right", g)
        return cur
    if p.rule is Rule.AX:
        if alpha_equal(a, f):
            return _inv(expand_axiom(seq, f, fresh), f, i, add, c, fresh)
        return node(Rule.AX, target, (), p.active.side, a)
    prem = tuple(_inv(q, f, i, add, c, fresh) for q in p.premises)
    return node(p.rule, target, prem, p.active.side, a, p.witness, p.eigen)
