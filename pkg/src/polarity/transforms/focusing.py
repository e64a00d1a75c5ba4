"""Focusing an LK proof into LKF and erasing the focus again."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..calculi import (
    FocusedSequent, Handle, ProofNode, Rule, Sequent, formula_at, remove_one,
)
from ..proofs import Fresh, node, proof_symbols, weaken
from ..syntax import And, Const, Formula, Implies, alpha_equal, is_atomic, substitute
from ..translations import releasable
from .eta import expand_axiom
from .kleene import invert_with_eigen

__all__ = ["StoupChoice", "focus", "unfocus"]

_LEFT = {Rule.AND_L, Rule.OR_L, Rule.EXISTS_L, Rule.FORALL_L, Rule.CONTR_L, Rule.WEAK_L}
_DIRECT_RIGHT = {Rule.OR_R, Rule.EXISTS_R, Rule.NOT_R, Rule.CONTR_R}
_ASYNC_RIGHT = {Rule.AND_R, Rule.IMP_R, Rule.FORALL_R}


@dataclass(frozen=True)
class StoupChoice:
    """At most one right occurrence of the end sequent placed in the stoup."""

    index: Optional[int] = None

    @classmethod
    def empty(cls) -> "StoupChoice":
        return cls(None)

    def formula(self, seq: Sequent) -> Optional[Formula]:
        if self.index is None:
            return None
        if not 0 <= self.index < len(seq.right):
            raise IndexError(f"stoup choice {self.index} outside the right multiset")
        return seq.right[self.index]


def focus(p: ProofNode, choice: StoupChoice | int | None = None,
          fresh: Optional[Fresh] = None) -> ProofNode:
    """LKF proof of ``G |- A; D`` from an LK proof of ``G |- A, D``.

    ``choice`` picks the occurrence ``A`` (or none).  The input should be
    eta-expanded; compound axioms are expanded on the fly.
    """
    if not isinstance(choice, StoupChoice):
        choice = StoupChoice(choice)
    a = choice.formula(p.conclusion)
    if fresh is None:
        fresh = Fresh(proof_symbols(p))
    return _focus(p, a, fresh)


def _principal(p: ProofNode) -> Formula:
    return formula_at(p.conclusion, p.active)


def _fs(seq: Sequent, stoup: Optional[Formula]) -> FocusedSequent:
    if stoup is None:
        return FocusedSequent(seq.left, None, seq.right)
    return FocusedSequent(seq.left, stoup, remove_one(seq.right, stoup))


def _focus(p: ProofNode, a: Optional[Formula], fresh: Fresh) -> ProofNode:
    seq = p.conclusion
    if a is None:
        return _unstouped(p, fresh)
    concl = _fs(seq, a)
    if releasable(a):
        inner = _unstouped(p, fresh)
        return node(Rule.RELEASE, concl, [inner], "stoup")
    r = p.rule
    if r is Rule.WEAK_R and p.active.side == "right" and alpha_equal(_principal(p), a):
        return node(Rule.WEAK_R, concl, [_unstouped(p.premises[0], fresh)], "stoup")
    subs, c = invert_with_eigen(p, Handle("right", _right_index(seq, a)), fresh)
    if isinstance(a, And):
        prem = [_focus(subs[0], a.left, fresh), _focus(subs[1], a.right, fresh)]
        return node(Rule.AND_R, concl, prem, "stoup")
    if isinstance(a, Implies):
        return node(Rule.IMP_R, concl, [_focus(subs[0], a.right, fresh)], "stoup")
    b = substitute(a.body, a.var, Const(c))
    return node(Rule.FORALL_R, concl, [_focus(subs[0], b, fresh)], "stoup", eigen=c)


def _right_index(seq: Sequent, a: Formula) -> int:
    for i, g in enumerate(seq.right):
        if alpha_equal(g, a):
            return i
    raise ValueError("stoup formula missing from the right side")


def _unstouped(p: ProofNode, fresh: Fresh) -> ProofNode:
    """LKF proof of ``G |- .; D`` (empty stoup)."""
    seq = p.conclusion
    concl = _fs(seq, None)
    r = p.rule
    a = _principal(p)
    if r is Rule.AX:
        if not is_atomic(a):
            return _unstouped(expand_axiom(seq, a, fresh), fresh)
        return node(Rule.AX, concl, (), "right", a)
    if r in _LEFT:
        prem = [_unstouped(q, fresh) for q in p.premises]
        return node(r, concl, prem, "left", a, p.witness, p.eigen)
    if r is Rule.IMP_L:
        prem = [_focus(p.premises[0], a.left, fresh), _unstouped(p.premises[1], fresh)]
        return node(r, concl, prem, "left", a)
    if r is Rule.NOT_L:
        return node(r, concl, [_focus(p.premises[0], a.body, fresh)], "left", a)
    if r in _DIRECT_RIGHT:
        prem = [_unstouped(q, fresh) for q in p.premises]
        return node(r, concl, prem, "right", a, p.witness, p.eigen)
    if r in _ASYNC_RIGHT:
        return node(Rule.FOCUS, concl, [_focus(p, a, fresh)], "right", a)
    if r is Rule.WEAK_R:
        if releasable(a):
            # admissible weakening of the premise, then carry on unfocused
            return _unstouped(weaken(p.premises[0], (), (a,), fresh), fresh)
        return node(Rule.FOCUS, concl, [_focus(p, a, fresh)], "right", a)
    raise ValueError(f"rule {r.value} cannot occur in an LK proof")


def unfocus(p: ProofNode) -> ProofNode:
    """Erase the semicolon: the stoup joins the right multiset (at the front)."""
    s = p.conclusion
    if p.rule in (Rule.FOCUS, Rule.RELEASE):
        return unfocus(p.premises[0])
    shift = 0 if s.stoup is None else 1
    plain = s.unfocused()
    h = p.active
    if h.side == "stoup":
        h = Handle("right", 0)
    elif h.side == "right":
        h = Handle("right", h.index + shift)
    prem = tuple(unfocus(q) for q in p.premises)
    return ProofNode(p.rule, plain, prem, h, p.witness, p.eigen)
