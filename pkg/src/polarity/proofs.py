"""Helpers for building and rewriting proof trees."""

from __future__ import annotations

from typing import Iterable, Optional

from .calculi import STOUP, FocusedSequent, Handle, ProofNode, Rule, Sequent, index_of
from .syntax import (
    App, Atom, Const, Formula, Not, Term, fresh_name, symbols_of,
)

__all__ = ["node", "Fresh", "proof_symbols", "rename_constant", "weaken", "weak_chain", "lj_as_lk"]


def node(rule, conclusion, premises=(), side: Optional[str] = None, formula: Optional[Formula] = None,
         witness: Optional[Term] = None, eigen: Optional[str] = None) -> ProofNode:
    """Build a node, locating the principal ``formula`` on ``side`` of the conclusion."""
    if side == "stoup":
        h: Optional[Handle] = STOUP
    elif side is None:
        h = None
    else:
        h = Handle(side, index_of(getattr(conclusion, side), formula))
    return ProofNode(Rule(rule), conclusion, tuple(premises), h, witness, eigen)


class Fresh:
    """Deterministic supply of constant names avoiding a seed set."""

    def __init__(self, used: Iterable[str] = ()):
        self.used = set(used)

    def const(self, base: str = "c") -> str:
        name = fresh_name(base, self.used)
        self.used.add(name)
        return name

    def avoid(self, names: Iterable[str]) -> None:
        self.used |= set(names)


def proof_symbols(p: ProofNode) -> set:
    out: set = set()
    stack = [p]
    while stack:
        n = stack.pop()
        out |= symbols_of(n.conclusion)
        if n.eigen:
            out.add(n.eigen)
        if n.witness is not None:
            out |= symbols_of(n.witness)
        stack.extend(n.premises)
    return out


def _rc_term(t: Term, old: str, new: str) -> Term:
    if isinstance(t, Const):
        return Const(new) if t.name == old else t
    if isinstance(t, App):
        return App(t.fn, tuple(_rc_term(a, old, new) for a in t.args))
    return t


def _rc(f: Formula, old: str, new: str) -> Formula:
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(_rc_term(a, old, new) for a in f.args))
    if isinstance(f, Not):
        return Not(_rc(f.body, old, new))
    if hasattr(f, "var"):
        return type(f)(f.var, _rc(f.body, old, new))
    return type(f)(_rc(f.left, old, new), _rc(f.right, old, new))


def _rc_seq(s, old: str, new: str):
    if isinstance(s, FocusedSequent):
        st = None if s.stoup is None else _rc(s.stoup, old, new)
        return FocusedSequent(tuple(_rc(f, old, new) for f in s.left), st,
                              tuple(_rc(f, old, new) for f in s.right))
    return Sequent(tuple(_rc(f, old, new) for f in s.left), tuple(_rc(f, old, new) for f in s.right))


def rename_constant(p: ProofNode, old: str, new: str) -> ProofNode:
    """Replace the constant ``old`` by ``new`` throughout ``p`` (``new`` must be fresh)."""
    return ProofNode(
        p.rule, _rc_seq(p.conclusion, old, new),
        tuple(rename_constant(q, old, new) for q in p.premises),
        p.active,
        None if p.witness is None else _rc_term(p.witness, old, new),
        new if p.eigen == old else p.eigen,
    )


def _extend(s, left: tuple, right: tuple):
    if isinstance(s, FocusedSequent):
        return FocusedSequent(s.left + left, s.stoup, s.right + right)
    return Sequent(s.left + left, s.right + right)


def weaken(p: ProofNode, left: Iterable[Formula] = (), right: Iterable[Formula] = (),
           fresh: Optional[Fresh] = None) -> ProofNode:
    """Admissible weakening: add formulas to the context of every node.

    Height is preserved.  Eigen constants that would clash with the added
    formulas are renamed.  Not valid for LJ when ``right`` is non-empty.
    """
    left, right = tuple(left), tuple(right)
    if not left and not right:
        return p
    added = set()
    for f in left + right:
        added |= symbols_of(f)
    if fresh is None:
        fresh = Fresh(proof_symbols(p) | added)
    else:
        fresh.avoid(added)
    return _weaken(p, left, right, added, fresh)


def _weaken(p: ProofNode, left: tuple, right: tuple, added: set, fresh: Fresh) -> ProofNode:
    if p.eigen is not None and p.eigen in added:
        new = fresh.const(p.eigen)
        p = ProofNode(p.rule, p.conclusion,
                      tuple(rename_constant(q, p.eigen, new) for q in p.premises),
                      p.active, p.witness, new)
    return ProofNode(
        p.rule, _extend(p.conclusion, left, right),
        tuple(_weaken(q, left, right, added, fresh) for q in p.premises),
        p.active, p.witness, p.eigen,
    )


def weak_chain(proof: ProofNode, target: Sequent) -> ProofNode:
    """Reach ``target`` from ``proof`` by explicit weak_L/weak_R steps.

    ``target`` must contain the end sequent of ``proof`` as a sub-multiset.
    """
    from .calculi import remove_one

    extra_l = list(target.left)
    for f in proof.conclusion.left:
        extra_l = list(remove_one(tuple(extra_l), f))
    extra_r = list(target.right)
    for f in proof.conclusion.right:
        extra_r = list(remove_one(tuple(extra_r), f))
    steps = [("left", f) for f in extra_l] + [("right", f) for f in extra_r]
    cur = proof
    L, R = proof.conclusion.left, proof.conclusion.right
    for k, (side, f) in enumerate(steps):
        if side == "left":
            L = L + (f,)
        else:
            R = R + (f,)
        # the last step concludes the target itself, in its order
        concl = target if k == len(steps) - 1 else Sequent(L, R)
        cur = node(Rule.WEAK_L if side == "left" else Rule.WEAK_R, concl, [cur], side, f)
    return cur


def lj_as_lk(p: ProofNode) -> ProofNode:
    """Read an LJ proof as an LK proof, rule by rule.

    ``or_r1``/``or_r2`` become ``or_r`` over a ``weak_r`` of the other
    disjunct; the first premise of ``imp_l`` and the premise of ``not_l`` are
    weakened by the conclusion's right side, which LJ drops there.
    """
    prem = [lj_as_lk(q) for q in p.premises]
    s = p.conclusion
    if p.rule in (Rule.OR_R1, Rule.OR_R2):
        a = s.right[p.active.index]
        ctx = s.right[:p.active.index] + s.right[p.active.index + 1:]
        kept, dropped = (a.left, a.right) if p.rule is Rule.OR_R1 else (a.right, a.left)
        w = node(Rule.WEAK_R, Sequent(s.left, ctx + (kept, dropped)), [prem[0]], "right", dropped)
        return node(Rule.OR_R, s, [w], "right", a)
    if p.rule in (Rule.IMP_L, Rule.NOT_L) and s.right:
        prem[0] = weaken(prem[0], right=s.right)
    return ProofNode(p.rule, s, tuple(prem), p.active, p.witness, p.eigen)
