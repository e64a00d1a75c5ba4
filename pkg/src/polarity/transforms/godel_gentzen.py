"""Polarized Goedel-Gentzen embedding of LKF proofs into LJ."""

from __future__ import annotations

from collections import Counter
from typing import Optional

from ..calculi import FocusedSequent, ProofNode, Rule, Sequent, formula_at, remove_one
from ..proofs import node
from ..syntax import Formula, Not, antinegate, is_atomic, substitute
from ..translations import Scheme, releasable, translate

__all__ = ["lkf_to_lj_gg", "gg_image", "LKF_CASES"]

# the nineteen rule cases of LKF
LKF_CASES = (
    "ax", "and_l", "or_l", "imp_l", "not_l", "exists_l", "forall_l", "contr_l", "weak_l",
    "and_r", "or_r", "imp_r", "not_r", "exists_r", "forall_r", "contr_r", "weak_r",
    "focus", "release",
)


def _p(f: Formula) -> Formula:
    return translate(Scheme.GG_POS, f)


def _n(f: Formula) -> Formula:
    return translate(Scheme.GG_NEG, f)


def gg_image(s: FocusedSequent) -> Sequent:
    """``G^p, antinegate(D^n) |- S^n``."""
    left = tuple(_p(g) for g in s.left) + tuple(antinegate(_n(d)) for d in s.right)
    return Sequent(left, () if s.stoup is None else (_n(s.stoup),))


def _shape(f: Formula) -> str:
    if is_atomic(f):
        return "atom"
    return "release" if releasable(f) else "direct"


def lkf_to_lj_gg(p: ProofNode, stats: Optional[Counter] = None) -> ProofNode:
    """LJ proof of ``G^p, antinegate(D^n) |- S^n`` from an LKF proof of ``G |- S; D``.

    ``stats`` (if given) counts the rule cases met, with ``or_r/atom`` style
    keys for the disjunct shapes handled by the repair step.
    """
    if stats is None:
        stats = Counter()
    return _tr(p, stats)


def _repair(q: ProofNode, b: Formula, ctx: tuple) -> ProofNode:
    """From ``ctx, antinegate(B^n) |-`` to ``ctx, ~B^n |-``."""
    bn = _n(b)
    if not releasable(b):
        return q
    # B^n is ~E, so antinegate gives E: ~R yields ctx |- B^n, then ~L
    mid = node(Rule.NOT_R, Sequent(ctx, (bn,)), [q], "right", bn)
    return node(Rule.NOT_L, Sequent(ctx + (Not(bn),), ()), [mid], "left", Not(bn))


def _tr(p: ProofNode, stats: Counter) -> ProofNode:
    s = p.conclusion
    r = p.rule
    a = formula_at(s, p.active)
    target = gg_image(s)
    T = target.left
    stats[r.value] += 1

    if r is Rule.AX:
        # atomic axiom: ~L over P |- P (antinegate(P^n) is ~P)
        np_ = Not(a)
        top = node(Rule.AX, Sequent(remove_one(T, np_), (a,)), (), "right", a)
        return node(Rule.NOT_L, target, [top], "left", np_)
    if p.active.side == "left":
        # left rules are copied on the positive image
        prem = [_tr(q, stats) for q in p.premises]
        return node(r, target, prem, "left", _p(a), p.witness, p.eigen)
    if p.active.side == "stoup":
        sn = _n(a)
        if r is Rule.RELEASE:
            # release becomes ~R
            return node(Rule.NOT_R, target, [_tr(p.premises[0], stats)], "right", sn)
        # and_r, imp_r, forall_r and weak_r are copied on the right
        prem = [_tr(q, stats) for q in p.premises]
        return node(r, target, prem, "right", sn, p.witness, p.eigen)

    na = antinegate(_n(a))
    if r is Rule.FOCUS:
        # focus becomes ~L on ~D^n
        return node(Rule.NOT_L, target, [_tr(p.premises[0], stats)], "left", na)
    if r is Rule.CONTR_R:
        return node(Rule.CONTR_L, target, [_tr(p.premises[0], stats)], "left", na)
    if r is Rule.NOT_R:
        # not translated: antinegate((~A)^n) is A^p, the premise image already matches
        return _tr(p.premises[0], stats)
    base = remove_one(T, na)
    q = _tr(p.premises[0], stats)
    if r is Rule.OR_R:
        b, c = a.left, a.right
        stats[f"or_r/{_shape(b)}"] += 1
        stats[f"or_r/{_shape(c)}"] += 1
        q = _repair(q, b, base + (antinegate(_n(c)),))
        q = _repair(q, c, base + (Not(_n(b)),))
        return node(Rule.AND_L, target, [q], "left", na)
    if r is Rule.EXISTS_R:
        b = substitute(a.body, a.var, p.witness)
        stats[f"exists_r/{_shape(b)}"] += 1
        q = _repair(q, b, base)
        return node(Rule.FORALL_L, target, [q], "left", na, p.witness)
    raise ValueError(f"rule {r.value} is not an LKF rule on the right")
