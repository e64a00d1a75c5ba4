"""Polarized Kolmogorov embedding of LK proofs into LJ, and back."""

from __future__ import annotations

from typing import Optional

from ..calculi import ProofNode, Rule, Sequent, formula_at, remove_one
from ..proofs import Fresh, node, proof_symbols
from ..syntax import Const, Formula, Not, is_atomic, substitute
from ..translations import Scheme, translate
from .eta import expand_axiom

__all__ = ["lk_to_lj_kolmogorov", "kolmogorov_image"]


def _kp(f: Formula) -> Formula:
    return translate(Scheme.K_POS, f)


def _kn(f: Formula) -> Formula:
    return translate(Scheme.K_NEG, f)


def kolmogorov_image(seq: Sequent) -> Sequent:
    """``G^K+, ~D^K- |-``."""
    return Sequent(tuple(_kp(g) for g in seq.left) + tuple(Not(_kn(d)) for d in seq.right), ())


def lk_to_lj_kolmogorov(p: ProofNode, fresh: Optional[Fresh] = None) -> ProofNode:
    """LJ proof of ``G^K+, ~D^K- |-`` from an LK proof of ``G |- D``.

    Each LK rule becomes the same LJ rule wrapped in the ``~R``/``~L``
    bookkeeping that moves the principal formula between ``~A^K-`` on the
    left and ``~~A^K-`` on the right.
    """
    if fresh is None:
        fresh = Fresh(proof_symbols(p))
    return _tr(p, fresh)


def _tr(p: ProofNode, fresh: Fresh) -> ProofNode:
    seq = p.conclusion
    r = p.rule
    a = formula_at(seq, p.active)
    target = kolmogorov_image(seq)
    T = target.left

    if r is Rule.AX:
        if not is_atomic(a):
            return _tr(expand_axiom(seq, a, fresh), fresh)
        # P |- P  becomes  ~L over the axiom P |- P
        np_ = Not(a)
        top = node(Rule.AX, Sequent(remove_one(T, np_), (a,)), (), "right", a)
        return node(Rule.NOT_L, target, [top], "left", np_)

    if p.active.side == "left":
        ka = _kp(a)
        if r is Rule.IMP_L:
            # first premise: its ~A^K- on the left is turned into ~~A^K- on the right
            q0 = _tr(p.premises[0], fresh)
            ctx = remove_one(T, ka)
            nn = Not(Not(_kn(a.left)))
            n0 = node(Rule.NOT_R, Sequent(ctx, (nn,)), [q0], "right", nn)
            return node(Rule.IMP_L, target, [n0, _tr(p.premises[1], fresh)], "left", ka)
        if r is Rule.NOT_L:
            # ~A^K+ is ~A^K-: the premise image is already the conclusion image
            return _tr(p.premises[0], fresh)
        prem = [_tr(q, fresh) for q in p.premises]
        return node(r, target, prem, "left", ka, p.witness, p.eigen)

    # right rules act on ~A^K- in the left of the image
    na = Not(_kn(a))
    if r is Rule.CONTR_R:
        return node(Rule.CONTR_L, target, [_tr(p.premises[0], fresh)], "left", na)
    if r is Rule.WEAK_R:
        return node(Rule.WEAK_L, target, [_tr(p.premises[0], fresh)], "left", na)
    base = remove_one(T, na)
    ka = _kn(a)

    def close(inner: ProofNode) -> ProofNode:
        return node(Rule.NOT_L, target, [inner], "left", na)

    def lift(q: ProofNode, f: Formula, ctx: tuple) -> ProofNode:
        """From ``ctx, ~f |-`` to ``ctx |- ~~f``."""
        nn = Not(Not(f))
        return node(Rule.NOT_R, Sequent(ctx, (nn,)), [q], "right", nn)

    if r is Rule.NOT_R:
        # ~~A^K+ on the right: ~R then ~L
        q = _tr(p.premises[0], fresh)
        inner = node(Rule.NOT_R, Sequent(base, (ka,)), [q], "right", ka)
        return close(inner)
    if r is Rule.AND_R:
        l0 = lift(_tr(p.premises[0], fresh), _kn(a.left), base)
        l1 = lift(_tr(p.premises[1], fresh), _kn(a.right), base)
        return close(node(Rule.AND_R, Sequent(base, (ka,)), [l0, l1], "right", ka))
    if r is Rule.OR_R:
        # ~R, orR1, ~L, ~R, orR2, ~L, contraction
        q = _tr(p.premises[0], fresh)
        nb = Not(_kn(a.right))
        n1 = lift(q, _kn(a.left), base + (nb,))
        n2 = node(Rule.OR_R1, Sequent(base + (nb,), (ka,)), [n1], "right", ka)
        n3 = node(Rule.NOT_L, Sequent(base + (nb, na), ()), [n2], "left", na)
        n4 = lift(n3, _kn(a.right), base + (na,))
        n5 = node(Rule.OR_R2, Sequent(base + (na,), (ka,)), [n4], "right", ka)
        n6 = node(Rule.NOT_L, Sequent(base + (na, na), ()), [n5], "left", na)
        return node(Rule.CONTR_L, target, [n6], "left", na)
    if r is Rule.IMP_R:
        q = _tr(p.premises[0], fresh)
        ctx = base + (_kp(a.left),)
        n1 = lift(q, _kn(a.right), ctx)
        return close(node(Rule.IMP_R, Sequent(base, (ka,)), [n1], "right", ka))
    if r in (Rule.FORALL_R, Rule.EXISTS_R):
        # the displayed case: ~R, then the quantifier rule, then ~L
        q = _tr(p.premises[0], fresh)
        t = p.witness if r is Rule.EXISTS_R else Const(p.eigen)
        inst = substitute(a.body, a.var, t)
        n1 = lift(q, _kn(inst), base)
        n2 = node(r, Sequent(base, (ka,)), [n1], "right", ka, p.witness, p.eigen)
        return close(n2)
    raise ValueError(f"rule {r.value} is not an LK rule")

