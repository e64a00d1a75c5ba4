"""From LJ proofs of translated sequents back to LK proofs of the originals.

Every formula of an LJ sequent is annotated with the classical formula it
stands for and with how it was translated (its *tag*).  Walking the LJ proof
top-down, each LJ rule on an annotated formula either maps to one LK rule on
the underlying classical formula or to no rule at all (when it only shuffles
negations).  When an LJ rule drops the right-hand formula (``~L``, first
premise of ``->L``) the classical formula is put back by a weakening.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from ..calculi import ProofNode, Rule, Sequent, formula_at, remove_one, same_multiset
from ..proofs import Fresh, node, proof_symbols, rename_constant, weaken
from ..syntax import (
    And, Atom, Const, Exists, Forall, Formula, Implies, Not, Or, alpha_equal, alpha_key,
    antinegate, print_formula, substitute, symbols_of,
)
from ..translations import Scheme, translate, untranslate
from .eta import eta_expand_lj

__all__ = [
    "Partition12", "ShapeError", "Recovery",
    "lj_to_lk_kolmogorov", "lj_to_lk_gg", "recover_kolmogorov", "recover_gg",
    "normalize_atomic_negl",
]


class ShapeError(ValueError):
    """The LJ end sequent is not the image of a classical sequent."""


@dataclass(frozen=True)
class Entry:
    tag: str
    x: Formula
    f: Formula
    cside: str  # side of ``x`` in the classical sequent


# --------------------------------------------------------------------------
# tags


def _kp(x):
    return translate(Scheme.K_POS, x)


def _kn(x):
    return translate(Scheme.K_NEG, x)


def _p(x):
    return translate(Scheme.GG_POS, x)


def _n(x):
    return translate(Scheme.GG_NEG, x)


_FORM = {
    "K+": (lambda x: _kp(x), "left"),
    "K~": (lambda x: Not(_kn(x)), "right"),
    "K-": (lambda x: _kn(x), "right"),
    "K~~": (lambda x: Not(Not(_kn(x))), "right"),
    "p": (lambda x: _p(x), "left"),
    "n_": (lambda x: antinegate(_n(x)), "right"),
    "n~": (lambda x: Not(_n(x)), "right"),
    "n": (lambda x: _n(x), "right"),
    "atom": (lambda x: x, "right"),
}


def entry(tag: str, x: Formula) -> Entry:
    fn, cside = _FORM[tag]
    return Entry(tag, x, fn(x), cside)


# --------------------------------------------------------------------------
# rule tables: (premise specs, combine) or None when the entry does not fit
# a premise spec is (added left entries, right) with right one of
# "keep", None or an Entry


def _inst(x, t):
    return substitute(x.body, x.var, t)


def _term(p: ProofNode):
    return p.witness if p.witness is not None else Const(p.eigen)


def _lk(rule):
    return ("lk", rule)


def _ko_step(e: Entry, r: Rule, p: ProofNode):
    x = e.x
    if e.tag == "K+":
        if r is Rule.AND_L and isinstance(x, And):
            return [([entry("K+", x.left), entry("K+", x.right)], "keep")], _lk(r)
        if r is Rule.OR_L and isinstance(x, Or):
            return [([entry("K+", x.left)], "keep"), ([entry("K+", x.right)], "keep")], _lk(r)
        if r is Rule.IMP_L and isinstance(x, Implies):
            return [([], entry("K~~", x.left)), ([entry("K+", x.right)], "keep")], _lk(r)
        if r is Rule.NOT_L and isinstance(x, Not):
            return [([], entry("K-", x.body))], _lk(r)
        if r in (Rule.FORALL_L, Rule.EXISTS_L) and isinstance(x, (Forall, Exists)) \
                and (r is Rule.FORALL_L) == isinstance(x, Forall):
            return [([entry("K+", _inst(x, _term(p)))], "keep")], _lk(r)
        return None
    if e.tag == "K~":
        if r is Rule.NOT_L:
            return [([], entry("K-", x))], ("same",)
        return None
    if e.tag == "K~~":
        if r is Rule.NOT_R:
            return [([entry("K~", x)], None)], ("same",)
        return None
    # K-: the right rules on the classical formula
    if r is Rule.AND_R and isinstance(x, And):
        return [([], entry("K~~", x.left)), ([], entry("K~~", x.right))], _lk(r)
    if r is Rule.OR_R1 and isinstance(x, Or):
        return [([], entry("K~~", x.left))], ("or", 1)
    if r is Rule.OR_R2 and isinstance(x, Or):
        return [([], entry("K~~", x.right))], ("or", 2)
    if r is Rule.IMP_R and isinstance(x, Implies):
        return [([entry("K+", x.left)], entry("K~~", x.right))], _lk(r)
    if r is Rule.NOT_R and isinstance(x, Not):
        return [([entry("K+", x.body)], None)], _lk(r)
    if r in (Rule.FORALL_R, Rule.EXISTS_R) and isinstance(x, (Forall, Exists)) \
            and (r is Rule.FORALL_R) == isinstance(x, Forall):
        return [([], entry("K~~", _inst(x, _term(p))))], _lk(r)
    return None


def _gg_step(e: Entry, r: Rule, p: ProofNode):
    x = e.x
    if e.tag == "p":
        if r is Rule.AND_L and isinstance(x, And):
            return [([entry("p", x.left), entry("p", x.right)], "keep")], _lk(r)
        if r is Rule.OR_L and isinstance(x, Or):
            return [([entry("p", x.left)], "keep"), ([entry("p", x.right)], "keep")], _lk(r)
        if r is Rule.IMP_L and isinstance(x, Implies):
            return [([], entry("n", x.left)), ([entry("p", x.right)], "keep")], _lk(r)
        if r is Rule.NOT_L and isinstance(x, Not):
            return [([], entry("n", x.body))], _lk(r)
        if r in (Rule.FORALL_L, Rule.EXISTS_L) and isinstance(x, (Forall, Exists)) \
                and (r is Rule.FORALL_L) == isinstance(x, Forall):
            return [([entry("p", _inst(x, _term(p)))], "keep")], _lk(r)
        return None
    if e.tag == "n_":
        if isinstance(x, Atom) and r is Rule.NOT_L:
            return [([], entry("atom", x))], ("same",)
        if isinstance(x, (And, Implies, Forall)) and r is Rule.NOT_L:
            return [([], entry("n", x))], ("same",)
        if isinstance(x, Or) and r is Rule.AND_L:
            # the disjunction case: and_l on ~B^n & ~C^n is or_r on B | C
            return [([entry("n~", x.left), entry("n~", x.right)], "keep")], ("lk", Rule.OR_R)
        if isinstance(x, Exists) and r is Rule.FORALL_L:
            return [([entry("n~", _inst(x, p.witness))], "keep")], ("lk", Rule.EXISTS_R)
        return None
    if e.tag == "n~":
        if r is Rule.NOT_L:
            return [([], entry("n", x))], ("same",)
        return None
    if e.tag == "atom":
        return None
    # tag n
    if isinstance(x, Atom) or isinstance(x, (Or, Exists)):
        if r is Rule.NOT_R:
            return [([entry("n_", x)], None)], ("same",)
        return None
    if r is Rule.AND_R and isinstance(x, And):
        return [([], entry("n", x.left)), ([], entry("n", x.right))], _lk(r)
    if r is Rule.IMP_R and isinstance(x, Implies):
        return [([entry("p", x.left)], entry("n", x.right))], _lk(r)
    if r is Rule.FORALL_R and isinstance(x, Forall):
        return [([], entry("n", _inst(x, _term(p))))], _lk(r)
    if r is Rule.NOT_R and isinstance(x, Not):
        return [([entry("p", x.body)], None)], _lk(r)
    return None


# --------------------------------------------------------------------------
# the decoder


def _classical(left: list, right: Optional[Entry]) -> Sequent:
    L = tuple(e.x for e in left if e.cside == "left")
    R = tuple(e.x for e in left if e.cside == "right")
    if right is not None:
        R = R + (right.x,)
    return Sequent(L, R)


def _remove(entries: list, i: int) -> list:
    return entries[:i] + entries[i + 1:]


class _Decoder:
    def __init__(self, step: Callable):
        self.step = step

    def run(self, p: ProofNode, left: list, right: Optional[Entry]) -> ProofNode:
        seq = _classical(left, right)
        r = p.rule
        a = formula_at(p.conclusion, p.active)
        if p.active.side == "right":
            if right is None or not alpha_equal(right.f, a):
                raise ShapeError(f"right formula {print_formula(a)} has no annotation")
            if r is Rule.AX:
                return self._axiom(seq, left, right, p)
            if r is Rule.WEAK_R:
                q = self.run(p.premises[0], left, None)
                return node(Rule.WEAK_R, seq, [q], "right", right.x)
            got = self.step(right, r, p)
            if got is None:
                raise ShapeError(f"{r.value} does not fit {right.tag} annotation of "
                                 f"{print_formula(right.x)}")
            specs, combine = got
            qs = [self.run(prem, left + add, rr) for prem, (add, rr) in zip(p.premises, specs)]
            return self._combine(seq, combine, right, qs, p)
        key = alpha_key(a)
        cands = [i for i, e in enumerate(left) if alpha_key(e.f) == key]
        if not cands:
            raise ShapeError(f"left formula {print_formula(a)} has no annotation")
        if r is Rule.AX:
            return self._axiom(seq, left, right, p)
        if r is Rule.WEAK_L:
            i = cands[0]
            q = self.run(p.premises[0], _remove(left, i), right)
            return node(Rule.WEAK_L if left[i].cside == "left" else Rule.WEAK_R,
                        seq, [q], left[i].cside, left[i].x)
        if r is Rule.CONTR_L:
            i = cands[0]
            q = self.run(p.premises[0], left + [left[i]], right)
            return node(Rule.CONTR_L if left[i].cside == "left" else Rule.CONTR_R,
                        seq, [q], left[i].cside, left[i].x)
        for i in cands:
            got = self.step(left[i], r, p)
            if got is not None:
                break
        else:
            raise ShapeError(f"{r.value} on {print_formula(a)} fits no annotation")
        e = left[i]
        rest = _remove(left, i)
        specs, combine = got
        qs = []
        for prem, (add, rr) in zip(p.premises, specs):
            if rr == "keep":
                qs.append(self.run(prem, rest + add, right))
                continue
            q = self.run(prem, rest + add, rr)
            if right is not None:
                # the dropped right formula comes back by weakening
                s = q.conclusion
                q = node(Rule.WEAK_R, Sequent(s.left, s.right + (right.x,)), [q], "right", right.x)
            qs.append(q)
        return self._combine(seq, combine, e, qs, p)

    @staticmethod
    def _axiom(seq: Sequent, left: list, right: Optional[Entry], p: ProofNode) -> ProofNode:
        if right is None:
            raise ShapeError("axiom without right formula")
        k = alpha_key(right.x)
        if right.cside != "right" or not any(e.cside == "left" and alpha_key(e.x) == k for e in left):
            raise ShapeError(f"axiom on {print_formula(right.f)} is not an image axiom")
        return node(Rule.AX, seq, (), "right", right.x)

    @staticmethod
    def _combine(seq: Sequent, combine, e: Entry, qs: list, p: ProofNode) -> ProofNode:
        if combine[0] == "same":
            return qs[0]
        if combine[0] == "or":
            x = e.x
            other = x.right if combine[1] == 1 else x.left
            s = qs[0].conclusion
            w = node(Rule.WEAK_R, Sequent(s.left, s.right + (other,)), [qs[0]], "right", other)
            return node(Rule.OR_R, seq, [w], "right", x)
        rule = combine[1]
        witness = p.witness if rule in (Rule.FORALL_L, Rule.EXISTS_R) else None
        eigen = p.eigen if rule in (Rule.FORALL_R, Rule.EXISTS_L) else None
        return node(rule, seq, qs, e.cside, e.x, witness, eigen)


def _check_start(p: ProofNode, left: list, right: Optional[Entry]) -> None:
    s = p.conclusion
    if not same_multiset([e.f for e in left], s.left):
        raise ShapeError("source does not translate to the left of the end sequent")
    if (right is None) != (len(s.right) == 0) or (right is not None and not alpha_equal(right.f, s.right[0])):
        raise ShapeError("source goal does not translate to the right of the end sequent")


# --------------------------------------------------------------------------
# Kolmogorov direction


@dataclass
class Recovery:
    """A recovered classical source and whether another reading existed."""

    gamma: tuple
    delta: tuple
    goal: Optional[Formula]
    ambiguous: bool = False
    notes: list = field(default_factory=list)


def recover_kolmogorov(s: Sequent) -> Recovery:
    """Read ``G^K+, ~D^K- |- S^K-`` back, preferring the Delta reading of ``~A``."""
    gamma, delta, notes = [], [], []
    for f in s.left:
        as_delta = _un(Scheme.K_NEG, f.body) if isinstance(f, Not) else None
        as_gamma = untranslate(Scheme.K_POS, f)
        if as_delta is not None:
            delta.append(as_delta)
            if as_gamma:
                notes.append(f"{print_formula(f)}: read as ~({print_formula(as_delta)})^K-, "
                             f"could also be ({print_formula(as_gamma[0])})^K+")
        elif as_gamma:
            gamma.append(as_gamma[0])
        else:
            raise ShapeError(f"{print_formula(f)} is not in the Kolmogorov image")
    goal = None
    if s.right:
        goal = _un(Scheme.K_NEG, s.right[0])
        if goal is None:
            raise ShapeError(f"{print_formula(s.right[0])} is not a K- image")
    return Recovery(tuple(gamma), tuple(delta), goal, bool(notes), notes)


def _un(scheme, f):
    got = untranslate(scheme, f)
    return got[0] if got else None


def lj_to_lk_kolmogorov(p: ProofNode, source: Optional[Recovery] = None) -> ProofNode:
    """LK proof of ``G |- D, S`` from an LJ proof of ``G^K+, ~D^K- |- S^K-``."""
    p = eta_expand_lj(p)
    if source is None:
        source = recover_kolmogorov(p.conclusion)
    left = [entry("K+", g) for g in source.gamma] + [entry("K~", d) for d in source.delta]
    right = None if source.goal is None else entry("K-", source.goal)
    _check_start(p, left, right)
    return _Decoder(_ko_step).run(p, left, right)


# --------------------------------------------------------------------------
# Goedel-Gentzen direction


@dataclass(frozen=True)
class Partition12:
    """Classical reading of ``G^p, antinegate(D1^n), ~D2^n |- S^n``.

    ``peel`` holds negated right formulas ``~C`` read through ``C^p`` on the
    left; they are restored by trailing ``~R`` rules.
    """

    gamma: tuple = ()
    delta1: tuple = ()
    delta2: tuple = ()
    goal: Optional[Formula] = None
    peel: tuple = ()

    def __post_init__(self):
        for d in self.delta1:
            if isinstance(d, Not):
                raise ValueError(f"delta1 may not contain the negated formula {print_formula(d)}")
        for d in self.peel:
            if not isinstance(d, Not):
                raise ValueError("peeled formulas must be negations")

    @classmethod
    def corollary(cls, gamma: Iterable[Formula], delta: Iterable[Formula],
                  goal: Optional[Formula] = None) -> "Partition12":
        """Split ``delta`` as the corollary does: negations are peeled."""
        delta = tuple(delta)
        return cls(tuple(gamma), tuple(d for d in delta if not isinstance(d, Not)), (), goal,
                   tuple(d for d in delta if isinstance(d, Not)))

    def entries(self):
        left = [entry("p", g) for g in self.gamma]
        left += [entry("p", d.body) for d in self.peel]
        left += [entry("n_", d) for d in self.delta1]
        left += [entry("n~", d) for d in self.delta2]
        right = None if self.goal is None else entry("n", self.goal)
        return left, right


def _un_antineg(f: Formula) -> list:
    """Non-negated X with antinegate(X^n) == f."""
    out = []
    if isinstance(f, Not):
        out += [x for x in untranslate(Scheme.GG_NEG, f.body) if isinstance(x, (And, Implies, Forall))]
    out += [x for x in untranslate(Scheme.GG_NEG, Not(f)) if isinstance(x, (Atom, Or, Exists))]
    return out


def recover_gg(s: Sequent) -> tuple:
    """Return ``(Partition12, ambiguous, notes)`` for an LJ end sequent.

    Left formulas are read as Delta1 images first, then as positive images
    (``Gamma``), then as ``~D2^n``.
    """
    gamma, d1, d2, notes = [], [], [], []
    for f in s.left:
        r1 = _un_antineg(f)
        rp = untranslate(Scheme.GG_POS, f)
        r2 = untranslate(Scheme.GG_NEG, f.body) if isinstance(f, Not) else []
        readings = len(r1) + len(rp) + len(r2)
        if r1:
            d1.append(r1[0])
        elif rp:
            gamma.append(rp[0])
        elif r2:
            d2.append(r2[0])
        else:
            raise ShapeError(f"{print_formula(f)} is not in the Goedel-Gentzen image")
        if readings > 1:
            notes.append(f"{print_formula(f)} has {readings} classical readings")
    goal = None
    if s.right:
        got = untranslate(Scheme.GG_NEG, s.right[0])
        if not got:
            raise ShapeError(f"{print_formula(s.right[0])} is not an n image")
        goal = got[0]
        if len(got) > 1:
            notes.append(f"goal {print_formula(s.right[0])} has {len(got)} readings")
    return Partition12(tuple(gamma), tuple(d1), tuple(d2), goal), bool(notes), notes


def lj_to_lk_gg(p: ProofNode, part: Optional[Partition12] = None) -> ProofNode:
    """LK proof of ``G |- D1, D2, S`` from an LJ proof of the image under ``part``."""
    p = eta_expand_lj(p)
    if part is None:
        part = recover_gg(p.conclusion)[0]
    left, right = part.entries()
    _check_start(p, left, right)
    q = _Decoder(_gg_step).run(p, left, right)
    # corollary: put each peeled ~C back on the right
    for d in part.peel:
        s = q.conclusion
        q = node(Rule.NOT_R, Sequent(remove_one(s.left, d.body), s.right + (d,)), [q], "right", d)
    return q


# --------------------------------------------------------------------------
# normalization: atomic ~L rules moved up to their axioms


def normalize_atomic_negl(p: ProofNode) -> ProofNode:
    """Permute every ``~L`` on a negated atom upwards until its premise is an axiom.

    Runs on LJ proofs.  A ``~P |- ...`` step whose premise ``G |- P`` ends in
    a left rule is pushed into the premises of that rule; one that meets a
    right weakening of ``P`` becomes two weakenings.
    """
    fresh = Fresh(proof_symbols(p))

    def norm(q: ProofNode) -> ProofNode:
        prem = tuple(norm(r) for r in q.premises)
        q = ProofNode(q.rule, q.conclusion, prem, q.active, q.witness, q.eigen)
        if q.rule is Rule.NOT_L:
            a = formula_at(q.conclusion, q.active)
            if isinstance(a.body, Atom):
                return push(q.conclusion, a, q.premises[0])
        return q

    def push(concl: Sequent, na: Formula, q: ProofNode) -> ProofNode:
        """Proof of ``concl`` (which has ``na`` on the left) from ``q`` proving ``concl - na |- P``."""
        r = q.rule
        if r is Rule.AX:
            return node(Rule.NOT_L, concl, [q], "left", na)
        if r is Rule.WEAK_R:
            inner = q.premises[0]
            s = inner.conclusion
            cur = node(Rule.WEAK_L, Sequent(s.left + (na,), ()), [inner], "left", na)
            if concl.right:
                cur = node(Rule.WEAK_R, concl, [cur], "right", concl.right[0])
            return cur
        if q.active.side != "left":
            return node(Rule.NOT_L, concl, [q], "left", na)
        extra = concl.right
        clash = q.eigen is not None and any(q.eigen in symbols_of(f) for f in extra)
        if clash:
            new = fresh.const(q.eigen)
            q = ProofNode(q.rule, q.conclusion,
                          tuple(rename_constant(s, q.eigen, new) for s in q.premises),
                          q.active, q.witness, new)
        target = concl
        principal = formula_at(q.conclusion, q.active)
        new_prem = []
        for i, s in enumerate(q.premises):
            sl = s.conclusion
            if (r is Rule.IMP_L and i == 0) or r is Rule.NOT_L:
                new_prem.append(weaken(s, (na,), (), fresh))
            else:
                new_prem.append(push(Sequent(sl.left + (na,), extra), na, s))
        return node(r, target, new_prem, "left", principal, q.witness, q.eigen)

    return norm(p)

