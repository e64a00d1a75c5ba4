"""Bounded backward proof search for LK and LJ.

LK search applies every invertible rule eagerly and, for quantifiers,
instantiates all gamma formulas with all small terms in rounds (bounded by
the contraction budget).  On propositional input it is a decision procedure.

LJ search is a loop-checked backward search over set-like sequents that
keeps the principal formula of non-invertible left rules via contraction.
Propositional refutations come from an independent G4ip decision procedure,
so ``refuted`` is always exhaustive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .calculi import ProofNode, Rule, Sequent, remove_one
from .proofs import Fresh, node, weak_chain
from .syntax import (
    And, App, Atom, Const, Exists, Forall, Formula, Implies, Not, Or, Var,
    alpha_key, fresh_name, substitute, symbols_of,
)

__all__ = [
    "SearchBudget", "SearchResult", "prove_lk", "prove_lj", "decide_classical_prop",
    "decide_intuitionistic_prop", "is_propositional",
]


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 200
    max_contractions_per_formula: int = 2
    max_term_depth: int = 1

    def __post_init__(self):
        for name in ("max_depth", "max_contractions_per_formula", "max_term_depth"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


@dataclass(frozen=True)
class SearchResult:
    status: str  # "proved", "refuted" or "unknown"
    proof: Optional[ProofNode] = None

    @property
    def proved(self) -> bool:
        return self.status == "proved"

    def __str__(self) -> str:
        return self.status


def is_propositional(f) -> bool:
    if isinstance(f, Sequent):
        return all(is_propositional(g) for g in f.left + f.right)
    if isinstance(f, (Forall, Exists)):
        return False
    if isinstance(f, Atom):
        return True
    if isinstance(f, Not):
        return is_propositional(f.body)
    return is_propositional(f.left) and is_propositional(f.right)


def _as_sequent(s) -> Sequent:
    if isinstance(s, Sequent):
        return s
    if isinstance(s, tuple) and len(s) == 2:
        return Sequent(tuple(s[0]), tuple(s[1]))
    return Sequent((), (s,))


# --------------------------------------------------------------------------
# semantic and decision oracles


def _prop_atoms(f: Formula, out: dict) -> None:
    if isinstance(f, Atom):
        out.setdefault(alpha_key(f), f)
    elif isinstance(f, Not):
        _prop_atoms(f.body, out)
    elif isinstance(f, (Forall, Exists)):
        raise ValueError("decide_classical_prop needs a quantifier-free formula")
    else:
        _prop_atoms(f.left, out)
        _prop_atoms(f.right, out)


def _eval(f: Formula, v: dict) -> bool:
    if isinstance(f, Atom):
        return v[alpha_key(f)]
    if isinstance(f, Not):
        return not _eval(f.body, v)
    if isinstance(f, And):
        return _eval(f.left, v) and _eval(f.right, v)
    if isinstance(f, Or):
        return _eval(f.left, v) or _eval(f.right, v)
    return (not _eval(f.left, v)) or _eval(f.right, v)


def decide_classical_prop(f: Formula) -> bool:
    """Truth-table tautology check."""
    atoms: dict = {}
    _prop_atoms(f, atoms)
    keys = list(atoms)
    for values in itertools.product((False, True), repeat=len(keys)):
        if not _eval(f, dict(zip(keys, values))):
            return False
    return True


_BOT = Atom("$bot")


@lru_cache(maxsize=None)
def _g4_form(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, Not):
        return Implies(_g4_form(f.body), _BOT)
    if isinstance(f, (Forall, Exists)):
        raise ValueError("G4ip handles propositional formulas only")
    return type(f)(_g4_form(f.left), _g4_form(f.right))


def decide_intuitionistic_prop(left, goal: Optional[Formula]) -> bool:
    """Dyckhoff's contraction-free calculus G4ip; terminates on every input.

    A truth-table check runs first: a sequent that is not a classical
    tautology has no intuitionistic proof either.
    """
    gamma = frozenset(_g4_form(g) for g in left)
    if not _classically_valid(gamma, goal):
        return False
    return _g4(gamma, _BOT if goal is None else _g4_form(goal))


@lru_cache(maxsize=200_000)
def _classically_valid(gamma: frozenset, goal: Optional[Formula]) -> bool:
    atoms: dict = {}
    for g in gamma:
        _prop_atoms(g, atoms)
    if goal is not None:
        _prop_atoms(goal, atoms)
    atoms.pop(alpha_key(_BOT), None)
    keys = list(atoms)
    for values in itertools.product((False, True), repeat=len(keys)):
        v = dict(zip(keys, values))
        v[alpha_key(_BOT)] = False
        if all(_eval(g, v) for g in gamma) and not (goal is not None and _eval(goal, v)):
            return False
    return True


@lru_cache(maxsize=200_000)
def _g4(gamma: frozenset, goal: Formula) -> bool:
    if _BOT in gamma or goal in gamma:
        return True
    for f in gamma:
        rest = gamma - {f}
        if isinstance(f, And):
            return _g4(rest | {f.left, f.right}, goal)
        if isinstance(f, Or):
            return _g4(rest | {f.left}, goal) and _g4(rest | {f.right}, goal)
        if isinstance(f, Implies):
            c = f.left
            if isinstance(c, Atom) and c in gamma:
                return _g4(rest | {f.right}, goal)
            if c == _BOT:
                return _g4(rest, goal)
            if isinstance(c, And):
                return _g4(rest | {Implies(c.left, Implies(c.right, f.right))}, goal)
            if isinstance(c, Or):
                return _g4(rest | {Implies(c.left, f.right), Implies(c.right, f.right)}, goal)
    if isinstance(goal, And):
        return _g4(gamma, goal.left) and _g4(gamma, goal.right)
    if isinstance(goal, Implies):
        return _g4(gamma | {goal.left}, goal.right)
    if isinstance(goal, Or) and (_g4(gamma, goal.left) or _g4(gamma, goal.right)):
        return True
    for f in gamma:
        if isinstance(f, Implies) and isinstance(f.left, Implies):
            c, d, b = f.left.left, f.left.right, f.right
            rest = gamma - {f}
            if _g4(rest | {Implies(d, b)}, f.left) and _g4(rest | {b}, goal):
                return True
    return False


# --------------------------------------------------------------------------
# witness terms


def _formula_parts(f: Formula, bound: frozenset, consts: dict, funcs: set) -> None:
    if isinstance(f, Atom):
        for t in f.args:
            _collect_free(t, bound, consts, funcs)
    elif isinstance(f, Not):
        _formula_parts(f.body, bound, consts, funcs)
    elif isinstance(f, (Forall, Exists)):
        _formula_parts(f.body, bound | {f.var}, consts, funcs)
    else:
        _formula_parts(f.left, bound, consts, funcs)
        _formula_parts(f.right, bound, consts, funcs)


def _collect_free(t, bound, consts, funcs) -> None:
    if isinstance(t, Var):
        if t.name not in bound:
            consts.setdefault(t, None)
    elif isinstance(t, Const):
        consts.setdefault(t, None)
    else:
        funcs.add((t.fn, len(t.args)))
        for a in t.args:
            _collect_free(a, bound, consts, funcs)


def _herbrand(formulas, depth: int, limit: int = 24) -> list:
    consts: dict = {}
    funcs: set = set()
    for f in formulas:
        _formula_parts(f, frozenset(), consts, funcs)
    terms = list(consts)
    if not terms:
        used = set()
        for f in formulas:
            used |= symbols_of(f)
        terms = [Const(fresh_name("a", used))]
    level = list(terms)
    for _ in range(depth):
        nxt = []
        for fn, n in sorted(funcs):
            for args in itertools.product(level, repeat=n):
                t = App(fn, tuple(args))
                if t not in terms and t not in nxt:
                    nxt.append(t)
        terms += nxt
        level = terms
        if len(terms) >= limit:
            break
    return terms[:limit]


# --------------------------------------------------------------------------
# LK


class _LK:
    def __init__(self, budget: SearchBudget, fresh: Fresh):
        self.b = budget
        self.fresh = fresh
        self.cut_off = False

    def prove(self, L: tuple, R: tuple, depth: int, rounds: int, used: frozenset) -> Optional[ProofNode]:
        seq = Sequent(L, R)
        rk = {alpha_key(g): g for g in R}
        for g in L:
            if alpha_key(g) in rk:
                return node(Rule.AX, seq, (), "right", g)
        if depth > self.b.max_depth:
            self.cut_off = True
            return None
        for i, f in enumerate(L):
            if isinstance(f, (And, Or, Implies, Not, Exists)):
                cl = L[:i] + L[i + 1:]
                return self._left(seq, f, cl, R, depth, rounds, used)
        for i, f in enumerate(R):
            if isinstance(f, (And, Or, Implies, Not, Forall)):
                cr = R[:i] + R[i + 1:]
                return self._right(seq, f, L, cr, depth, rounds, used)
        return self._gamma(seq, depth, rounds, used)

    def _left(self, seq, f, cl, R, depth, rounds, used):
        d = depth + 1
        if isinstance(f, And):
            q = self.prove(cl + (f.left, f.right), R, d, rounds, used)
            return q and node(Rule.AND_L, seq, [q], "left", f)
        if isinstance(f, Or):
            q1 = self.prove(cl + (f.left,), R, d, rounds, used)
            q2 = q1 and self.prove(cl + (f.right,), R, d, rounds, used)
            return q2 and node(Rule.OR_L, seq, [q1, q2], "left", f)
        if isinstance(f, Implies):
            q1 = self.prove(cl, R + (f.left,), d, rounds, used)
            q2 = q1 and self.prove(cl + (f.right,), R, d, rounds, used)
            return q2 and node(Rule.IMP_L, seq, [q1, q2], "left", f)
        if isinstance(f, Not):
            q = self.prove(cl, R + (f.body,), d, rounds, used)
            return q and node(Rule.NOT_L, seq, [q], "left", f)
        c = self.fresh.const()
        q = self.prove(cl + (substitute(f.body, f.var, Const(c)),), R, d, rounds, used)
        return q and node(Rule.EXISTS_L, seq, [q], "left", f, eigen=c)

    def _right(self, seq, f, L, cr, depth, rounds, used):
        d = depth + 1
        if isinstance(f, And):
            q1 = self.prove(L, cr + (f.left,), d, rounds, used)
            q2 = q1 and self.prove(L, cr + (f.right,), d, rounds, used)
            return q2 and node(Rule.AND_R, seq, [q1, q2], "right", f)
        if isinstance(f, Or):
            q = self.prove(L, cr + (f.left, f.right), d, rounds, used)
            return q and node(Rule.OR_R, seq, [q], "right", f)
        if isinstance(f, Implies):
            q = self.prove(L + (f.left,), cr + (f.right,), d, rounds, used)
            return q and node(Rule.IMP_R, seq, [q], "right", f)
        if isinstance(f, Not):
            q = self.prove(L + (f.body,), cr, d, rounds, used)
            return q and node(Rule.NOT_R, seq, [q], "right", f)
        c = self.fresh.const()
        q = self.prove(L, cr + (substitute(f.body, f.var, Const(c)),), d, rounds, used)
        return q and node(Rule.FORALL_R, seq, [q], "right", f, eigen=c)

    def _gamma(self, seq: Sequent, depth: int, rounds: int, used: frozenset):
        """Instantiate every gamma formula with every available term, then continue."""
        gl = [f for f in seq.left if isinstance(f, Forall)]
        gr = [f for f in seq.right if isinstance(f, Exists)]
        if not gl and not gr:
            return None
        if rounds >= self.b.max_contractions_per_formula:
            self.cut_off = True
            return None
        terms = _herbrand(seq.left + seq.right, self.b.max_term_depth)
        steps = []
        new_used = set(used)
        for side, fs in (("left", gl), ("right", gr)):
            for f in fs:
                for t in terms:
                    k = (alpha_key(f), t)
                    if k not in new_used:
                        new_used.add(k)
                        steps.append((side, f, t))
        if not steps:
            self.cut_off = True
            return None
        return _gamma_chain(seq, steps, lambda L, R: self.prove(
            L, R, depth + 1, rounds + 1, frozenset(new_used)))


def _gamma_chain(base: Sequent, steps, prove_top) -> Optional[ProofNode]:
    """For each (side, f, t): contract ``f`` and instantiate one copy with ``t``."""
    L, R = base.left, base.right
    seqs = []
    for side, f, t in steps:
        seqs.append((side, f, t, L, R))
        inst = substitute(f.body, f.var, t)
        if side == "left":
            L = L + (inst,)
        else:
            R = R + (inst,)
    top = prove_top(L, R)
    if top is None:
        return None
    for side, f, t, L0, R0 in reversed(seqs):
        if side == "left":
            top = node(Rule.FORALL_L, Sequent(L0 + (f,), R0), [top], "left", f, witness=t)
            top = node(Rule.CONTR_L, Sequent(L0, R0), [top], "left", f)
        else:
            top = node(Rule.EXISTS_R, Sequent(L0, R0 + (f,)), [top], "right", f, witness=t)
            top = node(Rule.CONTR_R, Sequent(L0, R0), [top], "right", f)
    return top


def prove_lk(s, budget: Optional[SearchBudget] = None) -> SearchResult:
    """Search for an LK proof of ``s`` (a Sequent, a formula, or a (left, right) pair)."""
    seq = _as_sequent(s)
    b = budget or SearchBudget()
    used: set = set()
    for f in seq.formulas():
        used |= symbols_of(f)
    search = _LK(b, Fresh(used))
    proof = search.prove(seq.left, seq.right, 0, 0, frozenset())
    if proof is not None:
        return SearchResult("proved", proof)
    return SearchResult("unknown" if search.cut_off else "refuted")


# --------------------------------------------------------------------------
# LJ


def _dedup(fs) -> tuple:
    out, seen = [], set()
    for f in fs:
        k = alpha_key(f)
        if k not in seen:
            seen.add(k)
            out.append(f)
    return tuple(out)


def _state(left: tuple, goal) -> tuple:
    return frozenset(alpha_key(f) for f in left), None if goal is None else alpha_key(goal)


class _LJ:
    """Loop-checked depth-first search over duplicate-free sequents.

    A state already on the current branch is a loop and fails.  Such
    failures depend on the branch, so only loop-free failures are cached.
    On propositional input every state is first tested with G4ip and only
    provable premises are entered.
    """

    def __init__(self, budget: SearchBudget, fresh: Fresh, oracle: bool = False):
        self.b = budget
        self.fresh = fresh
        self.oracle = oracle
        self.cut_off = False
        self.proved: dict = {}
        self.failed: set = set()

    def prove(self, left: tuple, goal, depth: int, history: frozenset, inst: frozenset):
        """Proof of ``left |- goal`` or None; ``left`` has no duplicates."""
        key = (_state(left, goal), inst)
        if key in self.proved:
            return self.proved[key]
        if key in self.failed:
            return None
        if self.oracle and not decide_intuitionistic_prop(left, goal):
            self.failed.add(key)
            return None
        if key in history or depth > self.b.max_depth:
            self.cut_off = True
            return None
        before = self.cut_off
        self.cut_off = False
        proof = self._search(left, goal, (depth, history | {key}), inst)
        loopy = self.cut_off
        self.cut_off = before or loopy
        if proof is not None:
            self.proved[key] = proof
        elif not loopy:
            self.failed.add(key)
        return proof

    def _sub(self, exact: tuple, goal, h, inst):
        """Prove the multiset ``exact |- goal`` via its duplicate-free version."""
        depth, history = h
        q = self.prove(_dedup(exact), goal, depth + 1, history, inst)
        if q is None:
            return None
        target = Sequent(exact, () if goal is None else (goal,))
        return q if len(exact) == len(q.conclusion.left) else weak_chain(q, target)

    def _search(self, left: tuple, goal, h: int, inst: frozenset):
        R = () if goal is None else (goal,)
        seq = Sequent(left, R)
        if goal is not None:
            gk = alpha_key(goal)
            if any(alpha_key(f) == gk for f in left):
                return node(Rule.AX, seq, (), "right", goal)
        sub = lambda ex, g: self._sub(ex, g, h, inst)  # noqa: E731
        # invertible left rules
        for f in left:
            cl = remove_one(left, f)
            if isinstance(f, And):
                q = sub(cl + (f.left, f.right), goal)
                return q and node(Rule.AND_L, seq, [q], "left", f)
            if isinstance(f, Or):
                q1 = sub(cl + (f.left,), goal)
                q2 = q1 and sub(cl + (f.right,), goal)
                return q2 and node(Rule.OR_L, seq, [q1, q2], "left", f)
            if isinstance(f, Exists):
                c = self.fresh.const()
                q = sub(cl + (substitute(f.body, f.var, Const(c)),), goal)
                return q and node(Rule.EXISTS_L, seq, [q], "left", f, eigen=c)
        # invertible right rules
        if isinstance(goal, And):
            q1 = sub(left, goal.left)
            q2 = q1 and sub(left, goal.right)
            return q2 and node(Rule.AND_R, seq, [q1, q2], "right", goal)
        if isinstance(goal, Implies):
            q = sub(left + (goal.left,), goal.right)
            return q and node(Rule.IMP_R, seq, [q], "right", goal)
        if isinstance(goal, Not):
            q = sub(left + (goal.body,), None)
            return q and node(Rule.NOT_R, seq, [q], "right", goal)
        if isinstance(goal, Forall):
            c = self.fresh.const()
            q = sub(left, substitute(goal.body, goal.var, Const(c)))
            return q and node(Rule.FORALL_R, seq, [q], "right", goal, eigen=c)
        # choices
        if isinstance(goal, Or):
            for rule, part in ((Rule.OR_R1, goal.left), (Rule.OR_R2, goal.right)):
                q = sub(left, part)
                if q is not None:
                    return node(rule, seq, [q], "right", goal)
        terms = None
        if isinstance(goal, Exists) or any(isinstance(f, Forall) for f in left):
            terms = _herbrand(left + R, self.b.max_term_depth)
        if isinstance(goal, Exists):
            for t in terms:
                q = sub(left, substitute(goal.body, goal.var, t))
                if q is not None:
                    return node(Rule.EXISTS_R, seq, [q], "right", goal, witness=t)
        lk = {alpha_key(f) for f in left}
        for f in left:
            kept = Sequent(left + (f,), R)
            if isinstance(f, Implies):
                if alpha_key(f.right) in lk:
                    continue
                q1 = sub(left, f.left)
                q2 = q1 and sub(left + (f.right,), goal)
                if q2:
                    mid = node(Rule.IMP_L, kept, [q1, q2], "left", f)
                    return node(Rule.CONTR_L, seq, [mid], "left", f)
            elif isinstance(f, Not):
                if goal is not None and alpha_key(goal) == alpha_key(f.body):
                    continue
                q = sub(left, f.body)
                if q:
                    mid = node(Rule.NOT_L, kept, [q], "left", f)
                    return node(Rule.CONTR_L, seq, [mid], "left", f)
            elif isinstance(f, Forall):
                fk = alpha_key(f)
                count = sum(1 for k, _ in inst if k == fk)
                for t in terms:
                    if (fk, t) in inst:
                        continue
                    if count >= self.b.max_contractions_per_formula:
                        self.cut_off = True
                        break
                    b = substitute(f.body, f.var, t)
                    if alpha_key(b) in lk:
                        continue
                    q = self._sub(left + (b,), goal, h, inst | {(fk, t)})
                    if q:
                        mid = node(Rule.FORALL_L, kept, [q], "left", f, witness=t)
                        return node(Rule.CONTR_L, seq, [mid], "left", f)
        return None


def prove_lj(s, budget: Optional[SearchBudget] = None) -> SearchResult:
    """Search for an LJ proof of ``s``; at most one formula on the right."""
    seq = _as_sequent(s)
    if len(seq.right) > 1:
        raise ValueError("an intuitionistic sequent has at most one formula on the right")
    b = budget or SearchBudget()
    goal = seq.right[0] if seq.right else None
    prop = is_propositional(seq)
    if prop and not decide_intuitionistic_prop(seq.left, goal):
        return SearchResult("refuted")
    used: set = set()
    for f in seq.formulas():
        used |= symbols_of(f)
    search = _LJ(b, Fresh(used), oracle=prop)
    exact = seq.left
    q = search.prove(_dedup(exact), goal, 0, frozenset(), frozenset())
    if q is not None:
        if len(q.conclusion.left) != len(exact):
            q = weak_chain(q, seq)
        return SearchResult("proved", q)
    return SearchResult("unknown")
