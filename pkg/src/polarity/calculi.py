"""Sequents, proof trees and checkers for the cut-free calculi LK, LJ and LKF.

A :class:`ProofNode` names its principal formula with an explicit
:class:`Handle` (side plus index into the multiset) because "the formula A"
is ambiguous when a multiset holds duplicates.  Formula comparison inside
the checkers is alpha-equivalence; multisets are compared as counters of
alpha keys, so the order of formulas inside a sequent is irrelevant.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .syntax import (
    And, Atom, Const, Exists, Forall, Formula, Implies, Not, Or, Term,
    alpha_equal, alpha_key, print_formula, substitute, symbols_of,
)
from .translations import releasable

__all__ = [
    "Rule", "Handle", "Sequent", "FocusedSequent", "ProofNode", "CheckReport",
    "check", "check_lk", "check_lj", "check_lkf", "height", "end_sequent",
    "same_multiset", "remove_one", "index_of", "iter_nodes", "size_of",
]


class Rule(str, enum.Enum):
    AX = "ax"
    AND_L = "and_l"
    AND_R = "and_r"
    OR_L = "or_l"
    OR_R = "or_r"
    OR_R1 = "or_r1"
    OR_R2 = "or_r2"
    IMP_L = "imp_l"
    IMP_R = "imp_r"
    NOT_L = "not_l"
    NOT_R = "not_r"
    EXISTS_L = "exists_l"
    EXISTS_R = "exists_r"
    FORALL_L = "forall_l"
    FORALL_R = "forall_r"
    CONTR_L = "contr_l"
    CONTR_R = "contr_r"
    WEAK_L = "weak_l"
    WEAK_R = "weak_r"
    FOCUS = "focus"
    RELEASE = "release"

    def __str__(self) -> str:
        return self.value


_ARITY = {Rule.AX: 0, Rule.AND_R: 2, Rule.OR_L: 2, Rule.IMP_L: 2}

_RULES = {
    "lk": frozenset(Rule) - {Rule.OR_R1, Rule.OR_R2, Rule.FOCUS, Rule.RELEASE},
    "lj": frozenset(Rule) - {Rule.OR_R, Rule.CONTR_R, Rule.FOCUS, Rule.RELEASE},
    "lkf": frozenset(Rule) - {Rule.OR_R1, Rule.OR_R2},
}


@dataclass(frozen=True)
class Handle:
    """Principal occurrence: ``side`` is ``left``, ``right`` or ``stoup``."""

    side: str
    index: int = 0

    def __str__(self) -> str:
        return "stoup" if self.side == "stoup" else f"{self.side}[{self.index}]"


STOUP = Handle("stoup")


def _fmt(fs: Iterable[Formula]) -> str:
    return ", ".join(print_formula(f) for f in fs)


@dataclass(frozen=True)
class Sequent:
    left: tuple = ()
    right: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))

    def formulas(self) -> Iterator[Formula]:
        yield from self.left
        yield from self.right

    def __str__(self) -> str:
        return f"{_fmt(self.left)} |- {_fmt(self.right)}".strip()


@dataclass(frozen=True)
class FocusedSequent:
    left: tuple = ()
    stoup: Optional[Formula] = None
    right: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))

    def formulas(self) -> Iterator[Formula]:
        yield from self.left
        if self.stoup is not None:
            yield self.stoup
        yield from self.right

    def unfocused(self) -> Sequent:
        extra = (self.stoup,) if self.stoup is not None else ()
        return Sequent(self.left, extra + self.right)

    def __str__(self) -> str:
        s = "." if self.stoup is None else print_formula(self.stoup)
        rest = f", {_fmt(self.right)}" if self.right else ""
        return f"{_fmt(self.left)} |- {s}; {rest[2:]}".strip()


AnySequent = Union[Sequent, FocusedSequent]


@dataclass(frozen=True)
class ProofNode:
    rule: Rule
    conclusion: AnySequent
    premises: tuple = ()
    active: Optional[Handle] = None
    witness: Optional[Term] = None
    eigen: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "rule", Rule(self.rule))
        object.__setattr__(self, "premises", tuple(self.premises))

    def principal(self) -> Formula:
        return formula_at(self.conclusion, self.active)


@dataclass(frozen=True)
class CheckReport:
    valid: bool
    failure: Optional[tuple] = None  # (path from root as premise indices, message)

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        path, msg = self.failure
        where = "root" if not path else "root." + ".".join(map(str, path))
        return f"invalid at {where}: {msg}"


# --------------------------------------------------------------------------
# multiset helpers


def same_multiset(a: Iterable[Formula], b: Iterable[Formula]) -> bool:
    return Counter(map(alpha_key, a)) == Counter(map(alpha_key, b))


def index_of(fs: tuple, f: Formula) -> int:
    k = alpha_key(f)
    for i, g in enumerate(fs):
        if alpha_key(g) == k:
            return i
    raise ValueError(f"{print_formula(f)} not in multiset")


def remove_one(fs: tuple, f: Formula) -> tuple:
    i = index_of(fs, f)
    return fs[:i] + fs[i + 1:]


def formula_at(seq: AnySequent, h: Handle) -> Formula:
    if h is None:
        raise ValueError("missing active handle")
    if h.side == "stoup":
        if not isinstance(seq, FocusedSequent) or seq.stoup is None:
            raise ValueError("handle names an empty stoup")
        return seq.stoup
    fs = seq.left if h.side == "left" else seq.right if h.side == "right" else None
    if fs is None or not 0 <= h.index < len(fs):
        raise ValueError(f"handle {h} out of range")
    return fs[h.index]


# --------------------------------------------------------------------------
# traversal


def height(p: ProofNode) -> int:
    return 1 + max((height(q) for q in p.premises), default=0)


def size_of(p: ProofNode) -> int:
    return 1 + sum(size_of(q) for q in p.premises)


def end_sequent(p: ProofNode) -> AnySequent:
    return p.conclusion


def iter_nodes(p: ProofNode) -> Iterator[ProofNode]:
    stack = [p]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(reversed(n.premises))


# --------------------------------------------------------------------------
# checking


class _Violation(Exception):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise _Violation(msg)


def _shape(f: Formula, cls, rule: Rule) -> None:
    _need(isinstance(f, cls), f"{rule.value} needs a {cls.__name__} principal, got {print_formula(f)}")


def _eigen_instance(node: ProofNode, f: Formula) -> Formula:
    c = node.eigen
    _need(c is not None, f"{node.rule.value} needs an eigen constant")
    _need(c not in symbols_of(node.conclusion),
          f"eigenvariable violation: {c} occurs in the conclusion")
    return substitute(f.body, f.var, Const(c))


def _witness_instance(node: ProofNode, f: Formula) -> Formula:
    _need(node.witness is not None, f"{node.rule.value} needs a witness term")
    return substitute(f.body, f.var, node.witness)


def _expected_plain(node: ProofNode, calc: str) -> list:
    """Premise sequents demanded by the LK/LJ schema at ``node``."""
    s = node.conclusion
    r = node.rule
    h = node.active
    _need(h is not None and h.side in ("left", "right"), "active handle must name left or right")
    try:
        a = formula_at(s, h)
    except ValueError as e:
        raise _Violation(str(e))
    L, R = s.left, s.right
    cl = L[:h.index] + L[h.index + 1:] if h.side == "left" else L
    cr = R[:h.index] + R[h.index + 1:] if h.side == "right" else R
    lj = calc == "lj"

    def side(expected: str) -> None:
        _need(h.side == expected, f"{r.value} acts on the {expected}, handle is {h}")

    if r is Rule.AX:
        other = R if h.side == "left" else L
        _need(any(alpha_equal(a, g) for g in other), "axiom formula missing on the other side")
        if lj:
            _need(len(R) == 1, "intuitionistic axiom needs exactly the axiom formula on the right")
        return []
    if r is Rule.AND_L:
        side("left"); _shape(a, And, r)
        return [Sequent(cl + (a.left, a.right), R)]
    if r is Rule.OR_L:
        side("left"); _shape(a, Or, r)
        return [Sequent(cl + (a.left,), R), Sequent(cl + (a.right,), R)]
    if r is Rule.IMP_L:
        side("left"); _shape(a, Implies, r)
        first = (a.left,) if lj else R + (a.left,)
        return [Sequent(cl, first), Sequent(cl + (a.right,), R)]
    if r is Rule.NOT_L:
        side("left"); _shape(a, Not, r)
        return [Sequent(cl, (a.body,) if lj else R + (a.body,))]
    if r is Rule.EXISTS_L:
        side("left"); _shape(a, Exists, r)
        return [Sequent(cl + (_eigen_instance(node, a),), R)]
    if r is Rule.FORALL_L:
        side("left"); _shape(a, Forall, r)
        return [Sequent(cl + (_witness_instance(node, a),), R)]
    if r is Rule.CONTR_L:
        side("left")
        return [Sequent(L + (a,), R)]
    if r is Rule.WEAK_L:
        side("left")
        return [Sequent(cl, R)]
    side("right")
    if r is Rule.AND_R:
        _shape(a, And, r)
        return [Sequent(L, cr + (a.left,)), Sequent(L, cr + (a.right,))]
    if r is Rule.OR_R:
        _shape(a, Or, r)
        return [Sequent(L, cr + (a.left, a.right))]
    if r in (Rule.OR_R1, Rule.OR_R2):
        _shape(a, Or, r)
        return [Sequent(L, cr + ((a.left if r is Rule.OR_R1 else a.right),))]
    if r is Rule.IMP_R:
        _shape(a, Implies, r)
        return [Sequent(L + (a.left,), cr + (a.right,))]
    if r is Rule.NOT_R:
        _shape(a, Not, r)
        return [Sequent(L + (a.body,), cr)]
    if r is Rule.EXISTS_R:
        _shape(a, Exists, r)
        return [Sequent(L, cr + (_witness_instance(node, a),))]
    if r is Rule.FORALL_R:
        _shape(a, Forall, r)
        return [Sequent(L, cr + (_eigen_instance(node, a),))]
    if r is Rule.CONTR_R:
        return [Sequent(L, R + (a,))]
    if r is Rule.WEAK_R:
        return [Sequent(L, cr)]
    raise _Violation(f"rule {r.value} not handled")


def _expected_focused(node: ProofNode) -> list:
    s = node.conclusion
    r = node.rule
    h = node.active
    _need(h is not None, "missing active handle")
    try:
        a = formula_at(s, h)
    except ValueError as e:
        raise _Violation(str(e))
    L, S, R = s.left, s.stoup, s.right
    cl = L[:h.index] + L[h.index + 1:] if h.side == "left" else L
    cr = R[:h.index] + R[h.index + 1:] if h.side == "right" else R
    F = FocusedSequent

    def empty_stoup() -> None:
        _need(S is None, f"{r.value} requires an empty stoup")

    def side(expected: str) -> None:
        _need(h.side == expected, f"{r.value} acts on the {expected}, handle is {h}")

    if r is Rule.AX:
        side("right"); empty_stoup()
        _need(isinstance(a, Atom), "the axiom rule involves only atomic formulas")
        _need(any(alpha_equal(a, g) for g in L), "axiom formula missing on the left")
        return []
    if r in (Rule.AND_L, Rule.OR_L, Rule.IMP_L, Rule.NOT_L, Rule.EXISTS_L,
             Rule.FORALL_L, Rule.CONTR_L, Rule.WEAK_L):
        side("left"); empty_stoup()
        if r is Rule.AND_L:
            _shape(a, And, r)
            return [F(cl + (a.left, a.right), None, R)]
        if r is Rule.OR_L:
            _shape(a, Or, r)
            return [F(cl + (a.left,), None, R), F(cl + (a.right,), None, R)]
        if r is Rule.IMP_L:
            _shape(a, Implies, r)
            return [F(cl, a.left, R), F(cl + (a.right,), None, R)]
        if r is Rule.NOT_L:
            _shape(a, Not, r)
            return [F(cl, a.body, R)]
        if r is Rule.EXISTS_L:
            _shape(a, Exists, r)
            return [F(cl + (_eigen_instance(node, a),), None, R)]
        if r is Rule.FORALL_L:
            _shape(a, Forall, r)
            return [F(cl + (_witness_instance(node, a),), None, R)]
        if r is Rule.CONTR_L:
            return [F(L + (a,), None, R)]
        return [F(cl, None, R)]
    if r in (Rule.AND_R, Rule.IMP_R, Rule.FORALL_R, Rule.WEAK_R, Rule.RELEASE):
        side("stoup")
        if r is Rule.AND_R:
            _shape(a, And, r)
            return [F(L, a.left, R), F(L, a.right, R)]
        if r is Rule.IMP_R:
            _shape(a, Implies, r)
            return [F(L + (a.left,), a.right, R)]
        if r is Rule.FORALL_R:
            _shape(a, Forall, r)
            return [F(L, _eigen_instance(node, a), R)]
        if r is Rule.WEAK_R:
            return [F(L, None, R)]
        _need(releasable(a), f"release needs an atomic, existential, disjunctive or negated "
                             f"formula, got {print_formula(a)}")
        return [F(L, None, R + (a,))]
    side("right"); empty_stoup()
    if r is Rule.OR_R:
        _shape(a, Or, r)
        return [F(L, None, cr + (a.left, a.right))]
    if r is Rule.EXISTS_R:
        _shape(a, Exists, r)
        return [F(L, None, cr + (_witness_instance(node, a),))]
    if r is Rule.NOT_R:
        _shape(a, Not, r)
        return [F(L + (a.body,), None, cr)]
    if r is Rule.CONTR_R:
        return [F(L, None, R + (a,))]
    if r is Rule.FOCUS:
        _need(not releasable(a), f"focus cannot act on {print_formula(a)}")
        return [F(L, a, cr)]
    raise _Violation(f"rule {r.value} not handled")


def _same(a: AnySequent, b: AnySequent) -> bool:
    if type(a) is not type(b):
        return False
    if isinstance(a, FocusedSequent):
        if (a.stoup is None) != (b.stoup is None):
            return False
        if a.stoup is not None and not alpha_equal(a.stoup, b.stoup):
            return False
    return same_multiset(a.left, b.left) and same_multiset(a.right, b.right)


def _check_node(node: ProofNode, calc: str) -> None:
    _need(isinstance(node, ProofNode), "not a proof node")
    _need(node.rule in _RULES[calc], f"rule {node.rule.value} is not part of {calc.upper()}")
    kind = FocusedSequent if calc == "lkf" else Sequent
    _need(isinstance(node.conclusion, kind), f"conclusion must be a {kind.__name__}")
    if calc == "lj":
        _need(len(node.conclusion.right) <= 1, "intuitionistic sequent has more than one conclusion")
    arity = _ARITY.get(node.rule, 1)
    _need(len(node.premises) == arity,
          f"{node.rule.value} takes {arity} premise(s), got {len(node.premises)}")
    expected = _expected_focused(node) if calc == "lkf" else _expected_plain(node, calc)
    for i, (want, got) in enumerate(zip(expected, node.premises)):
        _need(isinstance(got, ProofNode), f"premise {i} is not a proof node")
        _need(_same(want, got.conclusion),
              f"context mismatch in premise {i} of {node.rule.value}: "
              f"expected {want}, found {got.conclusion}")


def check(p: ProofNode, calculus: str) -> CheckReport:
    calc = calculus.lower()
    if calc not in _RULES:
        raise ValueError(f"unknown calculus {calculus!r}")
    stack = [(p, ())]
    while stack:
        node, path = stack.pop()
        try:
            _check_node(node, calc)
        except _Violation as v:
            return CheckReport(False, (list(path), str(v)))
        for i in range(len(node.premises) - 1, -1, -1):
            stack.append((node.premises[i], path + (i,)))
    return CheckReport(True)


def check_lk(p: ProofNode) -> CheckReport:
    return check(p, "lk")


def check_lj(p: ProofNode) -> CheckReport:
    return check(p, "lj")


def check_lkf(p: ProofNode) -> CheckReport:
    return check(p, "lkf")
