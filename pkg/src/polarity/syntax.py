"""First-order terms and formulas.

Formulas are immutable trees.  Equality used by the proof checkers is
alpha-equivalence (:func:`alpha_equal`), computed through a de Bruijn style
key (:func:`alpha_key`); structural ``==`` on the dataclasses stays strict.

Concrete syntax (ASCII, unicode aliases accepted on input)::

    ~A      negation (tightest)      also  ¬
    A & B   conjunction              also  ∧
    A | B   disjunction              also  ∨
    A -> B  implication (right-assoc, loosest)   also  ⇒ →
    forall x. A / exists x. A        also  ∀ ∃ ; scope to the end of the group

In term position an identifier is a variable when it is bound by an enclosing
quantifier or when its name starts with one of ``u v w x y z``; otherwise it
is a constant.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "Var", "Const", "App", "Term",
    "Atom", "Not", "And", "Or", "Implies", "Forall", "Exists", "Formula",
    "Polarity", "ParseError",
    "parse_formula", "parse_term", "parse_sequent", "print_formula", "print_term",
    "antinegate", "polarity_at", "subformula_at", "count_negations", "substitute",
    "symbols_of", "free_vars", "alpha_key", "alpha_equal", "size", "is_atomic",
    "fresh_name",
]


# --------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    fn: str
    args: tuple

    def __str__(self) -> str:
        return print_term(self)


Term = Union[Var, Const, App]


# --------------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple = ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Not:
    body: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


Formula = Union[Atom, Not, And, Or, Implies, Forall, Exists]


def _cached_hash(self) -> int:
    # formulas are hashed constantly by the provers; the dataclass default
    # rehashes the whole tree every time
    try:
        return self.__dict__["_hash"]
    except KeyError:
        h = hash((type(self).__name__,) + tuple(self.__dict__[k] for k in self.__dataclass_fields__))
        object.__setattr__(self, "_hash", h)
        return h


def _state_without_hash(self) -> dict:
    # string hashes differ between interpreter processes
    return {k: v for k, v in self.__dict__.items() if k != "_hash"}


for _cls in (Var, Const, App, Atom, Not, And, Or, Implies, Forall, Exists):
    _cls.__hash__ = _cached_hash
    _cls.__getstate__ = _state_without_hash

Binary = (And, Or, Implies)
Quant = (Forall, Exists)


class Polarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    def flip(self) -> "Polarity":
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE


def is_atomic(f: Formula) -> bool:
    return isinstance(f, Atom)


# --------------------------------------------------------------------------
# parsing


class ParseError(ValueError):
    """Raised on malformed input; ``pos`` is the character offset."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<op>->|\|-|=>|[~&|().,;¬∧∨⇒→∀∃⊢]))"
)
_ALIASES = {"¬": "~", "∧": "&", "∨": "|", "⇒": "->", "→": "->", "=>": "->",
            "∀": "forall", "∃": "exists", "⊢": "|-"}
_VAR_INITIALS = frozenset("uvwxyz")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tok = m.group("ident") or m.group("op")
        start = m.start("ident") if m.group("ident") else m.start("op")
        tokens.append((_ALIASES.get(tok, tok), start))
        pos = m.end()
    tokens.append(("<eof>", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, signature: dict | None = None):
        self.tokens = _tokenize(text)
        self.i = 0
        # (kind, name) -> arity; kind is "pred" or "fn"
        self.signature = signature if signature is not None else {}

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def next(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            raise ParseError(f"expected {tok!r}, found {self.peek()!r}", self.pos())
        self.i += 1

    def ident(self) -> str:
        tok = self.peek()
        if not _is_ident(tok):
            raise ParseError(f"expected identifier, found {tok!r}", self.pos())
        self.i += 1
        return tok

    def declare(self, kind: str, name: str, arity: int, pos: int) -> None:
        known = self.signature.setdefault((kind, name), arity)
        if known != arity:
            raise ParseError(f"arity mismatch for {name}: {arity} vs declared {known}", pos)

    # formula := imp
    def formula(self, bound: frozenset) -> Formula:
        left = self.disj(bound)
        if self.peek() == "->":
            self.next()
            return Implies(left, self.formula(bound))
        return left

    def disj(self, bound: frozenset) -> Formula:
        f = self.conj(bound)
        while self.peek() == "|":
            self.next()
            f = Or(f, self.conj(bound))
        return f

    def conj(self, bound: frozenset) -> Formula:
        f = self.unary(bound)
        while self.peek() == "&":
            self.next()
            f = And(f, self.unary(bound))
        return f

    def unary(self, bound: frozenset) -> Formula:
        tok = self.peek()
        if tok == "~":
            self.next()
            return Not(self.unary(bound))
        if tok in ("forall", "exists"):
            self.next()
            var = self.ident()
            self.expect(".")
            body = self.formula(bound | {var})
            return Forall(var, body) if tok == "forall" else Exists(var, body)
        if tok == "(":
            self.next()
            f = self.formula(bound)
            self.expect(")")
            return f
        pos = self.pos()
        name = self.ident()
        args = self.arglist(bound)
        self.declare("pred", name, len(args), pos)
        return Atom(name, args)

    def arglist(self, bound: frozenset) -> tuple:
        if self.peek() != "(":
            return ()
        self.next()
        args = [self.term(bound)]
        while self.peek() == ",":
            self.next()
            args.append(self.term(bound))
        self.expect(")")
        return tuple(args)

    def term(self, bound: frozenset) -> Term:
        pos = self.pos()
        name = self.ident()
        if self.peek() == "(":
            args = self.arglist(bound)
            self.declare("fn", name, len(args), pos)
            return App(name, args)
        if name in bound or name[0] in _VAR_INITIALS:
            return Var(name)
        self.declare("fn", name, 0, pos)
        return Const(name)

    def formula_list(self, stop: tuple) -> list:
        out = []
        if self.peek() in stop:
            return out
        out.append(self.formula(frozenset()))
        while self.peek() == ",":
            self.next()
            out.append(self.formula(frozenset()))
        return out

    def done(self) -> None:
        if self.peek() != "<eof>":
            raise ParseError(f"unexpected token {self.peek()!r}", self.pos())


def _is_ident(tok: str) -> bool:
    return bool(re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", tok)) and tok not in ("forall", "exists")


def parse_formula(text: str, signature: dict | None = None) -> Formula:
    """Parse ``text`` into a formula.

    ``signature`` maps ``(kind, name)`` to an arity and is extended in place,
    so passing the same dict across calls enforces one arity per symbol.
    """
    p = _Parser(text, signature)
    f = p.formula(frozenset())
    p.done()
    return f


def parse_term(text: str, signature: dict | None = None) -> Term:
    p = _Parser(text, signature)
    t = p.term(frozenset())
    p.done()
    return t


def parse_sequent(text: str, signature: dict | None = None) -> tuple[list, list]:
    """Parse ``A, B |- C, D``.  Text without a turnstile is a goal ``|- A``."""
    p = _Parser(text, signature)
    if not any(tok == "|-" for tok, _ in p.tokens):
        f = p.formula(frozenset())
        p.done()
        return [], [f]
    left = p.formula_list(("|-",))
    p.expect("|-")
    right = p.formula_list(("<eof>",))
    p.done()
    return left, right


# --------------------------------------------------------------------------
# printing

_LEVEL = {Implies: 1, Or: 2, And: 3}
_SYMBOL = {Implies: "->", Or: "|", And: "&"}


def print_term(t: Term) -> str:
    if isinstance(t, App):
        return f"{t.fn}({','.join(print_term(a) for a in t.args)})"
    return t.name


def print_formula(f: Formula) -> str:
    """Render with the fewest parentheses that still reparse to ``f``."""
    return _show(f, 0, True)


def _show(f: Formula, ctx: int, last: bool) -> str:
    # ctx: binding level required by the parent; last: nothing follows in the group
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({','.join(print_term(a) for a in f.args)})"
    if isinstance(f, Not):
        return "~" + _show(f.body, 4, last)
    if isinstance(f, Quant):
        kw = "forall" if isinstance(f, Forall) else "exists"
        s = f"{kw} {f.var}. {_show(f.body, 0, True)}"
        return s if last else f"({s})"
    level = _LEVEL[type(f)]
    if isinstance(f, Implies):
        lctx, rctx = level + 1, level
    else:
        lctx, rctx = level, level + 1
    if level < ctx:
        return f"({_show(f.left, lctx, False)} {_SYMBOL[type(f)]} {_show(f.right, rctx, True)})"
    return f"{_show(f.left, lctx, False)} {_SYMBOL[type(f)]} {_show(f.right, rctx, last)}"


# --------------------------------------------------------------------------
# structural operations


def antinegate(f: Formula) -> Formula:
    """Strip one leading negation, or add one if there is none."""
    return f.body if isinstance(f, Not) else Not(f)


_STEPS = {"left", "right", "body"}


def subformula_at(f: Formula, path: Sequence[str]) -> Formula:
    for step in path:
        if step not in _STEPS:
            raise ValueError(f"invalid path step {step!r}")
        if step == "body" and isinstance(f, (Not,) + Quant):
            f = f.body
        elif step in ("left", "right") and isinstance(f, Binary):
            f = getattr(f, step)
        else:
            raise ValueError(f"path step {step!r} does not match {type(f).__name__}")
    return f


def polarity_at(f: Formula, path: Sequence[str]) -> Polarity:
    """Polarity of the occurrence reached by ``path``.

    Descending into a negation body or the left of an implication flips it.
    """
    pol = Polarity.POSITIVE
    node = f
    for step in path:
        flips = (step == "body" and isinstance(node, Not)) or (
            step == "left" and isinstance(node, Implies))
        node = subformula_at(node, [step])
        if flips:
            pol = pol.flip()
    return pol


def count_negations(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Not):
        return 1 + count_negations(f.body)
    if isinstance(f, Quant):
        return count_negations(f.body)
    return count_negations(f.left) + count_negations(f.right)


def size(f: Formula) -> int:
    """Number of connective, quantifier and atom nodes."""
    if isinstance(f, Atom):
        return 1
    if isinstance(f, (Not,) + Quant):
        return 1 + size(f.body)
    return 1 + size(f.left) + size(f.right)


def _term_vars(t: Term) -> Iterator[str]:
    if isinstance(t, Var):
        yield t.name
    elif isinstance(t, App):
        for a in t.args:
            yield from _term_vars(a)


def _term_symbols(t: Term, out: set) -> None:
    if isinstance(t, App):
        out.add(t.fn)
        for a in t.args:
            _term_symbols(a, out)
    else:
        out.add(t.name)


def free_vars(f: Formula) -> frozenset:
    return _free_vars(f)


@lru_cache(maxsize=200_000)
def _free_vars(f: Formula) -> frozenset:
    if isinstance(f, Atom):
        return frozenset(v for a in f.args for v in _term_vars(a))
    if isinstance(f, Not):
        return _free_vars(f.body)
    if isinstance(f, Quant):
        return _free_vars(f.body) - {f.var}
    return _free_vars(f.left) | _free_vars(f.right)


def _formula_symbols(f: Formula, bound: frozenset, out: set) -> None:
    if isinstance(f, Atom):
        out.add(f.pred)
        for a in f.args:
            s: set = set()
            _term_symbols(a, s)
            out |= s - {v for v in _term_vars(a) if v in bound}
    elif isinstance(f, Not):
        _formula_symbols(f.body, bound, out)
    elif isinstance(f, Quant):
        _formula_symbols(f.body, bound | {f.var}, out)
    else:
        _formula_symbols(f.left, bound, out)
        _formula_symbols(f.right, bound, out)


def symbols_of(obj) -> set:
    """Predicate, function, constant and free-variable names occurring in ``obj``.

    Accepts a formula, a term, or anything exposing ``formulas()`` (sequents).
    """
    out: set = set()
    if isinstance(obj, (Var, Const, App)):
        _term_symbols(obj, out)
    elif isinstance(obj, (Atom, Not, And, Or, Implies, Forall, Exists)):
        _formula_symbols(obj, frozenset(), out)
    else:
        for f in obj.formulas():
            _formula_symbols(f, frozenset(), out)
    return out


def _all_names(f: Formula, out: set) -> None:
    """Every identifier, bound ones included."""
    _formula_symbols(f, frozenset(), out)
    if isinstance(f, Quant):
        out.add(f.var)
        _all_names(f.body, out)
    elif isinstance(f, Not):
        _all_names(f.body, out)
    elif isinstance(f, Binary):
        _all_names(f.left, out)
        _all_names(f.right, out)


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    avoid = set(avoid)
    if base not in avoid:
        return base
    root = base.rstrip("0123456789'")
    k = 1
    while f"{root}{k}" in avoid:
        k += 1
    return f"{root}{k}"


def _subst_term(t: Term, var: str, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.name == var else t
    if isinstance(t, App):
        return App(t.fn, tuple(_subst_term(a, var, s) for a in t.args))
    return t


def substitute(f: Formula, var: str, t: Term) -> Formula:
    """Capture-avoiding ``f[t/var]``; bound variables are renamed on clash."""
    return _substitute(f, var, t, frozenset(_term_vars(t)))


def _substitute(f: Formula, var: str, t: Term, tvars: frozenset) -> Formula:
    if var not in _free_vars(f):
        return f
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(_subst_term(a, var, t) for a in f.args))
    if isinstance(f, Not):
        return Not(_substitute(f.body, var, t, tvars))
    if isinstance(f, Binary):
        return type(f)(_substitute(f.left, var, t, tvars), _substitute(f.right, var, t, tvars))
    body, bv = f.body, f.var
    if bv in tvars:
        names: set = set(tvars) | {var}
        _all_names(body, names)
        new = fresh_name(bv + "'", names)
        body = _substitute(body, bv, Var(new), frozenset([new]))
        bv = new
    return type(f)(bv, _substitute(body, var, t, tvars))


# --------------------------------------------------------------------------
# alpha-equivalence


def _term_key(t: Term, env: tuple) -> tuple:
    if isinstance(t, Var):
        for i in range(len(env) - 1, -1, -1):
            if env[i] == t.name:
                return ("b", len(env) - 1 - i)
        return ("v", t.name)
    if isinstance(t, Const):
        return ("c", t.name)
    return ("f", t.fn, tuple(_term_key(a, env) for a in t.args))


def _key(f: Formula, env: tuple) -> tuple:
    if isinstance(f, Atom):
        return ("P", f.pred, tuple(_term_key(a, env) for a in f.args))
    if isinstance(f, Not):
        return ("~", _key(f.body, env))
    if isinstance(f, Binary):
        return (type(f).__name__, _key(f.left, env), _key(f.right, env))
    return (type(f).__name__, _key(f.body, env + (f.var,)))


@lru_cache(maxsize=500_000)
def alpha_key(f: Formula) -> tuple:
    """Hashable canonical form; equal iff the formulas are alpha-equivalent."""
    return _key(f, ())


def alpha_equal(a: Formula, b: Formula) -> bool:
    return a is b or alpha_key(a) == alpha_key(b)
