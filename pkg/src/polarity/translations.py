"""Negative translations from classical into intuitionistic logic.

Four historical schemes (Kolmogorov, Goedel-Gentzen, Kuroda, Krivine) and the
two polarized pairs: the positive/negative Kolmogorov halves (``k+``/``k-``)
and the positive/negative Goedel-Gentzen halves (``p``/``n``).  Every
function here applies the definitional clauses and nothing else, so
``~~~A`` is never collapsed to ``~A``.
"""

from __future__ import annotations

import enum
from typing import Iterable, Optional

from .syntax import (
    And, Atom, Exists, Forall, Formula, Implies, Not, Or, antinegate,
)

__all__ = [
    "Scheme", "translate", "goal_wrapper", "lift_sequent", "TranslatedSequent",
    "releasable", "untranslate",
]


class Scheme(enum.Enum):
    KOLMOGOROV = "ko"
    GODEL_GENTZEN = "gg"
    KURODA = "ku"
    KRIVINE = "kr"
    K_POS = "k+"
    K_NEG = "k-"
    GG_POS = "p"
    GG_NEG = "n"

    @classmethod
    def parse(cls, name: str | "Scheme") -> "Scheme":
        if isinstance(name, cls):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            choices = ", ".join(s.value for s in cls)
            raise ValueError(f"unknown scheme {name!r} (choose from {choices})") from None


def _nn(f: Formula) -> Formula:
    return Not(Not(f))


def _ko(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return _nn(f)
    if isinstance(f, Not):
        return _nn(Not(_ko(f.body)))
    if isinstance(f, (And, Or, Implies)):
        return _nn(type(f)(_ko(f.left), _ko(f.right)))
    return _nn(type(f)(f.var, _ko(f.body)))


def _gg(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return _nn(f)
    if isinstance(f, Not):
        return Not(_gg(f.body))
    if isinstance(f, (And, Implies)):
        return type(f)(_gg(f.left), _gg(f.right))
    if isinstance(f, Or):
        return Not(And(Not(_gg(f.left)), Not(_gg(f.right))))
    if isinstance(f, Forall):
        return Forall(f.var, _gg(f.body))
    return Not(Forall(f.var, Not(_gg(f.body))))


def _ku(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, Not):
        return Not(_ku(f.body))
    if isinstance(f, (And, Or, Implies)):
        return type(f)(_ku(f.left), _ku(f.right))
    if isinstance(f, Forall):
        return Forall(f.var, _nn(_ku(f.body)))
    return Exists(f.var, _ku(f.body))


def _kr(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return Not(f)
    if isinstance(f, Not):
        return Not(_kr(f.body))
    if isinstance(f, And):
        return Or(_kr(f.left), _kr(f.right))
    if isinstance(f, Or):
        return And(_kr(f.left), _kr(f.right))
    if isinstance(f, Implies):
        return And(Not(_kr(f.left)), _kr(f.right))
    if isinstance(f, Forall):
        # the printed clause omits the binder; the bound variable is kept
        return Exists(f.var, _kr(f.body))
    return Not(Exists(f.var, Not(_kr(f.body))))


def _kpos(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, (And, Or)):
        return type(f)(_kpos(f.left), _kpos(f.right))
    if isinstance(f, Implies):
        return Implies(_nn(_kneg(f.left)), _kpos(f.right))
    if isinstance(f, Not):
        return Not(_kneg(f.body))
    return type(f)(f.var, _kpos(f.body))


def _kneg(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, (And, Or)):
        return type(f)(_nn(_kneg(f.left)), _nn(_kneg(f.right)))
    if isinstance(f, Implies):
        return Implies(_kpos(f.left), _nn(_kneg(f.right)))
    if isinstance(f, Not):
        return Not(_kpos(f.body))
    return type(f)(f.var, _nn(_kneg(f.body)))


def _pos(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, (And, Or)):
        return type(f)(_pos(f.left), _pos(f.right))
    if isinstance(f, Implies):
        return Implies(_neg(f.left), _pos(f.right))
    if isinstance(f, Not):
        return Not(_neg(f.body))
    return type(f)(f.var, _pos(f.body))


def _neg(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return _nn(f)
    if isinstance(f, And):
        return And(_neg(f.left), _neg(f.right))
    if isinstance(f, Or):
        return Not(And(Not(_neg(f.left)), Not(_neg(f.right))))
    if isinstance(f, Implies):
        return Implies(_pos(f.left), _neg(f.right))
    if isinstance(f, Not):
        return Not(_pos(f.body))
    if isinstance(f, Forall):
        return Forall(f.var, _neg(f.body))
    return Not(Forall(f.var, Not(_neg(f.body))))


_TABLE = {
    Scheme.KOLMOGOROV: _ko,
    Scheme.GODEL_GENTZEN: _gg,
    Scheme.KURODA: _ku,
    Scheme.KRIVINE: _kr,
    Scheme.K_POS: _kpos,
    Scheme.K_NEG: _kneg,
    Scheme.GG_POS: _pos,
    Scheme.GG_NEG: _neg,
}


def translate(scheme: Scheme | str, f: Formula) -> Formula:
    return _TABLE[Scheme.parse(scheme)](f)


def goal_wrapper(scheme: Scheme | str, f: Formula) -> Formula:
    """Intuitionistic goal that is provable iff ``f`` is classically provable."""
    scheme = Scheme.parse(scheme)
    if scheme is Scheme.KOLMOGOROV:
        return _ko(f)
    if scheme is Scheme.GODEL_GENTZEN:
        return _gg(f)
    if scheme is Scheme.KURODA:
        return _nn(_ku(f))
    if scheme is Scheme.KRIVINE:
        return Not(_kr(f))
    raise ValueError(f"scheme {scheme.value!r} has no single-goal form")


def releasable(f: Formula) -> bool:
    """Atomic, existential, disjunctive or negated: may leave the stoup."""
    return isinstance(f, (Atom, Exists, Or, Not))


class TranslatedSequent(tuple):
    """``(left, right)`` pair of formula tuples produced by :func:`lift_sequent`."""

    def __new__(cls, left: Iterable[Formula], right: Iterable[Formula]):
        return super().__new__(cls, (tuple(left), tuple(right)))

    @property
    def left(self) -> tuple:
        return self[0]

    @property
    def right(self) -> tuple:
        return self[1]


def lift_sequent(direction: str, left: Iterable[Formula], right: Iterable[Formula],
                 stoup: Optional[Formula] = None) -> TranslatedSequent:
    """Translate a whole sequent the way the embedding theorems state it.

    ``kolmogorov-polarized``: ``G^K+, ~D^K- |-`` (or ``|- S^K-`` with a goal).
    ``gg-polarized``: ``G^p, antinegate(D^n) |- S^n``.
    """
    if direction in ("kolmogorov-polarized", "kolmogorov"):
        lhs = [_kpos(g) for g in left] + [Not(_kneg(d)) for d in right]
        rhs = [_kneg(stoup)] if stoup is not None else []
    elif direction in ("gg-polarized", "gg"):
        lhs = [_pos(g) for g in left] + [antinegate(_neg(d)) for d in right]
        rhs = [_neg(stoup)] if stoup is not None else []
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return TranslatedSequent(lhs, rhs)


# --------------------------------------------------------------------------
# partial inverses, used to recover the classical sequent behind a translation


def _strip_nn(f: Formula) -> Optional[Formula]:
    if isinstance(f, Not) and isinstance(f.body, Not):
        return f.body.body
    return None


def _un_kpos(f: Formula) -> Optional[Formula]:
    if isinstance(f, Atom):
        return f
    if isinstance(f, (And, Or)):
        a, b = _un_kpos(f.left), _un_kpos(f.right)
        return None if a is None or b is None else type(f)(a, b)
    if isinstance(f, Implies):
        inner = _strip_nn(f.left)
        a = _un_kneg(inner) if inner is not None else None
        b = _un_kpos(f.right)
        return None if a is None or b is None else Implies(a, b)
    if isinstance(f, Not):
        a = _un_kneg(f.body)
        return None if a is None else Not(a)
    a = _un_kpos(f.body)
    return None if a is None else type(f)(f.var, a)


def _un_kneg(f: Formula) -> Optional[Formula]:
    if isinstance(f, Atom):
        return f
    if isinstance(f, (And, Or)):
        l, r = _strip_nn(f.left), _strip_nn(f.right)
        if l is None or r is None:
            return None
        a, b = _un_kneg(l), _un_kneg(r)
        return None if a is None or b is None else type(f)(a, b)
    if isinstance(f, Implies):
        r = _strip_nn(f.right)
        a = _un_kpos(f.left)
        b = _un_kneg(r) if r is not None else None
        return None if a is None or b is None else Implies(a, b)
    if isinstance(f, Not):
        a = _un_kpos(f.body)
        return None if a is None else Not(a)
    inner = _strip_nn(f.body)
    a = _un_kneg(inner) if inner is not None else None
    return None if a is None else type(f)(f.var, a)


def _un_pos(f: Formula) -> list:
    """All sources ``X`` with ``X^p == f`` (the positive half is injective)."""
    if isinstance(f, Atom):
        return [f]
    if isinstance(f, (And, Or)):
        return [type(f)(a, b) for a in _un_pos(f.left) for b in _un_pos(f.right)]
    if isinstance(f, Implies):
        return [Implies(a, b) for a in _un_neg(f.left) for b in _un_pos(f.right)]
    if isinstance(f, Not):
        return [Not(a) for a in _un_neg(f.body)]
    return [type(f)(f.var, a) for a in _un_pos(f.body)]


def _un_neg(f: Formula) -> list:
    """All sources ``X`` with ``X^n == f``; non-negated readings come first."""
    out = []
    if isinstance(f, And):
        out += [And(a, b) for a in _un_neg(f.left) for b in _un_neg(f.right)]
    elif isinstance(f, Implies):
        out += [Implies(a, b) for a in _un_pos(f.left) for b in _un_neg(f.right)]
    elif isinstance(f, Forall):
        out += [Forall(f.var, a) for a in _un_neg(f.body)]
    elif isinstance(f, Not):
        g = f.body
        if isinstance(g, Not) and isinstance(g.body, Atom):
            out.append(g.body)
        if isinstance(g, And) and isinstance(g.left, Not) and isinstance(g.right, Not):
            out += [Or(a, b) for a in _un_neg(g.left.body) for b in _un_neg(g.right.body)]
        if isinstance(g, Forall) and isinstance(g.body, Not):
            out += [Exists(g.var, a) for a in _un_neg(g.body.body)]
        out += [Not(a) for a in _un_pos(g)]
    return out


def untranslate(scheme: Scheme | str, f: Formula) -> list:
    """Sources of ``f`` under one polarized half, non-negated readings first."""
    scheme = Scheme.parse(scheme)
    if scheme is Scheme.K_POS:
        r = _un_kpos(f)
        return [] if r is None else [r]
    if scheme is Scheme.K_NEG:
        r = _un_kneg(f)
        return [] if r is None else [r]
    if scheme is Scheme.GG_POS:
        return _un_pos(f)
    if scheme is Scheme.GG_NEG:
        return _un_neg(f)
    raise ValueError(f"no inverse for scheme {scheme.value!r}")
