"""JSON interchange for proof trees.

A node is ``{"rule", "conclusion": {"left", "stoup", "right"}, "premises",
"active", "witness", "eigen"}`` with formulas written in the formula grammar.
``active`` is ``{"side": ..., "index": ...}`` or the string ``"stoup"``.  A
conclusion carrying a ``stoup`` key (even ``null``) is a focused sequent.

A document may wrap the tree as ``{"proof": node, "source": {...}}`` where
``source`` records the untranslated sequent behind a translated end sequent.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .calculi import STOUP, FocusedSequent, Handle, ProofNode, Rule, Sequent
from .syntax import ParseError, parse_formula, parse_term, print_formula, print_term

__all__ = ["MalformedProof", "proof_to_json", "proof_from_json", "dumps", "loads",
           "sequent_to_json", "sequent_from_json"]


class MalformedProof(ValueError):
    pass


def sequent_to_json(s) -> dict:
    out: dict = {"left": [print_formula(f) for f in s.left]}
    if isinstance(s, FocusedSequent):
        out["stoup"] = None if s.stoup is None else print_formula(s.stoup)
    out["right"] = [print_formula(f) for f in s.right]
    return out


def proof_to_json(p: ProofNode) -> dict:
    if p.active is None:
        active: Any = None
    elif p.active.side == "stoup":
        active = "stoup"
    else:
        active = {"side": p.active.side, "index": p.active.index}
    return {
        "rule": p.rule.value,
        "conclusion": sequent_to_json(p.conclusion),
        "premises": [proof_to_json(q) for q in p.premises],
        "active": active,
        "witness": None if p.witness is None else print_term(p.witness),
        "eigen": p.eigen,
    }


def sequent_from_json(d: Any, signature: Optional[dict] = None, focused: Optional[bool] = None):
    if not isinstance(d, dict):
        raise MalformedProof("conclusion must be an object")
    sig = signature if signature is not None else {}
    try:
        left = tuple(parse_formula(t, sig) for t in d.get("left", []))
        right = tuple(parse_formula(t, sig) for t in d.get("right", []))
        is_focused = ("stoup" in d) if focused is None else focused
        if is_focused:
            stoup = d.get("stoup")
            return FocusedSequent(left, None if stoup is None else parse_formula(stoup, sig), right)
        if d.get("stoup") is not None:
            raise MalformedProof("plain sequent cannot carry a stoup formula")
        return Sequent(left, right)
    except (ParseError, TypeError) as e:
        raise MalformedProof(str(e)) from e


def proof_from_json(d: Any, focused: Optional[bool] = None, signature: Optional[dict] = None) -> ProofNode:
    sig = signature if signature is not None else {}
    if not isinstance(d, dict):
        raise MalformedProof("proof node must be an object")
    if "proof" in d and "rule" not in d:
        d = d["proof"]
        if not isinstance(d, dict):
            raise MalformedProof("proof node must be an object")
    try:
        rule = Rule(d["rule"])
    except (KeyError, ValueError) as e:
        raise MalformedProof(f"bad rule: {e}") from e
    if "conclusion" not in d:
        raise MalformedProof("node without conclusion")
    active = d.get("active")
    if active == "stoup":
        handle: Optional[Handle] = STOUP
    elif active is None:
        handle = None
    elif isinstance(active, dict) and active.get("side") in ("left", "right") \
            and isinstance(active.get("index"), int):
        handle = Handle(active["side"], active["index"])
    else:
        raise MalformedProof(f"bad active handle {active!r}")
    witness = d.get("witness")
    try:
        wt = None if witness is None else parse_term(witness, sig)
    except ParseError as e:
        raise MalformedProof(str(e)) from e
    premises = d.get("premises", [])
    if not isinstance(premises, list):
        raise MalformedProof("premises must be a list")
    return ProofNode(
        rule,
        sequent_from_json(d["conclusion"], sig, focused),
        tuple(proof_from_json(q, focused, sig) for q in premises),
        handle,
        wt,
        d.get("eigen"),
    )


def dumps(p: ProofNode, **kw) -> str:
    return json.dumps(proof_to_json(p), **kw)


def loads(text: str, focused: Optional[bool] = None) -> ProofNode:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedProof(f"invalid JSON: {e}") from e
    return proof_from_json(data, focused)
