"""Corpus experiments shared by the CLI and the acceptance suite."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .calculi import ProofNode, Sequent, check_lj, check_lk, same_multiset
from .prover import SearchBudget, prove_lj, prove_lk
from .syntax import Formula, print_formula
from .transforms import (
    Partition12, Recovery, focus, eta_expand, lj_to_lk_gg, lj_to_lk_kolmogorov,
    lk_to_lj_kolmogorov, lkf_to_lj_gg,
)
from .translations import goal_wrapper, lift_sequent

__all__ = ["EquivRow", "equiprovability", "RoundTrip", "roundtrip", "parallel_map"]


def parallel_map(fn: Callable, items: Iterable, jobs: int = 1) -> list:
    """``map`` that keeps input order; ``jobs > 1`` uses worker processes."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


@dataclass(frozen=True)
class EquivRow:
    index: int
    formula: str
    scheme: str
    classical: str
    intuitionistic: str

    @property
    def mismatch(self) -> bool:
        if "unknown" in (self.classical, self.intuitionistic):
            return False
        return (self.classical == "proved") != (self.intuitionistic == "proved")

    @property
    def unknown(self) -> bool:
        return "unknown" in (self.classical, self.intuitionistic)


def _equiv_one(args) -> list:
    i, f, schemes, budget = args
    lk = prove_lk(f, budget)
    if lk.proved and not check_lk(lk.proof).valid:
        raise AssertionError(f"unsound LK proof for {print_formula(f)}")
    rows = []
    for s in schemes:
        lj = prove_lj(goal_wrapper(s, f), budget)
        if lj.proved and not check_lj(lj.proof).valid:
            raise AssertionError(f"unsound LJ proof for the {s} goal of {print_formula(f)}")
        rows.append(EquivRow(i, print_formula(f), s, lk.status, lj.status))
    return rows


def equiprovability(formulas: Iterable[Formula], schemes=("ko", "gg", "ku", "kr"),
                    budget: Optional[SearchBudget] = None, jobs: int = 1) -> list:
    """One row per (formula, scheme): LK status of f against LJ status of its goal form."""
    work = [(i, f, tuple(schemes), budget) for i, f in enumerate(formulas)]
    return [row for rows in parallel_map(_equiv_one, work, jobs) for row in rows]


@dataclass
class RoundTrip:
    route: str
    sequent: str
    forward_valid: bool = False
    forward_shape: bool = False
    reverse_valid: bool = False
    reverse_shape: bool = False
    error: Optional[str] = None
    stats: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return self.error is None and self.forward_valid and self.forward_shape \
            and self.reverse_valid and self.reverse_shape


def _image(route: str, s: Sequent) -> Sequent:
    lifted = lift_sequent("gg-polarized" if route == "gg" else "kolmogorov-polarized", s.left, s.right)
    return Sequent(lifted.left, lifted.right)


def roundtrip(p: ProofNode, route: str, keep: Optional[dict] = None) -> RoundTrip:
    """Run ``p`` forward along ``route`` and back, checking every stage.

    ``keep`` (a dict) receives the intermediate proofs under the keys
    ``eta``, ``focused``, ``forward`` and ``reverse``.
    """
    s = p.conclusion
    out = RoundTrip(route, str(s))
    stages = keep if keep is not None else {}
    try:
        e = eta_expand(p)
        stages["eta"] = e
        if route == "gg":
            fp = focus(e, None)
            stages["focused"] = fp
            q = lkf_to_lj_gg(fp, out.stats)
        else:
            q = lk_to_lj_kolmogorov(e)
        stages["forward"] = q
        out.forward_valid = check_lj(q).valid
        target = _image(route, s)
        out.forward_shape = same_multiset(q.conclusion.left, target.left) \
            and same_multiset(q.conclusion.right, target.right)
        if route == "gg":
            r = lj_to_lk_gg(q, Partition12.corollary(s.left, s.right))
        else:
            r = lj_to_lk_kolmogorov(q, Recovery(s.left, s.right, None))
        stages["reverse"] = r
        out.reverse_valid = check_lk(r).valid
        out.reverse_shape = same_multiset(r.conclusion.left, s.left) \
            and same_multiset(r.conclusion.right, s.right)
    except Exception as exc:  # recorded per item, reported by the caller
        out.error = f"{type(exc).__name__}: {exc}"
    return out
