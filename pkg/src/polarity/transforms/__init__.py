"""Executable proof transformations between LK, LKF and LJ."""

from __future__ import annotations

from collections import Counter
from typing import Optional

from ..calculi import ProofNode
from .eta import eta_expand, eta_expand_lj, expand_axiom, is_eta_expanded
from .focusing import StoupChoice, focus, unfocus
from .godel_gentzen import LKF_CASES, gg_image, lkf_to_lj_gg
from .kleene import InversionError, kleene_invert
from .kolmogorov import kolmogorov_image, lk_to_lj_kolmogorov
from .reverse import (
    Partition12, Recovery, ShapeError, lj_to_lk_gg, lj_to_lk_kolmogorov,
    normalize_atomic_negl, recover_gg, recover_kolmogorov,
)

__all__ = [
    "eta_expand", "eta_expand_lj", "expand_axiom", "is_eta_expanded",
    "StoupChoice", "focus", "unfocus", "kleene_invert", "InversionError",
    "lk_to_lj_kolmogorov", "kolmogorov_image", "lkf_to_lj_gg", "gg_image", "LKF_CASES",
    "lj_to_lk_kolmogorov", "lj_to_lk_gg", "Partition12", "Recovery", "ShapeError",
    "recover_gg", "recover_kolmogorov", "normalize_atomic_negl", "pipeline", "ROUTES",
]

ROUTES = ("kolmogorov", "gg")


def pipeline(p: ProofNode, route: str, stats: Optional[Counter] = None) -> ProofNode:
    """LK proof to LJ proof of the translated end sequent along ``route``."""
    if route == "gg":
        return lkf_to_lj_gg(focus(eta_expand(p), None), stats)
    if route == "kolmogorov":
        return lk_to_lj_kolmogorov(eta_expand(p))
    raise ValueError(f"unknown route {route!r} (choose from {', '.join(ROUTES)})")
