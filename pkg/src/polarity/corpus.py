"""Seeded random formula corpora."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .syntax import And, Atom, Const, Exists, Forall, Formula, Implies, Not, Or, Var, parse_formula

__all__ = ["CorpusSpec", "generate", "default_seed", "FIRST_ORDER_EXAMPLES", "ATOM_POOL",
           "first_order_examples", "proof_corpus"]

ATOM_POOL = ("A", "B", "C", "D", "E", "F")

# small first-order theorems touching every quantifier rule
FIRST_ORDER_EXAMPLES = (
    "forall x. P(x) -> exists x. P(x)",
    "exists x. (D(x) -> forall y. D(y))",
    "(exists x. P(x)) -> ~forall x. ~P(x)",
    "(forall x. (P(x) & Q(x))) -> forall x. P(x)",
    "(exists x. (P(x) | Q(x))) -> (exists x. P(x)) | exists x. Q(x)",
    "~(forall x. P(x)) -> exists x. ~P(x)",
    "P(a) -> exists x. P(x)",
    "(forall x. P(x)) -> P(a) & P(b)",
)


def default_seed() -> int:
    return int(os.environ.get("POLARITY_SEED", "7"))


@dataclass(frozen=True)
class CorpusSpec:
    count: int = 200
    max_atoms: int = 4
    max_depth: int = 5
    quantifier_free: bool = True
    seed: int = 7

    def __post_init__(self):
        if self.count < 0 or self.max_atoms < 1 or self.max_depth < 0 or self.seed < 0:
            raise ValueError("corpus bounds must be natural numbers (at least one atom)")
        if self.max_atoms > len(ATOM_POOL):
            raise ValueError(f"at most {len(ATOM_POOL)} atoms available")


def _random(rng: random.Random, depth: int, atoms: tuple, qfree: bool, bound: tuple) -> Formula:
    if depth == 0 or rng.random() < 0.25:
        name = rng.choice(atoms)
        if not qfree:
            # predicates are unary throughout a first-order corpus
            if bound and rng.random() < 0.7:
                return Atom(name, (Var(rng.choice(bound)),))
            return Atom(name, (Const("a"),))
        return Atom(name)
    kinds = ["not", "and", "or", "imp"]
    if not qfree:
        kinds += ["forall", "exists"]
    k = rng.choice(kinds)
    if k == "not":
        return Not(_random(rng, depth - 1, atoms, qfree, bound))
    if k in ("forall", "exists"):
        v = "xyzuvw"[len(bound) % 6]
        body = _random(rng, depth - 1, atoms, qfree, bound + (v,))
        return (Forall if k == "forall" else Exists)(v, body)
    cls = {"and": And, "or": Or, "imp": Implies}[k]
    return cls(_random(rng, depth - 1, atoms, qfree, bound),
               _random(rng, depth - 1, atoms, qfree, bound))


def generate(spec: CorpusSpec) -> list:
    """Deterministic list of ``spec.count`` formulas; connectives drawn uniformly."""
    rng = random.Random(spec.seed)
    atoms = ATOM_POOL[:spec.max_atoms]
    return [_random(rng, spec.max_depth, atoms, spec.quantifier_free, ()) for _ in range(spec.count)]


def first_order_examples() -> list:
    return [parse_formula(t) for t in FIRST_ORDER_EXAMPLES]


def proof_corpus(count: int = 100, seed: int = 7, max_depth: int = 3, first_order: bool = True) -> list:
    """LK proofs found by the prover, for transform experiments.

    Random propositional sequents with up to two hypotheses and up to three
    conclusions are drawn until ``count`` classically valid ones are proved;
    the first-order examples are prepended when ``first_order`` is set.
    """
    from .calculi import Sequent
    from .prover import prove_lk

    proofs = []
    if first_order:
        for f in first_order_examples():
            r = prove_lk(Sequent((), (f,)))
            if r.proved:
                proofs.append(r.proof)
    rng = random.Random(seed)
    atoms = ATOM_POOL[:3]
    attempts = 0
    while len(proofs) < count:
        attempts += 1
        if attempts > 200 * max(count, 1):
            raise RuntimeError("could not find enough provable sequents")
        left = tuple(_random(rng, rng.randint(0, max_depth), atoms, True, ())
                     for _ in range(rng.randint(0, 2)))
        right = tuple(_random(rng, rng.randint(0, max_depth), atoms, True, ())
                      for _ in range(rng.randint(1, 3)))
        r = prove_lk(Sequent(left, right))
        if r.proved:
            proofs.append(r.proof)
    return proofs
