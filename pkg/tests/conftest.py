import pytest
from hypothesis import settings, strategies as st

from polarity.corpus import proof_corpus
from polarity.syntax import And, Atom, Const, Exists, Forall, Implies, Not, Or, Var
from polarity.transforms import eta_expand

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ATOMS = ("A", "B", "C", "D")


def prop_formulas(max_leaves: int = 12, atoms=ATOMS):
    leaf = st.sampled_from(atoms).map(Atom)
    return st.recursive(
        leaf,
        lambda sub: st.one_of(
            sub.map(Not),
            st.tuples(sub, sub).map(lambda t: And(*t)),
            st.tuples(sub, sub).map(lambda t: Or(*t)),
            st.tuples(sub, sub).map(lambda t: Implies(*t)),
        ),
        max_leaves=max_leaves,
    )


@st.composite
def fo_formulas(draw, depth: int = 4, bound: tuple = ()):
    """First-order formulas over unary P, Q, nullary R, constants a, b."""
    if depth == 0 or draw(st.integers(0, 3)) == 0:
        pred = draw(st.sampled_from(["P", "Q", "R"]))
        if pred == "R":
            return Atom("R")
        terms = [Const("a"), Const("b")] + [Var(v) for v in bound]
        return Atom(pred, (draw(st.sampled_from(terms)),))
    kind = draw(st.sampled_from(["not", "and", "or", "imp", "all", "ex"]))
    if kind == "not":
        return Not(draw(fo_formulas(depth - 1, bound)))
    if kind in ("all", "ex"):
        v = draw(st.sampled_from(["x", "y"]))
        body = draw(fo_formulas(depth - 1, bound + (v,)))
        return (Forall if kind == "all" else Exists)(v, body)
    cls = {"and": And, "or": Or, "imp": Implies}[kind]
    return cls(draw(fo_formulas(depth - 1, bound)), draw(fo_formulas(depth - 1, bound)))


@pytest.fixture(scope="session")
def lk_proofs():
    """Prover-made LK proofs: first-order examples plus random sequents."""
    return proof_corpus(110, seed=7)


@pytest.fixture(scope="session")
def eta_proofs(lk_proofs):
    return [eta_expand(p) for p in lk_proofs]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
