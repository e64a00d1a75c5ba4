"""Command-line front end: ``polarity <subcommand> ...``.

Exit codes: 0 success, 1 logical failure (invalid proof, mismatch, no proof
found), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from pathlib import Path
from typing import Optional

from . import proofio
from .calculi import Sequent, check_lj, check_lk, check_lkf
from .corpus import CorpusSpec, default_seed, generate, proof_corpus
from .experiments import equiprovability, parallel_map, roundtrip
from .prover import SearchBudget, prove_lj, prove_lk
from .syntax import ParseError, alpha_equal, count_negations, parse_formula, parse_sequent, print_formula
from .transforms import (
    Partition12, Recovery, ShapeError, eta_expand, focus, lj_to_lk_gg, lj_to_lk_kolmogorov,
    lk_to_lj_kolmogorov, lkf_to_lj_gg, recover_gg, recover_kolmogorov,
)
from .translations import Scheme, goal_wrapper, translate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# published negation counts that do not follow from the clauses as implemented
KNOWN_COUNT_DISCREPANCIES = {
    ("A & B -> A | B", "k+"): (10, "needs (A|B)^K+ = ~~A^K- | ~~B^K-, "
                                   "but the K+ clause for | gives A^K+ | B^K+"),
}


class UsageError(Exception):
    pass


def _parse(text: str):
    try:
        return parse_formula(text)
    except ParseError as e:
        raise UsageError(f"cannot parse {text!r}: {e}") from e


def _scheme(name: str) -> Scheme:
    try:
        return Scheme.parse(name)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj, indent=2) if as_json else text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(str(e)) from e


def _write(path: str, text: str) -> None:
    if path == "-":
        print(text)
    else:
        Path(path).write_text(text + "\n")


# --------------------------------------------------------------------------
# translate / count


def cmd_translate(args) -> int:
    scheme = _scheme(args.scheme)
    f = _parse(args.formula)
    t = translate(scheme, f)
    out = {"scheme": scheme.value, "input": print_formula(f), "output": print_formula(t)}
    lines = [print_formula(t)]
    if args.count:
        out["negations"] = count_negations(t)
        lines.append(f"negations: {out['negations']}")
    _emit(out, args.json, "\n".join(lines))
    return EXIT_OK


def _discrepancies(f) -> dict:
    found = {}
    for (text, scheme), (claimed, why) in KNOWN_COUNT_DISCREPANCIES.items():
        if alpha_equal(parse_formula(text), f):
            found[scheme] = (claimed, why)
    return found


def cmd_count(args) -> int:
    f = _parse(args.formula)
    rows = []
    for s in Scheme:
        rows.append({"form": s.value, "negations": count_negations(translate(s, f))})
    for s in ("ko", "gg", "ku", "kr"):
        rows.append({"form": f"{s}-goal", "negations": count_negations(goal_wrapper(s, f))})
    notes = []
    for scheme, (claimed, why) in _discrepancies(f).items():
        got = count_negations(translate(scheme, f))
        notes.append(f"discrepancy: {scheme} gives {got} negations; the published figure is "
                     f"{claimed}, which {why}")
    if args.json:
        _emit({"formula": print_formula(f), "counts": rows, "notes": notes}, True, "")
    else:
        print(f"formula: {print_formula(f)}")
        for r in rows:
            print(f"  {r['form']:<8} {r['negations']:>4}")
        for n in notes:
            print(n)
    return EXIT_OK


# --------------------------------------------------------------------------
# check


_CHECKERS = {"lk": check_lk, "lj": check_lj, "lkf": check_lkf}


def _load_proof(path: str, focused: Optional[bool] = None):
    text = _read(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise proofio.MalformedProof(f"invalid JSON: {e}") from e
    return proofio.proof_from_json(doc, focused), doc


def cmd_check(args) -> int:
    p, _ = _load_proof(args.proof, focused=(args.calculus == "lkf"))
    report = _CHECKERS[args.calculus](p)
    _emit({"calculus": args.calculus, "valid": report.valid, "detail": str(report)},
          args.json, str(report))
    return EXIT_OK if report.valid else EXIT_FAIL


# --------------------------------------------------------------------------
# transform


def _source_sequent(text: str) -> Sequent:
    try:
        left, right = parse_sequent(text)
    except ParseError as e:
        raise UsageError(f"cannot parse source {text!r}: {e}") from e
    return Sequent(tuple(left), tuple(right))


def cmd_transform(args) -> int:
    if args.direction == "forward":
        p, _ = _load_proof(args.proof, focused=False)
        report = check_lk(p)
        if not report.valid:
            print(f"input is not a valid LK proof: {report}", file=sys.stderr)
            return EXIT_FAIL
        e = eta_expand(p)
        stages = {"eta": e}
        if args.route == "gg":
            fp = focus(e, None)
            stages["focused"] = fp
            out = lkf_to_lj_gg(fp)
        else:
            out = lk_to_lj_kolmogorov(e)
        if args.emit_intermediate:
            d = Path(args.emit_intermediate)
            d.mkdir(parents=True, exist_ok=True)
            for name, q in stages.items():
                (d / f"{name}.json").write_text(proofio.dumps(q, indent=2) + "\n")
        print(proofio.dumps(out, indent=2))
        return EXIT_OK

    p, doc = _load_proof(args.proof, focused=False)
    report = check_lj(p)
    if not report.valid:
        print(f"input is not a valid LJ proof: {report}", file=sys.stderr)
        return EXIT_FAIL
    src = _source_sequent(args.source) if args.source else None
    if src is None and isinstance(doc, dict) and isinstance(doc.get("source"), dict):
        try:
            src = proofio.sequent_from_json(doc["source"], focused=False)
        except proofio.MalformedProof as e:
            raise UsageError(f"bad source: {e}") from e
    has_goal = bool(p.conclusion.right)
    notes: list = []
    if args.route == "gg":
        if src is not None:
            delta = src.right[:-1] if has_goal else src.right
            part = Partition12.corollary(src.left, delta, src.right[-1] if has_goal else None)
        else:
            part, _, notes = recover_gg(p.conclusion)
        out = lj_to_lk_gg(p, part)
    else:
        if src is not None:
            delta = src.right[:-1] if has_goal else src.right
            rec = Recovery(src.left, delta, src.right[-1] if has_goal else None)
        else:
            rec = recover_kolmogorov(p.conclusion)
            notes = rec.notes
        out = lj_to_lk_kolmogorov(p, rec)
    if notes:
        print("ambiguous source recovery:", file=sys.stderr)
        for n in notes:
            print(f"  {n}", file=sys.stderr)
    print(proofio.dumps(out, indent=2))
    return EXIT_OK


# --------------------------------------------------------------------------
# prove


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.depth, args.contractions, args.term_depth)
    except ValueError as e:
        raise UsageError(str(e)) from e


def cmd_prove(args) -> int:
    try:
        left, right = parse_sequent(args.sequent)
    except ParseError as e:
        raise UsageError(f"cannot parse {args.sequent!r}: {e}") from e
    seq = Sequent(tuple(left), tuple(right))
    if args.calculus == "lj" and len(seq.right) > 1:
        raise UsageError("an LJ sequent has at most one formula on the right")
    prover = prove_lk if args.calculus == "lk" else prove_lj
    result = prover(seq, _budget(args))
    _emit({"calculus": args.calculus, "sequent": str(seq), "status": result.status},
          args.json, result.status)
    if args.emit_proof and result.proved:
        _write(args.emit_proof, proofio.dumps(result.proof, indent=2))
    return EXIT_OK if result.proved else EXIT_FAIL


# --------------------------------------------------------------------------
# corpus experiments


def _corpus_spec(args) -> CorpusSpec:
    try:
        return CorpusSpec(args.count, args.max_atoms, args.max_depth, not args.first_order, args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from e


def cmd_equiv(args) -> int:
    schemes = [_scheme(s).value for s in (args.scheme or ["ko", "gg", "ku", "kr"])]
    for s in schemes:
        if s not in ("ko", "gg", "ku", "kr"):
            raise UsageError(f"scheme {s!r} has no goal form (use ko, gg, ku or kr)")
    spec = _corpus_spec(args)
    rows = equiprovability(generate(spec), schemes, _budget(args), args.jobs)
    summary = {}
    for s in schemes:
        mine = [r for r in rows if r.scheme == s]
        summary[s] = {
            "formulas": len(mine),
            "classically_valid": sum(r.classical == "proved" for r in mine),
            "lj_proved": sum(r.intuitionistic == "proved" for r in mine),
            "mismatches": sum(r.mismatch for r in mine),
            "unknown": sum(r.unknown for r in mine),
        }
    bad = [r for r in rows if r.mismatch]
    if args.json:
        _emit({"seed": spec.seed, "corpus": spec.__dict__, "summary": summary,
               "mismatches": [r.__dict__ for r in bad]}, True, "")
    else:
        print(f"seed {spec.seed}, {spec.count} formulas, <= {spec.max_atoms} atoms, depth <= {spec.max_depth}")
        print(f"{'scheme':<7}{'formulas':>9}{'valid':>7}{'lj':>6}{'mismatch':>9}{'unknown':>8}")
        for s, d in summary.items():
            print(f"{s:<7}{d['formulas']:>9}{d['classically_valid']:>7}{d['lj_proved']:>6}"
                  f"{d['mismatches']:>9}{d['unknown']:>8}")
        for r in bad:
            print(f"mismatch #{r.index} [{r.scheme}] {r.formula}: lk {r.classical}, lj {r.intuitionistic}")
    return EXIT_FAIL if bad else EXIT_OK


def _roundtrip_job(item):
    i, p, route = item
    return i, route, roundtrip(p, route), p


def cmd_roundtrip(args) -> int:
    routes = [args.route] if args.route else ["gg", "kolmogorov"]
    if args.formula:
        seq = _source_sequent(args.formula)
        r = prove_lk(seq)
        if not r.proved:
            print(f"no LK proof found ({r.status}) for {seq}", file=sys.stderr)
            return EXIT_FAIL
        proofs = [r.proof]
    else:
        try:
            proofs = proof_corpus(args.count, args.seed, first_order=not args.propositional)[:args.count]
        except RuntimeError as e:
            raise UsageError(str(e)) from e
    results = parallel_map(_roundtrip_job, [(i, p, rt) for rt in routes for i, p in enumerate(proofs)],
                           args.jobs)
    if args.emit_intermediate:
        d = Path(args.emit_intermediate)
        d.mkdir(parents=True, exist_ok=True)
        for i, p in enumerate(proofs):
            (d / f"{i:03d}_lk.json").write_text(proofio.dumps(p, indent=2) + "\n")
            for rt in routes:
                stages: dict = {}
                roundtrip(p, rt, stages)
                for name, q in stages.items():
                    (d / f"{i:03d}_{rt}_{name}.json").write_text(proofio.dumps(q, indent=2) + "\n")
    summary = {}
    failures = []
    for rt in routes:
        mine = [(i, t, p) for i, route, t, p in results if route == rt]
        cases = Counter()
        for _, t, _ in mine:
            cases.update(t.stats)
        summary[rt] = {
            "proofs": len(mine),
            "forward_valid": sum(t.forward_valid and t.forward_shape for _, t, _ in mine),
            "reverse_valid": sum(t.reverse_valid and t.reverse_shape for _, t, _ in mine),
        }
        if rt == "gg":
            summary[rt]["lkf_cases"] = dict(sorted(cases.items()))
        for i, t, p in mine:
            if not t.ok:
                failures.append({"index": i, "route": rt, "sequent": t.sequent, "error": t.error,
                                 "proof": proofio.proof_to_json(p)})
    if args.json:
        _emit({"seed": args.seed, "summary": summary, "failures": failures}, True, "")
    else:
        print(f"seed {args.seed}, {len(proofs)} LK proofs")
        for rt, d in summary.items():
            print(f"{rt:<11} forward {d['forward_valid']}/{d['proofs']}  reverse {d['reverse_valid']}/{d['proofs']}")
        for fl in failures:
            print(f"failed #{fl['index']} [{fl['route']}] {fl['sequent']}: {fl['error'] or 'check failed'}")
            print(json.dumps(fl["proof"]))
    return EXIT_FAIL if failures else EXIT_OK


# --------------------------------------------------------------------------
# argument parsing


def _add_budget(p: argparse.ArgumentParser) -> None:
    d = SearchBudget()
    p.add_argument("--depth", type=int, default=d.max_depth, help="maximum search depth")
    p.add_argument("--contractions", type=int, default=d.max_contractions_per_formula,
                   help="contractions allowed per formula")
    p.add_argument("--term-depth", type=int, default=d.max_term_depth,
                   help="nesting depth of enumerated witness terms")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polarity", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    schemes = ", ".join(s.value for s in Scheme)

    p = sub.add_parser("translate", help="translate a formula")
    p.add_argument("--scheme", required=True, help=f"one of {schemes}")
    p.add_argument("formula")
    p.add_argument("--count", action="store_true", help="also print the number of negations")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_translate)

    p = sub.add_parser("count", help="negation counts under every scheme")
    p.add_argument("formula")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("check", help="check a JSON proof")
    p.add_argument("--calculus", choices=sorted(_CHECKERS), required=True)
    p.add_argument("proof", help="proof file, or - for standard input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("transform", help="translate a proof along a route")
    p.add_argument("--route", choices=["gg", "kolmogorov"], required=True)
    p.add_argument("--direction", choices=["forward", "reverse"], default="forward")
    p.add_argument("proof", help="proof file, or - for standard input")
    p.add_argument("--emit-intermediate", metavar="DIR",
                   help="write the eta-expanded and focused stages to DIR")
    p.add_argument("--source", metavar="SEQUENT",
                   help="classical sequent behind a reverse input; the last conclusion is the goal "
                        "when the LJ sequent has one")
    p.set_defaults(run=cmd_transform)

    p = sub.add_parser("prove", help="bounded proof search")
    p.add_argument("--calculus", choices=["lk", "lj"], default="lk")
    _add_budget(p)
    p.add_argument("sequent", help='formula, or sequent written "A, B |- C"')
    p.add_argument("--emit-proof", metavar="FILE", help="write the proof JSON (- for standard output)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_prove)

    seed = default_seed()
    p = sub.add_parser("equiv", help="equiprovability over a random corpus")
    p.add_argument("--scheme", action="append", help="ko, gg, ku or kr (repeatable; default all)")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-atoms", type=int, default=4)
    p.add_argument("--max-depth", type=int, default=5)
    p.add_argument("--first-order", action="store_true", help="allow quantifiers")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--jobs", type=int, default=1)
    _add_budget(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_equiv)

    p = sub.add_parser("roundtrip", help="forward and reverse transforms over prover-made proofs")
    p.add_argument("--route", choices=["gg", "kolmogorov"], help="default: both")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--propositional", action="store_true", help="leave out the first-order examples")
    p.add_argument("--formula", help="use a single formula or sequent instead of the corpus")
    p.add_argument("--emit-intermediate", metavar="DIR", help="write every stage of every proof to DIR")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_roundtrip)
    return ap


def main(argv: Optional[list] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.run(args)
    except (UsageError, proofio.MalformedProof, ShapeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
