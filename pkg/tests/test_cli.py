import io
import json

import pytest

from polarity import proofio
from polarity.calculi import check_lj, check_lk
from polarity.cli import main
from polarity.prover import prove_lk
from polarity.syntax import parse_formula
from polarity.transforms import eta_expand, lk_to_lj_kolmogorov

IMP = "A & B -> A | B"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def lk_file(tmp_path):
    p = prove_lk(parse_formula(IMP)).proof
    path = tmp_path / "lk.json"
    path.write_text(proofio.dumps(p))
    return path


class TestTranslate:
    @pytest.mark.parametrize("scheme,count", [("ko", 14), ("p", 4), ("k+", 6)])
    def test_counts(self, capsys, scheme, count):
        code, out, _ = run(capsys, "translate", "--scheme", scheme, IMP, "--count")
        assert code == 0
        assert out.strip().endswith(f"negations: {count}")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "translate", "--scheme", "gg", "P | ~P", "--json")
        doc = json.loads(out)
        assert code == 0 and doc["scheme"] == "gg" and doc["input"] == "P | ~P"

    def test_bad_scheme(self, capsys):
        code, _, err = run(capsys, "translate", "--scheme", "zz", "P")
        assert code == 2 and "error" in err

    def test_bad_formula(self, capsys):
        code, _, err = run(capsys, "translate", "--scheme", "ko", "P &")
        assert code == 2 and "cannot parse" in err

    def test_missing_argument(self, capsys):
        assert main(["translate", "P"]) == 2


class TestCount:
    def test_table_and_note(self, capsys):
        code, out, _ = run(capsys, "count", IMP)
        assert code == 0
        rows = {line.split()[0]: int(line.split()[1]) for line in out.splitlines()[1:]
                if line.startswith("  ")}
        assert rows["ko"] == 14 and rows["gg-goal"] == 11 and rows["p"] == 4
        assert "discrepancy: k+ gives 6" in out

    def test_json_no_note_elsewhere(self, capsys):
        code, out, _ = run(capsys, "count", "P -> P", "--json")
        doc = json.loads(out)
        assert code == 0 and doc["notes"] == [] and len(doc["counts"]) == 12


class TestProveCheck:
    def test_prove_emit_and_check(self, capsys, tmp_path):
        path = tmp_path / "p.json"
        code, out, _ = run(capsys, "prove", "A, A -> B |- B, C", "--emit-proof", str(path))
        assert code == 0 and out.strip() == "proved"
        assert run(capsys, "check", "--calculus", "lk", str(path))[0] == 0
        # the same proof is not an LJ proof: two formulas on the right
        assert run(capsys, "check", "--calculus", "lj", str(path))[0] == 1

    def test_prove_lj(self, capsys):
        assert run(capsys, "prove", "--calculus", "lj", "P | ~P")[0] == 1
        code, out, _ = run(capsys, "prove", "--calculus", "lj", "~~(P | ~P)", "--json")
        assert code == 0 and json.loads(out)["status"] == "proved"

    def test_prove_lj_rejects_two_goals(self, capsys):
        assert run(capsys, "prove", "--calculus", "lj", "|- A, B")[0] == 2

    def test_emit_to_stdout(self, capsys):
        code, out, _ = run(capsys, "prove", "P -> P", "--emit-proof", "-")
        assert code == 0
        doc = json.loads(out.split("\n", 1)[1])
        assert check_lk(proofio.proof_from_json(doc)).valid

    def test_check_stdin(self, capsys, monkeypatch, lk_file):
        monkeypatch.setattr("sys.stdin", io.StringIO(lk_file.read_text()))
        assert run(capsys, "check", "--calculus", "lk", "-")[0] == 0

    def test_check_malformed(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"rule": "cut"}')
        assert run(capsys, "check", "--calculus", "lk", str(bad))[0] == 2
        bad.write_text("not json")
        assert run(capsys, "check", "--calculus", "lk", str(bad))[0] == 2
        assert run(capsys, "check", "--calculus", "lk", str(tmp_path / "missing.json"))[0] == 2

    def test_check_invalid(self, capsys, tmp_path):
        doc = {"rule": "ax", "conclusion": {"left": ["Q"], "right": ["P"]},
               "active": {"side": "right", "index": 0}}
        f = tmp_path / "x.json"
        f.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "check", "--calculus", "lk", str(f), "--json")
        assert code == 1 and json.loads(out)["valid"] is False


class TestTransform:
    @pytest.mark.parametrize("route", ["gg", "kolmogorov"])
    def test_forward_reverse(self, capsys, tmp_path, lk_file, route):
        d = tmp_path / "stages"
        code, out, _ = run(capsys, "transform", "--route", route, str(lk_file),
                           "--emit-intermediate", str(d))
        assert code == 0
        lj = proofio.loads(out)
        assert check_lj(lj).valid
        assert (d / "eta.json").exists()
        assert (d / "focused.json").exists() == (route == "gg")
        f = tmp_path / "lj.json"
        f.write_text(out)
        code, out, _ = run(capsys, "transform", "--route", route, "--direction", "reverse",
                           str(f), "--source", f"|- {IMP}")
        back = proofio.loads(out)
        assert code == 0 and check_lk(back).valid
        assert back.conclusion.right == (parse_formula(IMP),)

    def test_source_key_in_document(self, capsys, tmp_path, lk_file):
        p = eta_expand(proofio.loads(lk_file.read_text()))
        doc = proofio.proof_to_json(lk_to_lj_kolmogorov(p))
        doc["source"] = {"left": [], "right": [IMP]}
        f = tmp_path / "lj.json"
        f.write_text(json.dumps(doc))
        code, out, err = run(capsys, "transform", "--route", "kolmogorov", "--direction", "reverse", str(f))
        assert code == 0 and "ambiguous" not in err
        assert proofio.loads(out).conclusion.right == (parse_formula(IMP),)

    def test_ambiguous_recovery_reported(self, capsys, tmp_path):
        # the end sequent ~(...) |- reads as a negated goal or as a Delta formula
        p = prove_lk(parse_formula("~P -> ~P")).proof
        lj = lk_to_lj_kolmogorov(eta_expand(p))
        f = tmp_path / "lj.json"
        f.write_text(proofio.dumps(lj))
        code, out, err = run(capsys, "transform", "--route", "kolmogorov", "--direction", "reverse", str(f))
        assert code == 0 and check_lk(proofio.loads(out)).valid
        assert err.startswith("ambiguous source recovery:") and "could also be" in err

    def test_forward_rejects_invalid(self, capsys, tmp_path):
        doc = {"rule": "ax", "conclusion": {"left": ["Q"], "right": ["P"]},
               "active": {"side": "right", "index": 0}}
        f = tmp_path / "x.json"
        f.write_text(json.dumps(doc))
        code, _, err = run(capsys, "transform", "--route", "gg", str(f))
        assert code == 1 and "not a valid LK proof" in err


class TestExperiments:
    def test_equiv(self, capsys):
        code, out, _ = run(capsys, "equiv", "--count", "25", "--scheme", "ko", "--scheme", "gg")
        assert code == 0
        assert out.splitlines()[0].startswith("seed 7, 25 formulas")
        assert {line.split()[0] for line in out.splitlines()[2:]} == {"ko", "gg"}

    def test_equiv_json(self, capsys):
        code, out, _ = run(capsys, "equiv", "--count", "10", "--seed", "3", "--json")
        doc = json.loads(out)
        assert code == 0 and all(v["mismatches"] == 0 for v in doc["summary"].values())

    def test_equiv_rejects_scheme_without_goal(self, capsys):
        assert run(capsys, "equiv", "--count", "5", "--scheme", "p")[0] == 2

    def test_roundtrip(self, capsys):
        code, out, _ = run(capsys, "roundtrip", "--count", "12")
        assert code == 0
        assert "gg          forward 12/12  reverse 12/12" in out
        assert "kolmogorov  forward 12/12  reverse 12/12" in out

    def test_roundtrip_formula(self, capsys, tmp_path):
        d = tmp_path / "rt"
        code, out, _ = run(capsys, "roundtrip", "--formula", "|- P | ~P", "--route", "gg",
                           "--emit-intermediate", str(d), "--json")
        doc = json.loads(out)
        assert code == 0 and doc["failures"] == []
        assert doc["summary"]["gg"]["reverse_valid"] == 1
        names = sorted(p.name for p in d.iterdir())
        assert "000_lk.json" in names and "000_gg_reverse.json" in names

    def test_roundtrip_unprovable(self, capsys):
        code, _, err = run(capsys, "roundtrip", "--formula", "|- P")
        assert code == 1 and "no LK proof" in err
