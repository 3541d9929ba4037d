import json
import random
import subprocess
import sys

import pytest

from unarynfa.chrobak import cnf_to_nfa, progressions_to_cnf
from unarynfa.cli import main
from unarynfa.fuzz import random_nfa, random_sample, instance_rng
from unarynfa.nfa import member, parse_nfa, serialize_nfa
from unarynfa.oracle import determinize, example1_graph
from unarynfa.semilinear import ProgressionSet, eps_equal, eps_from_progressions, parse_progressions

from conftest import random_automaton

SINGLE = "states 1\ninitial 0\nfinal 0\n"
TWO_CYCLE = "states 2\ninitial 0\nfinal 0\nedge 0 1\nedge 1 0\n"
TAIL_TRIANGLE = "states 4\ninitial 0\nfinal 3\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 1\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConvert:
    def test_single(self, capsys, write):
        code, out, _ = run(capsys, "convert", write("a.nfa", SINGLE))
        assert (code, out) == (0, "0\n")

    def test_empty_language_note(self, capsys, write):
        code, out, err = run(capsys, "convert", write("e.nfa", "states 2\ninitial 0\nfinal 1\n"))
        assert code == 0 and out == ""
        assert "empty" in err

    def test_fixture_matches_oracle(self, capsys):
        code, out, _ = run(capsys, "convert", "--fixture", "example1")
        assert code == 0
        ps = parse_progressions(out)
        assert eps_equal(eps_from_progressions(ps), determinize(example1_graph()))

    def test_cnf_format(self, capsys, write):
        code, out, _ = run(capsys, "convert", "--format", "cnf", write("t.nfa", TWO_CYCLE))
        assert code == 0
        a = parse_nfa(out)
        assert [x for x in range(100) if member(a, x)] == list(range(0, 100, 2))

    def test_json(self, capsys, write):
        code, out, _ = run(capsys, "convert", "--format", "json", write("t.nfa", TAIL_TRIANGLE))
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == 1
        n = data["n_prime"]
        assert data["bounds"] == {"singleton_max": 2 * n * n + n,
                                  "offset_upper_exclusive": 2 * n * n + 3 * n}
        assert [s["gcd"] for s in data["sccs"]] == [3]
        assert sorted(data["sccs"][0]["states"]) == [1, 2, 3]
        ps = ProgressionSet.of(*map(tuple, data["progressions"]))
        assert eps_equal(eps_from_progressions(ps), determinize(parse_nfa(TAIL_TRIANGLE)))
        assert data["cnf"]["state_count"] == progressions_to_cnf(ps).state_count

    def test_dot(self, capsys, write, tmp_path):
        dot = tmp_path / "out.dot"
        code, _, _ = run(capsys, "convert", write("t.nfa", TWO_CYCLE), "--dot", str(dot))
        text = dot.read_text()
        assert code == 0
        assert text.startswith("digraph")
        assert "shape=box" in text and "shape=circle" in text and "style=filled" in text

    def test_parse_error(self, capsys, write):
        code, _, err = run(capsys, "convert", write("bad.nfa", "states 2\ninitial 0\nfinal 5\n"))
        assert code == 2
        assert "line 3" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "convert", str(tmp_path / "missing.nfa"))
        assert code == 2

    def test_input_and_fixture_conflict(self, write):
        with pytest.raises(SystemExit) as info:
            main(["convert", write("a.nfa", SINGLE), "--fixture", "example1"])
        assert info.value.code == 2

    def test_range_rejection(self, capsys, write, monkeypatch):
        import unarynfa.nfa as nfa_module

        monkeypatch.setattr(nfa_module, "MAX_STATES", 2)
        code, _, err = run(capsys, "convert", write("t.nfa", TWO_CYCLE))
        assert code == 3
        assert "limit" in err


class TestEqual:
    def test_self(self, capsys, write):
        path = write("t.nfa", TWO_CYCLE)
        assert run(capsys, "equal", path, path)[:2] == (0, "equal\n")

    def test_progressions_vs_nfa(self, capsys, write):
        code, out, _ = run(capsys, "equal", write("even.aps", "0+2N\n"), write("t.nfa", TWO_CYCLE))
        assert (code, out) == (0, "equal\n")

    def test_witness(self, capsys, write):
        code, out, _ = run(capsys, "equal", write("a.aps", "0+2N\n"), write("b.aps", "0+2N\n1+2N\n"))
        assert code == 1
        assert "1" in out.split(":")[1]

    def test_explicit_kind(self, capsys, write):
        code, _, _ = run(capsys, "equal", "--lhs-kind", "aps", write("a.txt", "0+2N\n"),
                         write("b.txt", TWO_CYCLE))
        assert code == 0

    def test_parse_error(self, capsys, write):
        assert run(capsys, "equal", write("a.aps", "x\n"), write("b.aps", "0\n"))[0] == 2

    def test_convert_output_is_equal_to_input(self, capsys, write):
        rng = random.Random(17)
        for i in range(25):
            src = write(f"r{i}.nfa", serialize_nfa(random_automaton(rng, 8)))
            _, out, _ = run(capsys, "convert", src)
            aps = write(f"r{i}.aps", out)
            assert run(capsys, "equal", src, aps)[:2] == (0, "equal\n")
            _, out, _ = run(capsys, "convert", "--format", "cnf", src)
            cnf = write(f"r{i}.cnf.nfa", out)
            assert run(capsys, "equal", src, cnf)[0] == 0


class TestDiagnostics:
    def test_member(self, capsys, write):
        path = write("t.nfa", TWO_CYCLE)
        code, out, _ = run(capsys, "member", path, "-x", "4")
        assert (code, out) == (0, "4 accepted\n")
        code, out, _ = run(capsys, "member", path, "-x", "4", "-x", "5")
        assert (code, out) == (1, "4 accepted\n5 rejected\n")

    def test_gcds(self, capsys, write):
        code, out, _ = run(capsys, "gcds", write("t.nfa", TAIL_TRIANGLE))
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 1
        assert "size 3 gcd 3 states 1 2 3" in lines[0]

    def test_sccs_chain(self, capsys, write):
        code, out, _ = run(capsys, "sccs", write("c.nfa",
                                                 "states 3\ninitial 0\nfinal 2\nedge 0 1\nedge 1 2\n"))
        assert code == 0
        lines = out.splitlines()
        assert sum("trivial states" in l and "nontrivial" not in l for l in lines) == 3
        assert lines[3:] == ["edge 0 1", "edge 1 2"]

    def test_oracle(self, capsys, write):
        code, out, _ = run(capsys, "oracle", write("t.nfa", TWO_CYCLE))
        assert code == 0
        assert out == "threshold=0 period=2 sporadic={} residues={0}\n"

    def test_check_cnf(self, capsys, write):
        cnf = cnf_to_nfa(progressions_to_cnf(ProgressionSet.of((1, 0), (5, 3), (4, 2))))
        assert run(capsys, "check-cnf", write("c.nfa", serialize_nfa(cnf)))[0] == 0
        assert run(capsys, "check-cnf", write("t.nfa", TWO_CYCLE))[0] == 1


class TestFuzz:
    def test_zero_count(self, capsys):
        code, out, _ = run(capsys, "fuzz", "--count", "0", "--no-fixtures")
        assert code == 0
        assert "0 checked, 0 failures" in out

    def test_acceptance_run(self, capsys):
        code, out, _ = run(capsys, "fuzz", "--seed", "42", "--count", "500", "--max-states", "10")
        assert code == 0
        assert out.strip().endswith("507 checked, 0 failures")

    def test_naive_fails(self, capsys):
        code, out, _ = run(capsys, "fuzz", "--naive", "--count", "100")
        assert code == 1
        assert "FAIL example1" in out

    def test_bad_flags(self):
        with pytest.raises(SystemExit) as info:
            main(["fuzz", "--count", "x"])
        assert info.value.code == 2
        with pytest.raises(SystemExit) as info:
            main(["fuzz", "--max-states", "30"])
        assert info.value.code == 2

    def test_deterministic(self):
        a = random_sample(50, 10, 42)
        b = random_sample(50, 10, 42)
        assert a == b
        assert random_nfa(instance_rng(42, 7), 10) == a[7]
        assert random_sample(50, 10, 43) != a

    def test_generator_shape(self):
        for a in random_sample(200, 6, 1):
            assert 1 <= a.state_count <= 6
            assert a.initial == 0


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "unarynfa", "--version"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.startswith("unarynfa 0.1.0")
