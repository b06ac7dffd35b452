import io
import json
import os

import pytest

from app import main

SIX_POINT = {"angles_deg": [0, 47, 110, 162, 223, 300]}
SQUARE = {"points": [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]}


@pytest.fixture
def run(capsys):
    """Run the CLI and return (exit code, parsed stdout)."""
    def call(*argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        return code, json.loads(out) if out.strip().startswith("{") else out
    return call


@pytest.fixture
def write(tmp_path):
    def put(data, name="input.json"):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
        return str(path)
    return put


class TestGen:
    def test_regular(self, run):
        code, doc = run("gen", "--regular", "6")
        assert code == 0
        assert doc == {"angles_turns": ["0/6", "1/6", "2/6", "3/6", "4/6", "5/6"]}

    def test_square(self, run):
        assert run("gen", "--square")[1] == SQUARE

    def test_random_to_file(self, run, tmp_path):
        out = str(tmp_path / "gen" / "random.json")
        code, doc = run("gen", "--random", "7", "--seed", "3", "--out", out)
        assert code == 0 and len(doc["angles_turns"]) == 7
        with open(out, encoding="utf-8") as f:
            assert json.load(f) == doc

    def test_equal_pair(self, run, write):
        code, doc = run("gen", "--equal-pair", "9", "--seed", "4")
        assert code == 0 and len(doc["angles_turns"]) == 9
        assert run("check", write(doc))[1]["degeneracy"] == "NoSymmetricQuadruple"

    def test_equal_ears_too_small(self, run):
        code, doc = run("gen", "--equal-ears", "5")
        assert code == 1 and doc["error"] == "too_small"


class TestCheck:
    def test_square(self, run, write):
        code, doc = run("check", write(SQUARE))
        assert code == 0
        assert doc["degeneracy"] == "Degenerate"
        assert doc["witnesses"] == [[0, 1, 2, 3]]
        assert doc["mode"] == "float"

    def test_distinct(self, run, write):
        code, doc = run("check", write(SIX_POINT))
        assert doc["degeneracy"] == "DistinctDiagonals" and "witnesses" not in doc

    def test_stdin(self, run, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"angles_turns": ["0/5", "1/5", "2/5", "3/5", "4/5"]})))
        code, doc = run("check", "-")
        assert code == 0 and doc["degeneracy"] == "Degenerate"
        assert len(doc["witnesses"]) == 5


class TestTriangulate:
    def test_auto_distinct(self, run, write):
        code, doc = run("triangulate", write(SIX_POINT))
        assert code == 0
        assert doc["solver"] == "simplified"
        assert doc["degeneracy"] == "DistinctDiagonals"
        assert doc["diagonals"] == [[0, 3], [1, 3], [3, 5]]
        assert doc["ears"] == [[1, 3], [3, 5]]
        assert len(doc["dual_path"]) == 4
        lengths = doc["sorted_diagonal_lengths"]
        assert lengths == sorted(lengths) and len(lengths) == 3

    def test_auto_equal_pair(self, run, write):
        code, doc = run("triangulate", write({"angles_deg": [0, 47, 110, 162, 220, 300]}))
        assert code == 0 and doc["solver"] == "extended"

    def test_auto_degenerate(self, run, write):
        code, doc = run("triangulate", write(SQUARE))
        assert code == 0 and doc["solver"] == "canonical"
        assert doc["diagonals"] == [[0, 2]]

    def test_labels(self, run, write):
        doc = dict(SIX_POINT, labels=[10, 11, 12, 13, 14, 15])
        assert run("triangulate", write(doc))[1]["diagonals"] == [[10, 13], [11, 13], [13, 15]]

    def test_forced_solver_on_degenerate_input(self, run, write):
        code, doc = run("triangulate", write(SQUARE), "--mode", "simplified")
        assert code == 2 and doc["error"] == "precondition"

    def test_exact_flag(self, run, write):
        code, doc = run("triangulate", write(dict(SIX_POINT, mode="float")), "--exact")
        assert doc["mode"] == "exact"

    def test_svg_and_out(self, run, write, tmp_path):
        svg, out = str(tmp_path / "t.svg"), str(tmp_path / "t.json")
        code, doc = run("triangulate", write(SIX_POINT), "--svg", svg, "--out", out)
        assert code == 0 and doc["svg"] == svg
        assert os.path.getsize(svg) > 0
        with open(out, encoding="utf-8") as f:
            assert json.load(f)["diagonals"] == doc["diagonals"]


class TestEnumerateAndOracle:
    def test_enumerate_hexagon(self, run, write):
        hexagon = write({"angles_turns": [f"{i}/6" for i in range(6)]})
        code, doc = run("enumerate", hexagon)
        assert code == 0 and doc["count"] == 12 and len(doc["winners"]) == 12
        assert doc["truncated"] is False
        assert doc["sorted_diagonal_lengths"] == pytest.approx([3 ** 0.5, 3 ** 0.5, 2.0])

    def test_enumerate_limit(self, run, write):
        hexagon = write({"angles_turns": [f"{i}/6" for i in range(6)]})
        code, doc = run("enumerate", hexagon, "--limit", "5")
        assert doc["truncated"] is True and len(doc["winners"]) == 5 and doc["count"] == 12
        code, doc = run("enumerate", hexagon, "--limit", "0")
        assert code == 1 and doc["error"] == "limit_is_zero"

    def test_oracle_unique(self, run, write):
        code, doc = run("oracle", write(SIX_POINT))
        assert code == 0 and doc["count"] == 1
        assert doc["diagonals"] == [[0, 3], [1, 3], [3, 5]]

    def test_oracle_pentagon(self, run, write):
        code, doc = run("oracle", write({"angles_turns": [f"{i}/5" for i in range(5)]}))
        assert doc["count"] == 5 and "diagonals" not in doc

    def test_oracle_too_large(self, run, write):
        code, doc = run("oracle", write({"angles_turns": [f"{i}/20" for i in range(20)]}))
        assert code == 2 and doc["error"] == "too_large"


class TestErrors:
    def test_malformed_json(self, run, write):
        code, doc = run("check", write('{"angles_deg": [0, 90'))
        assert code == 1 and doc["error"] == "parse"

    def test_duplicate_point(self, run, write):
        code, doc = run("check", write({"angles_deg": [0, 90, 180, 450]}))
        assert code == 1 and doc["error"] == "duplicate_point"

    def test_missing_file(self, run, tmp_path):
        code, doc = run("check", str(tmp_path / "missing.json"))
        assert code == 1 and doc["error"] == "io"


class TestBench:
    def test_json(self, run):
        code, doc = run("bench", "--sizes", "256,512", "--format", "json")
        assert code == 0
        assert [row["n"] for row in doc["rows"]] == [256, 512]
        assert doc["ops_ratio"] < 2.0

    def test_default_seed_stays_linear(self, run):
        code, doc = run("bench", "--sizes", "1024,4096", "--seed", "0", "--format", "json")
        assert code == 0 and doc["ops_ratio"] < 2.0

    def test_table(self, run):
        code, out = run("bench", "--sizes", "128", "--seed", "1")
        assert code == 0
        assert "ops_per_n" in out

    def test_sizes_too_small(self, run):
        code, doc = run("bench", "--sizes", "8")
        assert code == 1 and doc["error"] == "input"
