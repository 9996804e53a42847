import json

import pytest

from gausscode.cli import main
from gausscode.maps_core import map_from_json
from gausscode.words import cyclic_equal, parse_paragraph

W8 = "1 2 3 4 2 1 4 3"
COUNTER = "1 2 3 4 5 3 4 1 2 5"


class TestCheck:
    def test_gauss_exit_zero(self, capsys):
        assert main(["check", W8]) == 0
        assert "gauss" in capsys.readouterr().out

    def test_not_gauss_exit_one(self, capsys):
        assert main(["check", COUNTER]) == 1
        assert "not-gauss" in capsys.readouterr().out

    def test_bad_input_exit_two(self, capsys):
        assert main(["check", "1"]) == 2
        err = capsys.readouterr().err
        assert "'1'" in err

    def test_json_report(self, capsys):
        assert main(["check", "--json", W8]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["verdict"] == "gauss"
        assert report["genus"] == 0
        assert report["diagnostics"]["bipartite"] is True
        assert report["diagnostics"]["sv_planar"] is True
        assert "free_choices" in report["diagnostics"]
        assert cyclic_equal(
            parse_paragraph(report["traced"]), parse_paragraph(report["input"])
        )

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(W8))
        assert main(["check"]) == 0

    def test_file_input(self, tmp_path):
        f = tmp_path / "word.txt"
        f.write_text("1 2\n1 2\n")
        assert main(["check", "-f", str(f)]) == 0


class TestEmbed:
    def test_json_rotation_system(self, capsys):
        assert main(["embed", "1 1", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        m, sign = map_from_json(json.dumps(doc))
        assert m.n_vertices == 1
        assert len(m.vertex_cycles[0]) == 4
        assert doc["genus"] == 0
        assert sign is not None

    def test_json_round_trips_through_make_map(self, capsys):
        assert main(["embed", W8, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        m, _ = map_from_json(json.dumps(doc))
        assert m.n_vertices == 4  # one crossing per character
        assert m.n_edges == 8

    def test_dot_output(self, capsys):
        assert main(["embed", W8, "--dot"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("digraph")
        assert out.count("v0") + out.count("v1") + out.count("v2") > 0
        assert out.count("->") == 4  # oriented Seifert map has 4 edges

    def test_svg_output(self, capsys):
        assert main(["embed", W8, "--svg"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("<svg")
        assert out.count("<polyline") == 1  # a single closed curve
        assert out.count("<circle") == 4

    def test_svg_two_curves(self, capsys):
        assert main(["embed", "1 2 / 1 2", "--svg"]) == 0
        assert capsys.readouterr().out.count("<polyline") == 2

    def test_mirror_differs_only_by_reversed_rotations(self, capsys):
        assert main(["embed", W8, "--json"]) == 0
        plain = json.loads(capsys.readouterr().out)
        assert main(["embed", W8, "--json", "--mirror"]) == 0
        mirrored = json.loads(capsys.readouterr().out)

        def norm(c):
            k = c.index(min(c))
            return tuple(c[k:] + c[:k])

        got = {norm(list(reversed(c))) for c in mirrored["vertices"]}
        want = {norm(c) for c in plain["vertices"]}
        assert got == want
        assert plain["alpha"] == mirrored["alpha"]

    def test_not_realizable_exit_one(self):
        assert main(["embed", COUNTER]) == 1

    def test_output_file(self, tmp_path, capsys):
        out = tmp_path / "m.json"
        assert main(["embed", "1 1", "--json", "-o", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["genus"] == 0


class TestEnumerateOracleGen:
    def test_enumerate(self, capsys):
        assert main(["enumerate", "1 1 2 2"]) == 0
        assert "2 plane embedding(s)" in capsys.readouterr().out

    def test_enumerate_not_realizable(self, capsys):
        assert main(["enumerate", COUNTER]) == 1

    def test_oracle(self, capsys):
        assert main(["oracle", "1 2 1 2"]) == 1
        assert "min_genus 1" in capsys.readouterr().out
        assert main(["oracle", W8]) == 0
        out = capsys.readouterr().out
        assert "min_genus 0" in out and "plane_count 2" in out

    def test_oracle_guard(self, capsys):
        assert main(["oracle", "--max-vertices", "2", "1 2 3 1 2 3"]) == 2

    def test_gen_then_check(self, capsys):
        assert main(["gen", "100", "42"]) == 0
        word = capsys.readouterr().out.strip()
        assert main(["check", word]) == 0

    def test_gen_seed_env(self, capsys, monkeypatch):
        monkeypatch.setenv("GAUSS_SEED", "7")
        assert main(["gen", "10"]) == 0
        a = capsys.readouterr().out
        assert main(["gen", "10", "7"]) == 0
        assert a == capsys.readouterr().out

    def test_gen_pipe_many_seeds(self, capsys):
        for seed in range(50):
            assert main(["gen", "12", str(seed)]) == 0
            word = capsys.readouterr().out.strip()
            assert main(["check", word]) == 0
            capsys.readouterr()


class TestBench:
    def test_smoke(self, capsys):
        assert main(["bench", "--sizes", "8,16", "--repeats", "1"]) == 0
        out = capsys.readouterr().out
        assert "backend" in out
        assert "ratio" in out

    def test_compare_backends(self, capsys):
        assert main(["bench", "--sizes", "8", "--repeats", "1", "--backend", "both"]) == 0
        out = capsys.readouterr().out
        assert out.count("backend") >= 1
