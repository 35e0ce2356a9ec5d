import os

import pytest

from hajosga.cli import main
from hajosga.digraph import complete_symmetric, parse_digraph, serialize_digraph, symmetric_cycle
from hajosga.lineage import PAPER_SCRIPT_TEXT, replay_script, parse_script


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


@pytest.fixture
def c5_file(tmp_path):
    return write(tmp_path / "c5.dg", serialize_digraph(symmetric_cycle(5)))


class TestRun:
    def test_same_seed_gives_identical_files(self, tmp_path):
        outs = []
        for tag in "ab":
            script, stats = tmp_path / f"{tag}.hsc", tmp_path / f"{tag}.csv"
            code = main(["run", "--seed", "17", "--max-gens", "12", "--stats-interval", "4",
                         "--out-script", str(script), "--stats", str(stats)])
            assert code == 1
            outs.append((script.read_bytes(), stats.read_bytes()))
        assert outs[0] == outs[1]
        rows = outs[0][1].decode().splitlines()
        assert rows[0] == "generation,best_fitness,mean_fitness,best_order,best_arc_count,population_mean_order"
        assert [r.split(",")[0] for r in rows[1:]] == ["4", "8", "12"]
        assert not list(tmp_path.glob("*.partial"))

    def test_zero_generations(self, tmp_path, capsys):
        script = tmp_path / "out.hsc"
        assert main(["run", "--seed", "1", "--max-gens", "0", "--out-script", str(script)]) == 1
        assert script.read_text() == ""
        mask = os.umask(0)
        os.umask(mask)
        assert script.stat().st_mode & 0o777 == 0o666 & ~mask
        assert "generations 0" in capsys.readouterr().out

    def test_seed_required(self):
        assert main(["run", "--max-gens", "0"]) == 2

    def test_bad_flags(self):
        with pytest.raises(SystemExit) as info:
            main(["run", "--seed", "-4"])
        assert info.value.code == 2
        assert main(["run", "--seed", "1", "--pop-size", "3", "--max-gens", "0"]) == 2

    def test_entropy_prints_seed(self, capsys):
        main(["run", "--entropy", "--max-gens", "0"])
        first = capsys.readouterr().out.splitlines()[0]
        assert first.startswith("seed ") and int(first.split()[1]) >= 0


class TestReplay:
    def test_builtin_script_is_c5(self, tmp_path, capsys):
        assert main(["paper-script"]) == 0
        path = write(tmp_path / "builtin.hsc", capsys.readouterr().out)
        assert main(["replay", path, "--expect-c5"]) == 0
        assert "16 operations" in capsys.readouterr().err

    def test_print_round_trips(self, tmp_path, capsys):
        path = write(tmp_path / "builtin.hsc", PAPER_SCRIPT_TEXT)
        assert main(["replay", path, "--print"]) == 0
        printed = parse_digraph(capsys.readouterr().out)
        assert printed == replay_script(parse_script(PAPER_SCRIPT_TEXT))

    def test_not_c5(self, tmp_path):
        path = write(tmp_path / "k3.hsc", "init G0 K 3\nresult G0\n")
        assert main(["replay", path, "--expect-c5"]) == 1
        assert main(["replay", path]) == 0

    def test_invalid_identify(self, tmp_path, capsys):
        path = write(tmp_path / "bad.hsc", "init G0 K 3\nidentify G1 = G0 0 1\nresult G1\n")
        assert main(["replay", path, "--expect-c5"]) == 3
        assert "step 2" in capsys.readouterr().err

    def test_parse_error(self, tmp_path):
        assert main(["replay", write(tmp_path / "x.hsc", "nonsense\n")]) == 3

    def test_missing_file(self, tmp_path):
        assert main(["replay", str(tmp_path / "absent.hsc")]) == 3

    def test_dot_output(self, tmp_path):
        path = write(tmp_path / "builtin.hsc", PAPER_SCRIPT_TEXT)
        dot = tmp_path / "out.dot"
        assert main(["replay", path, "--dot", str(dot)]) == 0
        assert dot.read_text().count("dir=both") == 5


class TestVerifyBuiltIn:
    def test_report(self, capsys):
        assert main(["verify-paper"]) == 0
        out = capsys.readouterr().out
        assert "operations 16" in out
        assert "stage D1: order 5, fitness 10.8" in out
        assert "final fitness 0" in out
        assert "FAIL" not in out


class TestFileCommands:
    def test_fitness_of_k3(self, tmp_path, capsys):
        path = write(tmp_path / "k3.dg", serialize_digraph(complete_symmetric(3)))
        assert main(["fitness", path]) == 0
        assert capsys.readouterr().out.splitlines()[-1] == "total 17"

    def test_dichromatic_c5(self, c5_file, capsys):
        assert main(["dichromatic", c5_file]) == 0
        assert capsys.readouterr().out.strip() == "3"
        assert main(["dichromatic", c5_file, "--critical", "3"]) == 0
        assert main(["dichromatic", c5_file, "--critical", "2"]) == 1

    def test_dichromatic_size_cap(self, tmp_path, capsys):
        path = write(tmp_path / "big.dg", "n 11\n")
        assert main(["dichromatic", path]) == 2
        assert "error" in capsys.readouterr().err

    def test_export_dot(self, c5_file, capsys):
        assert main(["export-dot", c5_file]) == 0
        out = capsys.readouterr().out
        assert out.count("dir=both") == 5 and out.count("->") == 5

    @pytest.mark.parametrize("cmd", ["fitness", "dichromatic", "export-dot"])
    def test_parse_failure(self, tmp_path, cmd):
        path = write(tmp_path / "bad.dg", "n 3\narc 0 0\n")
        assert main([cmd, path]) == 3
