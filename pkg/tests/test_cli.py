"""Command-line surface tests: formats, exit codes, config handling, goldens."""

import json
from pathlib import Path

import pytest

from patterned.cli import cli_dispatch
from patterned.serialize import parse_profile_json, profile_json
from patterned.core import profile

GOLDENS = Path(__file__).parent / "goldens"


def run(capsys, *argv):
    code = cli_dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_csv_header_and_rows(self, capsys):
        code, out, _ = run(capsys, "gen", "--limit", "13")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,digits,small_divisors,matches,match_count,patterned,turn"
        assert lines[1] == "1,1,1,1,1,true,L"
        assert lines[-1] == "13,1|3,1,1,1,true,L"
        assert len(lines) == 14  # header + the 13 qualifying numbers

    def test_limit_1_single_row(self, capsys):
        code, out, _ = run(capsys, "gen", "--limit", "1")
        assert code == 0
        assert out.splitlines()[1:] == ["1,1,1,1,1,true,L"]

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "gen", "--limit", "36", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["limit"] == 36
        for entry in payload["profiles"]:
            original = profile(entry["n"])
            assert parse_profile_json(entry) == original
            assert profile_json(original) == entry

    def test_missing_limit_is_validation_error(self, capsys):
        code, _, err = run(capsys, "gen")
        assert code == 2
        assert "limit" in err


class TestCount:
    def test_limit_100_reports_claim_side_by_side(self, capsys):
        code, out, _ = run(capsys, "count", "--limit", "100")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 69
        assert payload["density"] == pytest.approx(0.69)
        claim = payload["claim"]
        assert claim["count"] == 72
        assert claim["density"] == pytest.approx(0.72)
        assert claim["matches_computed"] is False
        assert claim["discrepancy"] == -3
        assert "double-counts" in claim["note"]

    def test_other_limits_have_no_claim(self, capsys):
        code, out, _ = run(capsys, "count", "--limit", "50")
        assert code == 0
        assert json.loads(out)["claim"] is None


class TestPrimes:
    def test_csv_groups(self, capsys):
        code, out, _ = run(capsys, "primes", "--limit", "100")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "p,group"
        patterned = [int(l.split(",")[0]) for l in lines[1:] if l.endswith("patterned")]
        assert patterned == [2, 3, 5, 7, 11, 13, 17, 19, 31, 41, 61, 71]

    def test_json_partition(self, capsys):
        code, out, _ = run(capsys, "primes", "--limit", "100", "--format", "json")
        payload = json.loads(out)
        assert payload["patterned"] == [2, 3, 5, 7, 11, 13, 17, 19, 31, 41, 61, 71]
        assert payload["gap"] == [23, 29, 37, 43, 47, 53, 59, 67, 73, 79, 83, 89, 97]

    def test_empty_output_keeps_header(self, capsys):
        code, out, _ = run(capsys, "primes", "--limit", "1")
        assert code == 0
        assert out == "p,group\n"


class TestTurns:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "turns", "--k", "12")
        lines = out.splitlines()
        assert lines[0] == "index,n,turn"
        assert lines[1] == "1,1,L"
        assert lines[12] == "12,12,R"


class TestCurve:
    def test_square_svg_example(self, capsys, tmp_path):
        out_file = tmp_path / "sq.svg"
        code, out, _ = run(capsys, "curve", "--word", "RRRR", "--out", str(out_file))
        assert code == 0
        svg = out_file.read_text()
        assert 'viewBox="-1 -2 3 3"' in svg
        assert svg.count("L ") == 4  # four line segments in the single path
        stats = json.loads(out)
        assert stats["bounded_region_count"] == 1
        assert stats["bounding_box"] == [0, -1, 1, 0]

    def test_svg_to_stdout_without_out(self, capsys):
        code, out, _ = run(capsys, "curve", "--word", "RRRR")
        assert code == 0
        assert out.startswith("<svg")

    def test_golden_curve_k12(self, capsys, tmp_path):
        out_file = tmp_path / "curve.svg"
        code, _, _ = run(capsys, "curve", "--k", "12", "--out", str(out_file))
        assert code == 0
        assert out_file.read_bytes() == (GOLDENS / "curve_k12.svg").read_bytes()

    def test_bad_word_rejected(self, capsys):
        code, _, err = run(capsys, "curve", "--word", "LXR")
        assert code == 2
        assert "word" in err


class TestSeahorseScan:
    def test_scan_finds_the_two_pinwheels(self, capsys):
        code, out, _ = run(capsys, "seahorse-scan", "--max-len", "12")
        assert code == 0
        assert out.splitlines() == [
            "word,length",
            "LLRLLRLLRLLR,12",
            "RRLRRLRRLRRL,12",
        ]

    def test_all_words_listing(self, capsys):
        code, out, _ = run(capsys, "seahorse-scan", "--max-len", "5", "--all-words")
        lines = out.splitlines()
        assert lines[0] == (
            "word,length,max_run_ok,single_region_ok,reflection_ok,is_seahorse"
        )
        assert len(lines) == 1 + (2**6 - 2)  # all words of length 1..5
        assert all(line.endswith("false") for line in lines[1:])


class TestDragon:
    def test_doubling_reported(self, capsys, tmp_path):
        out_file = tmp_path / "dragon.svg"
        code, out, _ = run(
            capsys, "dragon", "--word", "LLR", "--generations", "6",
            "--out", str(out_file),
        )
        assert code == 0
        stats = json.loads(out)
        assert stats["seed_segments"] == 3
        assert stats["segment_count"] == 3 * 2**6
        assert out_file.exists()

    def test_cap_exceeded_is_validation_error(self, capsys):
        code, _, err = run(
            capsys, "dragon", "--word", "LLR", "--generations", "10",
            "--max-edges", "64",
        )
        assert code == 2
        assert "cap" in err


class TestTessellate:
    PLACEMENTS = json.dumps(
        [{"rotation": r, "reflect": False, "translation": [0, 0]}
         for r in (0, 90, 180, 270)]
    )

    def test_four_rotations(self, capsys, tmp_path):
        out_file = tmp_path / "tess.svg"
        code, out, _ = run(
            capsys, "tessellate", "--word", "RRRR",
            "--placements", self.PLACEMENTS, "--out", str(out_file),
        )
        assert code == 0
        stats = json.loads(out)
        assert stats["tiles"] == 4
        assert stats["overlap_count"] == 4
        assert stats["bounded_region_count"] == 4
        svg = out_file.read_text()
        for i in range(4):
            assert f'id="tile-{i}"' in svg

    def test_placements_required(self, capsys):
        code, _, err = run(capsys, "tessellate", "--word", "RRRR")
        assert code == 2
        assert "placements" in err

    def test_bad_placement_keys_rejected(self, capsys):
        code, _, err = run(
            capsys, "tessellate", "--word", "RRRR",
            "--placements", '[{"spin": 90}]',
        )
        assert code == 2
        assert "unknown keys" in err


class TestDag:
    def test_contains_cluster_edge(self, capsys):
        code, out, _ = run(capsys, "dag", "--limit", "19")
        assert code == 0
        assert "11 -> 13" in out
        assert "fillcolor=lightblue" in out

    def test_golden_dag_limit19(self, capsys, tmp_path):
        out_file = tmp_path / "dag.dot"
        code, _, _ = run(capsys, "dag", "--limit", "19", "--out", str(out_file))
        assert code == 0
        assert out_file.read_bytes() == (GOLDENS / "dag_limit19.dot").read_bytes()

    def test_no_edges_flags(self, capsys):
        code, out, _ = run(capsys, "dag", "--limit", "19", "--no-chain", "--no-cluster")
        assert code == 0
        assert "->" not in out

    def test_gap_primes_flag(self, capsys):
        code, out, _ = run(capsys, "dag", "--limit", "30", "--gap-primes")
        assert code == 0
        assert "23 [shape=box, style=dashed];" in out


class TestWalk:
    def test_distribution_rows(self, capsys):
        code, out, _ = run(capsys, "walk", "--sites", "5", "--steps", "3")
        lines = out.splitlines()
        assert lines[0] == "step,site_1,site_2,site_3,site_4,site_5"
        assert len(lines) == 5  # header + steps 0..3
        for line in lines[1:]:
            cells = line.split(",")
            assert sum(float(c) for c in cells[1:]) == pytest.approx(1.0)

    def test_sites_from_limit(self, capsys):
        code, out, _ = run(capsys, "walk", "--limit", "12", "--steps", "0")
        assert out.splitlines()[0].count("site_") == 12

    def test_sites_or_limit_required(self, capsys):
        code, _, err = run(capsys, "walk", "--steps", "1")
        assert code == 2
        assert "sites or limit" in err


class TestModes:
    def test_spectrum_rows(self, capsys):
        code, out, _ = run(
            capsys, "modes", "--sites", "5", "--s", "0.5", "--g-l", "1", "--g-r", "0.5"
        )
        lines = out.splitlines()
        assert lines[0] == "index,eigenvalue,participation_ratio"
        assert len(lines) == 6
        values = [float(line.split(",")[1]) for line in lines[1:]]
        assert values == sorted(values)

    def test_byte_identical_across_runs(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for path in (a, b):
            code, _, _ = run(
                capsys, "modes", "--sites", "20", "--s", "0.7",
                "--g-l", "1", "--g-r", "0.5", "--out", str(path),
            )
            assert code == 0
        assert a.read_bytes() == b.read_bytes()


class TestSweep:
    def test_grid_rows(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--sites", "6", "--s-grid", "0,0.5,1",
            "--g-l", "1", "--g-r", "0.5",
        )
        lines = out.splitlines()
        assert lines[0] == "s,ground_energy,spectral_gap,ground_participation_ratio"
        assert len(lines) == 4
        assert [line.split(",")[0] for line in lines[1:]] == ["0", "0.5", "1"]

    def test_linspace_grid(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--sites", "4", "--s-grid", "0:1:5",
            "--g-l", "1", "--g-r", "1",
        )
        assert len(out.splitlines()) == 6

    def test_bad_grid_rejected(self, capsys):
        code, _, err = run(capsys, "sweep", "--sites", "4", "--s-grid", "0:1")
        assert code == 2


class TestConfig:
    def test_config_file_supplies_values(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"limit": 12}))
        code, out, _ = run(capsys, "gen", "--config", str(cfg))
        assert code == 0
        assert len(out.splitlines()) == 13

    def test_flag_overrides_config(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"limit": 12}))
        code, out, _ = run(capsys, "gen", "--config", str(cfg), "--limit", "1")
        assert code == 0
        assert len(out.splitlines()) == 2

    def test_unknown_config_key_rejected(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"limmit": 12}))
        code, _, err = run(capsys, "gen", "--config", str(cfg))
        assert code == 2
        assert "limmit" in err

    def test_missing_config_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "gen", "--config", str(tmp_path / "nope.json"))
        assert code == 2


class TestExitCodes:
    def test_validation_error_names_parameter(self, capsys):
        code, _, err = run(capsys, "gen", "--limit", "0")
        assert code == 2
        assert "limit" in err

    def test_argparse_rejects_unknown_flag(self, capsys):
        assert cli_dispatch(["gen", "--frobnicate"]) == 2
        capsys.readouterr()

    def test_help_exits_zero(self, capsys):
        assert cli_dispatch(["--help"]) == 0
        capsys.readouterr()

    def test_unwritable_path(self, capsys):
        code, _, _ = run(capsys, "gen", "--limit", "5", "--out", "/nonexistent/dir/x.csv")
        assert code == 2
