"""CLI surface: formats, exit codes, report files, README examples."""

import json
import re
from pathlib import Path

import pytest

from pathlattice.cli import main
from pathlattice.report import write_whitney_report

README = Path(__file__).resolve().parents[1] / "README.md"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--steps", "-1,1", "--length", "8",
                           "--format", "count")
        assert code == 0 and out.strip() == "14"

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--steps", "-1,1", "--length", "4",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 2
        assert {"heights": [0, 1, 0, 1, 0]} in payload["paths"]

    def test_text_has_words(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--steps", "-1,1", "--length", "4")
        assert code == 0 and "UUDD" in out

    def test_empty_result(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--steps", "-1,1", "--length", "3")
        assert code == 0 and "no paths" in out

    def test_guard_and_force(self, capsys):
        code, _, err = run(capsys, "enumerate", "--steps", "-1,1", "--length", "18",
                           "--format", "count")
        assert code == 1 and "--force" in err
        code, out, _ = run(capsys, "enumerate", "--steps", "-1,1", "--length", "18",
                           "--format", "count", "--force")
        assert code == 0 and out.strip() == "4862"


class TestCheck:
    def test_interval_text(self, capsys):
        code, out, _ = run(capsys, "check", "--steps", "-1,0,1")
        assert code == 0
        assert out.splitlines()[0] == "coordinatewise lattice: yes (interval)"

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "check", "--steps", "-1,1,2", "--format", "json")
        payload = json.loads(out)
        assert payload["holds"] is False
        assert payload["witness"] == 0
        assert payload["shortcut"] == "none"
        assert payload["diameter"] == 3

    def test_witness_printed(self, capsys):
        code, out, _ = run(capsys, "check", "--steps", "-1,0,2")
        assert "coordinatewise lattice: no" in out
        assert "witness step value: 1" in out

    def test_closure_oracle_flag(self, capsys):
        code, out, _ = run(capsys, "check", "--steps", "-1,0,2", "--closure-upto", "4")
        assert code == 0 and "closure at length 4: violated" in out

    def test_threads_flag_same_output(self, capsys):
        base = run(capsys, "check", "--steps", "-1,0,1", "--closure-upto", "7")
        threaded = run(capsys, "--threads", "4", "check", "--steps", "-1,0,1",
                       "--closure-upto", "7")
        assert base == threaded and base[0] == 0

    def test_unbounded(self, capsys):
        code, out, _ = run(capsys, "check", "--steps", "-1,0", "--unbounded-above")
        assert code == 0 and "yes (interval)" in out

    def test_bad_steps_exit_code(self, capsys):
        code, _, err = run(capsys, "check", "--steps", "nope")
        assert code == 1 and "error:" in err


class TestLattice:
    def test_json_roundtrip_flag(self, capsys):
        code, out, err = run(capsys, "lattice", "--family", "dyck", "--n", "4",
                             "--format", "json", "--verify-roundtrip")
        assert code == 0
        payload = json.loads(out)
        assert payload["size"] == 14
        assert "roundtrip: ok" in err

    def test_dot_output(self, capsys):
        code, out, _ = run(capsys, "lattice", "--family", "dyck", "--n", "3",
                           "--format", "dot")
        assert code == 0
        assert out.startswith("digraph hasse")
        assert out.count("->") == 5
        assert "UUUDDD" in out

    def test_text_summary(self, capsys):
        code, out, _ = run(capsys, "lattice", "--family", "schroeder", "--n", "3")
        assert code == 0
        assert "elements: 22" in out and "lattice: yes" in out

    def test_gamma_family(self, capsys):
        code, out, _ = run(capsys, "lattice", "--family", "gamma", "--steps", "-1,0,2",
                           "--length", "4")
        assert code == 0 and "elements: 5" in out

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "d3.dot"
        code, out, _ = run(capsys, "lattice", "--family", "dyck", "--n", "3",
                           "--format", "dot", "--out", str(target))
        assert code == 0 and target.read_text().startswith("digraph")


class TestEco:
    def test_levels(self, capsys):
        code, out, _ = run(capsys, "eco", "--rule", "catalan", "--depth", "4")
        assert code == 0 and out.strip() == "1,2,5,14"

    def test_schroeder_levels(self, capsys):
        code, out, _ = run(capsys, "eco", "--rule", "schroeder", "--depth", "4")
        assert code == 0 and out.strip() == "1,2,6,22"

    def test_partition(self, capsys):
        code, out, _ = run(capsys, "eco", "--family", "dyck", "--n", "4", "--partition")
        assert code == 0
        assert "saturated chains: 5" in out
        assert "UUUDDD" in out

    def test_motzkin_report(self, capsys):
        code, out, _ = run(capsys, "eco", "--family", "motzkin", "--n", "5")
        assert code == 0
        assert "path counts by length: 1,1,2,4,9,21" in out
        assert "non-saturated chain witness" in out


class TestConstruct:
    def test_verified_line(self, capsys):
        code, out, _ = run(capsys, "construct", "--family", "dyck", "--n", "4")
        assert code == 0
        assert "β_3(D_3) ≅ D_4: verified (14 elements)" in out

    def test_step_lines(self, capsys):
        code, out, _ = run(capsys, "construct", "--family", "dyck", "--n", "3")
        assert "step 1: filter size 2, lattice size 4" in out
        assert "step 2: filter size 1, lattice size 5" in out

    def test_dot_format(self, capsys):
        code, out, err = run(capsys, "construct", "--family", "dyck", "--n", "3",
                             "--format", "dot")
        assert code == 0 and out.startswith("digraph") and "verified" in err


class TestWhitney:
    def test_single_n(self, capsys):
        code, out, _ = run(capsys, "whitney", "--family", "dyck", "--n", "4")
        assert code == 0
        assert "counts: 1,3,3,3,2,1,1" in out
        assert "n=4: unimodal" in out

    def test_upto_lines(self, capsys):
        code, out, _ = run(capsys, "whitney", "--family", "dyck", "--n", "6", "--upto")
        lines = [l for l in out.splitlines() if l.startswith("n=")]
        assert len(lines) == 6

    def test_report_files(self, capsys, tmp_path):
        code, out, err = run(capsys, "whitney", "--family", "dyck", "--n", "6",
                             "--upto", "--report", str(tmp_path / "rep"))
        assert code == 0
        rep = tmp_path / "rep"
        assert (rep / "whitney_counts.csv").exists()
        assert (rep / "whitney_summary.csv").exists()
        assert (rep / "whitney_counts.png").exists()
        assert (rep / "whitney_ranks.png").exists()
        header = (rep / "whitney_summary.csv").read_text().splitlines()[0]
        assert header == "n,num_ranks,total,unimodal,peak_rank"


class TestExitCodes:
    def test_unknown_flag(self, capsys):
        assert run(capsys, "enumerate", "--bogus")[0] == 1

    def test_domain_error(self, capsys):
        assert run(capsys, "lattice", "--family", "dyck", "--n", "25")[0] == 1

    def test_verification_failure_maps_to_two(self, capsys, monkeypatch):
        # a falsified structural claim must surface as exit code 2
        from pathlattice.doubling import doubling_sequence

        monkeypatch.setattr(
            "pathlattice.cli.doubling.verify_recursive_construction",
            lambda n: (False, None, doubling_sequence(n)),
        )
        code, out, err = run(capsys, "construct", "--family", "dyck", "--n", "3")
        assert code == 2 and "FALSIFIED" in out and "verification failure" in err


class TestReportModule:
    def test_rows_and_files(self, tmp_path):
        written = write_whitney_report(range(1, 5), tmp_path)
        counts = (tmp_path / "whitney_counts.csv").read_text().splitlines()
        assert counts[0] == "n,rank,count"
        assert "4,0,1" in counts  # rank 0 of n=4 has one path
        assert set(written) == {"counts", "summary", "distributions", "ranks"}


class TestReadmeExamples:
    """Every console example in the README must reproduce its output."""

    def test_readme_blocks(self, capsys):
        text = README.read_text()
        blocks = re.findall(r"```console\n(.*?)```", text, flags=re.S)
        assert blocks, "README has no console examples"
        for block in blocks:
            lines = block.rstrip("\n").split("\n")
            i = 0
            while i < len(lines):
                assert lines[i].startswith("$ pathlattice "), lines[i]
                argv = lines[i][len("$ pathlattice "):].split()
                expected = []
                i += 1
                while i < len(lines) and not lines[i].startswith("$ "):
                    expected.append(lines[i])
                    i += 1
                code, out, err = run(capsys, *argv)
                assert code == 0, (argv, err)
                got = out.rstrip("\n").split("\n")
                assert got == expected, (argv, got, expected)
