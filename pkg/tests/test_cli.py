import json

import pytest

import sscaug.cli as cli
from sscaug import DiGraph, format_edge_list, read_edge_list


@pytest.fixture
def chain_file(tmp_path):
    path = tmp_path / "chain.txt"
    path.write_text("3\n0 1\n1 2\n")
    return str(path)


@pytest.fixture
def fixture_file(tmp_path):
    g = DiGraph.from_edges(6, [(1, 0), (2, 0), (3, 1), (4, 3), (0, 4), (4, 2)])
    path = tmp_path / "net.txt"
    path.write_text(format_edge_list(g))
    return str(path)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBounds:
    def test_chain_both_bounds_reach_n(self, capsys, chain_file):
        code, out, _ = run_cli(capsys, "bounds", "--graph", chain_file, "--leaders", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["zf_bound"] == 3 and payload["pmi_bound"] == 3
        assert payload["sequence"]["nodes"] == [2, 1, 0]

    def test_empty_graph_bounds_equal_leader_count(self, capsys, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("4\n")
        code, out, _ = run_cli(capsys, "bounds", "--graph", str(path), "--leaders", "0,2")
        payload = json.loads(out)
        assert code == 0
        assert payload["zf_bound"] == 2 and payload["pmi_bound"] == 2

    def test_dl_file_reports_published_length(self, capsys, tmp_path):
        path = tmp_path / "vectors.txt"
        path.write_text("0 3\n1 0\n1 4\n2 1\n2 2\n")
        code, out, _ = run_cli(capsys, "bounds", "--dl-file", str(path))
        payload = json.loads(out)
        assert code == 0
        assert payload["pmi_bound"] == 5

    def test_dl_file_accepts_inf(self, capsys, tmp_path):
        path = tmp_path / "vectors.txt"
        path.write_text("0 inf\n1 0\n")
        code, out, _ = run_cli(capsys, "bounds", "--dl-file", str(path))
        assert code == 0 and json.loads(out)["pmi_bound"] == 2

    def test_missing_inputs_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "bounds")
        assert code == 1 and "required" in err

    def test_leader_out_of_range_is_parse_error(self, capsys, chain_file):
        code, _, err = run_cli(capsys, "bounds", "--graph", chain_file, "--leaders", "9")
        assert code == 2 and "out of range" in err

    def test_malformed_graph_reports_line(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("3\n0 1\n0 bogus\n")
        code, _, err = run_cli(capsys, "bounds", "--graph", str(path), "--leaders", "0")
        assert code == 2 and "line 3" in err


class TestAugment:
    def test_zf_bound_writes_verified_outputs(self, capsys, chain_file, tmp_path):
        out_dir = tmp_path / "out"
        code, out, _ = run_cli(
            capsys, "augment", "--graph", chain_file, "--leaders", "2",
            "--bound", "zf", "--out", str(out_dir), "--format", "dot",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["edges_after"] == 5
        written = read_edge_list(out_dir / "augmented_edges.txt")
        assert written.edge_count == 5
        # the reloaded graph re-verifies the preserved bound
        from sscaug import zf_bound

        assert zf_bound(written, [2]) == payload["bound_value"]
        assert json.loads((out_dir / "result.json").read_text()) == payload
        assert "color=red" in (out_dir / "augmented.dot").read_text()

    def test_published_25_edge_total(self, capsys, tmp_path):
        # six nodes, two leaders, derived set of four
        path = tmp_path / "six.txt"
        path.write_text("6\n2 0\n3 1\n4 2\n5 2\n")
        code, out, _ = run_cli(
            capsys, "augment", "--graph", str(path), "--leaders", "0,1", "--bound", "zf"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["bound_value"] == 4
        assert payload["edges_after"] == 25

    def test_distance_bound_echoes_sequence(self, capsys, fixture_file):
        code, out, _ = run_cli(
            capsys, "augment", "--graph", fixture_file, "--leaders", "0,1",
            "--bound", "distance", "--repeats", "4", "--seed", "7",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["bound_kind"] == "distance"
        assert payload["sequence"]["nodes"] == [0, 1, 2, 3, 4]
        assert payload["edges_after"] >= payload["edges_before"]

    def test_more_repeats_never_worse(self, capsys, fixture_file):
        counts = {}
        for repeats in ("1", "8"):
            code, out, _ = run_cli(
                capsys, "augment", "--graph", fixture_file, "--leaders", "0,1",
                "--bound", "distance", "--repeats", repeats, "--seed", "3",
            )
            assert code == 0
            counts[repeats] = json.loads(out)["edges_after"]
        assert counts["8"] >= counts["1"]

    def test_broken_verification_exits_three(self, capsys, chain_file, monkeypatch):
        from sscaug.zero_forcing import AugmentResult

        def fake_augment(g, leaders):
            return AugmentResult(
                n=g.n, leaders=tuple(leaders), bound_kind="zf", bound_value=3,
                edges_after=frozenset([(0, 1), (0, 2), (1, 2)]) | g.edges,
                added=((0, 2),), edges_before=g.edge_count,
            )

        monkeypatch.setattr(cli, "augment_zf", fake_augment)
        code, _, err = run_cli(
            capsys, "augment", "--graph", chain_file, "--leaders", "2", "--bound", "zf"
        )
        assert code == 3 and "verification" in err

    def test_unknown_bound_is_usage_error(self, capsys, chain_file):
        code, _, _ = run_cli(
            capsys, "augment", "--graph", chain_file, "--leaders", "2", "--bound", "nope"
        )
        assert code == 1


class TestDpea:
    def test_path_graph_levels(self, capsys, chain_file):
        code, out, _ = run_cli(
            capsys, "dpea", "--graph", chain_file, "--source", "0", "--target", "2"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["preserved_distance"] == 2
        assert payload["levels"] == [0, 1, 2]
        assert payload["edges_after"] == 5

    def test_unreachable_pair_is_parse_error(self, capsys, chain_file):
        code, _, err = run_cli(
            capsys, "dpea", "--graph", chain_file, "--source", "2", "--target", "0"
        )
        assert code == 2 and "infinite" in err

    def test_source_out_of_range(self, capsys, chain_file):
        code, _, _ = run_cli(
            capsys, "dpea", "--graph", chain_file, "--source", "9", "--target", "0"
        )
        assert code == 2


class TestValidate:
    def test_chain_validates_clean(self, capsys, chain_file):
        code, out, _ = run_cli(
            capsys, "validate", "--graph", chain_file, "--leaders", "2",
            "--samples", "4", "--seed", "5",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["violations"] == []
        assert payload["sampled_ranks"] == [3, 3, 3, 3]


class TestBench:
    def test_csv_to_stdout_and_file_match(self, capsys, tmp_path):
        args = ["bench", "--n", "8", "--p", "0.2", "--trials", "2",
                "--leader-counts", "1-2", "--seed", "3"]
        code, out, _ = run_cli(capsys, *args)
        assert code == 0
        target = tmp_path / "rows.csv"
        code2, _, _ = run_cli(capsys, *args, "--out", str(target))
        assert code2 == 0
        assert target.read_text() == out

    def test_leader_count_range_syntax(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--n", "6", "--p", "0.3", "--trials", "1",
            "--leader-counts", "1,3-4", "--seed", "1",
        )
        assert code == 0
        rows = [line for line in out.splitlines() if not line.startswith("#")]
        assert [r.split(",")[0] for r in rows[1:]] == ["1", "3", "4"]


class TestDeterminism:
    COMMANDS = [
        ("bounds", "--graph", "{g}", "--leaders", "0,1"),
        ("augment", "--graph", "{g}", "--leaders", "0,1", "--bound", "distance",
         "--seed", "11", "--repeats", "2"),
        ("dpea", "--graph", "{g}", "--source", "1", "--target", "0"),
        ("validate", "--graph", "{g}", "--leaders", "0,1", "--samples", "3",
         "--seed", "11"),
        ("bench", "--n", "7", "--p", "0.25", "--trials", "2",
         "--leader-counts", "1-2", "--seed", "11"),
    ]

    @pytest.mark.parametrize("template", COMMANDS, ids=lambda t: t[0])
    def test_repeat_runs_byte_identical(self, capsys, fixture_file, template):
        argv = [tok.format(g=fixture_file) for tok in template]
        code1, out1, _ = run_cli(capsys, *argv)
        code2, out2, _ = run_cli(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2
