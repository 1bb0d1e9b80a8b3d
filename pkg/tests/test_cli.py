import csv
import io
import subprocess
import sys
from pathlib import Path

import pytest

from nullaug import GraphDataset, LabeledGraph, read_tudataset, write_tudataset
from nullaug.attributes import CSV_HEADER
from nullaug.cli import main
from nullaug.graph import complete_graph

MUTAG = Path(__file__).parent / "data" / "MUTAG"


@pytest.fixture
def triangle_dir(tmp_path):
    return write_tudataset(GraphDataset([LabeledGraph(complete_graph(3), 1)], "K3"), tmp_path / "K3")


class TestAugment:
    def test_one_k_on_mutag(self, tmp_path, capsys):
        args = ["augment", "--data", str(MUTAG), "--name", "MUTAG", "--strategy", "1k",
                "--alpha", "0.2", "--seed", "7", "--out", str(tmp_path)]
        assert main(args) == 0
        out_dir = tmp_path / "MUTAG_aug_1k"
        original = read_tudataset(MUTAG, "MUTAG")
        augmented = read_tudataset(out_dir, "MUTAG_aug_1k")
        assert len(augmented) == 188
        assert augmented.labels == original.labels
        for a, b in zip(original, augmented):
            assert a.graph.degrees() == b.graph.degrees()
        assert sum(a.graph != b.graph for a, b in zip(original, augmented)) > 150
        first = {p.name: p.read_bytes() for p in out_dir.iterdir()}
        assert main(args) == 0
        assert {p.name: p.read_bytes() for p in out_dir.iterdir()} == first
        assert "wrote 188 graphs" in capsys.readouterr().out

    def test_ada_reports_skips_and_failures(self, tmp_path, capsys):
        code = main(["augment", "--data", str(MUTAG), "--strategy", "ada-bc", "--iterations", "5",
                     "--seed", "1", "--out", str(tmp_path)])
        assert code == 0
        assert read_tudataset(tmp_path / "MUTAG_aug_ada-bc", "MUTAG_aug_ada-bc").labels == \
            read_tudataset(MUTAG, "MUTAG").labels

    def test_lna_flags_skipped_graphs(self, tmp_path, capsys):
        assert main(["augment", "--data", str(MUTAG), "--strategy", "lna", "--out", str(tmp_path)]) == 0
        assert "skipped, original kept" in capsys.readouterr().out

    def test_every_graph_failing_exits_2(self, triangle_dir, tmp_path, capsys):
        code = main(["augment", "--data", str(triangle_dir), "--strategy", "0k", "--out", str(tmp_path / "o")])
        assert code == 2
        assert "failed" in capsys.readouterr().out

    def test_missing_file_exits_1(self, triangle_dir, tmp_path, capsys):
        (triangle_dir / "K3_A.txt").unlink()
        code = main(["augment", "--data", str(triangle_dir), "--strategy", "1k", "--out", str(tmp_path)])
        assert code == 1
        assert "K3_A.txt" in capsys.readouterr().err

    def test_unknown_strategy_is_usage_error(self, triangle_dir):
        with pytest.raises(SystemExit) as info:
            main(["augment", "--data", str(triangle_dir), "--strategy", "3k", "--out", "x"])
        assert info.value.code == 2


class TestStats:
    def test_mutag(self, capsys):
        assert main(["stats", "--data", str(MUTAG)]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("graphs=188 classes=2 avg_nodes=17.93")
        rows = list(csv.reader(io.StringIO("\n".join(lines[1:]))))
        assert rows[0] == CSV_HEADER and len(rows) == 189

    def test_triangle(self, triangle_dir, tmp_path, capsys):
        target = tmp_path / "attrs.csv"
        assert main(["stats", "--data", str(triangle_dir), "--csv", str(target)]) == 0
        assert capsys.readouterr().out.strip() == "graphs=1 classes=1 avg_nodes=3.00 avg_edges=3.00"
        assert target.read_text().splitlines()[1].startswith("1,3,3,2.0,0.0,2,1.0,0.0,1.5,")

    def test_unreadable_directory(self, tmp_path, capsys):
        assert main(["stats", "--data", str(tmp_path / "nope")]) == 1
        assert "error:" in capsys.readouterr().err


class TestEval:
    def test_mutag_rows(self, tmp_path, capsys):
        out = tmp_path / "r" / "report.csv"
        code = main(["eval", "--data", str(MUTAG), "--name", "MUTAG", "--strategies", "0k,1k,2k,lna",
                     "--alpha", "0.2", "--split", "7:1:2", "--seed", "7", "--out", str(out)])
        assert code == 0
        printed = capsys.readouterr().out
        assert printed.splitlines()[0] == "split train=131 val=19 test=38"
        rows = list(csv.reader(io.StringIO(out.read_text())))
        assert [r[0] for r in rows] == ["strategy", "none", "0k", "1k", "2k", "lna"]
        for _, ori, aug, gain, _ in rows[1:]:
            assert float(gain) == pytest.approx((float(aug) - float(ori)) / float(ori), abs=1e-12)
        first = out.read_bytes()
        main(["eval", "--data", str(MUTAG), "--name", "MUTAG", "--strategies", "0k,1k,2k,lna",
              "--alpha", "0.2", "--split", "7:1:2", "--seed", "7", "--out", str(out)])
        assert out.read_bytes() == first

    def test_split_flag(self, capsys):
        assert main(["eval", "--data", str(MUTAG), "--strategies", "1k", "--split", "6:2:2"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "split train=112 val=38 test=38"

    def test_all_strategies_failing_exits_2(self, tmp_path, capsys):
        ds = GraphDataset([LabeledGraph(complete_graph(4), i % 2) for i in range(10)], "KK")
        write_tudataset(ds, tmp_path)
        assert main(["eval", "--data", str(tmp_path), "--name", "KK", "--strategies", "0k"]) == 2
        assert "strategy 0k failed" in capsys.readouterr().err


def test_module_entry_point(triangle_dir):
    proc = subprocess.run([sys.executable, "-m", "nullaug", "stats", "--data", str(triangle_dir)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("graphs=1 classes=1")
