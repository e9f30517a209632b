import json
import subprocess
import sys

import pytest

from figures import split8_a
from scsplit.cli import build_from_spec, main
from scsplit.constructors import FIG_A, FIG_B, build_Zk
from scsplit.graph import find_antimorphism, graph6_read, graph6_write, is_isomorphic, path_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCount:
    def test_default_table(self, capsys):
        code, out, _ = run(capsys, "count")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split()[1:] == ["4", "5", "8", "9", "12", "13", "16", "17", "20", "21"]
        assert lines[1].split()[-1] == "9608"
        assert lines[2].split()[-1] == "9826"

    def test_ranges_and_json(self, capsys):
        code, out, _ = run(capsys, "count", "4-5", "8,9", "--json")
        assert code == 0
        rows = json.loads(out)
        assert [r["n"] for r in rows] == [4, 5, 8, 9]
        assert [r["pseudo_split"] for r in rows] == [1, 2, 3, 4]

    def test_family(self, capsys):
        _, out, _ = run(capsys, "--json", "count", "12", "--family", "split")
        assert json.loads(out) == [{"n": 12, "split": 16}]

    def test_bad_order(self, capsys):
        code, out, err = run(capsys, "count", "x")
        assert code == 2 and out == ""
        assert err.startswith("scsplit count: error:")


class TestBuild:
    @pytest.mark.parametrize("spec, ref", [
        ("zk:2", FIG_B),
        ("gibbs:k=1,d=2", path_graph(4)),
        ("elementary:P4", path_graph(4)),
        ("zk:k=3", build_Zk(3)),
    ])
    def test_specs(self, capsys, spec, ref):
        code, out, _ = run(capsys, "build", spec)
        assert code == 0
        assert is_isomorphic(graph6_read(out.strip()), ref) is not None

    def test_gibbs_k2_is_an_order8_prototype(self):
        g = build_from_spec("gibbs:k=2,d=5")
        assert is_isomorphic(g, FIG_A) or is_isomorphic(g, FIG_B)

    def test_witnesses_are_not_sc(self):
        for spec in ["witness1:2", "witness2:k=3,d=8", "witness4:k1=1,k2=1,d=5,n=8", "circ:3"]:
            assert find_antimorphism(build_from_spec(spec)) is None

    def test_json(self, capsys):
        _, out, _ = run(capsys, "build", "zk:2", "--json")
        data = json.loads(out)
        assert data["n"] == 8 and data["degree_sequence"] == "5^4,2^4"

    @pytest.mark.parametrize("spec", ["zk", "zk:x", "gibbs:k=2", "gibbs:k=2,d=9", "nope:3", "witness4:k1=1,k2=1,d=4,n=8"])
    def test_errors(self, capsys, spec):
        code, out, err = run(capsys, "build", spec)
        assert code == 2 and out == ""
        assert err.startswith("scsplit build: error:")


class TestCheck:
    def test_from_file(self, capsys, tmp_path):
        src = tmp_path / "in.g6"
        src.write_text(graph6_write(split8_a()) + "\n\n" + graph6_write(path_graph(3)) + "\n")
        code, out, _ = run(capsys, "check", "--in", str(src), "--json")
        assert code == 0
        first, second = json.loads(out)
        assert first["self_complementary"] and first["split"] == {"K": [0, 1, 2, 3], "I": [4, 5, 6, 7]}
        assert first["forcibly_sc"] is True
        assert first["partition"]["diamond_self_complementary"] is True
        assert first["partition"]["rectangle"] is None
        assert second["self_complementary"] is False

    def test_selected_checks_text(self, capsys, tmp_path):
        src = tmp_path / "in.g6"
        src.write_text("Dhc\n")  # C5
        code, out, _ = run(capsys, "check", "--in", str(src), "--checks", "sc,pseudo-split")
        assert code == 0
        assert "self-complementary: yes" in out
        assert "pseudo-split: K=[] I=[] C=[0, 1, 2, 3, 4]" in out
        assert "split: no" not in out.replace("pseudo-split", "")

    def test_rectangle_reported(self, capsys, tmp_path):
        src = tmp_path / "in.g6"
        src.write_text(graph6_write(build_Zk(2)) + "\n")
        _, out, _ = run(capsys, "--json", "check", "--in", str(src), "--checks", "partition")
        (r,) = json.loads(out)
        assert r["partition"]["rectangle"] == [[4, 5], [0, 1], [2, 3], [6, 7]]

    def test_bad_input(self, capsys, tmp_path):
        src = tmp_path / "in.g6"
        src.write_text("!!!\n")
        code, _, err = run(capsys, "check", "--in", str(src))
        assert code == 2 and "line 1" in err
        code, _, err = run(capsys, "check", "--in", str(tmp_path / "missing.g6"))
        assert code == 2
        code, _, err = run(capsys, "check", "--in", str(src), "--checks", "bogus")
        assert code == 2


class TestCensus:
    def test_split8(self, capsys):
        code, out, err = run(capsys, "census", "8", "--threads", "1")
        assert code == 0
        lines = out.split()
        assert len(lines) == 3 and lines == sorted(lines)
        assert "3 graphs" in err

    def test_deterministic_and_out_file(self, capsys, tmp_path):
        dest = tmp_path / "c.g6"
        run(capsys, "census", "9", "--filter", "pseudo-split", "--threads", "1", "--out", str(dest))
        first = dest.read_text()
        run(capsys, "census", "9", "--filter", "pseudo-split", "--threads", "2", "--out", str(dest))
        assert dest.read_text() == first
        assert len(first.split()) == 4

    def test_json(self, capsys):
        _, out, _ = run(capsys, "census", "5", "--filter", "all", "--json")
        data = json.loads(out)
        assert data["count"] == 2 and data["filter"] == "all"

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "census", "10", "--filter", "all")
        assert code == 2 and "scsplit census: error:" in err


class TestRealizations:
    def test_order8_pair(self, capsys):
        code, out, err = run(capsys, "realizations", "5^4,2^4")
        assert code == 0
        rows = [ln.split("\t") for ln in out.splitlines()]
        assert len(rows) == 2 and all(tag == "SC" for _, tag in rows)
        assert "2 realizations" in err

    def test_mixed(self, capsys):
        _, out, _ = run(capsys, "realizations", "4^4,3^4", "--json")
        data = json.loads(out)
        flags = [r["self_complementary"] for r in data["realizations"]]
        assert True in flags and False in flags

    def test_bad(self, capsys):
        code, _, _ = run(capsys, "realizations", "3^2,x")
        assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "scsplit", "count", "4", "--family", "split"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].split()[-1] == "1"


def test_missing_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
