import io
import json
import subprocess
import sys

import pytest

from lapdiam.cli import main
from lapdiam.graph6 import parse_graph6


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def run_json(argv):
    code, text = run(argv)
    assert code == 0
    return json.loads(text)


def test_spectrum_complete():
    doc = run_json(["spectrum", "--family", "complete:3"])
    assert doc["spectrum"] == [3.0, 3.0, 0.0]
    assert doc["char_poly"] == ["0", "9", "-6", "1"]
    assert doc["n"] == 3 and doc["diameter"] == 1
    assert doc["edges"] == [[0, 1], [0, 2], [1, 2]]


def test_spectrum_k1_and_disconnected():
    assert run_json(["spectrum", "--graph6", "@"])["spectrum"] == [0.0]
    doc = run_json(["spectrum", "--graph6", "A?"])
    assert doc["diameter"] == "infinite" and doc["spectrum"] == [0.0, 0.0]


def test_spectrum_g7321_fifth_eigenvalue():
    doc = run_json(["spectrum", "--family", "g_ndra:7,3,2,1"])
    # middle root of x^3 - 12x^2 + 42x - 42
    assert doc["spectrum"][4] == pytest.approx(3.66012311337682, abs=1e-11)
    # x (x-6)^3 (x^3 - 12x^2 + 42x - 42), ascending
    assert doc["char_poly"] == ["0", "9072", "-13608", "7884", "-2310", "366", "-30", "1"]


@pytest.mark.parametrize(
    "argv, count",
    [
        (["--family", "complete_minus_edge:5", "--lo", "5", "--hi", "5"], 3),
        (["--family", "path:6", "--lo", "1", "--hi", "6"], 4),
        (["--family", "r2", "--lo", "1", "--hi", "7"], 5),
        (["--family", "r1", "--lo", "2", "--hi", "8"], 6),
        (["--family", "complete:3", "--lo", "0", "--hi", "3", "--hi-open"], 1),
        (["--family", "complete:3", "--lo", "0", "--hi", "3", "--lo-open"], 2),
        (["--graph6", "Bg", "--lo", "1/2", "--hi", "7/2"], 2),
    ],
)
def test_count(argv, count):
    assert run_json(["count"] + argv)["count"] == count


def test_count_echoes_interval():
    doc = run_json(["count", "--family", "path:4", "--lo", "2/4", "--hi", "3", "--lo-open"])
    assert doc["interval"] == {"lo": "1/2", "hi": "3", "lo_closed": False, "hi_closed": True}


@pytest.mark.parametrize(
    "argv, message",
    [
        (["count", "--family", "path:4", "--lo", "1.5", "--hi", "3"], "1.5"),
        (["count", "--family", "path:4", "--lo", "3", "--hi", "1"], ""),
        (["count", "--family", "path:4", "--graph6", "Bg", "--lo", "0", "--hi", "1"], "exactly one"),
        (["spectrum", "--graph6", "B"], "truncated"),
        (["spectrum", "--family", "g_ndt:7,3,9"], "2 ≤ t ≤ d"),
        (["verify", "--builtin", "6", "--checks", "T9"], "valid names"),
        (["verify", "--builtin", "9"], "n ≤ 7"),
        (["verify", "--checks", "all"], "exactly one graph source"),
        (["verify", "--graph6-file", "/nonexistent.g6"], "no such corpus file"),
        (["verify", "--builtin", "5", "--jobs", "0"], "--jobs"),
        (["family", "--name", "g_ndt", "--params", "7,3,9"], "2 ≤ t ≤ d"),
        (["family", "--name", "g_ndt", "--params", "7,x,2"], "'x'"),
    ],
)
def test_usage_errors(argv, message, capsys):
    code, _ = run(argv)
    assert code == 1
    assert message in capsys.readouterr().err


def test_argparse_errors_exit_1(capsys):
    for argv in (["bogus"], ["family"], ["family", "--name", "nope"], []):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 1


def test_family_edges_and_graph6():
    doc = run_json(["family", "--name", "g_ndt", "--params", "7,3,2", "--emit", "edges"])
    assert len(doc["edges"]) == 15
    assert doc["labels"]["u1"] == 0 and doc["labels"]["clique_0"] == 4
    doc = run_json(["family", "--name", "h_npq", "--params", "8,3,3"])
    u, v = doc["labels"]["u"], doc["labels"]["v"]
    assert [min(u, v), max(u, v)] in doc["edges"]
    code, text = run(["family", "--name", "r1", "--emit", "graph6"])
    assert code == 0 and parse_graph6(text.strip()).num_edges == 9


def test_verify_r1(capsys):
    code, text = run(["verify", "--family", "r1", "--checks", "T1_5"])
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 1
    row = json.loads(lines[0])
    assert row["tight"] is True and row["count"] == 6 and row["bound"] == 6
    summary = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert summary["tight"] == {"T1_5": [row["graph6"]]}


def test_verify_builtin_all(tmp_path):
    out, summ = tmp_path / "r.jsonl", tmp_path / "s.json"
    code, _ = run(["verify", "--builtin", "6", "--checks", "all", "--out", str(out), "--summary", str(summ)])
    assert code == 0
    summary = json.loads(summ.read_text())
    assert summary["graphs"] == 112
    assert all(t["violations"] == 0 for t in summary["per_theorem"].values())
    rows = [json.loads(x) for x in out.read_text().splitlines()]
    assert {r["theorem"] for r in rows} == {"T1_1", "T1_2", "T1_3", "T1_4", "T1_5", "T3_3", "L2_6", "TRIV_A", "TRIV_B", "CONJ"}


def test_verify_graph6_file_conjecture(tmp_path):
    f = tmp_path / "c.g6"
    f.write_text(">>graph6<<\nEhEG\nFhCKG\n")
    code, text = run(["verify", "--graph6-file", str(f), "--checks", "CONJ"])
    assert code == 0
    rows = [json.loads(x) for x in text.splitlines()]
    assert rows and all(r["theorem"] == "CONJ" for r in rows)
    assert {r["graph6"] for r in rows} == {"EhEG", "FhCKG"}


def test_verify_corpus_error_exit(tmp_path, capsys):
    f = tmp_path / "c.g6"
    f.write_text("Bw\nB\n")
    code, _ = run(["verify", "--graph6-file", str(f), "--checks", "T1_2"])
    assert code == 3
    assert "line 2" in capsys.readouterr().err


def test_verify_random_deterministic():
    a = run(["verify", "--random", "9,0.4,10", "--seed", "5", "--checks", "T1_2,T1_3"])
    b = run(["verify", "--random", "9,0.4,10", "--seed", "5", "--checks", "T1_2,T1_3"])
    assert a == b and a[0] == 0
    assert len(a[1].splitlines()) == 20


def test_jobs_do_not_change_output(tmp_path):
    outs = []
    for jobs in ("1", "3"):
        o, s = tmp_path / f"r{jobs}", tmp_path / f"s{jobs}"
        assert run(["verify", "--builtin", "5", "--checks", "all", "--jobs", jobs, "--out", str(o), "--summary", str(s)])[0] == 0
        outs.append((o.read_bytes(), s.read_bytes()))
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lapdiam", "count", "--family", "r2", "--lo", "1", "--hi", "7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 5
