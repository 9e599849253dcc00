import json
import subprocess
import sys

import pytest

from semipaired.cli import main
from semipaired.formats import emit_edgelist, parse_edgelist, parse_labels
from semipaired.graph import path_graph, star_graph


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_exact_p5(capsys, write):
    code, out, _ = run(capsys, "solve", "--algo", "exact", write("p5.txt", emit_edgelist(path_graph(5))))
    assert code == 0
    assert "γpr2 = 2; pairs: (2,4)" in out


def test_solve_exact_bound(capsys, write):
    f = write("p6.txt", emit_edgelist(path_graph(6)))
    code, out, _ = run(capsys, "solve", "--algo", "exact", "--bound", "2", f)
    assert code == 0 and "bound-exceeded" in out
    code, out, _ = run(capsys, "solve", "--algo", "exact", "--bound", "4", f)
    assert "γpr2 = 4" in out


def test_verify_far_pair(capsys, write):
    g = write("p4.txt", emit_edgelist(path_graph(4)))
    code, out, _ = run(capsys, "verify", g, write("sol.txt", "1\n1 4\n"))
    assert code == 2 and "pair-too-far" in out
    code, out, _ = run(capsys, "verify", g, write("ok.txt", "1\n2 3\n"))
    assert code == 0 and out.strip() == "valid"


def test_check_chain_p6(capsys, write):
    code, out, _ = run(capsys, "check-chain", write("p6.txt", emit_edgelist(path_graph(6))))
    assert code == 0 and "2 ≤ 4 ≤ 4" in out


def test_auto_picks_solver(capsys, write):
    _, out, _ = run(capsys, "solve", write("star.txt", emit_edgelist(star_graph(3))))
    assert out.startswith("algorithm: tree")
    _, out, _ = run(capsys, "solve", write("iv.txt", "3\n1 3\n2 5\n4 7\n"))
    assert out.startswith("algorithm: interval")
    _, out, _ = run(capsys, "solve", write("c4.txt", "4 4\n1 2\n2 3\n3 4\n1 4\n"))
    assert out.startswith("algorithm: greedy")


def test_greedy_report(capsys, write):
    code, out, _ = run(capsys, "solve", "--algo", "greedy", "--verify-small", write("p6.txt", emit_edgelist(path_graph(6))))
    assert code == 0
    lines = out.splitlines()
    assert "round 2 4 5" in lines and "round 3 5 1" in lines
    assert "exact γpr2 = 4" in lines
    assert any(line.startswith("ratio certificate: Δ=2 H(6)=2.450000 1+ln(6)=2.791759") for line in lines)


def test_interval_needs_ordering(capsys, write):
    f = write("p4.txt", emit_edgelist(path_graph(4)))
    code, _, err = run(capsys, "solve", "--algo", "interval", f)
    assert code == 1 and "--order" in err
    code, out, _ = run(capsys, "solve", "--algo", "interval", "--order", "1,2,3,4", f)
    assert code == 0 and "pairs: (1,3)" in out


def test_invalid_input_exit_codes(capsys, write):
    assert run(capsys, "solve", write("bad.txt", "2 1\n1 3\n"))[0] == 1
    assert run(capsys, "solve", "/nonexistent/file")[0] == 1
    assert run(capsys, "solve", "--algo", "tree", write("c3.txt", "3 3\n1 2\n2 3\n1 3\n"))[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["solve", "--frobnicate"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["teleport"])
    assert info.value.code == 1


def test_json_mirror(capsys, write):
    code, out, _ = run(capsys, "solve", "--algo", "exact", "--json", write("p5.txt", emit_edgelist(path_graph(5))))
    data = json.loads(out)
    assert data["cardinality"] == 2 and data["pairs"] == [[2, 4]] and data["valid"]
    code, out, _ = run(capsys, "solve", "--json", write("bad.txt", "2 1\n1 3\n"))
    assert code == 1 and "error" in json.loads(out)


def test_reduce_and_extract(capsys, write, tmp_path):
    src = write("p3.txt", emit_edgelist(path_graph(3)))
    out_path = tmp_path / "h.txt"
    code, out, _ = run(capsys, "reduce", "hardness", src, "--out", str(out_path))
    assert code == 0
    gadget = parse_edgelist(out_path.read_text())
    labels = parse_labels((tmp_path / "h.labels").read_text())
    assert gadget.n == 15 and len(labels) == 15
    v21, v22 = labels.index("v_2^1") + 1, labels.index("v_2^2") + 1
    sol = write("dsp.txt", f"1\n{v21} {v22}\n")
    code, out, _ = run(capsys, "extract-ds", str(out_path), str(tmp_path / "h.labels"), sol)
    assert code == 0 and "dominating set: 2" in out
    code, out, _ = run(capsys, "extract-ds", str(out_path), str(tmp_path / "h.labels"), write("bad.txt", "1\n1 2\n"))
    assert code == 2


def test_reduce_to_stdout(capsys, write):
    code, out, _ = run(capsys, "reduce", "split", write("p3.txt", emit_edgelist(path_graph(3))))
    assert code == 0
    assert out.splitlines()[0] == "12 29"
    assert "# label 12 u_3^2" in out


def test_gen_is_deterministic(capsys):
    a = run(capsys, "gen", "random-tree", "--n", "8", "--seed", "3")[1]
    b = run(capsys, "gen", "random-tree", "--n", "8", "--seed", "3")[1]
    assert a == b and a.splitlines()[0] == "8 7"


def test_bench_small(capsys, monkeypatch):
    monkeypatch.setenv("SEMIPAIR_THREADS", "1")
    code, first, _ = run(capsys, "bench", "--count", "20")
    _, second, _ = run(capsys, "bench", "--count", "20")
    assert code == 0 and first == second
    assert first.splitlines()[0].split()[:3] == ["corpus", "instances", "valid"]


def test_module_entry_point(tmp_path):
    f = tmp_path / "p5.txt"
    f.write_text(emit_edgelist(path_graph(5)))
    proc = subprocess.run([sys.executable, "-m", "semipaired", "solve", "--algo", "exact", str(f)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "(2,4)" in proc.stdout
