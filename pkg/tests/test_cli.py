import json

import pytest

from spectre import topologies as T
from spectre.cli import main
from spectre.graph import canonical, read_edgelist


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_and_analyze_roundtrip(tmp_path, capsys):
    path = tmp_path / "t.edges"
    code, _, _ = run(capsys, "gen", "torus:k=4,d=2", "--out", str(path))
    assert code == 0
    g = read_edgelist(path.read_text())
    assert g == canonical(T.torus(4, 2))
    code, out, _ = run(capsys, "analyze", str(path), "--metrics", "rho2,diameter,bw-exact,lambda,ramanujan")
    data = json.loads(out)
    assert code == 0 and data["rho2"] == 2 and data["diameter"] == 4 and data["bw_exact"]["cut"] == 8


def test_gen_stdout_and_constraint_error(capsys):
    code, out, _ = run(capsys, "gen", "petersen")
    assert code == 0 and out.splitlines()[0].split()[0] == "10"
    code, _, err = run(capsys, "gen", "torus:k=2,d=2")
    assert code == 1 and "k >= 3" in err
    assert run(capsys, "gen", "torus:k=4,d=2", "--automorphisms", "x.json")[0] == 1


def test_bounds_check_odd_weighted_graph(tmp_path, capsys):
    p = tmp_path / "w.edges"
    p.write_text("3 2\n0 1 3\n0 2 1\n")
    code, out, _ = run(capsys, "analyze", str(p), "--metrics", "bounds-check")
    assert code == 0 and json.loads(out)["bounds_check"]["bw_fiedler_lower"]["pass"]


def test_analyze_bounds_check_on_petersen(capsys):
    code, out, _ = run(capsys, "analyze", "petersen", "--metrics", "bounds-check,iso,bw-fiedler,spectrum")
    data = json.loads(out)
    assert code == 0
    assert data["bounds_check_pass"] and all(v["pass"] for v in data["bounds_check"].values())
    assert data["iso"]["fraction"] == "4/5" and len(data["spectrum"]) == 10


def test_analyze_disconnected(tmp_path, capsys):
    p = tmp_path / "two.edges"
    p.write_text("4 2\n0 1\n2 3\n")
    code, out, err = run(capsys, "analyze", str(p))
    data = json.loads(out)
    assert code == 0 and data["rho2"] == 0.0 and data["diameter"] == "inf" and "disconnected" in err


def test_bounds_and_sweep(tmp_path, capsys):
    code, out, _ = run(capsys, "bounds", "slimfly:q=5")
    data = json.loads(out)
    assert code == 0 and data["rho2_upper"] == 5 and data["bw_upper"] == 65 and data["radix"] == 7
    out_csv = tmp_path / "s.csv"
    code, _, _ = run(capsys, "sweep", "--families", "hypercube", "--max-radix", "8", "--out", str(out_csv))
    assert code == 0 and len(out_csv.read_text().splitlines()) == 1 + 8
    code, _, err = run(capsys, "sweep", "--families", "slimfly", "--max-radix", "4")
    assert code == 0 and "warning" in err


def test_reduce(tmp_path, capsys):
    gpath, apath = tmp_path / "f.edges", tmp_path / "f.json"
    assert run(capsys, "gen", "fattree:levels=4", "--out", str(gpath), "--automorphisms", str(apath))[0] == 0
    code, out, _ = run(capsys, "reduce", str(gpath), str(apath), "--out", str(tmp_path / "q.txt"))
    data = json.loads(out)
    assert code == 0 and data["contained"] and data["orbit_sizes"] == [1, 2, 4, 8, 16]
    apath.write_text("[[1, 0]]")
    assert run(capsys, "reduce", str(gpath), str(apath))[0] == 1


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "5", "13")
    data = json.loads(out)
    assert code == 0 and data["n"] == 120 and data["k"] == 14 and data["ramanujan"] and data["bipartite"]
    assert run(capsys, "certify", "6", "5")[0] == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "petersen", "--bogus"])
    assert exc.value.code == 2
    assert run(capsys, "analyze", "petersen", "--metrics", "nope")[0] == 1
