import csv
import json

import pytest

from eternal_domination.cli import main, parse_family_spec
from eternal_domination.edgelist import read_edgelist


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def record(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_family_spec():
    assert parse_family_spec("grid:3,3") == ("grid", [3, 3])
    assert parse_family_spec("path3") == ("path", [3])
    assert parse_family_spec("figure2") == ("figure2_counterexample", [])


def test_gen(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "cycle", "5")
    assert code == 0 and out.splitlines()[1] == "graph 5"
    f2 = str(tmp_path / "f2.txt")
    assert run(capsys, "gen", "figure2", "-o", f2)[0] == 0
    assert read_edgelist(f2).n == 10
    gad = str(tmp_path / "g.txt")
    assert run(capsys, "gen", "gadget", "--of", "path3", "-o", gad)[0] == 0
    g = read_edgelist(gad)
    assert (g.n, g.m) == (5, 6)


def test_gen_errors(capsys):
    assert run(capsys, "gen", "nosuch", "3")[0] == 2
    assert run(capsys, "gen", "cycle", "2")[0] == 2
    assert run(capsys, "gen", "gadget")[0] == 2


def test_gen_random_is_seeded(capsys):
    a = run(capsys, "--seed", "9", "gen", "random-digraph", "6")[1]
    b = run(capsys, "--seed", "9", "gen", "random-digraph", "6")[1]
    c = run(capsys, "--seed", "10", "gen", "random-digraph", "6")[1]
    assert a == b and a != c and a.splitlines()[1] == "digraph 6"


def test_solve(tmp_path, capsys):
    c4 = write(tmp_path, "c4.txt", "digraph 4\n0 1\n1 2\n2 3\n3 0\n")
    assert record(capsys, "solve", c4, "gamma-inf")[1]["value"] == 3
    assert record(capsys, "solve", c4, "gamma-inf-m")[1]["value"] == 2
    acyclic = write(tmp_path, "a4.txt", "digraph 4\n0 1\n1 2\n2 3\n0 2\n")
    assert record(capsys, "solve", acyclic, "gamma-inf")[1]["value"] == 4


def test_solve_needs_symmetric_for_undirected(capsys):
    assert run(capsys, "solve", "cycle4", "gamma-inf")[0] == 2
    code, rec = record(capsys, "solve", "cycle4", "gamma-inf", "--symmetric")
    assert code == 0 and rec["value"] == 2


def test_emit_and_verify_certificate(tmp_path, capsys):
    c6 = write(tmp_path, "c6.txt", "digraph 6\n" + "".join(f"{i} {(i + 1) % 6}\n" for i in range(6)))
    cert = str(tmp_path / "c6.json")
    assert run(capsys, "solve", c6, "gamma-inf-m", "--emit-cert", cert)[0] == 0
    code, rec = record(capsys, "verify", cert)
    assert code == 0 and rec["accepted"] and rec["value"] == 3
    data = json.loads(open(cert).read())
    data["responses"] = data["responses"][1:]
    bad = write(tmp_path, "bad.json", json.dumps(data))
    code, rec = record(capsys, "verify", bad)
    assert code == 1 and not rec["accepted"]


def test_verify_malformed_is_usage_error(tmp_path, capsys):
    assert run(capsys, "verify", write(tmp_path, "x.json", "{oops"))[0] == 2


@pytest.mark.parametrize("spec, parameter, value", [
    ("grid:3,3", "oedn", 7), ("figure2", "oednm", 6), ("bipartite:3,3", "oedn", 4), ("gadget:path3", "oednm", 3),
])
def test_orient(capsys, spec, parameter, value):
    code, rec = record(capsys, "orient", spec, parameter, "--workers", "1")
    assert code == 0 and rec["value"] == value
    assert len(rec["orientation_bits"]) > 0 and "examined" in rec


def test_orient_is_deterministic(capsys):
    a = record(capsys, "orient", "grid:2,4", "oednm", "--workers", "1")[1]
    b = record(capsys, "orient", "grid:2,4", "oednm", "--workers", "1")[1]
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_orient_all_orientations(capsys):
    rec = record(capsys, "orient", "grid:3,3", "oedn", "--all-orientations", "--workers", "1")[1]
    assert len(rec["optimal_orientations"]) == 1
    rec = record(capsys, "orient", "grid:3,3", "oedn", "--all-orientations", "--no-dedup", "--workers", "1")[1]
    assert len(rec["optimal_orientations"]) == 4


def test_orient_errors(tmp_path, capsys):
    assert run(capsys, "orient", "grid:5,5", "oedn", "--cap", "10")[0] == 2
    d = write(tmp_path, "d.txt", "digraph 2\n0 1\n")
    assert run(capsys, "orient", d, "oedn")[0] == 2
    assert run(capsys, "orient", "cycle5")[0] == 2


def test_necolor(tmp_path, capsys):
    code, rec = record(capsys, "necolor", "king", "5", "5")
    assert code == 0 and rec["value"] == 5 and rec["coloring"]["k"] == 5 and rec["coloring"]["l"] == 2
    cert = str(tmp_path / "rook.json")
    assert run(capsys, "necolor", "rook", "3", "--emit-cert", cert)[0] == 0
    assert record(capsys, "verify", cert)[1]["value"] == 3
    assert record(capsys, "necolor", "cycle3", "6")[1]["value"] is None
    assert run(capsys, "necolor", "king", "6", "5")[0] == 2


def test_reproduce_quick(tmp_path, capsys):
    code, rec = record(capsys, "reproduce", "quick", "--out", str(tmp_path))
    assert code == 0 and rec["fail"] == 0 and rec["skipped"] >= 1
    with open(rec["table"]) as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == ["instance", "parameter", "paper_value_or_bounds", "computed", "status",
                             "theorem_tag", "seconds"]
    assert {r["status"] for r in rows} <= {"PASS", "SKIPPED", "INFO"}
