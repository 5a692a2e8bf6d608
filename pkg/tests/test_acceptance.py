"""The ten acceptance criteria, each with its runtime budget.

Every criterion prints one PASS/FAIL line; the lines are repeated in the
terminal summary. Run directly with ``python3 tests/test_acceptance.py``.
"""

import sys
import time
from math import ceil
from pathlib import Path

import pytest

from eternal_domination import oalpha, oedn, oednm, verify_strategy
from eternal_domination.closed_forms import grid_low, grid_up, oednm2_characterization
from eternal_domination.families import complete_bipartite, cycle, figure2_counterexample, grid, path
from eternal_domination.invariants import alpha_graph, domination_number
from eternal_domination.necoloring import ne_build, orientation_from_ne
from eternal_domination.orientations import optimal_orientations
from eternal_domination.reproduce import atlas, exp_grid_oednm, exp_properties, load_manifest
from eternal_domination.graphs import symmetric, triangulation_gadget
from eternal_domination.solver import gamma_inf, gamma_inf_m

RESULTS: list[str] = []


def check(number, title, fn, budget):
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    in_time = dt < budget
    status = "PASS" if ok and in_time else "FAIL"
    line = f"criterion {number:2d} {status}: {title} ({detail}; {dt:.2f}s of {budget}s)"
    RESULTS.append(line)
    print(line)
    assert ok, detail
    assert in_time, f"took {dt:.1f}s, budget {budget}s"


def cycles():
    bad = [n for n in range(3, 8)
           if oedn(cycle(n)).value != n - 1 or oednm(cycle(n)).value != ceil(n / 2)]
    return not bad, f"n=3..7, mismatches {bad}"


def grid33():
    res = optimal_orientations(grid(3, 3), "oedn")
    return res.value == 7 and len(res.optimal_masks) == 1, f"oedn {res.value}, {len(res.optimal_masks)} orbit(s)"


def grid_2n():
    values = {n: oedn(grid(2, n)).value for n in range(2, 6)}
    return all(v == ceil(3 * n / 2) for n, v in values.items()), f"oedn {values}"


def bipartite():
    e = {(a, b): oedn(complete_bipartite(a, b)).value for a in range(1, 4) for b in range(a, 4)}
    table = {(2, 2): 2, (2, 3): 3, (3, 3): 3, (2, 4): 4, (3, 4): 4}
    m = {ab: oednm(complete_bipartite(*ab)).value for ab in table}
    ok = all(v == max(ab) + 1 for ab, v in e.items()) and m == table
    return ok, f"oedn {e}, oednm {m}"


def two_guards():
    total = bad = 0
    for g in atlas(3, 5):
        total += 1
        bad += (oednm(g).value == 2) != oednm2_characterization(g)
    return total == 4 + 11 + 34 and bad == 0, f"{total} graphs, {bad} disagreements"


def figure2():
    v = oednm(figure2_counterexample()).value
    return v == 6 and v > 5, f"oednm {v}"


def gadget():
    p3 = path(3)
    c = triangulation_gadget(p3)
    e, a, m = oedn(c).value, oalpha(c).value, oednm(c).value
    gi, al = gamma_inf(symmetric(p3)).value, alpha_graph(p3).value
    gim = gamma_inf_m(symmetric(p3)).value
    ok = e == gi + 2 and a == al + 2 and m == 3 and gim + 2 == 4
    return ok, f"oedn {e} = {gi}+2, oalpha {a} = {al}+2, oednm {m} < {gim}+2"


def ne_certificates():
    rook = ne_build("rook", 3)
    k_rook = verify_strategy(orientation_from_ne(rook)[1])
    gamma = domination_number(symmetric(rook.graph)).value
    bounds = {name: verify_strategy(orientation_from_ne(ne_build(*args))[1])
              for name, args in [("C6xC6", ("torus", 6, 6)), ("C5 king C5", ("king", 5, 5)),
                                 ("C4^3", ("hypergrid", 4, 4, 4))]}
    ok = k_rook == 3 == gamma and bounds == {"C6xC6": 12, "C5 king C5": 5, "C4^3": 16}
    return ok, f"rook {k_rook} with gamma {gamma}, {bounds}"


def properties():
    rows = exp_properties(load_manifest(), "quick")
    counts = load_manifest()["counts"]["quick"]
    enough = (counts["chain"] >= 200 and counts["scc_additivity"] >= 100)
    fails = [r.parameter for r in rows if r.status != "PASS"]
    return enough and not fails, f"{len(rows)} suites, failing {fails}"


def desk_scale():
    rows = exp_grid_oednm(load_manifest(), full=False)
    exact = [r for r in rows if r.status not in ("SKIPPED", "INFO")]
    skipped = {r.instance for r in rows if r.status == "SKIPPED"}
    info = [r for r in rows if r.status == "INFO" and r.instance == "P5xP5"]
    ok = (all(r.status == "PASS" for r in exact) and {"P3xP4", "P2xP5"} <= {r.instance for r in exact}
          and "P5xP5" in skipped and info and info[0].paper_value_or_bounds == "[19,20]"
          and (grid_low(5, 5), grid_up(5, 5)) == (19, 20))
    return bool(ok), f"{len(exact)} exact cells, skipped {sorted(skipped)}, P5xP5 oedn in [19,20]"


CRITERIA = [
    (1, "cycles oedn = n-1, oednm = ceil(n/2)", cycles, 5),
    (2, "P3xP3 oedn = 7 with one optimal orbit", grid33, 30),
    (3, "P2xPn oedn = ceil(3n/2)", grid_2n, 120),
    (4, "complete bipartite oedn and oednm tables", bipartite, 600),
    (5, "oednm = 2 characterization on all graphs n = 3..5", two_guards, 600),
    (6, "figure 2 counterexample oednm = 6", figure2, 900),
    (7, "edge gadget on P3", gadget, 60),
    (8, "NE coloring certificates", ne_certificates, 5),
    (9, "seeded property suites", properties, 1200),
    (10, "desk-scale substitutions and the open 5x5 cell", desk_scale, 600),
]


@pytest.mark.parametrize("number, title, fn, budget", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, budget):
    check(number, title, fn, budget)


if __name__ == "__main__":
    sys.path.insert(0, str(Path(__file__).parent))
    failures = 0
    for number, title, fn, budget in CRITERIA:
        try:
            check(number, title, fn, budget)
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
