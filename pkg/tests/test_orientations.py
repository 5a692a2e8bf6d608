import pytest

import oracle
from conftest import small_graphs
from eternal_domination import CapabilityError, ParameterError, SimpleGraph, oalpha, oedn, oednm, oscdd, search
from eternal_domination.families import complete, complete_bipartite, cycle, figure2_counterexample, grid, house, path
from eternal_domination.orientations import enumerate_orientations, gadget_equalities, optimal_orientations
from eternal_domination.solver import gamma_inf, gamma_inf_m
from eternal_domination.structure import is_strongly_connected


def multi(n, arcs):
    return oracle.eternal_number(n, arcs, True)


# oedn, oednm, oalpha frozen from the oracle's plain loop over every orientation
FROZEN = [
    ("C4", cycle(4), 3, 2, 3),
    ("C5", cycle(5), 4, 3, 4),
    ("K4", complete(4), 3, 2, 3),
    ("P4", path(4), 4, 4, 4),
    ("K23", complete_bipartite(2, 3), 4, 3, 4),
    ("house", house(), 4, 3, 4),
]


@pytest.mark.parametrize("name, g, e, em, a", FROZEN, ids=[f[0] for f in FROZEN])
def test_frozen_oriented_values(name, g, e, em, a):
    assert oedn(g).value == e
    assert oednm(g).value == em
    assert oalpha(g).value == a


def test_search_matches_oracle_on_small_graphs():
    for g in small_graphs(1, 5):
        assert oedn(g).value == oracle.oriented(g.n, g.edges, oracle.eternal_number), g.edges
        assert oednm(g).value == oracle.oriented(g.n, g.edges, multi), g.edges
        assert oalpha(g).value == oracle.oriented(g.n, g.edges, oracle.acyclic_number), g.edges


def test_best_orientation_attains_the_value():
    for g in [cycle(5), grid(2, 3), complete_bipartite(2, 3)]:
        for fn, game in [(oedn, gamma_inf), (oednm, gamma_inf_m)]:
            res = fn(g)
            d = res.best_orientation.digraph()
            assert d.underlying() == g
            assert game(d).value == res.value


def test_flags_do_not_change_values():
    for g in [cycle(5), house(), grid(2, 3)]:
        base = oedn(g).value
        assert oedn(g, dedup=False).value == base
        assert oedn(g, decompose=False).value == base
        assert oedn(g, strongly_connected_only=False).value == base
        assert oednm(g, dedup=False).value == oednm(g).value


def test_parallel_search_agrees_with_serial():
    for g in [grid(2, 4), figure2_counterexample()]:
        serial = oednm(g, workers=1)
        parallel = oednm(g, workers=2)
        assert parallel.value == serial.value
        assert parallel.best_orientation == serial.best_orientation


def test_bridged_graphs_decompose():
    # two triangles joined by a bridge: the bridge piece contributes nothing extra
    g = SimpleGraph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    assert oedn(g).value == 4
    assert oednm(g).value == 4
    assert oednm(g).value == oracle.oriented(g.n, g.edges, multi)


def test_trees_need_every_vertex():
    t = SimpleGraph(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])
    assert oedn(t).value == oednm(t).value == oalpha(t).value == 6


def test_oscdd():
    for g in [cycle(4), complete(4), cycle(5)]:
        assert oscdd(g).value == oracle.oriented(
            g.n, g.edges, lambda n, a: oracle.dominating_dominated_scc(n, set(a)) or n + 1)
    assert oscdd(cycle(4)).value == 4
    assert oscdd(complete(4)).value == 3
    assert oscdd(path(3)).value is None


def test_enumeration_counts():
    assert len(list(enumerate_orientations(cycle(4)))) == 16
    assert len(list(enumerate_orientations(cycle(4), dedup=True))) == 4
    sc = list(enumerate_orientations(cycle(4), dedup=True, strongly_connected_only=True))
    assert len(sc) == 1 and is_strongly_connected(sc[0].digraph())


def test_grid33_optimal_orientations():
    assert len(optimal_orientations(grid(3, 3), "oedn").optimal_masks) == 1
    # the single orbit has four members under the eight grid symmetries
    assert len(optimal_orientations(grid(3, 3), "oedn", dedup=False).optimal_masks) == 4


def test_gadget_on_p3():
    rep = gadget_equalities(path(3))
    assert rep.ok
    assert rep.values["oedn(C)"] == 4 and rep.values["oednm(C)"] == 3


def test_errors_and_caps():
    with pytest.raises(ParameterError):
        search(cycle(4), "ofoo")
    with pytest.raises(CapabilityError):
        oedn(grid(4, 4), decompose=False, cap=20)
    with pytest.raises(ParameterError):
        oedn(cycle(4), workers=0)


def test_record_is_json_ready():
    rec = oedn(cycle(5)).record("C5", 0.5)
    assert rec["value"] == 4 and len(rec["orientation_bits"]) == 5 and rec["graph"] == "C5"


def test_gadget_on_triangle_and_edge():
    from eternal_domination.graphs import triangulation_gadget
    assert oalpha(triangulation_gadget(cycle(3))).value == 4
    rep = gadget_equalities(path(2))  # C(P2) is a triangle and gamma_inf(P2) = 1
    assert rep.values["oedn(C)"] == 2 and rep.checks["oedn(C) = gamma_inf(G)+m"]


def test_alpha_strictly_below_oalpha():
    from eternal_domination.invariants import alpha_graph
    for g in small_graphs(2, 5):
        if g.m:
            assert alpha_graph(g).value < oalpha(g).value <= oedn(g).value
            assert oednm(g).value <= oedn(g).value


def test_strong_restriction_on_bridgeless_graphs():
    from eternal_domination.structure import is_two_edge_connected
    for g in small_graphs(3, 5):
        if is_two_edge_connected(g):
            for fn in (oedn, oednm):
                assert fn(g, strongly_connected_only=True).value == fn(g, strongly_connected_only=False).value
                assert fn(g, dedup=False).value == fn(g).value


def test_oscdd_bounds_oednm():
    assert oednm(complete(4)).value <= oscdd(complete(4)).value + 1
