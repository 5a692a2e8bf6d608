import json

import pytest

from conftest import small_graphs
from eternal_domination import (
    CertificateError,
    Digraph,
    FormatError,
    IntegrityError,
    ParameterError,
    StrategyCertificate,
    gamma_inf,
    gamma_inf_m,
    ne_build,
    ne_verify,
    oednm,
    orientation_from_ne,
    toroidal_padding_orientation,
    verify_strategy,
)
from eternal_domination.certificates import (
    build_cycle_cert,
    build_grid_tiling_cert,
    build_knm4_cert,
    build_knn_cert,
    build_trivially_perfect_cert,
    build_two_guard_cert,
    figure3_certificate,
    grid_tiling,
    square_certificate,
)
from eternal_domination.closed_forms import grid_up, oednm2_characterization, trivially_perfect_recognize
from eternal_domination.families import complete, complete_bipartite, cycle, grid, rook
from eternal_domination.necoloring import NEColoring, class_shift_certificate, hall_check, ne_product
from eternal_domination.solver import MULTI, SINGLE
from eternal_domination.structure import is_connected


# -- the certificate format ------------------------------------------------------------


def test_round_trip_preserves_certificate():
    cert = build_cycle_cert(6, MULTI)
    again = StrategyCertificate.loads(cert.dumps())
    assert again == cert and verify_strategy(again) == 3


@pytest.mark.parametrize("tamper, message", [
    (lambda d: d["responses"].pop(0), "no response"),
    (lambda d: d["responses"][0].__setitem__(2, 99), "out of range"),
    (lambda d: d["configs"].__setitem__(0, d["configs"][0][:-1]), "guards"),
    (lambda d: d["configs"].__setitem__(1, list(d["configs"][0])), "duplicate"),
    (lambda d: d.__setitem__("arcs", d["arcs"][:-1]), "legal"),
    (lambda d: d.__setitem__("configs", []), "no configurations"),
])
def test_tampered_certificates_are_rejected(tamper, message):
    data = build_cycle_cert(5, SINGLE).to_json()
    tamper(data)
    with pytest.raises(CertificateError, match=message):
        verify_strategy(StrategyCertificate.from_json(data))


def test_response_leaving_attack_unguarded_is_rejected():
    data = build_cycle_cert(4, MULTI).to_json()
    i, r, j = data["responses"][0]
    data["responses"][0] = [i, r, i]
    with pytest.raises(CertificateError, match="empty"):
        verify_strategy(StrategyCertificate.from_json(data))


def test_malformed_json():
    with pytest.raises(FormatError):
        StrategyCertificate.loads("{not json")
    with pytest.raises(FormatError):
        StrategyCertificate.from_json({"n": 3})
    with pytest.raises(ParameterError):
        StrategyCertificate(Digraph(1), 1, (1,), {}, "diagonal")


# -- constructive certificates ---------------------------------------------------------


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_certificates(n):
    single = build_cycle_cert(n, SINGLE)
    multi = build_cycle_cert(n, MULTI)
    assert verify_strategy(single) == n - 1 == gamma_inf(single.digraph).value
    assert verify_strategy(multi) == (n + 1) // 2 == gamma_inf_m(multi.digraph).value
    assert single.digraph.underlying() == cycle(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_knn_certificates(n):
    cert = build_knn_cert(n)
    assert verify_strategy(cert) == n + 1
    assert cert.digraph.underlying() == complete_bipartite(n, n)


@pytest.mark.parametrize("n, m", [(2, 4), (3, 4), (2, 5)])
def test_knm4_certificates(n, m):
    cert = build_knm4_cert(n, m)
    assert verify_strategy(cert) == 4 and cert.mode == MULTI
    assert cert.digraph.underlying() == complete_bipartite(n, m)


def test_block_certificates():
    assert verify_strategy(figure3_certificate()) == 7
    assert len(figure3_certificate().configs) == 24
    assert verify_strategy(square_certificate()) == 3


@pytest.mark.parametrize("n, m", [(2, 2), (2, 5), (3, 3), (3, 4), (4, 4), (3, 6), (5, 5), (4, 6)])
def test_grid_tiling_certificates(n, m):
    blocks = grid_tiling(n, m)
    cells = {(r + i, c + j) for r, c, h, w in blocks for i in range(h) for j in range(w)}
    assert len(cells) == n * m == sum(h * w for _, _, h, w in blocks)
    cert = build_grid_tiling_cert(n, m)
    assert cert.digraph.underlying() == grid(n, m)
    assert verify_strategy(cert) == grid_up(n, m)


def test_grid_tiling_matches_exact_value_on_small_grids():
    assert gamma_inf(build_grid_tiling_cert(2, 3).digraph).value == 5
    assert gamma_inf(build_grid_tiling_cert(3, 3).digraph).value == 7


def test_two_guard_certificates():
    graphs = [complete(n) for n in range(3, 8)] + [cycle(4)]
    graphs += [g for g in small_graphs(5, 6) if oednm2_characterization(g)]
    for g in graphs:
        cert = build_two_guard_cert(g)
        assert verify_strategy(cert) == 2 and cert.digraph.underlying() == g


def test_two_guard_refuses_other_graphs():
    with pytest.raises(ParameterError, match="matching"):
        build_two_guard_cert(cycle(5))


def test_trivially_perfect_certificates_match_search():
    for g in small_graphs(2, 6):
        if is_connected(g) and trivially_perfect_recognize(g):
            cert = build_trivially_perfect_cert(g)
            assert cert.digraph.underlying() == g
            assert verify_strategy(cert) == oednm(g).value


# -- NE colorings ------------------------------------------------------------------------


@pytest.mark.parametrize("args, k, bound", [
    (("rook", 3), 3, 3), (("torus", 3, 3), 3, 3), (("torus", 6, 6), 3, 12),
    (("king", 5, 5), 5, 5), (("hypergrid", 4, 4, 4), 4, 16),
])
def test_ne_orientations_certify(args, k, bound):
    c = ne_build(*args)
    assert ne_verify(c) and c.k == k
    d, cert = orientation_from_ne(c)
    assert d.underlying() == c.graph
    assert verify_strategy(cert) == bound
    assert hall_check(d, c.classes)


def test_ne_verify_reports_violations():
    g = cycle(4)
    assert not ne_verify(NEColoring(g, 2, 1, (0, 1, 0, 1)))
    assert ne_verify(NEColoring(g, 2, 2, (0, 1, 0, 1)))
    bad = ne_verify(NEColoring(g, 2, 2, (0, 0, 1, 1)))
    assert any("monochromatic" in v for v in bad.violations)


def test_ne_product_and_json():
    c = ne_product(ne_build("complete", 3), ne_build("complete", 3))
    assert c.graph == rook(3) and c.l == 2 and ne_verify(c)
    assert NEColoring.from_json(c.graph, json.loads(c.dumps())) == c


def test_ne_build_errors():
    with pytest.raises(ParameterError):
        ne_build("cycle3", 4)
    with pytest.raises(ParameterError):
        ne_build("king", 6, 5)
    with pytest.raises(ParameterError):
        orientation_from_ne(ne_build("cycle3", 6))  # l = 1 is odd


def test_class_shift_rejects_uncovered_vertex():
    with pytest.raises(IntegrityError, match="no class"):
        class_shift_certificate(Digraph(3, [(0, 1)]), [0b001, 0b010])


@pytest.mark.parametrize("n, m", [(4, 4), (5, 5), (6, 6), (8, 7), (3, 5), (7, 7)])
def test_padded_tori(n, m):
    p = toroidal_padding_orientation(n, m)
    a, b = n // 3, m // 3
    assert verify_strategy(p.certificate) == p.bound == n * m - 6 * a * b
    assert p.padding == n * m - 9 * a * b


def test_euler_orientation_balances_each_color_pair():
    for args in [("torus", 6, 6), ("king", 5, 5), ("hypergrid", 4, 4, 4)]:
        c = ne_build(*args)
        d, _ = orientation_from_ne(c)
        half = c.l // 2
        for v in range(d.n):
            for j in range(c.k):
                if j == c.colors[v]:
                    continue
                outs = sum(c.colors[w] == j for w in d.out_neighbors(v))
                ins = sum(c.colors[w] == j for w in d.in_neighbors(v))
                assert outs == ins == half


def test_accepted_configs_are_winning():
    from eternal_domination import is_eds, is_meds
    certs = [build_cycle_cert(5, SINGLE), build_cycle_cert(6, MULTI), build_knn_cert(3), build_knm4_cert(2, 4),
             build_grid_tiling_cert(2, 4), orientation_from_ne(ne_build("rook", 3))[1]]
    for cert in certs:
        verify_strategy(cert)
        member = is_eds if cert.mode == SINGLE else is_meds
        assert all(member(cert.digraph, c) for c in cert.configs)
