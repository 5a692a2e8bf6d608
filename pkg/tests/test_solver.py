import random

import pytest

import oracle
from eternal_domination import (
    CapabilityError,
    Digraph,
    IntegrityError,
    ParameterError,
    extract_strategy,
    fixed_point,
    gamma_inf,
    gamma_inf_m,
    is_eds,
    is_meds,
    solve,
    symmetric,
    verify_strategy,
)
from eternal_domination._bits import mask_of, members
from eternal_domination.families import complete, cycle, grid, path
from eternal_domination.matching import find_multimove, multimove_targets
from eternal_domination.solver import MULTI, SINGLE, closure_violation, defense, successors


def directed_cycle(n):
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def random_digraphs(seed, count, n_max):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        p = rng.uniform(0.15, 0.7)
        yield Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


@pytest.mark.parametrize("n", range(3, 8))
def test_directed_cycles(n):
    d = directed_cycle(n)
    assert gamma_inf(d).value == n - 1
    assert gamma_inf_m(d).value == (n + 1) // 2


def test_acyclic_digraph_needs_every_vertex():
    d = Digraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert gamma_inf(d).value == 4
    assert gamma_inf_m(d).value == 4


# frozen from the brute-force oracle on symmetric digraphs
@pytest.mark.parametrize("g, gi, gim", [
    (cycle(4), 2, 2), (cycle(5), 3, 2), (complete(4), 1, 1), (path(4), 2, 2), (grid(2, 3), 3, 2),
])
def test_symmetric_frozen_values(g, gi, gim):
    assert gamma_inf(symmetric(g)).value == gi
    assert gamma_inf_m(symmetric(g)).value == gim
    assert gamma_inf(g).value == gi  # undirected input is promoted


def test_values_and_families_match_oracle():
    for d in random_digraphs(2024, 50, 6):
        for mode, multi in ((SINGLE, False), (MULTI, True)):
            res = solve(d, mode)
            assert res.value == oracle.eternal_number(d.n, d.arcs, multi)
            expected = {mask_of(s) for s in oracle.winning_region(d.n, d.arcs, res.value, multi)}
            assert set(res.winning_family) == expected


def test_fixed_point_is_empty_below_the_value():
    d = directed_cycle(5)
    assert not fixed_point(d, 3, SINGLE)
    fam = fixed_point(d, 4, SINGLE)
    assert len(fam) == 5 and fam.k == 4
    assert fam.as_lists()[0] == members(next(iter(fam)))


def test_extracted_strategies_verify():
    for d in list(random_digraphs(5, 25, 6)) + [directed_cycle(6)]:
        for mode in (SINGLE, MULTI):
            res = solve(d, mode)
            cert = extract_strategy(d, res.winning_family, mode)
            assert verify_strategy(cert) == res.value


def test_extract_rejects_open_family():
    d = directed_cycle(4)
    fam = fixed_point(d, 3, SINGLE)
    broken = type(fam)(fam.n, fam.k, frozenset(list(fam.members)[:1]))
    assert closure_violation(d, broken, SINGLE) is not None
    with pytest.raises(IntegrityError):
        extract_strategy(d, broken, SINGLE)


def test_defense_picks_smallest_valid_successor():
    d = directed_cycle(4)
    fam = fixed_point(d, 3, SINGLE)
    s = mask_of([0, 1, 2])
    assert defense(d, s, 3, fam, SINGLE) == mask_of([0, 1, 3])
    assert defense(d, s, 3, frozenset(), SINGLE) is None


def test_is_eds_and_is_meds():
    d = directed_cycle(4)
    assert is_eds(d, mask_of([0, 1, 2]))
    assert not is_eds(d, mask_of([0, 2]))
    assert is_meds(d, mask_of([0, 2]))
    assert not is_meds(d, mask_of([0, 1]))


def test_successors_match_oracle_moves():
    for d in random_digraphs(7, 30, 5):
        for s in range(1 << d.n):
            ss = set(members(s))
            single = {mask_of(t) for r in set(range(d.n)) - ss for t in oracle.single_moves(d.n, d.arcs, ss, r)}
            assert successors(d, s, SINGLE) == single
            multi = {mask_of(t) for t in oracle.multimoves(d.n, d.arcs, ss)} - {s}
            assert successors(d, s, MULTI) == multi
            assert multimove_targets(d, s) == multi | {s}


def test_find_multimove_returns_valid_assignment():
    for d in random_digraphs(8, 30, 5):
        for s in range(1 << d.n):
            for t in multimove_targets(d, s):
                move = find_multimove(d, s, t)
                assert move is not None and set(move) == set(members(s))
                assert set(move.values()) == set(members(t))
                assert all(u == w or d.has_arc(u, w) for u, w in move.items())


def test_solve_with_bounds():
    d = directed_cycle(6)
    assert solve(d, SINGLE, below=5) is None
    assert solve(d, SINGLE, start=2).value == 5
    assert solve(d, MULTI).lower_bound_used == 3


def test_errors():
    with pytest.raises(ParameterError):
        solve(directed_cycle(3), "teleport")
    with pytest.raises(CapabilityError):
        gamma_inf(directed_cycle(18))
    with pytest.raises(ParameterError):
        find_multimove(directed_cycle(3), 0b1, 0b11)


def test_small_fixed_points():
    c3, c4 = directed_cycle(3), directed_cycle(4)
    assert fixed_point(c3, 2, SINGLE).as_lists() == [[0, 1], [0, 2], [1, 2]]
    assert fixed_point(c4, 2, MULTI).as_lists() == [[0, 2], [1, 3]]
    assert not fixed_point(c3, 1, MULTI)
    acyclic = Digraph(3, [(0, 1), (1, 2)])
    assert not fixed_point(acyclic, 2, SINGLE)
    assert fixed_point(acyclic, 3, SINGLE).as_lists() == [[0, 1, 2]]


def test_multimove_exists_examples():
    from eternal_domination.matching import multimove_exists
    c3 = directed_cycle(3)
    assert multimove_exists(c3, 0b011, 0b011)
    assert multimove_exists(c3, 0b011, 0b110)
    assert not multimove_exists(Digraph(2, [(0, 1)]), 0b10, 0b01)


def test_full_vertex_set_certificate_has_no_responses():
    d = directed_cycle(3)
    cert = extract_strategy(d, fixed_point(d, 3, SINGLE), SINGLE)
    assert cert.configs == (0b111,) and cert.responses == {}
    assert verify_strategy(cert) == 3
    rot = extract_strategy(directed_cycle(4), fixed_point(directed_cycle(4), 2, MULTI), MULTI)
    assert len(rot.configs) == 2 and verify_strategy(rot) == 2


def test_membership_on_acyclic_digraph():
    acyclic = Digraph(4, [(0, 1), (1, 2), (2, 3)])
    assert not any(is_eds(acyclic, s) or is_meds(acyclic, s) for s in range(15))
    assert is_eds(acyclic, 15) and is_meds(acyclic, 15)
    assert is_eds(directed_cycle(3), 0b011)
