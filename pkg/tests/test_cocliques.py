from __future__ import annotations

import pytest

from gkgraph.cocliques import (
    alt_brute,
    alt_computed,
    alt_report,
    alt_structure,
    build_graph,
    clique_complement_check,
    max_cocliques,
    max_cocliques_masks,
    theta_structure,
)
from gkgraph.groupspec import parse_spec
from gkgraph.refdata import sporadic_graph


def _labels(groups) -> list:
    return [g.label for g in groups]


def _primes(cocliques) -> set:
    return {frozenset(v.prime for v in c) for c in cocliques}


def test_masks_empty_and_complete():
    assert max_cocliques_masks([0, 0, 0, 0]) == (4, [0b1111])
    complete = [0b11111 & ~(1 << i) for i in range(5)]
    assert max_cocliques_masks(complete) == (1, [1, 2, 4, 8, 16])


def test_masks_path_and_cycle():
    path = [0b010, 0b101, 0b010]
    assert max_cocliques_masks(path) == (2, [0b101])
    c5 = [(1 << ((i + 1) % 5)) | (1 << ((i - 1) % 5)) for i in range(5)]
    t, found = max_cocliques_masks(c5)
    assert t == 2 and len(found) == 5


def test_masks_against_exhaustive_search():
    import random

    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 12)
        nb = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    nb[i] |= 1 << j
                    nb[j] |= 1 << i
        best, sets = 0, []
        for s in range(1 << n):
            if all(not (s >> i & 1) or not (nb[i] & s) for i in range(n)):
                size = bin(s).count("1")
                if size > best:
                    best, sets = size, [s]
                elif size == best:
                    sets.append(s)
        assert max_cocliques_masks(nb) == (best, sorted(sets))


def test_m23_search():
    t, cocliques = max_cocliques(sporadic_graph("M23"))
    assert t == 4
    # the element-order list of M23 has no 35, so {5, 7, 11, 23} is a third maximum coclique
    assert _primes(cocliques) == {frozenset(s) for s in ({2, 5, 11, 23}, {3, 7, 11, 23}, {5, 7, 11, 23})}


def test_e8_3():
    rep = theta_structure(parse_spec("E8:3"))
    assert rep.t == 12
    assert _labels(rep.theta) == [f"R_{i}" for i in (5, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30)]
    assert rep.theta_prime == ()


def test_m11():
    rep = theta_structure(parse_spec("Spor:M11"))
    assert _labels(rep.theta) == ["5", "11"]
    assert [_labels(x) for x in rep.theta_prime] == [["2"], ["3"]]


def test_ree_f4_8():
    rep = theta_structure(parse_spec("2F4:8"))
    assert rep.t == 4
    assert _labels(rep.theta) == ["S_5", "S_6"]
    assert {frozenset(_labels(x)) for x in rep.theta_prime} == {
        frozenset(s) for s in (("3", "S_3"), ("S_1", "S_4"), ("p", "S_4"), ("S_3", "S_4"))
    }


def test_alt_structure_values():
    s5 = alt_structure(5)
    assert (s5.tau, s5.tau_prime) == ((3, 5), (2,))
    assert alt_report(5).t == 3
    s10 = alt_structure(10)
    assert (s10.tau, s10.tau_prime) == ((5, 7), ())
    assert alt_report(10).t == 2
    s11 = alt_structure(11)
    # 4 + 7 = 11 is not larger than 11, so 2 stays out of tau'
    assert (s11.tau, s11.s_n, s11.tau_prime) == ((7, 11), 7, (5,))


@pytest.mark.parametrize("n, t, cocliques", [
    (5, 3, [(2, 3, 5)]),
    (10, 2, [(2, 7), (5, 7)]),
    (11, 3, [(5, 7, 11)]),
    (12, 2, [(2, 11), (3, 11), (5, 11), (7, 11)]),
])
def test_alt_brute_values(n, t, cocliques):
    assert alt_brute(n) == (t, tuple(cocliques))


def test_alt_closed_form_misses_cocliques_at_ten():
    closed, searched = alt_report(10), alt_computed(10)
    assert closed.t == searched.t == 2
    assert _primes(closed.cocliques) == {frozenset({5, 7})}
    assert _primes(searched.cocliques) == {frozenset({2, 7}), frozenset({5, 7})}


def test_build_graph_small():
    assert not build_graph(parse_spec("Alt:5")).edges
    graph = build_graph(parse_spec("2B2:8"))
    assert [v.label for v in graph.vertices] == ["p", "S_1", "S_2", "S_3"]
    assert not graph.edges


def test_reports_decompose():
    for text in ("E6:2", "2E6:2", "A:5:3", "C:7:3", "2D:6:3", "G2:4", "Spor:J2", "Alt:12"):
        rep = theta_structure(parse_spec(text))
        core = set(rep.theta)
        built = {frozenset(core | set(x)) for x in rep.theta_prime} or {frozenset(core)}
        assert built == {frozenset(c) for c in rep.group_cocliques}
        assert len(rep.theta_prime) != 1
        assert all(len(c) == rep.t for c in rep.group_cocliques)


@pytest.mark.parametrize("text, want", [("Alt:7", True), ("Alt:10", True), ("Spor:M12", True),
                                        ("Spor:M11", True), ("Spor:M23", None), ("E8:2", None)])
def test_clique_complement(text, want):
    assert clique_complement_check(parse_spec(text)) is want
