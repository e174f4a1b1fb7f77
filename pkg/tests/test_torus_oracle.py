from __future__ import annotations

from collections import Counter
from itertools import product

import pytest

from gkgraph.groupspec import OutOfScopeError, exceptional_order, parse_spec
from gkgraph.torus_oracle import (
    _e7_patterns,
    _e8_patterns,
    compare,
    oracle_adjacent,
    torus_orders,
    torus_orders_bc,
    torus_orders_d,
    torus_orders_exceptional,
)


def _degree(pattern: Counter) -> int:
    return sum((len(poly) - 1) * e for poly, e in pattern.items())


def test_bc_orders():
    assert set(torus_orders_bc(2, 5).orders) == {8, 12, 13, 18}
    assert 5 in torus_orders_bc(2, 3).orders
    assert {7, 9} <= set(torus_orders_bc(3, 2).orders)


def test_d_orders():
    assert 20 in torus_orders_d(4, 1, 3).orders


@pytest.mark.parametrize("eps", [1, -1])
def test_d_orders_respect_sign_product(eps):
    q = 2
    want = set()
    for parts in ([4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]):
        for signs in product((1, -1), repeat=len(parts)):
            sign = 1
            for s in signs:
                sign *= s
            if sign != eps:
                continue
            m = 1
            for a, s in zip(parts, signs):
                m *= q**a - s
            want.add(m)
    assert set(torus_orders_d(4, eps, q).orders) == want - {0}


def test_exceptional_orders():
    assert 241 in torus_orders_exceptional("E8", 2).orders
    assert 57 in torus_orders_exceptional("2F4", 8).orders


def test_e7_excluded_patterns_absent():
    q = 2
    orders = set(torus_orders_exceptional("E7", q).orders)
    assert (q**2 + 1) * (q - 1) ** 5 not in orders
    assert (q**2 + 1) * (q + 1) ** 5 not in orders


def test_pattern_counts_and_degrees():
    e7, e8 = _e7_patterns(), _e8_patterns()
    assert len(e7) == 54
    assert len(e8) == 106
    assert all(_degree(c) == 7 for _, c in e7)
    assert all(_degree(c) == 8 for _, c in e8)
    tags = Counter(tag for tag, _ in e8)
    assert tags["E8.3"] == 28 and tags["E8.2"] == 12 and tags["E8.1"] == 9


@pytest.mark.parametrize("family, q", [("E8", 2), ("E8", 3), ("E7", 2), ("E7", 3)])
def test_exceptional_orders_divide_group_order(family, q):
    order = exceptional_order(family, q)
    for m in torus_orders_exceptional(family, q).orders:
        assert order % m == 0


def test_order_sets_are_deterministic():
    spec = parse_spec("E8:3")
    torus_orders.cache_clear()
    first = torus_orders(spec).orders
    torus_orders.cache_clear()
    assert torus_orders(spec).orders == first
    assert list(first) == sorted(set(first))


def test_oracle_adjacent():
    assert oracle_adjacent(parse_spec("B:2:5"), 3, 13) is False
    assert oracle_adjacent(parse_spec("B:3:3"), 13, 7) is False
    assert oracle_adjacent(parse_spec("E8:2"), 7, 5) is True


def test_oracle_refuses_uncovered_family():
    with pytest.raises(OutOfScopeError):
        oracle_adjacent(parse_spec("A:3:5"), 3, 13)


@pytest.mark.parametrize("text", ["B:4:3", "D:5:2", "2F4:8", "2D:6:3", "C:5:4"])
def test_compare_agrees(text):
    assert compare(parse_spec(text)) == ()
