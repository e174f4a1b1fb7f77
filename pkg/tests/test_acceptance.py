"""One test per acceptance criterion, each printing a PASS/FAIL line with its runtime."""

from __future__ import annotations

import time
from math import gcd

import pytest
from sympy import factorint

from gkgraph.cocliques import (
    alt_computed,
    alt_report,
    clique_complement_check,
    theta_structure,
)
from gkgraph.groupspec import SPORADIC_NAMES, parse_spec
from gkgraph.numth import (
    class_nonempty,
    eta,
    greatest_primitive_divisor,
    mult_order,
    nu,
    nu_eps,
    order_of_two,
    primitive_primes,
)
from gkgraph.refdata import sweep_specs, verify
from gkgraph.torus_oracle import compare


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, elapsed: float, limit: float, details=()):
        fast = elapsed < limit
        status = "PASS" if ok and fast else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {number}] {status} {title} ({elapsed:.2f}s, limit {limit:.0f}s)")
            for line in list(details)[:12]:
                print(f"    {line}")
        return ok and fast

    return emit


def _sweep(table: str) -> tuple:
    start = time.perf_counter()
    results = [verify(spec) for spec in sweep_specs(table)]
    return results, time.perf_counter() - start


def _failures(results) -> list:
    return [r.line() for r in results if not r.ok]


def test_criterion_1_sporadic_table(report):
    start = time.perf_counter()
    specs = [parse_spec(f"Spor:{name}") for name in SPORADIC_NAMES] + [parse_spec("Tits")]
    results = [verify(spec) for spec in specs]
    j4 = theta_structure(parse_spec("Spor:J4")).t
    elapsed = time.perf_counter() - start
    bad = _failures(results)
    ok = not bad and j4 == 7 and len(results) == 27
    assert report(1, f"sporadic table, {len(results) - len(bad)}/{len(results)} rows match", ok, elapsed, 1, bad)


def test_criterion_2_alternating_closed_form(report):
    start = time.perf_counter()
    bad = []
    for n in range(5, 1001):
        closed, searched = alt_report(n), alt_computed(n)
        same = closed.t == searched.t and (
            {frozenset(c) for c in closed.cocliques} == {frozenset(c) for c in searched.cocliques})
        if not same:
            bad.append(f"Alt:{n} closed form {[[v.prime for v in c] for c in closed.cocliques]}"
                       f" search {[[v.prime for v in c] for c in searched.cocliques]}")
    spots = alt_computed(5).t == 3 and alt_computed(10).t == 2
    elapsed = time.perf_counter() - start
    title = f"alternating closed form vs search, {996 - len(bad)}/996 degrees agree"
    assert report(2, title, not bad and spots, elapsed, 10, bad)


def test_criterion_3_linear_unitary_table(report):
    results, elapsed = _sweep("2")
    bad = _failures(results)
    a52 = theta_structure(parse_spec("A:5:2"))
    u32 = theta_structure(parse_spec("2A:3:2"))
    spots = [g.label for g in a52.theta] == ["R_3", "R_4", "R_5"] and not a52.theta_prime and u32.t == 2
    title = f"linear and unitary table, {len(results) - len(bad)}/{len(results)} specs match"
    assert report(3, title, not bad and spots, elapsed, 120, bad)


def test_criterion_4_symplectic_orthogonal_table(report):
    results, elapsed = _sweep("3")
    bad = _failures(results)
    title = f"symplectic and orthogonal table, {len(results) - len(bad)}/{len(results)} specs match"
    assert report(4, title, not bad, elapsed, 300, bad)


def test_criterion_5_exceptional_table(report):
    results, elapsed = _sweep("4")
    bad = _failures(results)
    pins = []
    for spec in sweep_specs("4"):
        if spec.family == "E7" and theta_structure(spec).t != 8:
            pins.append(f"{spec}: t != 8")
        if spec.family == "E8" and theta_structure(spec).t != 12:
            pins.append(f"{spec}: t != 12")
    ree = theta_structure(parse_spec("2F4:8"))
    if ree.t != 4 or [g.label for g in ree.theta] != ["S_5", "S_6"]:
        pins.append("2F4:8 special row")
    title = f"exceptional table, {len(results) - len(bad)}/{len(results)} specs match"
    assert report(5, title, not (bad or pins), elapsed, 120, bad + pins)


def _oracle_grid() -> list:
    out = []
    qs = (3, 4, 5, 7, 8, 9)
    for q in qs:
        for n in range(2, 7):
            out += [f"B:{n}:{q}", f"C:{n}:{q}"]
        for n in range(4, 7):
            out += [f"D:{n}:{q}", f"2D:{n}:{q}"]
    out += ["E7:2", "E7:3", "2F4:8", "E8:2", "E8:3"]
    return [parse_spec(text) for text in out]


def test_criterion_6_oracle_equivalence(report):
    start = time.perf_counter()
    grid = _oracle_grid()
    bad = []
    for spec in grid:
        for d in compare(spec):
            bad.append(f"{spec}: {d.u.label} ({d.r}) vs {d.v.label} ({d.s}) criterion {d.criterion} oracle {d.oracle}")
    elapsed = time.perf_counter() - start
    assert report(6, f"criteria vs torus orders on {len(grid)} groups, {len(bad)} disagreements",
                  not bad, elapsed, 600, bad)


def test_criterion_7_number_theory_properties(report):
    start = time.perf_counter()
    bad = []
    powers = [q for q in range(2, 65) if len(factorint(q)) == 1]
    empty = {(q, m) for q in powers for m in range(1, 41) if not class_nonempty(m, q)}
    if empty != {(2, 1), (3, 1), (2, 6)}:
        bad.append(f"Zsigmondy exceptions {sorted(empty)}")
    for q in (2, 3, 4, 5, 7, 8, 9):
        for k in range(1, 21):
            for l in range(1, 21):
                d = gcd(k, l)
                odd_odd = (k // d) % 2 and (l // d) % 2
                even_odd = (k // d) % 2 == 0 and (l // d) % 2
                if gcd(q**k - 1, q**l - 1) != q**d - 1:
                    bad.append(f"gcd(q^k-1, q^l-1) at {q, k, l}")
                if gcd(q**k + 1, q**l + 1) != (q**d + 1 if odd_odd else gcd(2, q + 1)):
                    bad.append(f"gcd(q^k+1, q^l+1) at {q, k, l}")
                if gcd(q**k - 1, q**l + 1) != (q**d + 1 if even_odd else gcd(2, q + 1)):
                    bad.append(f"gcd(q^k-1, q^l+1) at {q, k, l}")
        ks = [greatest_primitive_divisor(m, q).value for m in range(1, 31)]
        if any(gcd(a, b) != 1 for i, a in enumerate(ks) for b in ks[i + 1:]):
            bad.append(f"primitive divisors not coprime at q={q}")
        for m in range(1, 25):
            for r in primitive_primes(m, q):
                if (order_of_two(q) if r == 2 else mult_order(r, q)) != m:
                    bad.append(f"{r} listed in class {m} at q={q}")
    for m in range(1, 10**4 + 1):
        if nu(nu(m)) != m or nu_eps(nu_eps(m, -1), -1) != m:
            bad.append(f"involution fails at {m}")
    table = [(m, nu(m), eta(m)) for m in range(1, 9)]
    if table != [(1, 2, 1), (2, 1, 1), (3, 6, 3), (4, 4, 2), (5, 10, 5), (6, 3, 3), (7, 14, 7), (8, 8, 4)]:
        bad.append(f"case table {table}")
    elapsed = time.perf_counter() - start
    assert report(7, "number theory properties", not bad, elapsed, 120, bad)


def test_criterion_8_decomposition(report):
    start = time.perf_counter()
    bad = []
    specs = []
    for table in ("1", "2", "3", "4"):
        specs += sweep_specs(table)
    specs += [parse_spec(f"Alt:{n}") for n in range(5, 1001)]
    for spec in specs:
        rep = theta_structure(spec)
        core = set(rep.theta)
        built = {frozenset(core | set(x)) for x in rep.theta_prime} or {frozenset(core)}
        if built != {frozenset(c) for c in rep.group_cocliques}:
            bad.append(f"{spec}: cocliques are not theta plus theta'")
        if len(rep.theta_prime) == 1:
            bad.append(f"{spec}: theta' has one member")
    for spec in [s for s in specs if s.family in ("Alt", "Spor")]:
        if clique_complement_check(spec) is False:
            bad.append(f"{spec}: primes outside theta do not form a clique")
    elapsed = time.perf_counter() - start
    assert report(8, f"decomposition over {len(specs)} groups", not bad, elapsed, 600, bad)
