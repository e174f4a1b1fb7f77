from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import divisors, factorint

from gkgraph.numth import (
    FactorBudgetExceeded,
    PrimePower,
    NumthError,
    ZSIGMONDY_EXCEPTIONS,
    class_nonempty,
    cyclotomic_eval,
    eta,
    factorize,
    greatest_primitive_divisor,
    mult_order,
    nu,
    nu_eps,
    order_of_two,
    primitive_primes,
    r_share,
    suzuki_ree_class,
    suzuki_ree_divisor,
)

SMALL_Q = (2, 3, 4, 5, 7, 8, 9)


def prime_powers(limit: int) -> list:
    return [q for q in range(2, limit + 1) if len(factorint(q)) == 1]


# ---- worked values


@pytest.mark.parametrize("r, q, want", [(3, 4, 1), (5, 2, 4), (13, 2, 12)])
def test_mult_order_values(r, q, want):
    assert mult_order(r, q) == want


def test_mult_order_by_exponentiation():
    for r, q in [(5, 2), (13, 2), (7, 3), (31, 5)]:
        m = mult_order(r, q)
        assert pow(q, m, r) == 1
        assert all(pow(q, d, r) != 1 for d in range(1, m))


@pytest.mark.parametrize("q, want", [(5, 1), (7, 2), (9, 1), (3, 2), (27, 2)])
def test_order_of_two(q, want):
    assert order_of_two(q) == want


@pytest.mark.parametrize("m, q, want", [(6, 2, 3), (4, 2, 5), (1, 9, 8), (1, 2, 1), (12, 3, 73)])
def test_cyclotomic_eval(m, q, want):
    assert cyclotomic_eval(m, q) == want


@pytest.mark.parametrize("m, r, want", [(12, 2, (4, 3)), (12, 3, (3, 4)), (7, 5, (1, 7))])
def test_r_share(m, r, want):
    assert r_share(m, r) == want


@pytest.mark.parametrize("m, q, want", [(6, 2, 1), (1, 7, 3), (12, 2, 13), (2, 7, 8), (1, 3, 1)])
def test_greatest_primitive_divisor(m, q, want):
    assert greatest_primitive_divisor(m, q).value == want


@pytest.mark.parametrize("m, q, want", [(6, 2, False), (1, 3, False), (4, 2, True), (1, 2, False), (2, 3, True)])
def test_class_nonempty(m, q, want):
    assert class_nonempty(m, q) is want


@pytest.mark.parametrize("m, q, want", [(4, 2, {5}), (2, 7, {2}), (12, 2, {13}), (1, 7, {3}), (6, 2, set())])
def test_primitive_primes(m, q, want):
    assert primitive_primes(m, q) == frozenset(want)


def test_nu_and_eta_values():
    assert (nu(3), nu(6), nu(4), nu(1), nu(2)) == (6, 3, 4, 2, 1)
    assert nu_eps(9, 1) == 9 and nu_eps(9, -1) == 18
    assert (eta(5), eta(6), eta(1), eta(8)) == (5, 3, 1, 4)


@pytest.mark.parametrize(
    "family, n, i, want",
    [("2B2", 1, 2, 5), ("2G2", 1, 4, 37), ("2F4", 1, 3, 65), ("2B2", 1, 1, 7), ("2B2", 1, 3, 13)],
)
def test_suzuki_ree_divisor(family, n, i, want):
    assert suzuki_ree_divisor(family, n, i) == want


@pytest.mark.parametrize(
    "family, n, i, want", [("2B2", 1, 3, {13}), ("2G2", 1, 1, {13}), ("2F4", 1, 2, set())]
)
def test_suzuki_ree_class(family, n, i, want):
    assert suzuki_ree_class(family, n, i) == frozenset(want)


def test_prime_power_parsing():
    assert PrimePower.from_int(27) == PrimePower(3, 3)
    assert PrimePower.from_int(64).q == 64
    with pytest.raises(NumthError):
        PrimePower.from_int(12)


def test_factor_budget_is_enforced():
    semiprime = 1000000007 * 998244353
    assert factorize(semiprime) == {998244353: 1, 1000000007: 1}
    with pytest.raises(FactorBudgetExceeded):
        factorize(semiprime, budget=1)


# ---- whole-grid properties


def test_zsigmondy_exception_set():
    empty = {(q, m) for q in prime_powers(64) for m in range(1, 41) if not class_nonempty(m, q)}
    assert empty == set(ZSIGMONDY_EXCEPTIONS) == {(2, 1), (3, 1), (2, 6)}


def test_primitive_primes_are_certified():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 16):
        for m in range(1, 25):
            for r in primitive_primes(m, q):
                assert (order_of_two(q) if r == 2 else mult_order(r, q)) == m


def test_greatest_primitive_divisor_divides_and_is_primitive():
    for q in SMALL_Q:
        for m in range(1, 25):
            k = greatest_primitive_divisor(m, q).value
            assert (q**m - 1) % k == 0
            assert (k == 1) == (not class_nonempty(m, q))
            assert set(factorint(k)) == set(primitive_primes(m, q))


def test_telescoping():
    for q in (2, 3, 4, 5, 7, 8, 9, 16, 25, 32):
        for m in range(1, 41):
            prod = 1
            for d in divisors(m):
                prod *= cyclotomic_eval(d, q)
            assert prod == q**m - 1


def _plus_plus(q, k, l):
    d = gcd(k, l)
    return q**d + 1 if (k // d) % 2 and (l // d) % 2 else gcd(2, q + 1)


def _minus_plus(q, k, l):
    d = gcd(k, l)
    return q**d + 1 if (k // d) % 2 == 0 and (l // d) % 2 else gcd(2, q + 1)


def test_gcd_identities():
    for q in SMALL_Q:
        for k in range(1, 21):
            for l in range(1, 21):
                assert gcd(q**k - 1, q**l - 1) == q ** gcd(k, l) - 1
                assert gcd(q**k + 1, q**l + 1) == _plus_plus(q, k, l)
                assert gcd(q**k - 1, q**l + 1) == _minus_plus(q, k, l)


def test_classes_are_pairwise_coprime():
    for q in SMALL_Q + (11, 13, 16):
        ks = [greatest_primitive_divisor(m, q).value for m in range(1, 31)]
        for i, a in enumerate(ks):
            for b in ks[i + 1:]:
                assert gcd(a, b) == 1


def test_suzuki_ree_divisor_gcds():
    special = {("2G2", 1, 2): 2, ("2F4", 2, 4): 3}
    for family, top in (("2B2", 3), ("2G2", 4), ("2F4", 6)):
        for n in range(1, 5):
            for i in range(1, top + 1):
                for j in range(i + 1, top + 1):
                    got = gcd(suzuki_ree_divisor(family, n, i), suzuki_ree_divisor(family, n, j))
                    assert got == special.get((family, i, j), 1)


def test_involutions_on_grid():
    for m in range(1, 10**4 + 1):
        assert nu(nu(m)) == m
        assert nu_eps(nu_eps(m, -1), -1) == m
        assert nu_eps(m, 1) == m


@pytest.mark.parametrize("m", range(1, 13))
def test_nu_case_table(m):
    want = m if m % 4 == 0 else (m // 2 if m % 4 == 2 else 2 * m)
    assert nu(m) == want
    assert eta(m) == (m if m % 2 else m // 2)


# ---- randomised checks


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 40), st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 27, 32]))
def test_primitive_divisor_matches_definition(m, q):
    """For m >= 3, k_m(q) collects the prime powers of order m in q^m-1, all of which sit in phi_m(q)."""
    want = 1
    n = q**m - 1
    for r in factorint(cyclotomic_eval(m, q)):
        if r != 2 and mult_order(r, q) == m:
            want *= r_share(n, r)[0]
    assert greatest_primitive_divisor(m, q).value == want


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 27])
def test_first_two_classes_closed_rule(q):
    k1 = (q - 1) // 2 if q % 4 == 3 else q - 1
    k2 = (q + 1) // 2 if q % 4 == 1 else q + 1
    assert greatest_primitive_divisor(1, q).value == k1
    assert greatest_primitive_divisor(2, q).value == k2


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**6))
def test_nu_involution_random(m):
    assert nu(nu(m)) == m
    assert eta(nu(m)) in (eta(m), m, 2 * m)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 10**12))
def test_factorize_round_trip(n):
    prod = 1
    for r, e in factorize(n).items():
        prod *= r**e
    assert prod == n
    assert factorize(n) == factorint(n)
