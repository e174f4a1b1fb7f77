"""Exact integer number theory behind the adjacency rules.

Everything here works on Python integers, so q^30 and friends never overflow.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from sympy import divisors, factorint, isprime, primerange
from sympy.ntheory import pollard_rho

TRIAL_LIMIT = 10**6
DEFAULT_BUDGET = 10**7
RHO_SEED = 20051
SUZREE_RANGES = {"2B2": 3, "2G2": 4, "2F4": 6}
ZSIGMONDY_EXCEPTIONS = frozenset({(2, 1), (3, 1), (2, 6)})


class NumthError(ValueError):
    pass


class FactorBudgetExceeded(ArithmeticError):
    """Raised when rho runs out of iterations; carries the stubborn cofactor."""

    def __init__(self, cofactor: int, budget: int):
        super().__init__(f"factorization budget {budget} exhausted on cofactor {cofactor}")
        self.cofactor = cofactor
        self.budget = budget


@dataclass(frozen=True)
class PrimePower:
    p: int
    alpha: int

    @property
    def q(self) -> int:
        return self.p**self.alpha

    @classmethod
    def from_int(cls, q: int) -> "PrimePower":
        if q < 2:
            raise NumthError(f"{q} is not a prime power")
        f = factorint(q)
        if len(f) != 1:
            raise NumthError(f"{q} is not a prime power")
        (p, a), = f.items()
        return cls(p, a)

    def __str__(self) -> str:
        return str(self.q)


@dataclass(frozen=True)
class GreatestPrimitiveDivisor:
    m: int
    q: int
    value: int


def _as_int(q) -> int:
    return q.q if isinstance(q, PrimePower) else int(q)


def factor_budget() -> int:
    raw = os.environ.get("GK_FACTOR_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@lru_cache(maxsize=1)
def _small_primes() -> tuple:
    return tuple(primerange(2, TRIAL_LIMIT))


def valuation(m: int, r: int) -> int:
    """Exponent of the prime r in m (m != 0)."""
    m = abs(m)
    v = 0
    while m % r == 0:
        m //= r
        v += 1
    return v


def r_share(m: int, r: int) -> tuple:
    """Split m as m_r * m_{r'} with m_r the largest power of r dividing m."""
    if m < 1:
        raise NumthError("m must be positive")
    mr = r ** valuation(m, r)
    return mr, m // mr


def factorize(n: int, budget: int | None = None) -> dict:
    """Prime factorization: trial division, then Miller-Rabin, then rho with a fixed seed."""
    if n < 1:
        raise NumthError("can only factor positive integers")
    budget = factor_budget() if budget is None else budget
    out: dict = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = valuation(n, p)
            out[p] = e
            n //= p**e
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if isprime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = pollard_rho(m, seed=RHO_SEED, max_steps=budget, retries=5)
        if not d or d == m:
            raise FactorBudgetExceeded(m, budget)
        stack.extend([d, m // d])
    return dict(sorted(out.items()))


def prime_set(n: int, budget: int | None = None) -> frozenset:
    return frozenset(factorize(n, budget)) if n > 1 else frozenset()


def mult_order(r: int, q) -> int:
    """e(r, q): least m with q^m = 1 mod r, for an odd prime r not dividing q."""
    q = _as_int(q)
    if r == 2 or r < 2 or not isprime(r):
        raise NumthError(f"{r} is not an odd prime")
    if q % r == 0:
        raise NumthError(f"{r} divides {q}")
    m = r - 1
    for p in factorint(m):
        while m % p == 0 and pow(q, m // p, r) == 1:
            m //= p
    return m


def order_of_two(q) -> int:
    """e(2, q) for odd q: 1 when q = 1 mod 4, else 2."""
    q = _as_int(q)
    if q % 2 == 0 or q < 3:
        raise NumthError("order_of_two needs an odd q > 1")
    return 1 if q % 4 == 1 else 2


def prim_index(r: int, q) -> int:
    """e(r, q) with the convention for r = 2."""
    return order_of_two(q) if r == 2 else mult_order(r, q)


@lru_cache(maxsize=None)
def _cyclo(m: int, q: int) -> int:
    acc = 1
    for d in divisors(m)[:-1]:
        acc *= _cyclo(d, q)
    v, rem = divmod(q**m - 1, acc)
    assert rem == 0
    return v


def cyclotomic_eval(m: int, q) -> int:
    """phi_m(q) from prod_{d | m} phi_d(q) = q^m - 1."""
    q = _as_int(q)
    if m < 1 or q < 2:
        raise NumthError("need m >= 1 and q >= 2")
    return _cyclo(m, q)


@lru_cache(maxsize=None)
def _kval(m: int, q: int) -> int:
    if m == 1:
        return (q - 1) // 2 if q % 4 == 3 else q - 1
    if m == 2:
        return (q + 1) // 2 if q % 4 == 1 else q + 1
    v = _cyclo(m, q)
    for r in factorint(m):
        _, mr_prime = r_share(m, r)
        v //= gcd(_cyclo(mr_prime, q), r)
    return v


def greatest_primitive_divisor(m: int, q) -> GreatestPrimitiveDivisor:
    """k_m(q), the largest divisor of q^m - 1 made of primitive prime divisors."""
    qi = _as_int(q)
    if m < 1 or qi < 2:
        raise NumthError("need m >= 1 and q >= 2")
    return GreatestPrimitiveDivisor(m, qi, _kval(m, qi))


def kval(m: int, q) -> int:
    return _kval(m, _as_int(q))


def class_nonempty(m: int, q) -> bool:
    """R_m(q) is nonempty; checked against the Zsigmondy exception list."""
    qi = _as_int(q)
    by_k = greatest_primitive_divisor(m, qi).value > 1
    by_list = (qi, m) not in ZSIGMONDY_EXCEPTIONS
    if by_k != by_list:
        raise AssertionError(f"k_{m}({qi}) disagrees with the exception list")
    return by_k


def primitive_primes(m: int, q, budget: int | None = None) -> frozenset:
    """R_m(q), by factoring k_m(q)."""
    qi = _as_int(q)
    primes = prime_set(greatest_primitive_divisor(m, qi).value, budget)
    for r in primes:
        assert prim_index(r, qi) == m, (r, m, qi)
    return primes


def nu(m: int) -> int:
    if m < 1:
        raise NumthError("m must be positive")
    if m % 4 == 0:
        return m
    if m % 2 == 0:
        return m // 2
    return 2 * m


def nu_eps(m: int, eps: int) -> int:
    return m if eps > 0 else nu(m)


def eta(m: int) -> int:
    if m < 1:
        raise NumthError("m must be positive")
    return m if m % 2 else m // 2


def suzuki_ree_divisor(family: str, n: int, i: int) -> int:
    """m_i for 2B2(2^{2n+1}), 2G2(3^{2n+1}), 2F4(2^{2n+1})."""
    if family not in SUZREE_RANGES:
        raise NumthError(f"unknown Suzuki/Ree family {family}")
    if not 1 <= i <= SUZREE_RANGES[family] or n < 1:
        raise NumthError(f"index {i} out of range for {family}")
    if family == "2B2":
        a, b = 2 ** (2 * n + 1), 2 ** (n + 1)
        return (a - 1, a - b + 1, a + b + 1)[i - 1]
    if family == "2G2":
        a, b = 3 ** (2 * n + 1), 3 ** (n + 1)
        return (a - 1, a + 1, a - b + 1, a + b + 1)[i - 1]
    a = 2 ** (2 * n + 1)
    a2, a3, b = 2 ** (4 * n + 2), 2 ** (3 * n + 2), 2 ** (n + 1)
    return (a - 1, a + 1, a2 + 1, a2 - a + 1,
            a2 - a3 + a - b + 1, a2 + a3 + a + b + 1)[i - 1]


def strip_primes(m: int, primes) -> int:
    """m with every factor from primes removed."""
    for r in primes:
        while m % r == 0:
            m //= r
    return m


def suzuki_ree_class(family: str, n: int, i: int, budget: int | None = None) -> frozenset:
    m = suzuki_ree_divisor(family, n, i)
    drop = {"2B2": set(), "2G2": {2}, "2F4": {3}}[family]
    return prime_set(strip_primes(m, drop), budget)
