"""Brute-force adjacency from the orders of maximal tori.

An element of order rs with r, s odd and prime to p is semisimple, so it sits in a
maximal torus; conversely an abelian group whose order is divisible by rs has an
element of order rs. So r ~ s exactly when rs divides some torus order.

Classical lists assume every partition/sign combination is realised (with the sign
product fixed for D_n^eps); the exceptional lists are the corrected ones for E7, E8
and 2F4.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd

from .adjacency import _partitions, pair_verdict
from .groupspec import GroupSpec, OutOfScopeError, Vertex, partition
from .numth import factorize

COVERED = ("B", "C", "D", "2D", "E7", "E8", "2F4")


@dataclass(frozen=True)
class TorusOrderSet:
    spec: GroupSpec
    orders: tuple  # sorted, deduplicated
    provenance: tuple  # one tag per order, the first pattern that produced it

    def __len__(self) -> int:
        return len(self.orders)

    def __contains__(self, m: int) -> bool:
        return m in self.orders


def _collect(spec, tagged) -> TorusOrderSet:
    seen = {}
    for tag, m in tagged:
        seen.setdefault(m, tag)
    orders = tuple(sorted(seen))
    return TorusOrderSet(spec, orders, tuple(seen[m] for m in orders))


def _signed_parts(n: int):
    for parts in _partitions(n):
        for signs in product((1, -1), repeat=len(parts)):
            yield parts, signs


def _tag(parts, signs) -> str:
    return "*".join(f"(q^{m}{'-' if s > 0 else '+'}1)" for m, s in zip(parts, signs))


def torus_orders_bc(n: int, q: int) -> TorusOrderSet:
    from .groupspec import parse_spec

    spec = parse_spec(f"B:{n}:{q}")
    d = gcd(2, q - 1)
    out = []
    for parts, signs in _signed_parts(n):
        m = 1
        for k, s in zip(parts, signs):
            m *= q**k - s
        out.append((_tag(parts, signs), m // d))
    return _collect(spec, out)


def torus_orders_d(n: int, eps: int, q: int) -> TorusOrderSet:
    from .groupspec import parse_spec

    spec = parse_spec(f"{'D' if eps > 0 else '2D'}:{n}:{q}")
    d = gcd(4, q**n - eps)
    out = []
    for parts, signs in _signed_parts(n):
        sgn = 1
        for s in signs:
            sgn *= s
        if sgn != eps:
            continue
        m = 1
        for k, s in zip(parts, signs):
            m *= q**k - s
        out.append((_tag(parts, signs), m // d))
    return _collect(spec, out)


# polynomials in q as coefficient tuples, highest degree first
def _P(*coeffs) -> tuple:
    return tuple(coeffs)


def _qk(k: int, c: int) -> tuple:
    """q^k + c."""
    return tuple([1] + [0] * (k - 1) + [c])


QM, QP = _qk(1, -1), _qk(1, 1)


def _ev(poly: tuple, q: int) -> int:
    v = 0
    for c in poly:
        v = v * q + c
    return v


def _e7_patterns():
    pats = []
    for n1 in range(8):
        pats.append(("E7.1", Counter({QP: n1, QM: 7 - n1})))
    q2p = _qk(2, 1)
    bad2 = [Counter({q2p: 1, QP: 5}), Counter({q2p: 1, QM: 5})]
    for n1 in (1, 2):
        for n2 in range(7 - 2 * n1 + 1):
            c = Counter({q2p: n1, QP: n2, QM: 7 - 2 * n1 - n2})
            if +c not in bad2:
                pats.append(("E7.2", c))
    q3p, q3m = _qk(3, 1), _qk(3, -1)
    bad3 = []
    for e, (a, b, c) in ((1, (q3p, QM, QP)), (-1, (q3m, QP, QM))):
        bad3.append(Counter({a: 1, b: 4}))
        bad3.append(Counter({a: 1, q2p: 1, c: 2}))
    bad3 += [Counter({q3p: 1, q2p: 2}), Counter({q3m: 1, q2p: 2})]
    pats += _cubic_family(7, q3p, q3m, q2p, bad3, "E7.3")
    q4p = _qk(4, 1)
    for a, b in product((1, -1), repeat=2):
        pats.append(("E7.4", Counter({q4p: 1, _qk(2, a): 1, _qk(1, b): 1})))
    for a in (1, -1):
        pats.append(("E7.5", Counter({_qk(5, a): 1, _qk(2, -1): 1})))
        pats.append(("E7.6", Counter({_qk(5, a): 1, _qk(1, a): 2})))
        pats.append(("E7.7", Counter({_qk(7, a): 1})))
    for e in (1, -1):
        pats.append(("E7.8", Counter({_qk(1, -e): 1, _P(1, e, 1): 3})))
        pats.append(("E7.9", Counter({_qk(5, -e): 1, _P(1, e, 1): 1})))
        pats.append(("E7.10", Counter({_qk(3, e): 1, _P(1, 0, -1, 0, 1): 1})))
        pats.append(("E7.11", Counter({_qk(1, -e): 1, _P(1, 0, 0, e, 0, 0, 1): 1})))
        pats.append(("E7.12", Counter({_qk(3, -e): 1, _P(1, -e, 1): 2})))
    return pats


def _cubic_family(total, q3p, q3m, q2p, bad, tag):
    out = []
    for n1 in range(3):
        for n2 in range(3 - n1):
            if not 1 <= n1 + n2 <= 2:
                continue
            rest = total - 3 * (n1 + n2)
            for n3 in range(rest // 2 + 1):
                for n4 in range(rest - 2 * n3 + 1):
                    n5 = rest - 2 * n3 - n4
                    c = +Counter({q3p: n1, q3m: n2, q2p: n3, QP: n4, QM: n5})
                    if c not in bad:
                        out.append((tag, c))
    return out


def _e8_patterns():
    pats = []
    for n1 in range(9):
        pats.append(("E8.1", Counter({QP: n1, QM: 8 - n1})))
    q2p, q2m = _qk(2, 1), _qk(2, -1)
    bad2 = [Counter({q2p: 3, x: 2}) for x in (QP, QM)] + [Counter({q2p: 1, x: 6}) for x in (QP, QM)]
    for n1 in range(1, 5):
        for n2 in range(8 - 2 * n1 + 1):
            c = +Counter({q2p: n1, QP: n2, QM: 8 - 2 * n1 - n2})
            if c not in bad2:
                pats.append(("E8.2", c))
    q3p, q3m = _qk(3, 1), _qk(3, -1)
    bad3 = [Counter({q3p: 2, q2p: 1}), Counter({q3m: 2, q2p: 1})]
    for a, b, c in ((q3p, QM, QP), (q3m, QP, QM)):
        bad3.append(Counter({a: 1, b: 5}))
        bad3.append(Counter({a: 1, q2p: 1, c: 3}))
        bad3.append(Counter({a: 1, q2p: 2, b: 1}))
    pats += _cubic_family(8, q3p, q3m, q2p, bad3, "E8.3")
    q4p = _qk(4, 1)
    pats.append(("E8.4", Counter({_qk(8, -1): 1})))
    pats.append(("E8.5", Counter({q4p: 2})))
    for a, b in product((1, -1), repeat=2):
        pats.append(("E8.6", Counter({q4p: 1, _qk(2, a): 1, _qk(1, b): 2})))
    pats.append(("E8.7", Counter({q4p: 1, q2m: 2})))
    for e in (1, -1):
        pats.append(("E8.8", Counter({q4p: 1, _qk(3, e): 1, _qk(1, -e): 1})))
        pats.append(("E8.9", Counter({_qk(5, e): 1, _qk(1, e): 3})))
        for a in (1, -1):
            pats.append(("E8.10", +Counter({_qk(5, a): 1, _qk(1, e): 2, _qk(1, -e): 1})))
        pats.append(("E8.11", Counter({_qk(5, e): 1, q2p: 1, _qk(1, -e): 1})))
        pats.append(("E8.12", Counter({_qk(5, e): 1, _qk(3, e): 1})))
    for a in (1, -1):
        pats.append(("E8.13", Counter({_qk(6, 1): 1, _qk(2, a): 1})))
        for b in (1, -1):
            pats.append(("E8.14", Counter({_qk(7, a): 1, _qk(1, b): 1})))
    for e in (1, -1):
        for a in (1, -1):
            pats.append(("E8.15", Counter({_qk(1, -e): 1, _P(1, e, 1): 3}) + Counter({_qk(1, a): 1})))
            pats.append(("E8.17", Counter({_qk(3, e): 1, _P(1, 0, -1, 0, 1): 1, _qk(1, a): 1})))
            pats.append(("E8.18", Counter({_qk(1, -e): 1, _P(1, 0, 0, e, 0, 0, 1): 1})
                         + Counter({_qk(1, a): 1})))
            pats.append(("E8.19", Counter({_qk(3, -e): 1, _P(1, -e, 1): 2, _qk(1, a): 1})))
        pats.append(("E8.16", Counter({_qk(5, -e): 1, _P(1, e, 1): 1, _qk(1, e): 1})))
    pats.append(("E8.20", Counter({_P(1, 0, 0, 0, -1, 0, 0, 0, 1): 1})))
    pats.append(("E8.21", Counter({_P(1, 1, 0, -1, -1, -1, 0, 1, 1): 1})))
    pats.append(("E8.22", Counter({_P(1, 0, -1, 0, 1, 0, -1, 0, 1): 1})))
    pats.append(("E8.23", Counter({_P(1, 0, -1, 0, 1): 2})))
    for e in (1, -1):
        pats.append(("E8.24", Counter({_P(1, 0, 0, e, 0, 0, 1): 1, _P(1, e, 1): 1})))
        pats.append(("E8.26", Counter({_P(1, e, 1, e, 1): 2})))
        pats.append(("E8.27", Counter({_P(1, 0, -1, 0, 1): 1, _P(1, e, 1): 2})))
        pats.append(("E8.29", Counter({_P(1, e, 1): 4})))
    pats.append(("E8.25", Counter({_P(1, -1, 0, 1, -1, 1, 0, -1, 1): 1})))
    pats.append(("E8.28", Counter({_P(1, -1, 1): 2, _P(1, 1, 1): 2})))
    return pats


def _eval_pattern(c: Counter, q: int) -> int:
    m = 1
    for poly, e in c.items():
        m *= _ev(poly, q) ** e
    return m


def torus_orders_exceptional(family: str, q: int) -> TorusOrderSet:
    from .groupspec import parse_spec

    spec = parse_spec(f"{family}:{q}")
    if family == "E7":
        d = gcd(2, q - 1)
        tagged = [(t, _eval_pattern(c, q) // d) for t, c in _e7_patterns()]
    elif family == "E8":
        tagged = [(t, _eval_pattern(c, q)) for t, c in _e8_patterns()]
    elif family == "2F4":
        s = 2 ** (spec.tower + 1)
        tagged = []
        for e in (1, -1):
            tagged.append(("2F4.1", q * q + e * q * s + q + e * s + 1))
            tagged.append(("2F4.2", q * q - e * q * s + e * s - 1))
            tagged.append(("2F4.4", (q + e * s + 1) ** 2))
            tagged.append(("2F4.5", (q - 1) * (q + e * s + 1)))
            tagged.append(("2F4.6", (q + e) ** 2))
            tagged.append(("2F4.7", q * q + e))
        tagged.append(("2F4.3", q * q - q + 1))
    else:
        raise OutOfScopeError(f"no torus list for {family}")
    return _collect(spec, tagged)


@lru_cache(maxsize=256)
def torus_orders(spec: GroupSpec) -> TorusOrderSet:
    f = spec.family
    if f in ("B", "C"):
        return torus_orders_bc(spec.n, spec.qv)
    if f in ("D", "2D"):
        return torus_orders_d(spec.n, spec.eps, spec.qv)
    if f in ("E7", "E8", "2F4"):
        return torus_orders_exceptional(f, spec.qv)
    raise OutOfScopeError(f"the torus oracle does not cover {f}")


def oracle_adjacent(spec: GroupSpec, r: int, s: int) -> bool:
    if spec.family not in COVERED:
        raise OutOfScopeError(f"the torus oracle does not cover {spec.family}")
    if r == s or 2 in (r, s) or spec.p in (r, s):
        raise ValueError("need two distinct odd primes different from p")
    rs = r * s
    return any(m % rs == 0 for m in torus_orders(spec).orders)


def odd_representative(spec: GroupSpec, v: Vertex) -> int | None:
    """Smallest odd prime standing for the vertex, or None if it holds only 2."""
    part = partition(spec)
    if v.kind == "p":
        return None
    if v.kind == "prime":
        return v.prime if v.prime != 2 else None
    res = part.residual(v.index)
    odd = [r for r in factorize(res) if r != 2]
    return min(odd) if odd else None


@dataclass(frozen=True)
class OracleDisagreement:
    u: Vertex
    v: Vertex
    r: int
    s: int
    criterion: bool
    oracle: bool


def compare(spec: GroupSpec) -> tuple:
    """Pairs of odd vertices where the criteria and the torus orders disagree."""
    part = partition(spec)
    reps = [(v, odd_representative(spec, v)) for v in part.vertices()]
    reps = [(v, r) for v, r in reps if r is not None]
    bad = []
    for i, (u, r) in enumerate(reps):
        for v, s in reps[i + 1:]:
            crit = pair_verdict(spec, part, u, v).adjacent
            orc = oracle_adjacent(spec, r, s)
            if crit != orc:
                bad.append(OracleDisagreement(u, v, r, s, crit, orc))
    return tuple(bad)
