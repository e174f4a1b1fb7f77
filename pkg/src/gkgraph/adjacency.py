"""Adjacency predicates, one per family, at the level of class indices.

The odd-prime criteria (B/C, D, exceptional, Suzuki-Ree) are the published ones.
Edges through p, through 2 and through primes dividing q - eps are not covered by
them; `special_edges` fills those in from the compact forms and, for the classical
families, from maximal-torus and unipotent-centraliser arguments recorded per edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .groupspec import ClassPartition, GroupSpec, Vertex, partition
from .numth import eta, nu_eps, valuation

UNSPECIFIED = "unspecified"


class AdjacencyError(ValueError):
    pass


def _odd_quotient(k: int, l: int) -> bool:
    """l/k is an odd natural number."""
    return l % k == 0 and (l // k) % 2 == 1


def adjacent_bc(n: int, k: int, l: int) -> bool:
    """Odd r in R_k and s in R_l of B_n(q) or C_n(q)."""
    if eta(k) > eta(l):
        k, l = l, k
    odd = _odd_quotient(k, l) or (eta(k) == eta(l) and _odd_quotient(l, k))
    return not (eta(k) + eta(l) > n and not odd)


def _chain(n: int, k: int, l: int) -> bool:
    return n == l == 2 * eta(l) == 2 * eta(k) == 2 * k


def adjacent_d(n: int, eps: int, k: int, l: int) -> bool:
    """Odd r in R_k and s in R_l of D_n^eps(q)."""
    if eta(k) > eta(l):
        k, l = l, k
    odd = _odd_quotient(k, l) or (eta(k) == eta(l) and _odd_quotient(l, k))
    ineq = 2 * eta(k) + 2 * eta(l) > 2 * n - (1 - eps * (-1) ** (k + l))
    chain = eps > 0 and (_chain(n, k, l) or _chain(n, l, k))
    return not (ineq and not odd and not chain)


def adjacent_linear(n: int, eps: int, k: int, l: int) -> bool:
    """Odd r in R_k, s in R_l of A_{n-1}^eps(q), both with nu_eps >= 2."""
    a, b = nu_eps(k, eps), nu_eps(l, eps)
    if min(a, b) < 2:
        raise AdjacencyError("adjacent_linear needs nu_eps(k), nu_eps(l) >= 2")
    if a == b:
        return True
    return not (a + b > n and a % b != 0 and b % a != 0)


def adjacent_exceptional(family: str, q: int, k: int, l: int,
                         r_is_3: bool = False, r_is_5_k4: bool = False) -> bool:
    """Odd r in R_k, s in R_l, k <= l, of an exceptional group; flags describe r."""
    if k > l:
        k, l = l, k
    if k == l:
        return True
    f = family
    if f == "G2":
        bad = (not r_is_3 and l in (3, 6)) or (r_is_3 and l == 9 - 3 * k)
    elif f == "F4":
        bad = l in (8, 12) or (l == 6 and k in (3, 4)) or (l == 4 and k == 3)
    elif f == "E6":
        bad = ((l == 4 and k == 3) or (l == 5 and k >= 3) or (l == 6 and k == 5)
               or (l == 8 and k >= 3) or (l == 8 and r_is_3 and _share(q - 1, 3) == 3)
               or l == 9 or (l == 12 and k != 3))
    elif f == "2E6":
        bad = ((l == 6 and k == 4) or (l == 8 and k >= 3)
               or (l == 8 and r_is_3 and _share(q + 1, 3) == 3)
               or (l == 10 and k >= 3) or (l == 12 and k != 6) or l == 18)
    elif f == "E7":
        bad = ((l == 5 and k == 4) or (l == 6 and k == 5) or (l in (14, 18) and k != 2)
               or (l in (7, 9) and k >= 2) or (l == 8 and k >= 3 and k != 4)
               or (l == 10 and k >= 3 and k != 6) or (l == 12 and k >= 4 and k != 6))
    elif f == "E8":
        bad = ((l == 6 and k == 5) or (l in (7, 14) and k >= 3) or (l == 9 and k >= 4)
               or (l in (8, 12) and k >= 5 and k != 6)
               or (l == 10 and k >= 3 and k not in (4, 6))
               or (l == 18 and k not in (1, 2, 6))
               or (l == 20 and not r_is_5_k4) or l in (15, 24, 30))
    elif f == "3D4":
        bad = (l == 6 and k == 3) or l == 12
    else:
        raise AdjacencyError(f"{family} is not an exceptional family")
    return not bad


def _share(m: int, r: int) -> int:
    return r ** valuation(m, r)


SUZREE_CLASS_EDGES = {"2B2": set(), "2G2": set(), "2F4": {frozenset({1, 2}), frozenset({1, 3})}}


def adjacent_suzree(family: str, i: int | None, j: int,
                    left_is_2: bool = False, left_is_3: bool = False) -> bool:
    """S_i vs S_j, or the prime 2 / 3 (left) vs S_j, in a Suzuki or Ree group."""
    if family not in SUZREE_CLASS_EDGES:
        raise AdjacencyError(f"{family} is not a Suzuki or Ree family")
    if left_is_2:
        if family == "2B2":
            return False
        if family == "2G2":
            return j in (1, 2)
        return j in (1, 2, 3)
    if left_is_3:
        if family == "2B2":
            raise AdjacencyError("3 does not divide |2B2(q)|")
        if family == "2G2":
            return False
        return j not in (3, 5, 6)
    if i == j:
        return True
    return frozenset({i, j}) in SUZREE_CLASS_EDGES[family]


# characteristic edges read off the compact forms: p is adjacent to these classes
EXCEPTIONAL_P_NEIGHBOURS = {
    "G2": {1, 2},
    "F4": {1, 2, 3, 4, 6},
    "E6": {1, 2, 3, 4, 5, 6},
    "2E6": {1, 2, 3, 4, 6, 10},
    "E7": {1, 2, 3, 4, 5, 6, 8, 10, 12},
    "E8": {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18},
    "3D4": {1, 2, 3, 6},
}
# the separate vertex 2 (p odd) of the F4 compact form
F4_TWO_NEIGHBOURS = {1, 2, 3, 4, 6, 8}


@dataclass(frozen=True)
class Verdict:
    u: Vertex
    v: Vertex
    adjacent: bool | None
    source: str


# ---- classical tori, used for the semisimple pairs the odd criteria leave open

def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for m in range(min(n, largest), 0, -1):
        for rest in _partitions(n - m, m):
            yield (m,) + rest


@lru_cache(maxsize=1024)
def linear_tori(n: int, eps: int, q: int) -> tuple:
    """(parts, |T|, |Z|) for the maximal tori T of SL_n^eps(q); |T/Z| is the order in the simple group."""
    z = gcd(n, q - eps)
    out = []
    for parts in _partitions(n):
        order = 1
        for m in parts:
            order *= q**m - eps**m
        out.append((parts, order // (q - eps), z))
    return tuple(out)


def _linear_divides(spec: GroupSpec, part: ClassPartition, x: Vertex, parts, order, z) -> bool:
    if x.kind == "prime":
        r = x.prime
        return valuation(order, r) > valuation(z, r)
    nv = nu_eps(x.index, spec.eps)
    if nv == 1:
        return len(parts) >= 2
    return any(m % nv == 0 for m in parts)


def semisimple_linear(spec: GroupSpec, part: ClassPartition, x: Vertex, y: Vertex) -> bool:
    for parts, order, z in linear_tori(spec.n, spec.eps, spec.qv):
        if (_linear_divides(spec, part, x, parts, order, z)
                and _linear_divides(spec, part, y, parts, order, z)):
            return True
    return False


def _v2_factor(q: int, m: int, sign: int) -> int:
    """2-adic valuation of q^m - sign for odd q."""
    return valuation(q**m - sign, 2)


def _hosts(i: int, m: int, sign: int) -> bool:
    """Primes of R_i (odd) divide q^m - sign."""
    if sign > 0:
        return m % i == 0
    return i % 2 == 0 and m % (i // 2) == 0 and (m // (i // 2)) % 2 == 1


@lru_cache(maxsize=1024)
def _best_v2(s: int, q: int) -> dict:
    """Max 2-adic valuation over products of (q^m - sign) with sum m = s, keyed by sign product."""
    neg = float("-inf")
    best = [{1: neg, -1: neg} for _ in range(s + 1)]
    best[0][1] = 0
    for t in range(1, s + 1):
        for m in range(1, t + 1):
            for sign in (1, -1):
                v = _v2_factor(q, m, sign)
                for prod in (1, -1):
                    prev = best[t - m][prod * sign]
                    if prev + v > best[t][prod]:
                        best[t][prod] = prev + v
    return {t: dict(b) for t, b in enumerate(best)}


def two_adjacent_orthsymp(spec: GroupSpec, i: int) -> bool:
    """2 versus an odd class R_i in B_n, C_n, D_n^eps over odd q."""
    n, q, f = spec.n, spec.qv, spec.family
    if f in ("B", "C"):
        need = 1
        constrained = False
    else:
        need = valuation(gcd(4, q**n - spec.eps), 2)
        constrained = True
    best = _best_v2(n, q)
    for m in range(1, n + 1):
        for sign in (1, -1):
            if not _hosts(i, m, sign):
                continue
            rest = best[n - m]
            got = (rest[spec.eps * sign] if constrained else max(rest.values()))
            if _v2_factor(q, m, sign) + got > need:
                return True
    return False


# ---- unipotent pairs (p with a semisimple prime) in the classical families

def p_adjacent_classical(spec: GroupSpec, x: Vertex) -> bool:
    f, n, q = spec.family, spec.n, spec.qv
    if f in ("A", "2A"):
        if x.kind == "prime" and x.prime == 2:
            return n >= 3
        if x.kind == "prime":
            if n == 2:
                return False
            return not (n == 3 and x.prime == 3 and _share(q - spec.eps, 3) == 3)
        return nu_eps(x.index, spec.eps) <= n - 2
    if x.kind == "prime":
        return True
    if f in ("B", "C"):
        return eta(x.index) < n
    return eta(x.index) < n - 1


def pair_verdict(spec: GroupSpec, part: ClassPartition, u: Vertex, v: Vertex) -> Verdict:
    """Adjacency of two distinct vertices of the compact graph, with its source."""
    f = spec.family
    a, b = sorted((u, v), key=Vertex.sort_key)
    if f in ("A", "2A"):
        return _verdict_linear(spec, part, a, b)
    if f in ("B", "C", "D", "2D"):
        return _verdict_orthsymp(spec, part, a, b)
    if f in EXCEPTIONAL_P_NEIGHBOURS:
        return _verdict_exceptional(spec, part, a, b)
    if f in SUZREE_CLASS_EDGES:
        return _verdict_suzree(spec, part, a, b)
    raise AdjacencyError(f"no adjacency rules for {spec}")


def _verdict_linear(spec, part, a, b) -> Verdict:
    if a.kind == "p":
        return Verdict(a, b, p_adjacent_classical(spec, b), "unipotent-centraliser")
    if a.kind == "R" and b.kind == "R":
        if min(nu_eps(a.index, spec.eps), nu_eps(b.index, spec.eps)) >= 2:
            return Verdict(a, b, adjacent_linear(spec.n, spec.eps, a.index, b.index), "criterion-linear")
    return Verdict(a, b, semisimple_linear(spec, part, a, b), "torus-linear")


def _verdict_orthsymp(spec, part, a, b) -> Verdict:
    if a.kind == "p":
        return Verdict(a, b, p_adjacent_classical(spec, b), "unipotent-centraliser")
    if a.kind == "prime":
        return Verdict(a, b, two_adjacent_orthsymp(spec, b.index), "torus-2")
    if spec.family in ("B", "C"):
        return Verdict(a, b, adjacent_bc(spec.n, a.index, b.index), "criterion-bc")
    return Verdict(a, b, adjacent_d(spec.n, spec.eps, a.index, b.index), "criterion-d")


def _exc_index(x: Vertex) -> int:
    return x.index


def _verdict_exceptional(spec, part, a, b) -> Verdict:
    f, q = spec.family, spec.qv
    if a.kind == "p":
        if b.kind == "prime" and f == "F4":
            return Verdict(a, b, True, "compact-form")
        return Verdict(a, b, _exc_index(b) in EXCEPTIONAL_P_NEIGHBOURS[f], "compact-form")
    if f == "F4" and a.kind == "prime":
        return Verdict(a, b, b.index in F4_TWO_NEIGHBOURS, "compact-form")
    if a.kind == "prime" and b.kind == "prime":
        raise AdjacencyError("two split primes in one exceptional group")
    if a.kind == "prime":
        k, l, r = a.index, b.index, a.prime
        if k == l:
            return Verdict(a, b, True, "same-class")
        if k < l:
            flags = dict(r_is_3=(r == 3), r_is_5_k4=(r == 5 and k == 4))
        else:
            flags = {}
        return Verdict(a, b, adjacent_exceptional(f, q, k, l, **flags), "criterion-exceptional")
    return Verdict(a, b, adjacent_exceptional(f, q, a.index, b.index), "criterion-exceptional")


def _verdict_suzree(spec, part, a, b) -> Verdict:
    f = spec.family
    if a.kind == "p" and b.kind == "prime":
        # 2G2: 2 ~ p=3; 2F4: p=2 ~ 3
        return Verdict(a, b, f != "2B2", "compact-form")
    if a.kind == "p":
        if f == "2F4":
            return Verdict(a, b, adjacent_suzree(f, None, b.index, left_is_2=True), "criterion-suzree")
        return Verdict(a, b, False, "criterion-suzree")
    if a.kind == "prime":
        return Verdict(a, b, adjacent_suzree(f, None, b.index, left_is_2=a.prime == 2,
                                             left_is_3=a.prime == 3), "criterion-suzree")
    return Verdict(a, b, adjacent_suzree(f, a.index, b.index), "criterion-suzree")


def special_edges(spec: GroupSpec) -> list:
    """Verdicts for every pair not decided by an odd-prime criterion."""
    part = partition(spec)
    vs = part.vertices()
    out = []
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            ver = pair_verdict(spec, part, u, v)
            if not ver.source.startswith("criterion"):
                out.append(ver)
    return out
