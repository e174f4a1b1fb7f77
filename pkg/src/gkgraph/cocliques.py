"""Compact graphs, exact maximum-coclique enumeration and the theta decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from sympy import primerange

from .adjacency import pair_verdict
from .groupspec import SUZREE, GroupSpec, Vertex, alt_pi, partition


class DecompositionError(RuntimeError):
    """The enumerated cocliques do not split as theta + theta'."""


class UnresolvedError(RuntimeError):
    """An undecided pair changes the answer."""


@dataclass(frozen=True)
class CompactGraph:
    spec: GroupSpec
    vertices: tuple
    edges: frozenset  # frozensets {u, v}
    unresolved: tuple = ()
    sources: tuple = ()  # (u, v, adjacent, source) for every pair, Lie types only
    host: tuple = ()  # class index of each vertex (0 for p and for plain primes)

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return frozenset((u, v)) in self.edges

    def masks(self, extra=()) -> list:
        """Neighbourhood bitmasks (open), treating the pairs in extra as edges."""
        index = {v: i for i, v in enumerate(self.vertices)}
        nb = [0] * len(self.vertices)
        for e in list(self.edges) + [frozenset(p) for p in extra]:
            u, v = tuple(e)
            nb[index[u]] |= 1 << index[v]
            nb[index[v]] |= 1 << index[u]
        return nb

    def completed(self, present: bool) -> "CompactGraph":
        if not self.unresolved:
            return self
        edges = self.edges | {frozenset(p) for p in self.unresolved} if present else self.edges
        return CompactGraph(self.spec, self.vertices, frozenset(edges), (), self.sources, self.host)


def prime_vertex(r: int) -> Vertex:
    return Vertex("prime", 0, r)


def alternating_graph(n: int) -> CompactGraph:
    from .groupspec import GroupSpec

    primes = alt_pi(n)
    vs = tuple(prime_vertex(r) for r in primes)
    edges = set()
    for i, r in enumerate(primes):
        for s in primes[i + 1:]:
            lim = s + 4 if r == 2 else r + s
            if lim <= n:
                edges.add(frozenset((prime_vertex(r), prime_vertex(s))))
    return CompactGraph(GroupSpec("Alt", n=n), vs, frozenset(edges), host=(0,) * len(vs))


def build_graph(spec: GroupSpec) -> CompactGraph:
    if spec.family == "Alt":
        return alternating_graph(spec.n)
    if spec.family in ("Spor", "Tits"):
        from .refdata import sporadic_graph

        return sporadic_graph(spec.name if spec.family == "Spor" else "Tits")
    part = partition(spec)
    vs = part.vertices()
    edges, unresolved, sources = set(), [], []
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            ver = pair_verdict(spec, part, u, v)
            sources.append((u, v, ver.adjacent, ver.source))
            if ver.adjacent is None:
                unresolved.append((u, v))
            elif ver.adjacent:
                edges.add(frozenset((u, v)))
    host = tuple(v.index for v in vs)
    return CompactGraph(spec, vs, frozenset(edges), tuple(unresolved), tuple(sources), host)


# ---- exact maximum independent sets

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover(P: int, nb: list) -> int:
    """Greedy clique cover size of P; an upper bound for any coclique inside P."""
    count = 0
    while P:
        low = P & -P
        v = low.bit_length() - 1
        cand = P & nb[v]
        P ^= low
        while cand:
            w_low = cand & -cand
            w = w_low.bit_length() - 1
            P &= ~w_low
            cand &= nb[w]
        count += 1
    return count


def max_cocliques_masks(nb: list) -> tuple:
    """(t, sorted list of bitmasks) of all maximum independent sets."""
    n = len(nb)
    best = [0]
    found: list = []

    def rec(size, chosen, P):
        # a vertex with no neighbour left in P belongs to every maximum extension
        free = 0
        for v in _bits(P):
            if not nb[v] & P:
                free |= 1 << v
        if free:
            chosen |= free
            size += free.bit_count()
            P &= ~free
        if P == 0:
            if size > best[0]:
                best[0] = size
                found.clear()
            if size == best[0]:
                found.append(chosen)
            return
        if size + _clique_cover(P, nb) < best[0]:
            return
        v = max(_bits(P), key=lambda x: (nb[x] & P).bit_count())
        bit = 1 << v
        rec(size + 1, chosen | bit, P & ~nb[v] & ~bit)
        rec(size, chosen, P & ~bit)

    rec(0, 0, (1 << n) - 1)
    return best[0], sorted(found)


def max_cocliques(graph: CompactGraph) -> tuple:
    """(t, all maximum cocliques as sorted vertex tuples), both completions checked."""
    results = []
    for present in ((False, True) if graph.unresolved else (False,)):
        g = graph.completed(present)
        t, masks = max_cocliques_masks(g.masks())
        cocs = sorted(tuple(g.vertices[i] for i in _bits(m)) for m in masks)
        results.append((t, tuple(cocs)))
    if len(results) == 2 and results[0] != results[1]:
        raise UnresolvedError(f"{graph.spec}: undecided pairs {graph.unresolved} change the cocliques")
    return results[0]


# ---- theta / theta'

@dataclass(frozen=True)
class VertexGroup:
    """Twin vertices of one class, reported together (e.g. a split prime and its residual)."""

    members: tuple
    whole_class: int = 0  # class index when the group is the whole class, else 0
    kind: str = "R"

    @property
    def label(self) -> str:
        if self.whole_class:
            return f"{self.kind}_{self.whole_class}"
        if len(self.members) == 1:
            return self.members[0].label
        return "{" + ",".join(m.label for m in self.members) + "}"

    def __str__(self) -> str:
        return self.label

    def sort_key(self) -> tuple:
        return self.members[0].sort_key()


@dataclass(frozen=True)
class CocliqueReport:
    spec: GroupSpec
    t: int
    cocliques: tuple  # vertex level
    groups: tuple  # VertexGroup per merged twin class
    group_cocliques: tuple  # cocliques in terms of groups
    theta: tuple  # groups met by every maximum coclique
    theta_prime: tuple  # tuple of group tuples; empty when the coclique is unique
    definition: str = "core"
    notes: tuple = field(default=())


def _class_members(graph: CompactGraph) -> dict:
    out: dict = {}
    for v, h in zip(graph.vertices, graph.host):
        if v.kind in ("R", "S", "prime") and h:
            out.setdefault(h, []).append(v)
    return out


def twin_groups(graph: CompactGraph) -> tuple:
    nb = graph.masks()
    idx = {v: i for i, v in enumerate(graph.vertices)}
    parent = list(range(len(graph.vertices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    classes = _class_members(graph)
    for members in classes.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                i, j = idx[members[a]], idx[members[b]]
                if (nb[i] >> j) & 1 and (nb[i] | 1 << i) == (nb[j] | 1 << j):
                    parent[find(i)] = find(j)
    buckets: dict = {}
    for i, v in enumerate(graph.vertices):
        buckets.setdefault(find(i), []).append(v)
    kind = "S" if graph.spec.family in SUZREE else "R"
    groups = []
    for members in buckets.values():
        members = sorted(members, key=Vertex.sort_key)
        h = graph.host[idx[members[0]]]
        whole = h if h and len(members) > 1 and set(members) == set(classes[h]) else 0
        if not whole and len(members) == 1 and members[0].kind in ("R", "S") and classes.get(h) == members:
            whole = h
        groups.append(VertexGroup(tuple(members), whole, kind))
    return tuple(sorted(groups, key=VertexGroup.sort_key))


def decompose(group_cocliques: tuple, key=VertexGroup.sort_key) -> tuple:
    """(theta, theta') with theta the common part; theta' empty for a unique coclique."""
    sets = [frozenset(c) for c in group_cocliques]
    core = frozenset.intersection(*sets)
    theta = tuple(sorted(core, key=key))
    if len(sets) == 1:
        return theta, ()
    rest = sorted((tuple(sorted(s - core, key=key)) for s in sets),
                  key=lambda c: [key(g) for g in c])
    return theta, tuple(rest)


def _check(report_cocs, theta, theta_prime, spec) -> None:
    rebuilt = {frozenset(theta) | frozenset(x) for x in theta_prime} or {frozenset(theta)}
    if rebuilt != {frozenset(c) for c in report_cocs}:
        raise DecompositionError(f"{spec}: cocliques are not theta + theta'")
    if len(theta_prime) == 1:
        raise DecompositionError(f"{spec}: theta' has a single member")
    if len({len(c) for c in report_cocs}) != 1:
        raise DecompositionError(f"{spec}: maximum cocliques of different sizes")


@lru_cache(maxsize=4096)
def theta_structure(spec: GroupSpec) -> CocliqueReport:
    if spec.family == "Alt":
        return alt_computed(spec.n)
    graph = build_graph(spec)
    t, cocs = max_cocliques(graph)
    groups = twin_groups(graph)
    of = {v: g for g in groups for v in g.members}
    gcocs = tuple(sorted({tuple(sorted({of[v] for v in c}, key=VertexGroup.sort_key)) for c in cocs},
                         key=lambda c: [g.sort_key() for g in c]))
    theta, theta_prime = decompose(gcocs)
    _check(gcocs, theta, theta_prime, spec)
    _check(cocs, *decompose(cocs, Vertex.sort_key), spec)
    notes = []
    if any(len(g.members) > 1 for g in groups):
        notes.append("twin vertices of one class merged: "
                     + ", ".join(g.label for g in groups if len(g.members) > 1))
    return CocliqueReport(spec, t, cocs, groups, gcocs, theta, theta_prime, _definition(spec), tuple(notes))


def _definition(spec: GroupSpec) -> str:
    f = spec.family
    if f in SUZREE:
        return "suzuki-ree"
    if f in ("A", "2A") and spec.n == 3:
        return "rank-two-linear"
    if f in ("Spor", "Tits", "Alt"):
        return "primes"
    return "core"


# ---- alternating groups in closed form

@dataclass(frozen=True)
class AltStructure:
    n: int
    tau: tuple
    s_n: int
    tau_prime: tuple


def alt_structure(n: int) -> AltStructure:
    tau = tuple(r for r in primerange(2, n + 1) if 2 * r >= n)
    s = min(tau)
    tp = [r for r in primerange(3, n + 1) if 2 * r < n and r + s > n]
    if 4 + s > n:
        tp.insert(0, 2)
    return AltStructure(n, tau, s, tuple(tp))


@lru_cache(maxsize=2048)
def alt_report(n: int) -> CocliqueReport:
    from .groupspec import GroupSpec

    st = alt_structure(n)
    groups = tuple(VertexGroup((prime_vertex(r),)) for r in alt_pi(n))
    of = {g.members[0].prime: g for g in groups}
    if len(st.tau_prime) <= 1:
        theta = tuple(of[r] for r in sorted(st.tau + st.tau_prime))
        theta_prime = ()
        gcocs = (theta,)
    else:
        theta = tuple(of[r] for r in st.tau)
        theta_prime = tuple((of[r],) for r in st.tau_prime)
        gcocs = tuple(tuple(sorted(theta + x, key=VertexGroup.sort_key)) for x in theta_prime)
    cocs = tuple(tuple(g.members[0] for g in c) for c in gcocs)
    return CocliqueReport(GroupSpec("Alt", n=n), len(gcocs[0]), cocs, groups, gcocs, theta, theta_prime, "primes")


def alternating_masks(n: int) -> tuple:
    """(primes, neighbourhood masks) of GK(Alt_n), built without vertex objects."""
    primes = alt_pi(n)
    nb = []
    for r in primes:
        m = 0
        for j, s in enumerate(primes):
            if s != r and (s + 4 if r == 2 else r + 4 if s == 2 else r + s) <= n:
                m |= 1 << j
        nb.append(m)
    return primes, nb


def alt_brute(n: int) -> tuple:
    """(t, maximum cocliques as sorted prime tuples) by exhaustive search."""
    primes, nb = alternating_masks(n)
    t, masks = max_cocliques_masks(nb)
    return t, tuple(sorted(tuple(primes[i] for i in _bits(m)) for m in masks))


def clique_complement_check(spec: GroupSpec) -> bool | None:
    """pi(G) minus theta is a clique; None where the statement does not apply (M23, Lie types)."""
    if spec.family == "Spor" and spec.name == "M23":
        return None
    if spec.family not in ("Alt", "Spor"):
        return None
    graph = alternating_graph(spec.n) if spec.family == "Alt" else build_graph(spec)
    rep = theta_structure(spec)
    inside = {v for g in rep.theta for v in g.members}
    rest = [v for v in graph.vertices if v not in inside]
    return all(graph.adjacent(u, v) for i, u in enumerate(rest) for v in rest[i + 1:])


def alt_computed(n: int) -> CocliqueReport:
    """The alternating report read off the exhaustive search rather than the closed form."""
    from .groupspec import GroupSpec

    t, cocs = alt_brute(n)
    groups = {r: VertexGroup((prime_vertex(r),)) for r in alt_pi(n)}
    gcocs = tuple(tuple(groups[r] for r in c) for c in cocs)
    theta, theta_prime = decompose(gcocs)
    spec = GroupSpec("Alt", n=n)
    _check(gcocs, theta, theta_prime, spec)
    vcocs = tuple(tuple(g.members[0] for g in c) for c in gcocs)
    return CocliqueReport(spec, t, vcocs, tuple(groups.values()), gcocs, theta, theta_prime, "primes")
