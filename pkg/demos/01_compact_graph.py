"""
Compact prime graphs and their maximum cocliques
=================================================

A group of Lie type has far too many primes to draw, so the graph is built
on prime classes: one vertex per class R_i of primitive divisors, plus the
characteristic p and any prime that behaves differently from its class.
"""

from gkgraph.cocliques import build_graph, theta_structure
from gkgraph.groupspec import parse_spec, partition

# B_2(3) is small enough to check by hand: its order is 2^6 * 3^4 * 5
spec = parse_spec("B:2:3")
part = partition(spec)
print("classes:", [(i, residual) for i, residual, _ in part.classes])
print("split-out primes:", part.special_primes)

# every pair of vertices carries the rule that decided it
graph = build_graph(spec)
for u, v, adjacent, source in graph.sources:
    print(f"  {u.label:>4} {'~' if adjacent else '.'} {v.label:<4} ({source})")

# E6(2) has eight vertices; the maximum cocliques share a core theta
rep = theta_structure(parse_spec("E6:2"))
print("t(E6(2)) =", rep.t)
print("theta  =", [g.label for g in rep.theta])
print("theta' =", [[g.label for g in x] for x in rep.theta_prime])
