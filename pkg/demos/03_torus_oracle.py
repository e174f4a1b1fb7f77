"""
Cross-checking adjacency with maximal tori
===========================================

A semisimple element lies in a maximal torus, and a finite abelian group whose
order is divisible by r*s has an element of order r*s.  For odd primes away
from the characteristic, adjacency is therefore a divisibility question on the
list of torus orders.
"""

from gkgraph.groupspec import parse_spec
from gkgraph.torus_oracle import compare, oracle_adjacent, torus_orders, torus_orders_bc

print("B_2(5) torus orders:", torus_orders_bc(2, 5).orders)
print("3 ~ 13 in B_2(5)?", oracle_adjacent(parse_spec("B:2:5"), 3, 13))

for text in ("B:4:3", "D:5:2", "E7:2", "E8:2", "2F4:8"):
    spec = parse_spec(text)
    print(f"{text:>6}: {len(torus_orders(spec).orders):3d} orders, disagreements {len(compare(spec))}")

# 2D_6(2): the cyclic torus of order 2^6 + 1 = 65 joins 5 (in R_4) and 13 (in R_12)
spec = parse_spec("2D:6:2")
print("5 ~ 13 in 2D_6(2)?", oracle_adjacent(spec, 5, 13))
