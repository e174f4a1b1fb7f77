"""
Alternating groups: closed form against exhaustive search
==========================================================

In Alt_n two odd primes r, s are adjacent when r + s <= n, and 2 is adjacent
to an odd r when r + 4 <= n.  The independence number has a closed form in
terms of the primes between n/2 and n, so it can be checked directly against
a branch-and-bound search on the rule-built graph.
"""

from gkgraph.cocliques import alt_computed, alt_report, alt_structure

for n in (5, 10, 11, 12):
    s = alt_structure(n)
    print(f"n={n}: tau={s.tau} tau'={s.tau_prime} t={alt_report(n).t}")

# the value of t always agrees; the list of maximum cocliques sometimes does not
disagree = []
for n in range(5, 60):
    closed = {tuple(v.prime for v in c) for c in alt_report(n).cocliques}
    found = {tuple(v.prime for v in c) for c in alt_computed(n).cocliques}
    assert alt_report(n).t == alt_computed(n).t
    if closed != found:
        disagree.append(n)
print("degrees below 60 with extra maximum cocliques:", disagree)

# n = 10: 7 + 4 > 10, so 2 and 7 are not adjacent and {2, 7} is a second choice
print([[v.prime for v in c] for c in alt_computed(10).cocliques])
