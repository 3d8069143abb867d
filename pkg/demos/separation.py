"""
An identity of J4 that fails in J5
==================================

Search for an identity separating the two monoids and show which part of the
J5 conditions rejects it.
"""

from jonesid import check_identity_j5, enumerate_jones, explain, holds, search_separating

t4, t5 = enumerate_jones(4), enumerate_jones(5)
found = search_separating(t4, t5, letters=3, max_len=12, seed=0)
print("identity:", found.identity, "after", found.tried, "candidates")
print("holds in J4:", holds(t4, found.identity).holds)

cex = found.verdict_b.counterexample
print("J5 counterexample:", {x: str(t5.elements[e]) for x, e in cex.items()})
print(explain(check_identity_j5(found.identity).violation, found.identity))
