"""
Checker against brute force
===========================

A small randomized equivalence run. Half of the right-hand sides are
mutations of the left-hand side, so that accepted identities are not rare.
"""

from collections import Counter

from jonesid import check_identity_j5, enumerate_jones, equivalence_harness
from jonesid.oracle import random_identities

t5 = enumerate_jones(5)
report = equivalence_harness(t5, check_identity_j5, letters=3, max_len=7,
                             mode="random", sample_size=2000, seed=1, near_fraction=0.5)
print(report.instances, "pairs,", report.holds_count, "hold,", len(report.discrepancies), "discrepancies")

# which condition rejects how many of the failing pairs
tags = Counter()
for ident in random_identities("xyz", 7, 2000, seed=1, near_fraction=0.5):
    v = check_identity_j5(ident)
    tags[v.violation.condition if v.violation else "satisfied"] += 1
for tag, count in tags.most_common():
    print(f"{tag:16s}{count}")
