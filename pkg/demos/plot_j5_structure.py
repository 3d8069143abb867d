"""
The five-strand Jones monoid and its egg-box
============================================

Enumerate the planar diagrams on 5 + 5 points, compute Green's relations
and draw the egg-box of every J-class.
"""

import numpy as np

from jonesid import enumerate_jones, eggbox_report, green_classes, idempotents, is_aperiodic

# the table is built by breadth-first search from the identity
t = enumerate_jones(5)
print(len(t), "elements;", "table shape", t.table.shape)

# h1 h2 h1 = h1 is one of the defining relations
h1, h2 = t.generators[:2]
print("h1 h2 h1 == h1:", t.product([h1, h2, h1]) == h1)

###############################################################################
# Green's relations come from strongly connected components of the Cayley graphs
g = green_classes(t)
print("R-classes:", len(g.r_classes), " L-classes:", len(g.l_classes), " J-classes:", len(g.j_classes))
print("aperiodic:", is_aperiodic(t, g))

###############################################################################
# Egg-box pictures, idempotent cells marked with '*'
box = eggbox_report(t, g)
print(box.render(t))

# idempotents are the starred cells above plus the identity
idem = np.array(sorted(idempotents(t)))
print(len(idem), "idempotents")
