"""
Deciding identities in J5
=========================

Run the combinatorial checker on a few identities and compare each verdict
with brute-force evaluation over every assignment.
"""

from jonesid import check_identity_j4, check_identity_j5, enumerate_jones, explain, holds, parse_identity

t5 = enumerate_jones(5)

samples = [
    "x^3 = x^2",
    "x^2 = x",
    "xy = yx",
    "x^2 y x = x y x^2",
    "x y x z x = x z x y x",
]

for text in samples:
    ident = parse_identity(text)
    verdict = check_identity_j5(ident)
    oracle = holds(t5, ident)
    print(f"{str(ident):28s} checker={verdict.satisfied!s:5s} oracle={oracle.holds!s:5s}")
    if verdict.violation is not None:
        print("    ", explain(verdict.violation, ident))

###############################################################################
# The four-strand monoid only needs the first three conditions,
# so some J5 failures are accepted there
print("J4 accepts x^2yx = xyx^2:", check_identity_j4("x^2 y x = x y x^2").satisfied)
