"""
Bounded verification of the R- and L-class lemmas for J_5.

Both lemmas talk about products ``a = a_1...a_p`` and ``b = b_1...b_q`` of
generators (``p, q >= 3``).  The R-lemma assumes ``a_1 = b_1`` and that the
products of all but the last generator lie in A2; its families then fix the
last two generators of each word.  The L-lemma is the mirror image: equal last
generators, products without the first generator in A2, families fixing the
first two generators.  Families marked ``*`` promise the products are *not*
related, families marked ``#`` promise they are.

Every generator word up to ``max_len`` is enumerated and grouped by the letters
the families look at, so each family is checked over all premise-satisfying
pairs with a per-class count rather than a pairwise loop.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .diagram import MonoidTable, enumerate_jones
from .structure import GreenStructure, green_classes

# predicate on (a_near, a_far, b_near, b_far): for the R-lemma "near" is the
# second-to-last generator and "far" the last; for the L-lemma "near" is the
# second generator and "far" the first.
Family = Callable[[int, int, int, int], bool]


def _is(pair: tuple[int, int], s: set[int]) -> bool:
    return set(pair) == s and pair[0] != pair[1]


R_FAMILIES: dict[str, tuple[bool, Family]] = {
    "*1": (False, lambda an, af, bn, bf: _is((an, af), {1, 3}) and _is((bn, bf), {2, 4})),
    "*2": (False, lambda an, af, bn, bf: an == bn == 4 and _is((af, bf), {1, 2})),
    "*3": (False, lambda an, af, bn, bf: an == bn == 1 and _is((af, bf), {3, 4})),
    "*4": (False, lambda an, af, bn, bf: an == bf == 4 and af == 1 and bn == 2),
    "*5": (False, lambda an, af, bn, bf: an == bf == 1 and af == 4 and bn == 3),
    "#1": (True, lambda an, af, bn, bf: _is((an, bn), {1, 2}) and af == bf == 4),
    "#2": (True, lambda an, af, bn, bf: _is((an, bn), {3, 4}) and af == bf == 1),
    "#3": (True, lambda an, af, bn, bf: an == bf == 4 and af == 2 and bn == 1),
    "#4": (True, lambda an, af, bn, bf: an == bf == 1 and af == 3 and bn == 4),
}

# written with (a_1, a_2, b_1, b_2) = (far, near, far, near)
L_FAMILIES: dict[str, tuple[bool, Family]] = {
    "*1": (False, lambda an, af, bn, bf: _is((af, an), {1, 3}) and _is((bf, bn), {2, 4})),
    "*2": (False, lambda an, af, bn, bf: _is((af, bf), {1, 2}) and an == bn == 4),
    "*3": (False, lambda an, af, bn, bf: _is((af, bf), {3, 4}) and an == bn == 1),
    "*4": (False, lambda an, af, bn, bf: af == bn == 4 and an == 2 and bf == 1),
    "*5": (False, lambda an, af, bn, bf: af == bn == 1 and an == 3 and bf == 4),
    "#1": (True, lambda an, af, bn, bf: af == bf == 4 and _is((an, bn), {1, 2})),
    "#2": (True, lambda an, af, bn, bf: af == bf == 1 and _is((an, bn), {3, 4})),
    "#3": (True, lambda an, af, bn, bf: af == bn == 4 and an == 1 and bf == 2),
    "#4": (True, lambda an, af, bn, bf: af == bn == 1 and an == 4 and bf == 3),
}


@dataclass(frozen=True)
class FamilyResult:
    lemma: str  # "R" or "L"
    family: str
    expect_related: bool
    pairs: int
    related: int
    example: Optional[tuple[tuple[int, ...], tuple[int, ...]]]  # a matched pair
    counterexample: Optional[tuple[tuple[int, ...], tuple[int, ...]]]

    @property
    def ok(self) -> bool:
        if self.pairs == 0:
            return False
        return self.related == self.pairs if self.expect_related else self.related == 0

    def line(self) -> str:
        want = "related" if self.expect_related else "not related"
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.lemma}-lemma ({self.family}): {self.pairs} pairs, {self.related} related, expected {want}"


def _a2_rank(t: MonoidTable) -> np.ndarray:
    from .diagram import rank
    return np.array([rank(d) for d in t.elements])


def verify_lemma(side: str, t: MonoidTable | None = None, green: GreenStructure | None = None,
                 max_len: int = 6) -> list[FamilyResult]:
    """Check every family of the R- (``side="R"``) or L-lemma over words of length 3..max_len."""
    if side not in ("R", "L"):
        raise ValueError(f"side must be 'R' or 'L', not {side!r}")
    t = t or enumerate_jones(5)
    if t.n != 5:
        raise ValueError("the lemmas are about J_5")
    green = green or green_classes(t)
    ranks = _a2_rank(t)
    classes = green.r_class_of if side == "R" else green.l_class_of
    families = R_FAMILIES if side == "R" else L_FAMILIES

    # bucket[(anchor, near, far)] = words whose premise product lies in A2
    buckets: dict[tuple[int, int, int], list[tuple[int, ...]]] = defaultdict(list)
    for length in range(3, max_len + 1):
        for word in itertools.product((1, 2, 3, 4), repeat=length):
            if side == "R":
                premise, key = word[:-1], (word[0], word[-2], word[-1])
            else:
                premise, key = word[1:], (word[-1], word[1], word[0])
            if ranks[t.gen_word(premise)] == 3:
                buckets[key].append(word)
    cls_of = {
        key: np.array([classes[t.gen_word(w)] for w in words]) for key, words in buckets.items()
    }

    results = []
    for name, (expect, pred) in families.items():
        pairs = related = 0
        example = counterexample = None
        for (anchor, an, af), words_a in buckets.items():
            for (anchor_b, bn, bf), words_b in buckets.items():
                if anchor != anchor_b or not pred(an, af, bn, bf):
                    continue
                ca, cb = cls_of[(anchor, an, af)], cls_of[(anchor_b, bn, bf)]
                pairs += len(ca) * len(cb)
                same = ca[:, None] == cb[None, :]
                related += int(same.sum())
                if example is None:
                    example = (words_a[0], words_b[0])
                if counterexample is None:
                    bad = np.argwhere(same != expect)
                    if bad.size:
                        i, j = bad[0]
                        counterexample = (words_a[i], words_b[j])
        results.append(FamilyResult(side, name, expect, pairs, related, example, counterexample))
    return results
