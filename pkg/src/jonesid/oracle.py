"""
Brute-force identity checking over a finite monoid table.

An identity holds in M iff every assignment of letters to elements sends both
sides to the same element.  Assignments are enumerated as an odometer in base
``|M|`` (first letter most significant) and evaluated in numpy blocks, so the
first counterexample found is the lexicographically smallest one.
"""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from .checker import Verdict
from .diagram import MonoidTable
from .words import Identity, content, format_word

DEFAULT_BUDGET = 10**9
BLOCK_SIZE = 1 << 17


class BudgetExceeded(RuntimeError):
    """The number of assignments to enumerate exceeds the evaluation budget."""


def evaluate_word(t: MonoidTable, w: str, assignment: dict[str, int]) -> int:
    cur = t.identity
    for c in w:
        if c not in assignment:
            raise KeyError(f"letter {c!r} is not assigned")
        cur = int(t.table[cur, assignment[c]])
    return cur


@dataclass(frozen=True)
class OracleVerdict:
    holds: bool
    counterexample: Optional[dict[str, int]] = None
    evaluations: int = 0

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, t: MonoidTable | None = None) -> dict:
        out: dict = {"holds": self.holds, "evaluations": self.evaluations}
        if self.counterexample is not None:
            out["counterexample"] = {
                k: (str(t.elements[v]) if t is not None else v) for k, v in self.counterexample.items()
            }
        return out


def _eval_block(T: np.ndarray, ident: int, w: str, images: dict[str, np.ndarray | int], size: int) -> np.ndarray:
    cur = np.full(size, ident, dtype=T.dtype)
    for c in w:
        cur = T[cur, images[c]]
    return cur


def _content_counterexample(t: MonoidTable, identity: Identity) -> Optional[dict[str, int]]:
    """All letters to h_1 except one letter missing from a side, which goes to h_3."""
    if t.n is None or len(t.generators) < 3:
        return None
    w, v = identity
    extra = sorted(content(w) ^ content(v))
    letters = sorted(content(w) | content(v))
    h1, h3 = t.generators[0], t.generators[2]
    assignment = {c: h1 for c in letters}
    assignment[extra[0]] = h3
    if evaluate_word(t, w, assignment) != evaluate_word(t, v, assignment):
        return assignment
    return None


def holds(t: MonoidTable, identity, *, budget: int = DEFAULT_BUDGET, fast_path: bool = True) -> OracleVerdict:
    """
    Decide ``identity`` in ``t`` by enumerating every assignment.

    >>> from jonesid.diagram import enumerate_jones
    >>> holds(enumerate_jones(5), "x^3 = x^2")
    OracleVerdict(holds=True, counterexample=None, evaluations=42)
    """
    if isinstance(identity, str):
        from .words import parse_identity
        identity = parse_identity(identity)
    w, v = identity
    letters = sorted(content(w) | content(v))
    if fast_path and content(w) != content(v):
        cex = _content_counterexample(t, identity)
        if cex is not None:
            return OracleVerdict(False, cex, 1)
    m, k = len(t), len(letters)
    total = m**k
    if total > budget:
        raise BudgetExceeded(f"{m}^{k} = {total} assignments exceed the budget of {budget}")
    if k == 0:
        return OracleVerdict(True, None, 1)

    T = t.table
    # low digits vary inside a numpy block, high digits run as a Python odometer
    low = 0
    while low < k and m ** (low + 1) <= BLOCK_SIZE:
        low += 1
    low = max(low, 1)
    high = k - low
    size = m**low
    low_grid = np.indices((m,) * low).reshape(low, -1)
    images: dict[str, np.ndarray | int] = {c: low_grid[d] for d, c in enumerate(letters[high:])}
    done = 0
    for prefix in itertools.product(range(m), repeat=high):
        for c, e in zip(letters[:high], prefix):
            images[c] = e
        a = _eval_block(T, t.identity, w, images, size)
        b = _eval_block(T, t.identity, v, images, size)
        diff = np.flatnonzero(a != b)
        if diff.size:
            pos = int(diff[0])
            cex = dict(zip(letters[:high], prefix))
            cex.update({c: int(low_grid[d][pos]) for d, c in enumerate(letters[high:])})
            return OracleVerdict(False, {c: cex[c] for c in letters}, done + pos + 1)
        done += size
    return OracleVerdict(True, None, done)


def replays(t: MonoidTable, identity: Identity, verdict: OracleVerdict) -> bool:
    """True iff the recorded counterexample really separates the two sides."""
    if verdict.counterexample is None:
        return False
    return evaluate_word(t, identity.lhs, verdict.counterexample) != evaluate_word(t, identity.rhs, verdict.counterexample)


# ---------------------------------------------------------------------------
# word generation

def alphabet(k: int) -> str:
    """The first ``k`` letters used for generated identities."""
    base = "xyztuvwsabcd"
    if not 1 <= k <= len(base):
        raise ValueError(f"alphabet size {k} out of range")
    return base[:k]


def all_words(letters: str, min_len: int, max_len: int) -> Iterator[str]:
    for n in range(min_len, max_len + 1):
        for tup in itertools.product(letters, repeat=n):
            yield "".join(tup)


def _mutate(rng: random.Random, w: str, letters: str, max_len: int) -> str:
    """A small random edit: substitute, swap neighbours, insert, delete, or double a letter."""
    ops = ["sub", "swap", "ins", "del", "dup"]
    for _ in range(rng.randint(1, 2)):
        op = rng.choice(ops)
        i = rng.randrange(len(w))
        if op == "sub":
            w = w[:i] + rng.choice(letters) + w[i + 1:]
        elif op == "swap" and len(w) > 1:
            i = min(i, len(w) - 2)
            w = w[:i] + w[i + 1] + w[i] + w[i + 2:]
        elif op == "ins" and len(w) < max_len:
            w = w[:i] + rng.choice(letters) + w[i:]
        elif op == "del" and len(w) > 1:
            w = w[:i] + w[i + 1:]
        elif op == "dup" and len(w) < max_len:
            w = w[:i] + w[i] + w[i:]
    return w


def random_identities(letters: str, max_len: int, count: int, seed: int, *,
                      near_fraction: float = 0.0, same_content: bool = False) -> Iterator[Identity]:
    """
    Seeded identities with uniform lengths in ``1..max_len`` and uniform letters.

    A ``near_fraction`` of the pairs take the right side as a small random edit
    of the left side instead of an independent word; ``same_content`` redraws
    pairs until both sides use the same letters.
    """
    rng = random.Random(seed)

    def word() -> str:
        return "".join(rng.choice(letters) for _ in range(rng.randint(1, max_len)))

    made = 0
    while made < count:
        w = word()
        v = _mutate(rng, w, letters, max_len) if rng.random() < near_fraction else word()
        if same_content and set(w) != set(v):
            continue
        made += 1
        yield Identity(w, v)


# ---------------------------------------------------------------------------
# theorem-versus-oracle harness

@dataclass
class Discrepancy:
    identity: Identity
    checker_verdict: Verdict
    oracle_verdict: OracleVerdict

    def to_dict(self, t: MonoidTable | None = None) -> dict:
        ov = self.oracle_verdict
        return {
            "identity": str(self.identity),
            "checker_verdict": self.checker_verdict.to_dict(),
            "oracle_verdict": ov.to_dict(t),
            "counterexample": ov.to_dict(t).get("counterexample"),
        }


@dataclass
class Report:
    params: dict
    instances: int = 0
    holds_count: int = 0
    fails_count: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)
    satisfied: list[Identity] = field(default_factory=list)

    def to_json_obj(self, t: MonoidTable | None = None) -> dict:
        return {
            "params": self.params,
            "instances": self.instances,
            "holds_count": self.holds_count,
            "fails_count": self.fails_count,
            "discrepancies": [d.to_dict(t) for d in self.discrepancies],
        }


def _instances(mode: str, letters: str, max_len: int, sample_size: int, seed: int,
               min_len: int, near_fraction: float) -> Iterator[Identity]:
    if mode == "exhaustive":
        words = list(all_words(letters, min_len, max_len))
        for w in words:
            for v in words:
                yield Identity(w, v)
    elif mode == "random":
        yield from random_identities(letters, max_len, sample_size, seed, near_fraction=near_fraction)
    else:
        raise ValueError(f"unknown mode {mode!r}")


def equivalence_harness(
    t: MonoidTable,
    checker: Callable[[Identity], Verdict],
    *,
    letters: int = 2,
    max_len: int = 6,
    mode: str = "exhaustive",
    sample_size: int = 1000,
    seed: int = 0,
    min_len: int = 1,
    near_fraction: float = 0.0,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> Report:
    """
    Run ``checker`` and the brute-force oracle side by side and record every disagreement.

    Exhaustive mode takes every ordered pair of words over ``letters`` letters
    with lengths in ``min_len..max_len``; random mode draws ``sample_size``
    seeded pairs.  The report is independent of ``threads``.
    """
    params = {
        "letters": letters, "max_len": max_len, "min_len": min_len, "mode": mode,
        "sample_size": sample_size if mode == "random" else None, "seed": seed,
        "near_fraction": near_fraction, "monoid_size": len(t),
    }
    report = Report(params)
    ids = list(_instances(mode, alphabet(letters), max_len, sample_size, seed, min_len, near_fraction))

    def run(identity: Identity) -> tuple[Verdict, OracleVerdict]:
        return checker(identity), holds(t, identity, budget=budget)

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(run, ids, chunksize=64))
    else:
        results = [run(i) for i in ids]
    for identity, (cv, ov) in zip(ids, results):
        report.instances += 1
        if ov.holds:
            report.holds_count += 1
        else:
            report.fails_count += 1
        if cv.satisfied:
            report.satisfied.append(identity)
        if cv.satisfied != ov.holds:
            report.discrepancies.append(Discrepancy(identity, cv, ov))
    return report


# ---------------------------------------------------------------------------
# separating identities

@dataclass(frozen=True)
class Separation:
    identity: Identity
    verdict_a: OracleVerdict
    verdict_b: OracleVerdict
    tried: int

    def to_dict(self, tb: MonoidTable | None = None) -> dict:
        return {
            "identity": str(self.identity),
            "holds_in_a": self.verdict_a.to_dict(),
            "holds_in_b": self.verdict_b.to_dict(tb),
            "tried": self.tried,
        }


def search_separating(
    ta: MonoidTable,
    tb: MonoidTable,
    *,
    letters: int = 3,
    max_len: int = 12,
    seed: int = 0,
    exhaustive_len: int = 4,
    samples: int = 200_000,
    near_fraction: float = 0.9,
    budget: int = DEFAULT_BUDGET,
) -> Optional[Separation]:
    """
    Look for an identity that holds in ``ta`` but fails in ``tb``.

    Every same-content pair up to ``exhaustive_len`` is tried first, then
    ``samples`` seeded same-content pairs up to ``max_len``.  Returns None when
    nothing is found within those bounds.
    """
    alpha = alphabet(letters)
    tried = 0

    def candidates() -> Iterator[Identity]:
        words = list(all_words(alpha, 1, exhaustive_len))
        for w in words:
            for v in words:
                if w != v and set(w) == set(v):
                    yield Identity(w, v)
        yield from random_identities(alpha, max_len, samples, seed, near_fraction=near_fraction, same_content=True)

    seen: set[Identity] = set()
    for identity in candidates():
        if identity.lhs == identity.rhs or identity in seen:
            continue
        seen.add(identity)
        tried += 1
        va = holds(ta, identity, budget=budget)
        if not va.holds:
            continue
        vb = holds(tb, identity, budget=budget)
        if not vb.holds:
            return Separation(identity, va, vb, tried)
    return None
