"""
Planar wire diagrams and the Jones (Temperley-Lieb) monoid J_n.

An element of J_n is a perfect matching of the 2n points 1..n (left pins)
and 1'..n' (right pins) into 2-element blocks whose wires do not cross.
Internally a diagram stores the matching as an involution on 0..2n-1, where
left point i is ``i - 1`` and right point j' is ``n + j - 1``.  That tuple is
already canonical, so equality of diagrams is equality of tuples.

>>> h1 = generator(3, 1)
>>> print(h1)
{1,2}{1',2'}{3,3'}
>>> compose(h1, h1) == h1
True
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

DEFAULT_MAX_STRANDS = 8

LEFT = "left"
RIGHT = "right"


class Point(NamedTuple):
    side: str
    index: int

    def __str__(self) -> str:
        return f"{self.index}'" if self.side == RIGHT else str(self.index)


class WireProfile(NamedTuple):
    l_wires: int
    r_wires: int
    t_wires: int


class StrandCapError(ValueError):
    """Raised when a strand count exceeds the configured enumeration cap."""


def catalan(n: int) -> int:
    """
    >>> [catalan(n) for n in range(1, 7)]
    [1, 2, 5, 14, 42, 132]
    """
    return math.comb(2 * n, n) // (n + 1)


def _encode(p: Point, n: int) -> int:
    if not 1 <= p.index <= n:
        raise ValueError(f"point {p} out of range for n={n}")
    if p.side == LEFT:
        return p.index - 1
    if p.side == RIGHT:
        return n + p.index - 1
    raise ValueError(f"unknown side {p.side!r}")


def _decode(k: int, n: int) -> Point:
    return Point(LEFT, k + 1) if k < n else Point(RIGHT, k - n + 1)


def boundary_position(p: Point, n: int) -> int:
    """Position of ``p`` walking 1, 2, ..., n, n', (n-1)', ..., 1'."""
    return p.index if p.side == LEFT else 2 * n + 1 - p.index


def _as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    if isinstance(p, int):
        return Point(LEFT, p)
    if isinstance(p, str):
        s = p.strip()
        if s.endswith("'"):
            return Point(RIGHT, int(s[:-1]))
        return Point(LEFT, int(s))
    side, index = p
    return Point(side, index)


def _matching(blocks: Iterable, n: int) -> list[int]:
    """Turn a block list into an involution; reject anything but a perfect 2-matching."""
    if n < 1:
        raise ValueError(f"invalid strand count {n}")
    partner = [-1] * (2 * n)
    for block in blocks:
        block = tuple(block)
        if len(block) != 2:
            raise ValueError(f"block {block!r} does not have exactly 2 points")
        a, b = (_encode(_as_point(p), n) for p in block)
        if a == b:
            raise ValueError(f"block {block!r} repeats a point")
        if partner[a] != -1 or partner[b] != -1:
            raise ValueError(f"block {block!r} reuses a point")
        partner[a], partner[b] = b, a
    if -1 in partner:
        missing = [str(_decode(k, n)) for k, q in enumerate(partner) if q == -1]
        raise ValueError(f"points {', '.join(missing)} are not covered")
    return partner


def _partner_noncrossing(partner: Sequence[int], n: int) -> bool:
    pos = [boundary_position(_decode(k, n), n) for k in range(2 * n)]
    # boundary positions 1..2n; planar iff the chords nest like parentheses
    by_pos = [0] * (2 * n + 1)
    for k in range(2 * n):
        by_pos[pos[k]] = k
    stack: list[int] = []
    for p in range(1, 2 * n + 1):
        k = by_pos[p]
        if pos[partner[k]] > p:
            stack.append(k)
        elif not stack or stack.pop() != partner[k]:
            return False
    return True


def is_noncrossing(blocks: Iterable, n: int) -> bool:
    """
    True iff no two blocks interleave on the boundary order.

    >>> is_noncrossing([(1, 3), (2, "2'"), ("1'", "3'"), (4, "4'"), (5, "5'")], 5)
    False
    """
    return _partner_noncrossing(_matching(blocks, n), n)


@dataclass(frozen=True)
class Diagram:
    n: int
    partner: tuple[int, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable, n: int) -> "Diagram":
        partner = _matching(blocks, n)
        if not _partner_noncrossing(partner, n):
            raise ValueError("wires cross; not an element of the Jones monoid")
        return cls(n, tuple(partner))

    @property
    def blocks(self) -> list[tuple[Point, Point]]:
        """Blocks sorted by their smaller boundary position."""
        n = self.n
        out = []
        for k, q in enumerate(self.partner):
            a, b = _decode(k, n), _decode(q, n)
            if boundary_position(a, n) < boundary_position(b, n):
                out.append((a, b))
        out.sort(key=lambda ab: boundary_position(ab[0], n))
        return out

    def __str__(self) -> str:
        # dump form: left-left, then right-right, then through wires, each sorted
        n = self.n
        ll, rr, tt = [], [], []
        for k, q in enumerate(self.partner):
            if k > q:
                continue
            if q < n:
                ll.append((k + 1, q + 1))
            elif k >= n:
                rr.append((k - n + 1, q - n + 1))
            else:
                tt.append((k + 1, q - n + 1))
        parts = [f"{{{a},{b}}}" for a, b in sorted(ll)]
        parts += [f"{{{a}',{b}'}}" for a, b in sorted(rr)]
        parts += [f"{{{a},{b}'}}" for a, b in sorted(tt)]
        return "".join(parts)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Diagram":
        """Inverse of ``str``: ``{1,2}{1',2'}{3,3'}``."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ValueError(f"malformed diagram text {text!r}")
        chunks = body[1:-1].split("}{")
        blocks = [tuple(_as_point(s) for s in c.split(",")) for c in chunks]
        if n is None:
            n = len(blocks)
        return cls.from_blocks(blocks, n)

    def __repr__(self) -> str:
        return f"Diagram({self})"


def identity_diagram(n: int) -> Diagram:
    if n < 1:
        raise ValueError(f"invalid strand count {n}")
    return Diagram(n, tuple(list(range(n, 2 * n)) + list(range(n))))


def generator(n: int, i: int) -> Diagram:
    """The chip h_i: cups {i, i+1} and {i', (i+1)'}, straight wires elsewhere."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    partner = list(identity_diagram(n).partner)
    a, b = i - 1, i
    partner[a], partner[b] = b, a
    partner[n + a], partner[n + b] = n + b, n + a
    return Diagram(n, tuple(partner))


def compose(a: Diagram, b: Diagram) -> Diagram:
    """
    Glue a's right pins to b's left pins and trace each wire from an exterior pin.

    The 3n interface points are a's left pins, the n glued middle points, and
    b's right pins.  Middle points never reached from the exterior belong to
    closed loops, which are dropped.
    """
    if a.n != b.n:
        raise ValueError(f"cannot compose diagrams on {a.n} and {b.n} strands")
    n = a.n
    pa, pb = a.partner, b.partner
    out = [-1] * (2 * n)

    def walk(side: int, k: int) -> int:
        # side 0: currently at a point of a, about to follow a's wire
        # side 1: currently at a point of b, about to follow b's wire
        while True:
            if side == 0:
                q = pa[k]
                if q < n:
                    return q
                side, k = 1, q - n
            else:
                q = pb[k]
                if q >= n:
                    return q
                side, k = 0, n + q

    for k in range(2 * n):
        if out[k] == -1:
            q = walk(0, k) if k < n else walk(1, k)
            out[k], out[q] = q, k
    return Diagram(n, tuple(out))


def wire_profile(d: Diagram) -> WireProfile:
    n = d.n
    ll = sum(1 for k in range(n) if d.partner[k] < n) // 2
    rr = sum(1 for k in range(n, 2 * n) if d.partner[k] >= n) // 2
    return WireProfile(ll, rr, n - 2 * ll)


def rank(d: Diagram) -> int:
    return wire_profile(d).t_wires


def eval_generator_word(n: int, indices: Iterable[int]) -> Diagram:
    d = identity_diagram(n)
    for i in indices:
        d = compose(d, generator(n, i))
    return d


def all_noncrossing_matchings(n: int) -> Iterator[Diagram]:
    """Brute force: filter every perfect matching of 2n points by planarity."""

    def matchings(points: list[int]):
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        for j, other in enumerate(rest):
            for m in matchings(rest[:j] + rest[j + 1:]):
                yield [(first, other)] + m

    for m in matchings(list(range(2 * n))):
        partner = [0] * (2 * n)
        for p, q in m:
            partner[p], partner[q] = q, p
        if _partner_noncrossing(partner, n):
            yield Diagram(n, tuple(partner))


@dataclass(frozen=True, eq=False)
class MonoidTable:
    """
    A finite monoid as an indexed element list plus its Cayley table.

    ``table[a, b]`` is the index of the product of elements ``a`` and ``b``.
    ``n`` is the strand count when the elements are Jones diagrams, else None.
    """

    elements: tuple
    table: np.ndarray
    generators: tuple[int, ...]
    identity: int = 0
    n: int | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        return self._lookup[element]

    @property
    def _lookup(self) -> dict:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = {e: i for i, e in enumerate(self.elements)}
            object.__setattr__(self, "_lookup_cache", cache)
        return cache

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, indices: Iterable[int]) -> int:
        cur = self.identity
        for i in indices:
            cur = int(self.table[cur, i])
        return cur

    def gen_word(self, subscripts: Iterable[int]) -> int:
        """Element index of h_{i1} h_{i2} ... for 1-based generator subscripts."""
        return self.product(self.generators[i - 1] for i in subscripts)

    @classmethod
    def from_table(cls, table, identity: int | None = None, generators=None, elements=None) -> "MonoidTable":
        """Wrap a user-supplied Cayley table; generators default to every element."""
        arr = np.asarray(table, dtype=np.int64)
        m = arr.shape[0]
        if arr.shape != (m, m) or (arr < 0).any() or (arr >= m).any():
            raise ValueError("table must be a square array of element indices")
        if identity is None:
            ids = [e for e in range(m) if (arr[e] == np.arange(m)).all() and (arr[:, e] == np.arange(m)).all()]
            if not ids:
                raise ValueError("table has no identity element")
            identity = ids[0]
        if generators is None:
            generators = tuple(range(m))
        if elements is None:
            elements = tuple(range(m))
        arr.setflags(write=False)
        return cls(tuple(elements), arr, tuple(generators), identity, None)

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "elements": [str(e) for e in self.elements],
            "generators": list(self.generators),
            "table": self.table.tolist(),
        })

    @classmethod
    def from_json(cls, text: str) -> "MonoidTable":
        data = json.loads(text)
        n = data["n"]
        if n is not None:
            elements = tuple(Diagram.parse(s, n) for s in data["elements"])
        else:
            elements = tuple(data["elements"])
        table = np.asarray(data["table"], dtype=np.int64)
        table.setflags(write=False)
        return cls(elements, table, tuple(data["generators"]), 0, n)


def enumerate_jones(n: int, max_strands: int = DEFAULT_MAX_STRANDS) -> MonoidTable:
    """
    Breadth-first closure of the identity under right multiplication by h_1..h_{n-1}.

    >>> len(enumerate_jones(5))
    42
    """
    if n < 1:
        raise ValueError(f"invalid strand count {n}")
    if n > max_strands:
        raise StrandCapError(f"n={n} exceeds the strand cap {max_strands}")
    gens = [generator(n, i) for i in range(1, n)]
    ident = identity_diagram(n)
    elements = [ident]
    index = {ident: 0}
    # parent[e] = (index of e', generator position g) with e = e' * h_{g+1}
    parent: list[tuple[int, int] | None] = [None]
    right = []
    queue = deque([0])
    while queue:
        e = queue.popleft()
        row = []
        for g, h in enumerate(gens):
            d = compose(elements[e], h)
            k = index.get(d)
            if k is None:
                k = index[d] = len(elements)
                elements.append(d)
                parent.append((e, g))
                queue.append(k)
            row.append(k)
        right.append(row)
    m = len(elements)
    if m != catalan(n):
        raise AssertionError(f"closure found {m} elements, expected {catalan(n)}")
    rgen = np.array(right, dtype=np.int64).reshape(m, n - 1)
    table = np.empty((m, m), dtype=np.int64)
    table[:, 0] = np.arange(m)
    # discovery order guarantees parents precede children
    for b in range(1, m):
        p, g = parent[b]
        table[:, b] = rgen[table[:, p], g]
    table.setflags(write=False)
    gen_idx = tuple(index[h] for h in gens)
    out = MonoidTable(tuple(elements), table, gen_idx, 0, n)
    object.__setattr__(out, "_lookup_cache", index)
    return out


def is_associative(t: MonoidTable) -> bool:
    """Exhaustive (ab)c == a(bc) over all index triples."""
    T = t.table
    idx = np.arange(len(t))
    left = T[T[:, :, None], idx[None, None, :]]
    right = T[idx[:, None, None], T[None, :, :]]
    return bool((left == right).all())
