"""
Combinatorial decision procedure for identities of J_5 (and of J_4).

``J_5`` satisfies ``w = v`` iff both sides have the same content and, for
every non-empty subset ``Y`` of that content, the restrictions ``W = w_Y`` and
``V = v_Y`` pass four conditions:

1. equal first letters;
2. equal last letters;
3. the same set of length-2 factors;
4. a family of constraints on every pair of adjacent positions ``xy`` of
   ``W`` and ``zt`` of ``V`` with ``xy != zt``, phrased over the prefix pair
   ``C1 = {W[..x], V[..z]}`` and the suffix pair ``C2 = {W[y..], V[t..]}``.

``J_4`` is decided by conditions 1-3 alone.

>>> check_identity_j5(parse_identity("x^3 = x^2")).satisfied
True
>>> check_identity_j5(parse_identity("x^2 = x")).violation.condition
'length2_factor'
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Optional

from .words import Identity, content, factors2, format_word, parse_identity, restrict

DEFAULT_MAX_LETTERS = 12

# How to read "occurs in the elements of C" where it is *required* in (4)(e)(i)/(ii).
# "any": in at least one of the two words; "both": in each of them.
READINGS = ("any", "both")

CONDITION_TEXT = {
    "content": "both sides must use the same letters",
    "first_letter": "condition (1): w_Y and v_Y must start with the same letter",
    "last_letter": "condition (2): w_Y and v_Y must end with the same letter",
    "length2_factor": "condition (3): w_Y and v_Y must have the same length-2 factors",
    "c4a": "condition (4)(a): xy and zt avoid both words of C1, so x must differ from z",
    "c4b": "condition (4)(b): y avoids both words of C1, so y must differ from t",
    "c4c": "condition (4)(c): xy and zt avoid both words of C2, so y must differ from t",
    "c4d": "condition (4)(d): x avoids both words of C2, so x must differ from z",
    "c4e_i": "condition (4)(e)(i): xt must occur in the words of C",
    "c4e_ii": "condition (4)(e)(ii): zy must occur in the words of C",
    "c4e_iii": "condition (4)(e)(iii): a subset Y' splits into Y1 (xu absent) and Y2 (zu absent)",
    "c4e_iv": "condition (4)(e)(iv): a subset Y' splits into Y1 (uy absent) and Y2 (ut absent)",
}


class AlphabetCapError(ValueError):
    """The identity uses more letters than the subset search is allowed to handle."""


@dataclass(frozen=True)
class Violation:
    condition: str
    Y: tuple[str, ...]
    positions: Optional[tuple[int, int]] = None  # 1-based starts of xy in W and zt in V
    letters: Optional[tuple[str, str, str, str]] = None
    C: Optional[str] = None
    Yprime: Optional[tuple[str, ...]] = None
    Y1: Optional[tuple[str, ...]] = None
    Y2: Optional[tuple[str, ...]] = None
    factor: Optional[str] = None  # for length2_factor: a factor present on one side only
    side: Optional[str] = None  # "lhs" or "rhs": where that factor occurs

    def to_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self).items() if v is not None}


@dataclass(frozen=True)
class Verdict:
    satisfied: bool
    violation: Optional[Violation] = None
    reading: str = "any"

    def __bool__(self) -> bool:
        return self.satisfied

    def to_dict(self) -> dict:
        out = {"satisfied": self.satisfied}
        if self.violation is not None:
            out.update(self.violation.to_dict())
        return out


def _nonempty_subsets(letters: tuple[str, ...]) -> list[tuple[str, ...]]:
    """All non-empty subsets, ordered by their sorted letter sequence."""
    subs = [c for k in range(1, len(letters) + 1) for c in combinations(letters, k)]
    subs.sort()
    return subs


def _supersets(core: tuple[str, ...], universe: tuple[str, ...]) -> list[tuple[str, ...]]:
    rest = [u for u in universe if u not in core]
    out = [tuple(sorted(core + extra)) for k in range(len(rest) + 1) for extra in combinations(rest, k)]
    out.sort()
    return out


@lru_cache(maxsize=1 << 16)
def condition4_partition_exists(
    C: tuple[str, str], x: str, y: str, z: str, t: str, Y: tuple[str, ...], variant: str,
) -> Optional[tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]]:
    """
    Search for ``{x,y,z,t} <= Y' <= Y`` with ``Y' = Y1 + Y2`` as required by (4)(e)(iii)/(iv).

    ``variant`` is ``"xu"`` (Y1: ``xu`` absent, Y2: ``zu`` absent) or ``"uy"``
    (Y1: ``uy`` absent, Y2: ``ut`` absent); absence is checked in both words of
    ``C`` restricted to ``Y'``.  Letters are assigned independently, preferring
    Y1, so a split exists iff every letter fits at least one side.  Returns the
    first witness ``(Y', Y1, Y2)`` in sorted-sequence order of ``Y'``.
    """
    if variant not in ("xu", "uy"):
        raise ValueError(f"unknown variant {variant!r}")
    core = tuple(sorted({x, y, z, t}))
    xy, zt = x + y, z + t
    for Yp in _supersets(core, Y):
        facs = [factors2(restrict(o, Yp)) for o in C]
        if any(xy in f or zt in f for f in facs):
            continue
        y1, y2 = [], []
        for u in Yp:
            one, two = (x + u, z + u) if variant == "xu" else (u + y, u + t)
            if not any(one in f for f in facs):
                y1.append(u)
            elif not any(two in f for f in facs):
                y2.append(u)
            else:
                break
        else:
            return Yp, tuple(y1), tuple(y2)
    return None


def _prefix_data(W: str) -> tuple[list[set[str]], list[set[str]]]:
    """For each cut i (0-based position of x), letters and 2-factors of W[:i+1]."""
    letters, facs = [], []
    seen_l: set[str] = set()
    seen_f: set[str] = set()
    for i in range(len(W) - 1):
        seen_l = seen_l | {W[i]}
        if i:
            seen_f = seen_f | {W[i - 1:i + 1]}
        letters.append(seen_l)
        facs.append(seen_f)
    return letters, facs


def _suffix_data(W: str) -> tuple[list[set[str]], list[set[str]]]:
    """For each cut i, letters and 2-factors of W[i+1:]."""
    r = len(W)
    letters: list[set[str]] = [set()] * (r - 1)
    facs: list[set[str]] = [set()] * (r - 1)
    seen_l: set[str] = set()
    seen_f: set[str] = set()
    for i in range(r - 2, -1, -1):
        seen_l = seen_l | {W[i + 1]}
        if i + 2 < r:
            seen_f = seen_f | {W[i + 1:i + 3]}
        letters[i] = seen_l
        facs[i] = seen_f
    return letters, facs


def check_subset_conditions(W: str, V: str, Y: tuple[str, ...], *, reading: str = "any",
                            full: bool = True) -> Optional[Violation]:
    """
    First violated condition for the restricted pair ``(W, V)`` over ``Y``, or None.

    With ``full=False`` only conditions (1)-(3) are evaluated.
    """
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    Y = tuple(sorted(Y))
    if not W or not V:
        if W == V:
            return None
        return Violation("content", Y)
    if W[0] != V[0]:
        return Violation("first_letter", Y)
    if W[-1] != V[-1]:
        return Violation("last_letter", Y)
    fw, fv = factors2(W), factors2(V)
    if fw != fv:
        only_w, only_v = sorted(fw - fv), sorted(fv - fw)
        if only_w and (not only_v or only_w[0] <= only_v[0]):
            return Violation("length2_factor", Y, factor=only_w[0], side="lhs")
        return Violation("length2_factor", Y, factor=only_v[0], side="rhs")
    if not full:
        return None

    need = any if reading == "any" else all
    pl_w, pf_w = _prefix_data(W)
    pl_v, pf_v = _prefix_data(V)
    sl_w, sf_w = _suffix_data(W)
    sl_v, sf_v = _suffix_data(V)

    for i in range(len(W) - 1):
        x, y = W[i], W[i + 1]
        xy = x + y
        for j in range(len(V) - 1):
            z, t = V[j], V[j + 1]
            zt = z + t
            if xy == zt:
                continue

            def bad(tag: str, C: Optional[str] = None, witness=None) -> Violation:
                yp, y1, y2 = witness if witness else (None, None, None)
                return Violation(tag, Y, (i + 1, j + 1), (x, y, z, t), C, yp, y1, y2)

            c1 = (pf_w[i], pf_v[j])
            c2 = (sf_w[i], sf_v[j])
            free1 = all(xy not in f and zt not in f for f in c1)
            free2 = all(xy not in f and zt not in f for f in c2)
            if free1 and x == z:
                return bad("c4a", "C1")
            if y == t and y not in pl_w[i] and y not in pl_v[j]:
                return bad("c4b", "C1")
            if free2 and y == t:
                return bad("c4c", "C2")
            if x == z and x not in sl_w[i] and x not in sl_v[j]:
                return bad("c4d", "C2")
            if x == z or y == t:
                continue
            for name, free, facs in (("C1", free1, c1), ("C2", free2, c2)):
                if not free:
                    continue
                if not need(x + t in f for f in facs):
                    return bad("c4e_i", name)
                if not need(z + y in f for f in facs):
                    return bad("c4e_ii", name)
                words = (W[:i + 1], V[:j + 1]) if name == "C1" else (W[i + 1:], V[j + 1:])
                for tag, variant in (("c4e_iii", "xu"), ("c4e_iv", "uy")):
                    witness = condition4_partition_exists(words, x, y, z, t, Y, variant)
                    if witness is not None:
                        return bad(tag, name, witness)
    return None


def _check(identity: Identity, full: bool, reading: str, max_letters: int) -> Verdict:
    w, v = identity
    cw, cv = content(w), content(v)
    if cw != cv:
        return Verdict(False, Violation("content", tuple(sorted(cw ^ cv))), reading)
    letters = tuple(sorted(cw))
    if len(letters) > max_letters:
        raise AlphabetCapError(f"{len(letters)} letters exceed the cap of {max_letters}")
    for Y in _nonempty_subsets(letters):
        bad = check_subset_conditions(restrict(w, Y), restrict(v, Y), Y, reading=reading, full=full)
        if bad is not None:
            return Verdict(False, bad, reading)
    return Verdict(True, None, reading)


def _coerce(identity) -> Identity:
    if isinstance(identity, str):
        return parse_identity(identity)
    return Identity(*identity)


def check_identity_j5(identity, *, reading: str = "any", max_letters: int = DEFAULT_MAX_LETTERS) -> Verdict:
    return _check(_coerce(identity), True, reading, max_letters)


def check_identity_j4(identity, *, max_letters: int = DEFAULT_MAX_LETTERS) -> Verdict:
    return _check(_coerce(identity), False, "any", max_letters)


def explain(violation: Violation, identity: Identity | None = None) -> str:
    v = violation
    Ytext = "{" + ",".join(v.Y) + "}"
    lines = [f"violated {CONDITION_TEXT[v.condition]}", f"  Y = {Ytext}"]
    if identity is not None:
        w, u = identity
        lines.append(f"  w_Y = {format_word(restrict(w, v.Y))}, v_Y = {format_word(restrict(u, v.Y))}")
    if v.factor is not None:
        other = "rhs" if v.side == "lhs" else "lhs"
        lines.append(f"  factor {v.factor!r} occurs in the {v.side} restriction but not the {other}")
    if v.positions is not None:
        x, y, z, t = v.letters
        i, j = v.positions
        lines.append(f"  xy = {x}{y} at position {i} of w_Y, zt = {z}{t} at position {j} of v_Y")
    if v.C is not None:
        lines.append(f"  C = {v.C}")
    if v.Yprime is not None:
        fmt = lambda s: "{" + ",".join(s) + "}"
        lines.append(f"  Y' = {fmt(v.Yprime)} splits as Y1 = {fmt(v.Y1)}, Y2 = {fmt(v.Y2)}")
    return "\n".join(lines)


def replay(identity: Identity, violation: Violation, reading: str = "any") -> bool:
    """Re-derive the violation from its recorded subset; True iff it reproduces."""
    if violation.condition == "content":
        return content(identity.lhs) != content(identity.rhs)
    W, V = restrict(identity.lhs, violation.Y), restrict(identity.rhs, violation.Y)
    return check_subset_conditions(W, V, violation.Y, reading=reading) == violation
