"""
Words over a single-character alphabet, identities, and the identity parser.

Words are plain ``str`` values; the empty string is the empty word 1.

>>> restrict("xyxz", {"x", "z"})
'xxz'
>>> parse_identity("x^3 = x^2")
Identity(lhs='xxx', rhs='xx')
"""
from __future__ import annotations

import re
from itertools import groupby
from typing import Iterable, NamedTuple


class Identity(NamedTuple):
    lhs: str
    rhs: str

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}"

    def swapped(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(sorted(content(self.lhs) | content(self.rhs)))


class IdentitySyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def content(t: str) -> frozenset[str]:
    return frozenset(t)


def restrict(t: str, letters: Iterable[str]) -> str:
    """Delete every letter outside ``letters``: the longest subword with content in it."""
    keep = set(letters)
    return "".join(c for c in t if c in keep)


def occurs(s: str, t: str) -> bool:
    """True iff ``s`` is a contiguous factor of ``t``."""
    if not s:
        raise ValueError("the empty word is not a valid factor")
    return s in t


def factors2(t: str) -> set[str]:
    """All length-2 contiguous factors."""
    return {t[i:i + 2] for i in range(len(t) - 1)}


def format_word(t: str) -> str:
    """
    Compact exponent form, ``1`` for the empty word.

    >>> format_word("xxxyzz")
    'x^3yz^2'
    """
    if not t:
        return "1"
    out = []
    for c, run in groupby(t):
        k = len(list(run))
        out.append(c if k == 1 else f"{c}^{k}")
    return "".join(out)


_TOKEN = re.compile(r"\s+|#[^\n]*|[a-zA-Z]|\^|=|\d+|.", re.S)


def _parse_word(text: str, tokens: list[tuple[str, int]], start: int, end: int) -> str:
    items = tokens[start:end]
    if not items:
        pos = tokens[start][1] if start < len(tokens) else len(text)
        raise IdentitySyntaxError("empty side", text, pos)
    if len(items) == 1 and items[0][0] == "1":
        return ""
    out = []
    k = 0
    while k < len(items):
        tok, pos = items[k]
        if not tok.isalpha():
            raise IdentitySyntaxError(f"unexpected {tok!r}", text, pos)
        reps = 1
        if k + 1 < len(items) and items[k + 1][0] == "^":
            if k + 2 >= len(items) or not items[k + 2][0].isdigit():
                raise IdentitySyntaxError("exponent expected", text, items[k + 1][1])
            reps = int(items[k + 2][0])
            if reps == 0:
                raise IdentitySyntaxError("exponent must be positive", text, items[k + 2][1])
            k += 2
        out.append(tok * reps)
        k += 1
    return "".join(out)


def parse_identity(text: str) -> Identity:
    """
    Parse ``word = word`` where a word is ``1`` or items ``x`` / ``x^k``.

    >>> parse_identity("x^2 t^2 u x = 1")
    Identity(lhs='xxttux', rhs='')
    """
    tokens = []
    for m in _TOKEN.finditer(text):
        tok = m.group()
        if tok.isspace() or tok.startswith("#"):
            continue
        if not (tok.isalpha() or tok.isdigit() or tok in "^="):
            raise IdentitySyntaxError(f"unexpected character {tok!r}", text, m.start())
        tokens.append((tok, m.start()))
    eqs = [k for k, (tok, _) in enumerate(tokens) if tok == "="]
    if not eqs:
        raise IdentitySyntaxError("missing '='", text, len(text))
    if len(eqs) > 1:
        raise IdentitySyntaxError("more than one '='", text, tokens[eqs[1]][1])
    k = eqs[0]
    return Identity(_parse_word(text, tokens, 0, k), _parse_word(text, tokens, k + 1, len(tokens)))


def parse_identity_file(text: str) -> list[Identity]:
    """One identity per line; blank and comment-only lines are skipped."""
    out = []
    for line in text.splitlines():
        if line.split("#", 1)[0].strip():
            out.append(parse_identity(line))
    return out
