"""Byte-lossless lexical breakdown of source text, and its exact inverse.

Words are maximal [A-Za-z0-9] runs, extended across one apostrophe only when
the joined form is a dictionary surface.  Separator runs split into purely
space groups, symbol groups (which may contain spaces), individual newline
and tab lexemes, and single raw bytes for everything off the separator table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING

from wordref.blocks import SEPARATOR_CHARS

if TYPE_CHECKING:
    from wordref.dictionary import Dictionary

__all__ = ["Lexeme", "lex", "render", "WORD", "SPACES", "NEWLINE", "TAB", "SYMBOLS", "RAW"]

# Lexeme kinds.
WORD = 0
SPACES = 1
NEWLINE = 2
TAB = 3
SYMBOLS = 4
RAW = 5


@dataclass(slots=True)
class Lexeme:
    """One unit of source text; `text` for WORD/SYMBOLS/RAW, `count` for SPACES."""

    kind: int
    text: bytes = b""
    count: int = 0

    def surface(self) -> bytes:
        k = self.kind
        if k == SPACES:
            return b" " * self.count
        if k == NEWLINE:
            return b"\n"
        if k == TAB:
            return b"\t"
        return self.text


_WORD_RE = re.compile(rb"[0-9A-Za-z]+")
_SEPARATOR_SET = frozenset(SEPARATOR_CHARS)


def lex(data: bytes, dictionary: "Dictionary | None" = None) -> list[Lexeme]:
    """Break `data` into lexemes; their surfaces concatenate back to `data`."""
    out: list[Lexeme] = []
    pos = 0
    for m in _WORD_RE.finditer(data):
        if m.start() != pos:
            _split_gap(data, pos, m.start(), out)
        out.append(Lexeme(WORD, m.group()))
        pos = m.end()
    if pos != len(data):
        _split_gap(data, pos, len(data), out)
    if dictionary is not None:
        out = _merge_contractions(out, dictionary)
    return out


def render(lexemes: list[Lexeme]) -> bytes:
    """Concatenate lexeme surfaces; exact inverse of `lex`."""
    return b"".join(lx.surface() for lx in lexemes)


def _split_gap(data: bytes, start: int, end: int, out: list[Lexeme]) -> None:
    if end - start == 1:  # fast path: the single-space gap dominates real text
        b = data[start]
        if b == 0x20:
            out.append(Lexeme(SPACES, count=1))
        elif b == 0x0A:
            out.append(Lexeme(NEWLINE))
        elif b == 0x09:
            out.append(Lexeme(TAB))
        elif b in _SEPARATOR_SET:
            out.append(Lexeme(SYMBOLS, data[start:end]))
        else:
            out.append(Lexeme(RAW, data[start:end]))
        return
    group = -1
    i = start
    while i < end:
        b = data[i]
        if b in _SEPARATOR_SET:
            if group < 0:
                group = i
            i += 1
            continue
        if group >= 0:
            _flush_group(data, group, i, out)
            group = -1
        if b == 0x0A:
            out.append(Lexeme(NEWLINE))
        elif b == 0x09:
            out.append(Lexeme(TAB))
        else:
            out.append(Lexeme(RAW, data[i : i + 1]))
        i += 1
    if group >= 0:
        _flush_group(data, group, end, out)


def _flush_group(data: bytes, start: int, end: int, out: list[Lexeme]) -> None:
    g = data[start:end]
    if not g.strip(b" "):
        out.append(Lexeme(SPACES, count=end - start))
    else:
        out.append(Lexeme(SYMBOLS, g))


def _merge_contractions(lexemes: list[Lexeme], dictionary: "Dictionary") -> list[Lexeme]:
    # A word may absorb one apostrophe and the following word, but only when
    # the joined surface is already a dictionary form ("isn't", "he's").
    lookup = dictionary.lookup_word
    out: list[Lexeme] = []
    i = 0
    n = len(lexemes)
    while i < n:
        lx = lexemes[i]
        if (
            lx.kind == WORD
            and i + 2 < n
            and lexemes[i + 1].kind == SYMBOLS
            and lexemes[i + 1].text == b"'"
            and lexemes[i + 2].kind == WORD
        ):
            joined = lx.text + b"'" + lexemes[i + 2].text
            if lookup(joined) is not None:
                out.append(Lexeme(WORD, joined))
                i += 3
                continue
        out.append(lx)
        i += 1
    return out
