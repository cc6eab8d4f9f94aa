"""Whole-word search directly in the compressed token stream.

A query compiles to a plan: the word's own token (if listed), every composite
containing it, and the escape chain it would compress to when unlisted.  One
pass over the token stream then finds exactly the matches a scan of the
decompressed text would find, without materializing that text.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from wordref.blocks import (
    CLASS_OF,
    NEWLINE_TOKEN,
    SPACE_RUN_BASE,
    SPACE_RUN_MIN,
    TAB_TOKEN,
    WORD_REPEAT_BASE,
    BlockClass,
)
from wordref.codec import (
    _append_alnum_chain,
    _append_numeric_chain,
    _read_alnum_chain,
    _read_numeric_chain,
    _read_separator_chain,
    expand_aliases,
)
from wordref.container import ContainerError, DictionaryMismatchError, read_container
from wordref.dictionary import Dictionary
from wordref.tokenizer import WORD, lex

__all__ = ["SearchPlan", "Match", "build_plan", "scan", "naive_scan"]


@dataclass(frozen=True)
class SearchPlan:
    """Compiled token patterns whose occurrence implies a match for one word."""

    word: bytes
    single_tokens: frozenset[int]
    composite_offsets: dict[int, tuple[int, ...]]
    escape_sequence: tuple[int, ...]
    needs_escape_scan: bool


@dataclass(frozen=True)
class Match:
    """One whole-word occurrence located in the token stream."""

    token_offset: int
    char_offset: int
    via: str  # "single", "composite" or "escape"


def build_plan(word: bytes | str, dictionary: Dictionary) -> SearchPlan:
    """Compile a single-word query into the patterns `scan` probes for."""
    if isinstance(word, str):
        word = word.encode("latin-1")
    if not word:
        raise ValueError("query word is empty")
    lexed = lex(word, dictionary)
    if len(lexed) != 1 or lexed[0].kind != WORD:
        raise ValueError(f"query {word!r} is not a single word")

    token = dictionary.lookup_word(word)
    single = frozenset() if token is None else frozenset({token})

    composite_offsets: dict[int, tuple[int, ...]] = {}
    for ctok in sorted(dictionary.composites_containing(word)):
        offsets = []
        pos = 0
        for w in dictionary.composite_words[ctok]:
            if w == word:
                offsets.append(pos)
            pos += len(w) + 1
        composite_offsets[ctok] = tuple(offsets)

    escape: list[int] = []
    if word.isdigit():
        _append_numeric_chain(word, escape)
    elif word.isalnum():
        _append_alnum_chain(word, escape)
    return SearchPlan(
        word=word,
        single_tokens=single,
        composite_offsets=composite_offsets,
        escape_sequence=tuple(escape),
        needs_escape_scan=token is None,
    )


def scan(
    data: bytes, dictionary: Dictionary, plan: SearchPlan
) -> tuple[list[Match], int]:
    """Walk a container's token stream once; return (matches, token comparisons).

    Each expanded-stream token is inspected exactly once against the one
    pattern its block class selects, so the comparison count equals the
    expanded token count.  Byte offsets are tracked arithmetically; the
    decompressed text is never built.
    """
    c = read_container(data)
    if c.dict_hash != dictionary.hash:
        raise DictionaryMismatchError(
            f"container digest {c.dict_hash:#018x} does not match dictionary {dictionary.hash:#018x}"
        )
    tokens = expand_aliases(c.tokens, c.aliases, c.flags)

    surface = dictionary.token_surface
    class_of = CLASS_OF
    singles = plan.single_tokens
    composite_offsets = plan.composite_offsets
    escape = list(plan.escape_sequence) if plan.needs_escape_scan else None

    matches: list[Match] = []
    comparisons = 0
    pos = 0
    prev_word = False
    entity_len = 0
    entity_hits: tuple[int, ...] = ()
    entity_via = ""
    i = 0
    n = len(tokens)
    while i < n:
        t = tokens[i]
        s = surface.get(t)
        if s is not None:
            comparisons += 1
            if prev_word:
                pos += 1
            if t in singles:
                entity_hits = (0,)
                entity_via = "single"
                matches.append(Match(i, pos, "single"))
            elif t in composite_offsets:
                entity_hits = composite_offsets[t]
                entity_via = "composite"
                for o in entity_hits:
                    matches.append(Match(i, pos + o, "composite"))
            else:
                entity_hits = ()
            entity_len = len(s)
            pos += entity_len
            prev_word = True
            i += 1
            continue
        cls = class_of[t]
        if cls is BlockClass.ALNUM_START or cls is BlockClass.NUMERIC_START:
            reader = (
                _read_alnum_chain
                if cls is BlockClass.ALNUM_START
                else _read_numeric_chain
            )
            word, j = reader(tokens, i)
            comparisons += j - i
            if prev_word:
                pos += 1
            entity_hits = ()
            if escape is not None and tokens[i:j] == escape:
                entity_hits = (0,)
                entity_via = "escape"
                matches.append(Match(i, pos, "escape"))
            entity_len = len(word)
            pos += entity_len
            prev_word = True
            i = j
        elif cls is BlockClass.SEPARATOR_START:
            text, j = _read_separator_chain(tokens, i)
            comparisons += j - i
            pos += len(text)
            prev_word = False
            i = j
        elif cls is BlockClass.SPACE_RUN:
            comparisons += 1
            pos += t - SPACE_RUN_BASE + SPACE_RUN_MIN
            prev_word = False
            i += 1
        elif t == NEWLINE_TOKEN or t == TAB_TOKEN:
            comparisons += 1
            pos += 1
            prev_word = False
            i += 1
        elif cls is BlockClass.LITERAL_BYTE or cls is BlockClass.CONTROL_BYTE:
            comparisons += 1
            pos += 1
            prev_word = False
            i += 1
        elif cls is BlockClass.WORD_REPEAT:
            comparisons += 1
            if not prev_word:
                raise ContainerError("word repeat without a preceding word")
            for _ in range(t - WORD_REPEAT_BASE + 1):
                pos += 1
                for o in entity_hits:
                    matches.append(Match(i, pos + o, entity_via))
                pos += entity_len
            i += 1
        elif cls in (
            BlockClass.ALNUM_REPEAT,
            BlockClass.NUMERIC_REPEAT,
            BlockClass.SEPARATOR_REPEAT,
        ):
            raise ContainerError(f"continuation token {t} without a start")
        elif cls is BlockClass.RESERVED:
            raise ContainerError(f"reserved token {t} in stream")
        else:
            raise ContainerError(f"token {t} has no assigned surface")
    return matches, comparisons


def naive_scan(
    text: bytes, word: bytes | str, dictionary: Dictionary | None = None
) -> tuple[list[int], int]:
    """Whole-word matches of `word` in raw text plus the character-comparison
    count of a naive left-to-right scan (at least one compare per character).

    Word boundaries follow the tokenizer's segmentation; pass the dictionary
    to honor its contraction forms.
    """
    if isinstance(word, str):
        word = word.encode("latin-1")
    if not word:
        raise ValueError("query word is empty")

    comparisons = 0
    n = len(text)
    if n:
        arr = np.frombuffer(text, dtype=np.uint8)
        alive = np.ones(n, dtype=bool)
        for depth, byte in enumerate(word):
            limit = n - depth
            if limit <= 0:
                break
            window = alive[:limit]
            remaining = int(window.sum())
            if remaining == 0:
                break
            comparisons += remaining
            np.logical_and(window, arr[depth : depth + limit] == byte, out=window)
            alive[limit:] = False

    offsets: list[int] = []
    pos = 0
    for lexeme in lex(text, dictionary):
        if lexeme.kind == WORD:
            if lexeme.text == word:
                offsets.append(pos)
            pos += len(lexeme.text)
        else:
            pos += len(lexeme.surface())
    return offsets, comparisons
