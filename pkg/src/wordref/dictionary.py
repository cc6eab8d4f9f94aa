"""The reference model: manifest parsing, token assignment, lookups, corpus builder.

A dictionary travels as a line-oriented manifest (see `load_manifest`) and is
immutable once loaded.  Token assignment is positional: entry i of a section
maps to slot i of that section's block.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Sequence

from wordref.blocks import (
    COMMON_WORD_BASE,
    COMPOSITE_BASE,
    CONTRACTION_LL_BASE,
    CONTRACTION_M_BASE,
    CONTRACTION_NT_BASE,
    CONTRACTION_S_BASE,
    DICTIONARY_WORD_BASE,
    SINGLE_LETTER_BASE,
)

__all__ = [
    "Dictionary",
    "ManifestError",
    "fnv1a64",
    "load_manifest",
    "render_manifest",
    "build_from_corpus",
]

COMMON_CAPACITY = 256
WORDS_CAPACITY = 49000
COMPOSITES_CAPACITY = 1000
CONTRACTION_CAPACITIES = {"nt": 41, "s": 15, "m": 3, "ll": 15}
_CONTRACTION_BASES = {
    "nt": CONTRACTION_NT_BASE,
    "s": CONTRACTION_S_BASE,
    "m": CONTRACTION_M_BASE,
    "ll": CONTRACTION_LL_BASE,
}

SECTION_NAMES = (
    "common",
    "words",
    "composites",
    "contractions_nt",
    "contractions_s",
    "contractions_m",
    "contractions_ll",
)

SINGLE_LETTERS = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


class ManifestError(ValueError):
    """Raised for malformed or over-capacity dictionary manifests."""


def fnv1a64(data: bytes) -> int:
    """FNV-1a 64-bit digest of `data`."""
    h = _FNV_OFFSET
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


class Dictionary:
    """Immutable reference model with every lookup the codec and searcher need."""

    __slots__ = (
        "common",
        "words",
        "composites",
        "contractions",
        "hash",
        "word_to_token",
        "token_surface",
        "composite_words",
        "_composites_by_first",
        "_composites_of",
    )

    def __init__(
        self,
        common: Sequence[bytes],
        words: Sequence[bytes],
        composites: Sequence[tuple[bytes, ...]],
        contractions: dict[str, Sequence[bytes]],
        digest: int,
    ):
        self.common = tuple(common)
        self.words = tuple(words)
        self.composites = tuple(tuple(c) for c in composites)
        self.contractions = {k: tuple(v) for k, v in contractions.items()}
        self.hash = digest

        word_to_token: dict[bytes, int] = {}
        token_surface: dict[int, bytes] = {}

        def assign(surface: bytes, token: int) -> None:
            if surface in word_to_token:
                raise ManifestError(f"duplicate entry {surface!r}")
            word_to_token[surface] = token
            token_surface[token] = surface

        for i, letter in enumerate(SINGLE_LETTERS):
            assign(bytes([letter]), SINGLE_LETTER_BASE + i)
        for i, w in enumerate(self.common):
            assign(w, COMMON_WORD_BASE + i)
        for i, w in enumerate(self.words):
            assign(w, DICTIONARY_WORD_BASE + i)
        for key, base in _CONTRACTION_BASES.items():
            for i, w in enumerate(self.contractions.get(key, ())):
                assign(w, base + i)

        composite_words: dict[int, tuple[bytes, ...]] = {}
        by_first: dict[int, list[tuple[list[int], int]]] = {}
        composites_of: dict[bytes, set[int]] = {}
        seen_seqs: set[tuple[bytes, ...]] = set()
        for i, seq in enumerate(self.composites):
            token = COMPOSITE_BASE + i
            if seq in seen_seqs:
                raise ManifestError(f"duplicate composite {b' '.join(seq)!r}")
            seen_seqs.add(seq)
            toks = []
            for w in seq:
                wt = word_to_token.get(w)
                if wt is None:
                    raise ManifestError(
                        f"composite references unknown word {w!r}"
                    )
                toks.append(wt)
            composite_words[token] = seq
            token_surface[token] = b" ".join(seq)
            by_first.setdefault(toks[0], []).append((toks, token))
            for w in set(seq):
                composites_of.setdefault(w, set()).add(token)
        for cands in by_first.values():
            cands.sort(key=lambda item: -len(item[0]))

        self.word_to_token = word_to_token
        self.token_surface = token_surface
        self.composite_words = composite_words
        self._composites_by_first = by_first
        self._composites_of = composites_of

    def lookup_word(self, word: bytes) -> int | None:
        """Token for an exact-case surface form, or None when absent."""
        return self.word_to_token.get(word)

    def surface(self, token: int) -> bytes:
        """Surface bytes of an assigned word, contraction, letter or composite token."""
        s = self.token_surface.get(token)
        if s is None:
            raise ValueError(f"token {token} has no assigned surface")
        return s

    def composites_containing(self, word: bytes) -> frozenset[int]:
        """All composite tokens whose word sequence contains `word`."""
        return frozenset(self._composites_of.get(word, ()))

    def match_composite(
        self, tokens: Sequence[int], position: int
    ) -> tuple[int, int] | None:
        """Longest composite matching at `position`; returns (token, length)."""
        cands = self._composites_by_first.get(tokens[position])
        if not cands:
            return None
        for seq, token in cands:
            end = position + len(seq)
            if tokens[position:end] == seq:
                return token, len(seq)
        return None


def _parse_sections(data: bytes) -> dict[str, list[bytes]]:
    sections: dict[str, list[bytes]] = {}
    current: list[bytes] | None = None
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    for lineno, line in enumerate(lines, 1):
        if line.startswith(b"[") and line.endswith(b"]"):
            name = line[1:-1].decode("latin-1")
            if name not in SECTION_NAMES:
                raise ManifestError(f"line {lineno}: unknown section [{name}]")
            if name in sections:
                raise ManifestError(f"line {lineno}: duplicate section [{name}]")
            current = sections.setdefault(name, [])
        elif current is None:
            raise ManifestError(f"line {lineno}: entry before any section header")
        elif not line:
            raise ManifestError(f"line {lineno}: empty entry")
        else:
            current.append(line)
    return sections


def load_manifest(data: bytes) -> Dictionary:
    """Parse and validate a manifest, returning the loaded Dictionary.

    The digest binds containers to the exact manifest bytes, so no
    normalization is applied before hashing.
    """
    sections = _parse_sections(data)
    common = sections.get("common", [])
    words = sections.get("words", [])
    if len(common) > COMMON_CAPACITY:
        raise ManifestError(f"[common] holds {len(common)} entries, capacity {COMMON_CAPACITY}")
    if len(words) > WORDS_CAPACITY:
        raise ManifestError(f"[words] holds {len(words)} entries, capacity {WORDS_CAPACITY}")
    composites: list[tuple[bytes, ...]] = []
    for entry in sections.get("composites", []):
        parts = tuple(p for p in entry.split(b" ") if p)
        if len(parts) < 2 or b" ".join(parts) != entry:
            raise ManifestError(f"malformed composite {entry!r}")
        composites.append(parts)
    if len(composites) > COMPOSITES_CAPACITY:
        raise ManifestError(
            f"[composites] holds {len(composites)} entries, capacity {COMPOSITES_CAPACITY}"
        )
    contractions: dict[str, list[bytes]] = {}
    for key, cap in CONTRACTION_CAPACITIES.items():
        entries = sections.get(f"contractions_{key}", [])
        if len(entries) > cap:
            raise ManifestError(
                f"[contractions_{key}] holds {len(entries)} entries, capacity {cap}"
            )
        contractions[key] = entries
    return Dictionary(common, words, composites, contractions, fnv1a64(data))


def render_manifest(
    common: Sequence[bytes],
    words: Sequence[bytes],
    composites: Sequence[Sequence[bytes]],
    contractions: dict[str, Sequence[bytes]] | None = None,
) -> bytes:
    """Serialize dictionary sections into canonical manifest bytes."""
    contractions = contractions or {}
    out = bytearray()
    body: dict[str, Iterable[bytes]] = {
        "common": common,
        "words": words,
        "composites": (b" ".join(c) for c in composites),
        "contractions_nt": contractions.get("nt", ()),
        "contractions_s": contractions.get("s", ()),
        "contractions_m": contractions.get("m", ()),
        "contractions_ll": contractions.get("ll", ()),
    }
    for name in SECTION_NAMES:
        out += b"[" + name.encode() + b"]\n"
        for entry in body[name]:
            out += entry + b"\n"
    return bytes(out)


_WORD_RUN = re.compile(rb"[0-9A-Za-z]+")


def _iter_corpus_words(text: bytes):
    """Yield (word, start, end) with contraction-shaped apostrophe joins."""
    runs = _WORD_RUN.finditer(text)
    pending = next(runs, None)
    while pending is not None:
        word, start, end = pending.group(), pending.start(), pending.end()
        nxt = next(runs, None)
        if (
            nxt is not None
            and nxt.start() == end + 1
            and text[end] == 0x27
            and _contraction_suffix(word, nxt.group()) is not None
        ):
            word = word + b"'" + nxt.group()
            end = nxt.end()
            nxt = next(runs, None)
        yield word, start, end
        pending = nxt


def _contraction_suffix(head: bytes, tail: bytes) -> str | None:
    if tail == b"t" and head.endswith(b"n"):
        return "nt"
    if tail == b"s":
        return "s"
    if tail == b"m":
        return "m"
    if tail == b"ll":
        return "ll"
    return None


def build_from_corpus(
    corpus: bytes | Iterable[bytes],
    *,
    common_size: int = COMMON_CAPACITY,
    words_size: int = WORDS_CAPACITY,
    composites_size: int = COMPOSITES_CAPACITY,
    composite_min_count: int = 4,
) -> bytes:
    """Derive a manifest from a corpus by frequency analysis.

    Words are ranked by descending count (ties lexicographic); the top
    `common_size` become [common].  Adjacent 2-3 word sequences, counted only
    across single-space gaps, become [composites] when seen at least
    `composite_min_count` times.  Output is deterministic for fixed input.
    """
    if not 0 <= common_size <= COMMON_CAPACITY:
        raise ValueError(f"common_size must be 0-{COMMON_CAPACITY}")
    if not 0 <= words_size <= WORDS_CAPACITY:
        raise ValueError(f"words_size must be 0-{WORDS_CAPACITY}")
    if not 0 <= composites_size <= COMPOSITES_CAPACITY:
        raise ValueError(f"composites_size must be 0-{COMPOSITES_CAPACITY}")
    if composite_min_count < 2:
        raise ValueError("composite_min_count must be at least 2")
    docs = [corpus] if isinstance(corpus, (bytes, bytearray)) else list(corpus)

    word_counts: Counter[bytes] = Counter()
    bigrams: Counter[tuple[bytes, ...]] = Counter()
    trigrams: Counter[tuple[bytes, ...]] = Counter()
    for doc in docs:
        run: list[bytes] = []
        last_end = -2
        for word, start, end in _iter_corpus_words(doc):
            word_counts[word] += 1
            if start == last_end + 1 and doc[last_end] == 0x20:
                run.append(word)
            else:
                run = [word]
            if len(run) >= 2:
                bigrams[tuple(run[-2:])] += 1
            if len(run) >= 3:
                trigrams[tuple(run[-3:])] += 1
                run = run[-3:]
            last_end = end
    if not word_counts:
        raise ValueError("corpus contains no words")

    contraction_counts: dict[str, Counter[bytes]] = {k: Counter() for k in CONTRACTION_CAPACITIES}
    plain: Counter[bytes] = Counter()
    for word, count in word_counts.items():
        if b"'" in word:
            head, tail = word.split(b"'", 1)
            key = _contraction_suffix(head, tail)
            if key is not None:
                contraction_counts[key][word] = count
            continue
        if len(word) == 1 and word.isalpha():
            continue  # single letters have implicit tokens
        plain[word] = count

    contractions = {
        key: [w for w, _ in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:cap]]
        for (key, cap), counts in zip(
            CONTRACTION_CAPACITIES.items(), contraction_counts.values()
        )
    }
    ranked = sorted(plain.items(), key=lambda kv: (-kv[1], kv[0]))
    common = [w for w, _ in ranked[:common_size]]
    words = [w for w, _ in ranked[common_size : common_size + words_size]]

    kept = set(common) | set(words)
    kept.update(bytes([b]) for b in SINGLE_LETTERS)
    for entries in contractions.values():
        kept.update(entries)
    candidates = [
        (seq, count)
        for counter in (bigrams, trigrams)
        for seq, count in counter.items()
        if count >= composite_min_count and all(w in kept for w in seq)
    ]
    candidates.sort(key=lambda item: (-item[1], b" ".join(item[0])))
    composites = [seq for seq, _ in candidates[:composites_size]]

    return render_manifest(common, words, composites, contractions)
