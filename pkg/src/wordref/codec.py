"""Compression pipeline (word indexing, combination replacement, sequence
aliasing) and the byte-exact decompressor.

The keystone invariant: exactly one space between two word-class entities is
encoded by token adjacency at zero cost.  All other whitespace, separators
and raw bytes are explicit, which is what makes the round trip byte-exact.
"""

from __future__ import annotations

from wordref.blocks import (
    ALIAS_BASE,
    ALNUM_BYTE_OF,
    ALNUM_CODE_OF,
    CLASS_OF,
    NEWLINE_TOKEN,
    SEPARATOR_BYTE_OF,
    SEPARATOR_CODE_OF,
    SPACE_RUN_BASE,
    SPACE_RUN_MAX,
    SPACE_RUN_MIN,
    TAB_TOKEN,
    WORD_REPEAT_BASE,
    WORD_REPEAT_MAX,
    BlockClass,
    decode_alnum_pair,
    decode_numeric_triplet,
    decode_separator_pair,
    encode_alnum_pair,
    encode_numeric_triplet,
    encode_separator_pair,
    literal_byte_token,
    literal_byte_value,
    run_length_token,
)
from wordref.container import (
    FLAG_PARSE2,
    FLAG_PARSE4,
    AliasDefinition,
    Container,
    ContainerError,
    DictionaryMismatchError,
    read_container,
    write_container,
)
from wordref.dictionary import Dictionary
from wordref.tokenizer import NEWLINE, SPACES, SYMBOLS, TAB, WORD, Lexeme, lex

__all__ = [
    "compress",
    "decompress",
    "compress_parse1",
    "compress_parse2",
    "compress_parse4",
    "expand_aliases",
]

# Tokens that stand for one complete word entity on their own.
_WORD_ENTITY_CLASSES = frozenset(
    {
        BlockClass.COMMON_WORD,
        BlockClass.SINGLE_LETTER,
        BlockClass.DICTIONARY_WORD,
        BlockClass.CONTRACTION_NT,
        BlockClass.CONTRACTION_S,
        BlockClass.CONTRACTION_M,
        BlockClass.CONTRACTION_LL,
        BlockClass.COMPOSITE,
    }
)
_IS_WORD_ENTITY = tuple(cls in _WORD_ENTITY_CLASSES for cls in CLASS_OF)

_SINGLE_SPACE_TOKEN = encode_separator_pair(SEPARATOR_CODE_OF[0x20], 0, True)


def compress(
    text: bytes, dictionary: Dictionary, *, parse2: bool = True, parse4: bool = False
) -> bytes:
    """Compress `text` into container bytes against `dictionary`."""
    tokens = compress_parse1(lex(text, dictionary), dictionary)
    flags = 0
    if parse2:
        flags |= FLAG_PARSE2
        tokens = compress_parse2(tokens, dictionary)
    aliases: list[AliasDefinition] = []
    if parse4:
        flags |= FLAG_PARSE4
        aliases, tokens = compress_parse4(tokens)
    return write_container(
        Container(flags, dictionary.hash, len(text), aliases, tokens)
    )


def decompress(data: bytes, dictionary: Dictionary) -> bytes:
    """Reverse `compress`; byte-exact for any container this codec produced."""
    c = read_container(data)
    if c.dict_hash != dictionary.hash:
        raise DictionaryMismatchError(
            f"container digest {c.dict_hash:#018x} does not match dictionary {dictionary.hash:#018x}"
        )
    tokens = expand_aliases(c.tokens, c.aliases, c.flags)
    text = _tokens_to_text(tokens, dictionary)
    if len(text) != c.original_len:
        raise ContainerError(
            f"decoded {len(text)} bytes but header declares {c.original_len}"
        )
    return text


# --- Parse I: word indexing and escape coding -------------------------------


def compress_parse1(lexemes: list[Lexeme], dictionary: Dictionary) -> list[int]:
    """Map lexemes to tokens; out-of-dictionary words use escape chains."""
    out: list[int] = []
    lookup = dictionary.lookup_word
    last = len(lexemes) - 1
    for idx, lx in enumerate(lexemes):
        kind = lx.kind
        if kind == WORD:
            token = lookup(lx.text)
            if token is not None:
                out.append(token)
            elif lx.text.isdigit():
                _append_numeric_chain(lx.text, out)
            else:
                _append_alnum_chain(lx.text, out)
        elif kind == SPACES:
            if (
                lx.count == 1
                and 0 < idx < last
                and lexemes[idx - 1].kind == WORD
                and lexemes[idx + 1].kind == WORD
            ):
                continue  # the implicit single space between word entities
            _append_spaces(lx.count, out)
        elif kind == SYMBOLS:
            _append_symbol_chain(lx.text, out)
        elif kind == NEWLINE:
            out.append(NEWLINE_TOKEN)
        elif kind == TAB:
            out.append(TAB_TOKEN)
        else:
            out.append(literal_byte_token(lx.text[0]))
    return out


def _append_alnum_chain(word: bytes, out: list[int]) -> None:
    codes = ALNUM_CODE_OF
    n = len(word)
    for i in range(0, n, 2):
        c2 = codes[word[i + 1]] if i + 1 < n else 0
        out.append(encode_alnum_pair(codes[word[i]], c2, i == 0))


def _append_numeric_chain(word: bytes, out: list[int]) -> None:
    n = len(word)
    for i in range(0, n, 3):
        p2 = word[i + 1] - 0x30 if i + 1 < n else 10
        p3 = word[i + 2] - 0x30 if i + 2 < n else 10
        out.append(encode_numeric_triplet(word[i] - 0x30, p2, p3, i == 0))


def _append_symbol_chain(group: bytes, out: list[int]) -> None:
    codes = SEPARATOR_CODE_OF
    n = len(group)
    for i in range(0, n, 2):
        s2 = codes[group[i + 1]] if i + 1 < n else 0
        out.append(encode_separator_pair(codes[group[i]], s2, i == 0))


def _append_spaces(count: int, out: list[int]) -> None:
    if count == 1:
        out.append(_SINGLE_SPACE_TOKEN)
        return
    while count > SPACE_RUN_MAX:
        take = SPACE_RUN_MAX - 1 if count == SPACE_RUN_MAX + 1 else SPACE_RUN_MAX
        out.append(run_length_token(BlockClass.SPACE_RUN, take))
        count -= take
    out.append(run_length_token(BlockClass.SPACE_RUN, count))


# --- Parse II: composites and repeated words --------------------------------


def compress_parse2(tokens: list[int], dictionary: Dictionary) -> list[int]:
    """Replace adjacent word combinations by composite tokens, then collapse
    runs of an identical word entity into word-repeat chains.

    Never longer than its input.
    """
    if dictionary.composites:
        tokens = _replace_composites(tokens, dictionary)
    return _collapse_repeats(tokens)


def _replace_composites(tokens: list[int], dictionary: Dictionary) -> list[int]:
    match = dictionary.match_composite
    first_tokens = dictionary._composites_by_first
    out: list[int] = []
    i = 0
    n = len(tokens)
    while i < n:
        t = tokens[i]
        if t in first_tokens:
            found = match(tokens, i)
            if found is not None:
                out.append(found[0])
                i += found[1]
                continue
        out.append(t)
        i += 1
    return out


def _collapse_repeats(tokens: list[int]) -> list[int]:
    is_entity = _IS_WORD_ENTITY
    out: list[int] = []
    i = 0
    n = len(tokens)
    while i < n:
        t = tokens[i]
        out.append(t)
        i += 1
        if not is_entity[t]:
            continue
        j = i
        while j < n and tokens[j] == t:
            j += 1
        extra = j - i
        while extra > 0:
            take = min(WORD_REPEAT_MAX, extra)
            out.append(run_length_token(BlockClass.WORD_REPEAT, take))
            extra -= take
        i = j
    return out


# --- Parse IV: repeated token sequence aliasing ------------------------------


def compress_parse4(tokens: list[int]) -> tuple[list[AliasDefinition], list[int]]:
    """Iteratively alias the repeated token sequence with the best net byte
    saving until nothing pays for its alias-table record.

    Expanding the result under the returned table reproduces the input.
    """
    toks = list(tokens)
    aliases: list[AliasDefinition] = []
    next_alias = ALIAS_BASE
    while next_alias <= 65535:
        found = _best_repeat(toks)
        if found is None:
            break
        seq, positions = found
        aliases.append(AliasDefinition(next_alias, tuple(seq)))
        width = len(seq)
        out: list[int] = []
        prev = 0
        for p in positions:
            out.extend(toks[prev:p])
            out.append(next_alias)
            prev = p + width
        out.extend(toks[prev:])
        toks = out
        next_alias += 1
    return aliases, toks


def _net_saving(k: int, length: int) -> int:
    # k occurrences of `length` tokens become k alias tokens; the alias-table
    # record costs 3 + 2*length bytes.
    return 2 * k * (length - 1) - (2 * length + 3)


def _greedy_positions(positions: list[int], length: int) -> list[int]:
    picked: list[int] = []
    last_end = -1
    for p in positions:
        if p >= last_end:
            picked.append(p)
            last_end = p + length
    return picked


def _best_repeat(toks: list[int]) -> tuple[list[int], list[int]] | None:
    """Best repeated alias-free sequence by (net saving, earliest, shortest)."""
    n = len(toks)
    best_net = 0
    best: tuple[int, int, list[int]] | None = None  # (first_pos, length, positions)
    groups: dict[object, list[int]] = {}
    for p in range(n - 1):
        a, b = toks[p], toks[p + 1]
        if a < ALIAS_BASE and b < ALIAS_BASE:
            groups.setdefault((a, b), []).append(p)
    length = 2
    while groups and length <= 255:
        repeated = [ps for ps in groups.values() if len(ps) >= 2]
        for ps in repeated:
            picked = _greedy_positions(ps, length)
            if len(picked) < 2:
                continue
            net = _net_saving(len(picked), length)
            if net <= 0:
                continue
            if (
                best is None
                or net > best_net
                or (net == best_net and picked[0] < best[0])
                or (net == best_net and picked[0] == best[0] and length < best[1])
            ):
                best_net = net
                best = (picked[0], length, picked)
        # A repeated window of length+1 must extend a repeated window of length.
        nxt: dict[object, list[int]] = {}
        for gid, ps in enumerate(repeated):
            for p in ps:
                q = p + length
                if q < n and toks[q] < ALIAS_BASE:
                    nxt.setdefault((gid, toks[q]), []).append(p)
        groups = nxt
        length += 1
    if best is None:
        return None
    first, length, positions = best
    return toks[first : first + length], positions


def expand_aliases(
    tokens: list[int], aliases: list[AliasDefinition], flags: int = FLAG_PARSE4
) -> list[int]:
    """Substitute alias tokens by their expansions (expansions never nest)."""
    if not tokens or max(tokens) < ALIAS_BASE:
        return tokens
    table = {a.alias: a.expansion for a in aliases} if flags & FLAG_PARSE4 else {}
    out: list[int] = []
    for t in tokens:
        if t >= ALIAS_BASE:
            expansion = table.get(t)
            if expansion is None:
                raise ContainerError(f"undefined alias token {t}")
            out.extend(expansion)
        else:
            out.append(t)
    return out


# --- Decompression ------------------------------------------------------------


def _read_alnum_chain(tokens: list[int], i: int) -> tuple[bytes, int]:
    n = len(tokens)
    buf = bytearray()
    while True:
        c1, c2, _ = decode_alnum_pair(tokens[i])
        buf.append(ALNUM_BYTE_OF[c1])
        if c2:
            buf.append(ALNUM_BYTE_OF[c2])
        i += 1
        if i >= n or CLASS_OF[tokens[i]] is not BlockClass.ALNUM_REPEAT:
            return bytes(buf), i
        if not c2:
            raise ContainerError("alphanumeric chain continues after padding")


def _read_numeric_chain(tokens: list[int], i: int) -> tuple[bytes, int]:
    n = len(tokens)
    buf = bytearray()
    while True:
        digits, _ = decode_numeric_triplet(tokens[i])
        buf += digits
        i += 1
        if i >= n or CLASS_OF[tokens[i]] is not BlockClass.NUMERIC_REPEAT:
            return bytes(buf), i
        if len(digits) < 3:
            raise ContainerError("numeric chain continues after padding")


def _read_separator_chain(tokens: list[int], i: int) -> tuple[bytes, int]:
    n = len(tokens)
    buf = bytearray()
    while True:
        s1, s2, _ = decode_separator_pair(tokens[i])
        buf.append(SEPARATOR_BYTE_OF[s1])
        if s2:
            buf.append(SEPARATOR_BYTE_OF[s2])
        i += 1
        if i >= n or CLASS_OF[tokens[i]] is not BlockClass.SEPARATOR_REPEAT:
            return bytes(buf), i
        if not s2:
            raise ContainerError("separator chain continues after padding")


def _tokens_to_text(tokens: list[int], dictionary: Dictionary) -> bytes:
    out = bytearray()
    surface = dictionary.token_surface
    class_of = CLASS_OF
    prev_word = False
    last_entity: bytes | None = None
    i = 0
    n = len(tokens)
    while i < n:
        t = tokens[i]
        s = surface.get(t)
        if s is not None:
            if prev_word:
                out += b" "
            out += s
            last_entity = s
            prev_word = True
            i += 1
            continue
        cls = class_of[t]
        if cls is BlockClass.ALNUM_START:
            word, i = _read_alnum_chain(tokens, i)
        elif cls is BlockClass.NUMERIC_START:
            word, i = _read_numeric_chain(tokens, i)
        elif cls is BlockClass.SEPARATOR_START:
            text, i = _read_separator_chain(tokens, i)
            out += text
            prev_word = False
            continue
        elif cls is BlockClass.SPACE_RUN:
            out += b" " * (t - SPACE_RUN_BASE + SPACE_RUN_MIN)
            prev_word = False
            i += 1
            continue
        elif t == NEWLINE_TOKEN:
            out += b"\n"
            prev_word = False
            i += 1
            continue
        elif t == TAB_TOKEN:
            out += b"\t"
            prev_word = False
            i += 1
            continue
        elif cls is BlockClass.LITERAL_BYTE or cls is BlockClass.CONTROL_BYTE:
            out.append(literal_byte_value(t))
            prev_word = False
            i += 1
            continue
        elif cls is BlockClass.WORD_REPEAT:
            if not prev_word or last_entity is None:
                raise ContainerError("word repeat without a preceding word")
            out += (b" " + last_entity) * (t - WORD_REPEAT_BASE + 1)
            i += 1
            continue
        elif cls in (
            BlockClass.ALNUM_REPEAT,
            BlockClass.NUMERIC_REPEAT,
            BlockClass.SEPARATOR_REPEAT,
        ):
            raise ContainerError(f"continuation token {t} without a start")
        elif cls is BlockClass.ALIAS:
            raise ContainerError(f"unexpanded alias token {t}")
        elif cls is BlockClass.RESERVED:
            raise ContainerError(f"reserved token {t} in stream")
        else:
            raise ContainerError(f"token {t} has no assigned surface")
        # Escape chains land here with `word` decoded.
        if prev_word:
            out += b" "
        out += word
        last_entity = word
        prev_word = True
    return bytes(out)
