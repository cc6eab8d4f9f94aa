"""Token index space: the block partition of 0-65535 and the stateless escape codecs.

Every compressed entity is named by one 16-bit token.  The range is split
into fixed, non-overlapping blocks; the codecs below map character pairs,
digit triplets, separator pairs, literal bytes and run lengths into their
blocks and back.  All functions here are pure.
"""

from __future__ import annotations

from enum import Enum

__all__ = [
    "BlockClass",
    "BLOCK_RANGES",
    "CLASS_OF",
    "classify",
    "alnum_code",
    "separator_code",
    "encode_alnum_pair",
    "decode_alnum_pair",
    "encode_numeric_triplet",
    "decode_numeric_triplet",
    "encode_separator_pair",
    "decode_separator_pair",
    "literal_byte_token",
    "literal_byte_value",
    "run_length_token",
    "run_length_count",
]


class BlockClass(Enum):
    COMMON_WORD = "common_word"
    WORD_REPEAT = "word_repeat"
    SPACE_RUN = "space_run"
    NEWLINE = "newline"
    TAB = "tab"
    CONTRACTION_NT = "contraction_nt"
    CONTRACTION_S = "contraction_s"
    CONTRACTION_M = "contraction_m"
    CONTRACTION_LL = "contraction_ll"
    SEPARATOR_START = "separator_start"
    SEPARATOR_REPEAT = "separator_repeat"
    SINGLE_LETTER = "single_letter"
    LITERAL_BYTE = "literal_byte"
    CONTROL_BYTE = "control_byte"
    DICTIONARY_WORD = "dictionary_word"
    COMPOSITE = "composite"
    NUMERIC_START = "numeric_start"
    NUMERIC_REPEAT = "numeric_repeat"
    ALNUM_START = "alnum_start"
    ALNUM_REPEAT = "alnum_repeat"
    ALIAS = "alias"
    RESERVED = "reserved"


# Block layout.  Capacities: 3969 per alnum block (63*63), 1210 per numeric
# block (10*11*11), 1050 per separator block (1024 of which are encodable),
# 49000 dictionary words, 1000 composites, 567 aliases.  Gaps are Reserved.
COMMON_WORD_BASE = 0
WORD_REPEAT_BASE = 256
WORD_REPEAT_MAX = 45
SPACE_RUN_BASE = 301
SPACE_RUN_MIN = 2
SPACE_RUN_MAX = 51
NEWLINE_TOKEN = 351
TAB_TOKEN = 352
CONTRACTION_NT_BASE = 353
CONTRACTION_S_BASE = 394
CONTRACTION_M_BASE = 409
CONTRACTION_LL_BASE = 412
SEPARATOR_START_BASE = 500
SEPARATOR_REPEAT_BASE = 1550
SINGLE_LETTER_BASE = 2600
LITERAL_BYTE_BASE = 2660
CONTROL_BYTE_BASE = 2900
DICTIONARY_WORD_BASE = 3000
COMPOSITE_BASE = 52000
NUMERIC_START_BASE = 53500
NUMERIC_REPEAT_BASE = 54710
ALNUM_START_BASE = 56500
ALNUM_REPEAT_BASE = 61000
ALIAS_BASE = 64969
ALIAS_LAST = 65535

BLOCK_RANGES: tuple[tuple[int, int, BlockClass], ...] = (
    (0, 255, BlockClass.COMMON_WORD),
    (256, 300, BlockClass.WORD_REPEAT),
    (301, 350, BlockClass.SPACE_RUN),
    (351, 351, BlockClass.NEWLINE),
    (352, 352, BlockClass.TAB),
    (353, 393, BlockClass.CONTRACTION_NT),
    (394, 408, BlockClass.CONTRACTION_S),
    (409, 411, BlockClass.CONTRACTION_M),
    (412, 426, BlockClass.CONTRACTION_LL),
    (427, 499, BlockClass.RESERVED),
    (500, 1549, BlockClass.SEPARATOR_START),
    (1550, 2599, BlockClass.SEPARATOR_REPEAT),
    (2600, 2659, BlockClass.SINGLE_LETTER),
    (2660, 2899, BlockClass.LITERAL_BYTE),
    (2900, 2915, BlockClass.CONTROL_BYTE),
    (2916, 2999, BlockClass.RESERVED),
    (3000, 51999, BlockClass.DICTIONARY_WORD),
    (52000, 52999, BlockClass.COMPOSITE),
    (53000, 53499, BlockClass.RESERVED),
    (53500, 54709, BlockClass.NUMERIC_START),
    (54710, 55919, BlockClass.NUMERIC_REPEAT),
    (55920, 56499, BlockClass.RESERVED),
    (56500, 60468, BlockClass.ALNUM_START),
    (60469, 60999, BlockClass.RESERVED),
    (61000, 64968, BlockClass.ALNUM_REPEAT),
    (64969, 65535, BlockClass.ALIAS),
)


def _build_class_table() -> tuple[BlockClass, ...]:
    table: list[BlockClass] = [BlockClass.RESERVED] * 65536
    for low, high, cls in BLOCK_RANGES:
        for t in range(low, high + 1):
            table[t] = cls
    return tuple(table)


# O(1) classification table; hot paths index it directly.
CLASS_OF: tuple[BlockClass, ...] = _build_class_table()


def classify(token: int) -> BlockClass:
    """Return the unique block containing `token` (Reserved is a valid answer)."""
    if not 0 <= token <= 65535:
        raise ValueError(f"token out of 16-bit range: {token}")
    return CLASS_OF[token]


# Escape alphabet for out-of-dictionary words: code 0 is padding, then
# a-z, A-Z, 0-9 in that fixed order.  The ordering is part of the format.
ALNUM_PAD = 0
_ALNUM_ALPHABET = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
ALNUM_CODE_OF: dict[int, int] = {b: i + 1 for i, b in enumerate(_ALNUM_ALPHABET)}
ALNUM_BYTE_OF: dict[int, int] = {i + 1: b for i, b in enumerate(_ALNUM_ALPHABET)}

# Separator alphabet: code 0 is padding, 1 is space, 2-31 the fixed symbol
# table.  The ordering is part of the format.
SEPARATOR_PAD = 0
_SEPARATOR_SYMBOLS = b".,;:!?\"'()-_/\\*&+=<>[]{}@#$%|~"
SEPARATOR_CHARS = b" " + _SEPARATOR_SYMBOLS
SEPARATOR_CODE_OF: dict[int, int] = {b: i + 1 for i, b in enumerate(SEPARATOR_CHARS)}
SEPARATOR_BYTE_OF: dict[int, int] = {i + 1: b for i, b in enumerate(SEPARATOR_CHARS)}

NUMERIC_PAD = 10


def alnum_code(byte: int) -> int:
    """Map an ASCII letter or digit byte to its escape-alphabet code (1-62)."""
    code = ALNUM_CODE_OF.get(byte)
    if code is None:
        raise ValueError(f"byte {byte:#04x} is not in the alphanumeric escape alphabet")
    return code


def separator_code(byte: int) -> int:
    """Map a separator byte (space or symbol-table entry) to its code (1-31)."""
    code = SEPARATOR_CODE_OF.get(byte)
    if code is None:
        raise ValueError(f"byte {byte:#04x} is not in the separator table")
    return code


def encode_alnum_pair(c1: int, c2: int, is_start: bool) -> int:
    """Encode one ordered character pair of a new word.

    `c1`/`c2` are alphabet codes; `c2` may be the pad (0) for a final odd
    pair.  Start pairs and continuation pairs live in different blocks.
    """
    if not 1 <= c1 <= 62:
        raise ValueError(f"first pair element must be a character code 1-62, got {c1}")
    if not 0 <= c2 <= 62:
        raise ValueError(f"second pair element must be a code 0-62, got {c2}")
    base = ALNUM_START_BASE if is_start else ALNUM_REPEAT_BASE
    return base + 63 * c1 + c2


def decode_alnum_pair(token: int) -> tuple[int, int, bool]:
    """Invert `encode_alnum_pair`; returns (c1, c2, is_start)."""
    cls = classify(token)
    if cls is BlockClass.ALNUM_START:
        code = token - ALNUM_START_BASE
        is_start = True
    elif cls is BlockClass.ALNUM_REPEAT:
        code = token - ALNUM_REPEAT_BASE
        is_start = False
    else:
        raise ValueError(f"token {token} is not an alphanumeric pair")
    c1, c2 = divmod(code, 63)
    if c1 == 0:
        raise ValueError(f"token {token} begins with padding")
    return c1, c2, is_start


def encode_numeric_triplet(d1: int, p2: int, p3: int, is_start: bool) -> int:
    """Encode up to three digits of a purely numeric new word.

    `d1` is always a digit (0-9); `p2`/`p3` are digits or the pad (10),
    and padding is only legal at the tail of the triplet.
    """
    if not 0 <= d1 <= 9:
        raise ValueError(f"leading triplet element must be a digit, got {d1}")
    if not 0 <= p2 <= 10 or not 0 <= p3 <= 10:
        raise ValueError("trailing triplet elements must be digits or the pad")
    if p2 == NUMERIC_PAD and p3 != NUMERIC_PAD:
        raise ValueError("padding must be contiguous at the triplet tail")
    base = NUMERIC_START_BASE if is_start else NUMERIC_REPEAT_BASE
    return base + d1 * 121 + p2 * 11 + p3


def decode_numeric_triplet(token: int) -> tuple[bytes, bool]:
    """Invert `encode_numeric_triplet`; returns (digits with pads stripped, is_start)."""
    cls = classify(token)
    if cls is BlockClass.NUMERIC_START:
        code = token - NUMERIC_START_BASE
        is_start = True
    elif cls is BlockClass.NUMERIC_REPEAT:
        code = token - NUMERIC_REPEAT_BASE
        is_start = False
    else:
        raise ValueError(f"token {token} is not a numeric triplet")
    d1, rest = divmod(code, 121)
    p2, p3 = divmod(rest, 11)
    if p2 == NUMERIC_PAD and p3 != NUMERIC_PAD:
        raise ValueError(f"token {token} pads before a digit")
    digits = bytes([0x30 + d1])
    if p2 != NUMERIC_PAD:
        digits += bytes([0x30 + p2])
        if p3 != NUMERIC_PAD:
            digits += bytes([0x30 + p3])
    return digits, is_start


def encode_separator_pair(s1: int, s2: int, is_start: bool) -> int:
    """Encode one ordered pair of separator characters (space or symbol).

    `s2` may be the pad (0) for a final odd pair.  Callers must route bytes
    outside the separator table to `literal_byte_token` instead.
    """
    if not 1 <= s1 <= 31:
        raise ValueError(f"first separator element must be a code 1-31, got {s1}")
    if not 0 <= s2 <= 31:
        raise ValueError(f"second separator element must be a code 0-31, got {s2}")
    base = SEPARATOR_START_BASE if is_start else SEPARATOR_REPEAT_BASE
    return base + 32 * s1 + s2


def decode_separator_pair(token: int) -> tuple[int, int, bool]:
    """Invert `encode_separator_pair`; returns (s1, s2, is_start)."""
    cls = classify(token)
    if cls is BlockClass.SEPARATOR_START:
        code = token - SEPARATOR_START_BASE
        is_start = True
    elif cls is BlockClass.SEPARATOR_REPEAT:
        code = token - SEPARATOR_REPEAT_BASE
        is_start = False
    else:
        raise ValueError(f"token {token} is not a separator pair")
    if code >= 1024:
        raise ValueError(f"token {token} lies in the unencodable separator slack")
    s1, s2 = divmod(code, 32)
    if s1 == 0:
        raise ValueError(f"token {token} begins with padding")
    return s1, s2, is_start


def literal_byte_token(byte: int) -> int:
    """Token carrying one raw byte. Bytes 0-15 use the control extension block."""
    if not 0 <= byte <= 255:
        raise ValueError(f"byte value out of range: {byte}")
    if byte < 16:
        return CONTROL_BYTE_BASE + byte
    return LITERAL_BYTE_BASE + (byte - 16)


def literal_byte_value(token: int) -> int:
    """Invert `literal_byte_token`."""
    cls = classify(token)
    if cls is BlockClass.LITERAL_BYTE:
        return 16 + (token - LITERAL_BYTE_BASE)
    if cls is BlockClass.CONTROL_BYTE:
        return token - CONTROL_BYTE_BASE
    raise ValueError(f"token {token} is not a literal byte")


def run_length_token(kind: BlockClass, count: int) -> int:
    """Run-length token: `count` extra word repeats (1-45) or spaces (2-51).

    Callers chain multiple tokens for longer runs.
    """
    if kind is BlockClass.WORD_REPEAT:
        if not 1 <= count <= WORD_REPEAT_MAX:
            raise ValueError(f"word repeat count out of range 1-45: {count}")
        return WORD_REPEAT_BASE + count - 1
    if kind is BlockClass.SPACE_RUN:
        if not SPACE_RUN_MIN <= count <= SPACE_RUN_MAX:
            raise ValueError(f"space run length out of range 2-51: {count}")
        return SPACE_RUN_BASE + count - SPACE_RUN_MIN
    raise ValueError(f"no run-length block for {kind}")


def run_length_count(token: int) -> tuple[BlockClass, int]:
    """Invert `run_length_token`; returns (kind, count)."""
    cls = classify(token)
    if cls is BlockClass.WORD_REPEAT:
        return cls, token - WORD_REPEAT_BASE + 1
    if cls is BlockClass.SPACE_RUN:
        return cls, token - SPACE_RUN_BASE + SPACE_RUN_MIN
    raise ValueError(f"token {token} is not a run-length token")
