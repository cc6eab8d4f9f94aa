"""Binary container format: header, alias table, big-endian token stream.

Layout (multi-byte fields big-endian): magic "TCSS", version, flags,
dictionary digest (8), original length (8), alias count (2); per alias the
alias token (2), expansion length (1) and expansion tokens (2 each); then
the token stream, two bytes per token, to end of file.
"""

from __future__ import annotations

import struct
import sys
from array import array
from dataclasses import dataclass, field

from wordref.blocks import ALIAS_BASE, ALIAS_LAST

__all__ = [
    "MAGIC",
    "VERSION",
    "FLAG_PARSE2",
    "FLAG_PARSE4",
    "HEADER_LEN",
    "AliasDefinition",
    "Container",
    "ContainerError",
    "DictionaryMismatchError",
    "write_container",
    "read_container",
]

MAGIC = b"TCSS"
VERSION = 1
FLAG_PARSE2 = 0x01
FLAG_PARSE4 = 0x02
HEADER_LEN = 24

_HEADER = struct.Struct(">4sBBQQH")
_ALIAS_HEAD = struct.Struct(">HB")


class ContainerError(ValueError):
    """Raised for structurally invalid container bytes."""


class DictionaryMismatchError(ContainerError):
    """Raised when a container was written against a different dictionary."""


@dataclass(frozen=True)
class AliasDefinition:
    """One alias token standing for a repeated sequence of 2-255 plain tokens."""

    alias: int
    expansion: tuple[int, ...]


@dataclass
class Container:
    flags: int
    dict_hash: int
    original_len: int
    aliases: list[AliasDefinition] = field(default_factory=list)
    tokens: list[int] = field(default_factory=list)


def _pack_tokens(tokens) -> bytes:
    try:
        arr = array("H", tokens)
    except OverflowError as exc:
        raise ContainerError(f"token out of 16-bit range: {exc}") from exc
    if sys.byteorder == "little":
        arr.byteswap()
    return arr.tobytes()


def _unpack_tokens(data: bytes) -> list[int]:
    arr = array("H")
    arr.frombytes(data)
    if sys.byteorder == "little":
        arr.byteswap()
    return arr.tolist()


def _check_alias(a: AliasDefinition) -> None:
    if not ALIAS_BASE <= a.alias <= ALIAS_LAST:
        raise ContainerError(f"alias token {a.alias} outside the alias block")
    if not 2 <= len(a.expansion) <= 255:
        raise ContainerError(f"alias expansion length {len(a.expansion)} outside 2-255")
    for t in a.expansion:
        if t >= ALIAS_BASE:
            raise ContainerError("alias expansion may not contain alias tokens")


def write_container(c: Container) -> bytes:
    """Serialize a container; exact inverse of `read_container`."""
    parts = [
        _HEADER.pack(MAGIC, VERSION, c.flags, c.dict_hash, c.original_len, len(c.aliases))
    ]
    seen = set()
    for a in c.aliases:
        _check_alias(a)
        if a.alias in seen:
            raise ContainerError(f"alias {a.alias} defined twice")
        seen.add(a.alias)
        parts.append(_ALIAS_HEAD.pack(a.alias, len(a.expansion)))
        parts.append(_pack_tokens(a.expansion))
    parts.append(_pack_tokens(c.tokens))
    return b"".join(parts)


def read_container(data: bytes) -> Container:
    """Parse container bytes, validating structure (not stream semantics)."""
    if len(data) < HEADER_LEN:
        raise ContainerError("truncated header")
    magic, version, flags, digest, original_len, alias_count = _HEADER.unpack_from(data, 0)
    if magic != MAGIC:
        raise ContainerError(f"bad magic {magic!r}")
    if version != VERSION:
        raise ContainerError(f"unsupported version {version}")
    pos = HEADER_LEN
    aliases: list[AliasDefinition] = []
    seen = set()
    for _ in range(alias_count):
        if pos + 3 > len(data):
            raise ContainerError("alias table overruns container")
        alias, exp_len = _ALIAS_HEAD.unpack_from(data, pos)
        pos += 3
        end = pos + 2 * exp_len
        if end > len(data):
            raise ContainerError("alias table overruns container")
        definition = AliasDefinition(alias, tuple(_unpack_tokens(data[pos:end])))
        _check_alias(definition)
        if alias in seen:
            raise ContainerError(f"alias {alias} defined twice")
        seen.add(alias)
        aliases.append(definition)
        pos = end
    stream = data[pos:]
    if len(stream) % 2:
        raise ContainerError("truncated stream (odd byte count)")
    return Container(flags, digest, original_len, aliases, _unpack_tokens(stream))
