"""Compression parses, container format, and the byte-exact round trip."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wordref import codec
from wordref.codec import (
    compress,
    compress_parse1,
    compress_parse2,
    compress_parse4,
    decompress,
    expand_aliases,
)
from wordref.container import (
    HEADER_LEN,
    AliasDefinition,
    Container,
    ContainerError,
    DictionaryMismatchError,
    read_container,
    write_container,
)
from wordref.tokenizer import lex


def parse1(text, d):
    return compress_parse1(lex(text, d), d)


class TestParse1:
    def test_implicit_single_space(self, small_dict):
        t = small_dict.lookup_word
        assert parse1(b"in the", small_dict) == [t(b"in"), t(b"the")]

    def test_new_word_pair_escape(self, small_dict):
        assert parse1(b"ab", small_dict) == [56565]

    def test_new_word_odd_length_pads(self, small_dict):
        # "qzx" -> (q,z) start + (x,pad) continuation
        assert parse1(b"qzx", small_dict) == [
            56500 + 63 * 17 + 26,
            61000 + 63 * 24,
        ]

    def test_numeric_escape_chains(self, small_dict):
        assert parse1(b"1234", small_dict) == [53646, 55314]
        assert parse1(b"123", small_dict) == [53646]
        assert parse1(b"4", small_dict) == [54104]

    def test_explicit_spaces(self, small_dict):
        assert parse1(b" ", small_dict) == [532]
        assert parse1(b"a  b", small_dict) == [2600, 301, 2601]
        # Leading/trailing single spaces are explicit.
        assert parse1(b" in", small_dict) == [532, small_dict.lookup_word(b"in")]
        assert parse1(b"in ", small_dict) == [small_dict.lookup_word(b"in"), 532]

    def test_long_space_runs_chain(self, small_dict):
        toks = parse1(b"a" + b" " * 52 + b"b", small_dict)
        assert toks == [2600, 301 + 48, 301, 2601]
        toks = parse1(b"a" + b" " * 120 + b"b", small_dict)
        assert toks[1:-1] == [350, 350, 301 + 16]

    def test_separator_pairs(self, small_dict):
        assert parse1(b". ", small_dict) == [565]
        assert parse1(b".", small_dict) == [564]
        assert parse1(b"!!!", small_dict) == [500 + 32 * 6 + 6, 1550 + 32 * 6]

    def test_newline_tab_and_literals(self, small_dict):
        assert parse1(b"\n", small_dict) == [351]
        assert parse1(b"\t", small_dict) == [352]
        assert parse1(b"\x00", small_dict) == [2900]
        assert parse1(b"\r", small_dict) == [2913]
        assert parse1(b"\xff", small_dict) == [2899]

    def test_contraction_tokens(self, small_dict):
        assert parse1(b"isn't", small_dict) == [353]
        assert parse1(b"we'll", small_dict) == [412]

    def test_space_between_word_and_symbol_is_part_of_the_group(self, small_dict):
        t = small_dict.lookup_word
        # "end. New" -> word, (. )(space) pair, word: no implicit space here.
        assert parse1(b"end. New", small_dict) == [
            t(b"end"),
            565,
            t(b"New"),
        ]


class TestParse2:
    def test_composite_replacement(self, small_dict):
        t = small_dict.lookup_word
        assert compress_parse2([t(b"in"), t(b"the")], small_dict) == [52000]

    def test_longest_composite_wins(self, small_dict):
        t = small_dict.lookup_word
        toks = [t(b"in"), t(b"the"), t(b"house")]
        assert compress_parse2(toks, small_dict) == [52001]

    def test_word_repeat_collapse(self, small_dict):
        t = small_dict.lookup_word(b"the")
        assert compress_parse2([t, t], small_dict) == [t, 256]
        assert compress_parse2([t] * 10, small_dict) == [t, 256 + 8]

    def test_long_runs_chain_repeat_tokens(self, small_dict):
        t = small_dict.lookup_word(b"cat")
        out = compress_parse2([t] * 60, small_dict)
        assert out == [t, 300, 256 + 13]

    def test_no_change_for_single_word(self, small_dict):
        t = small_dict.lookup_word(b"cat")
        assert compress_parse2([t], small_dict) == [t]

    def test_composite_runs_also_collapse(self, small_dict):
        t = small_dict.lookup_word
        toks = [t(b"in"), t(b"the"), t(b"in"), t(b"the")]
        assert compress_parse2(toks, small_dict) == [52000, 256]

    def test_escape_chains_never_collapse(self, small_dict):
        toks = parse1(b"aa aa", small_dict)
        assert compress_parse2(toks, small_dict) == toks

    def test_never_longer(self, small_dict):
        for text in (b"in the", b"the the the", b"cat dog cat", b"a b a b"):
            toks = parse1(text, small_dict)
            assert len(compress_parse2(toks, small_dict)) <= len(toks)


class TestParse4:
    def test_textbook_pair_aliasing(self):
        aliases, toks = compress_parse4([5, 6, 5, 6, 5, 6, 5, 6])
        assert len(aliases) == 1
        assert aliases[0].alias == 64969
        assert aliases[0].expansion == (5, 6)
        assert toks == [64969] * 4

    def test_all_distinct_unchanged(self):
        stream = list(range(100, 140))
        aliases, toks = compress_parse4(stream)
        assert aliases == []
        assert toks == stream

    def test_below_break_even_unchanged(self):
        # Three occurrences of a pair save 2*3*1 = 6 < 7 record bytes.
        stream = [5, 6, 9, 5, 6, 9, 5, 6]
        aliases, toks = compress_parse4(stream)
        assert aliases == []
        assert toks == stream

    def test_replacement_prefers_net_savings(self):
        sentence = [10, 11, 12, 13, 14, 15]
        stream = sentence * 30
        aliases, toks = compress_parse4(stream)
        assert aliases
        assert len(toks) < len(stream) * 0.3
        assert expand_aliases(toks, aliases) == stream

    @given(st.lists(st.integers(min_value=5, max_value=12), max_size=120))
    @settings(max_examples=150, deadline=None)
    def test_expansion_restores_input(self, stream):
        aliases, toks = compress_parse4(stream)
        assert expand_aliases(toks, aliases) == stream
        # Aliasing must never grow the serialized container.
        before = write_container(Container(0, 0, 0, [], stream))
        after = write_container(Container(2, 0, 0, aliases, toks))
        assert len(after) <= len(before)

    def test_aliases_never_nest(self):
        stream = ([7, 8] * 6 + [30]) * 8
        aliases, toks = compress_parse4(stream)
        for a in aliases:
            assert all(t < 64969 for t in a.expansion)
        assert expand_aliases(toks, aliases) == stream

    def test_alias_block_exhaustion(self):
        # 600 distinct profitable pairs, but the alias block holds only 567.
        stream = []
        for i in range(600):
            stream.extend([3000 + i, 20000 + i] * 4)
        aliases, toks = compress_parse4(stream)
        assert len(aliases) == 567
        assert aliases[-1].alias == 65535
        assert expand_aliases(toks, aliases) == stream


class TestContainerFormat:
    def test_empty_stream_is_header_only(self):
        data = write_container(Container(1, 0xDEADBEEF, 0, [], []))
        assert len(data) == HEADER_LEN == 24
        assert data[:4] == b"TCSS"
        assert data[4] == 1

    def test_round_trip(self):
        c = Container(
            3,
            0x0123456789ABCDEF,
            42,
            [AliasDefinition(64969, (5, 6)), AliasDefinition(64970, (7, 8, 9))],
            [64969, 64970, 100, 64969],
        )
        back = read_container(write_container(c))
        assert back == c

    def test_bad_magic(self):
        data = bytearray(write_container(Container(0, 0, 0, [], [5])))
        data[0] = 0x58
        with pytest.raises(ContainerError, match="magic"):
            read_container(bytes(data))

    def test_unsupported_version(self):
        data = bytearray(write_container(Container(0, 0, 0, [], [5])))
        data[4] = 9
        with pytest.raises(ContainerError, match="version"):
            read_container(bytes(data))

    def test_truncated_header(self):
        with pytest.raises(ContainerError, match="truncated"):
            read_container(b"TCSS\x01")

    def test_odd_stream_length(self):
        data = write_container(Container(0, 0, 0, [], [5])) + b"\x00"
        with pytest.raises(ContainerError, match="odd byte count"):
            read_container(data)

    def test_alias_table_overrun(self):
        data = write_container(
            Container(2, 0, 0, [AliasDefinition(64969, (5, 6, 7))], [])
        )
        with pytest.raises(ContainerError, match="overruns"):
            read_container(data[:-2])

    def test_alias_validation(self):
        with pytest.raises(ContainerError, match="alias block"):
            write_container(Container(2, 0, 0, [AliasDefinition(100, (5, 6))], []))
        with pytest.raises(ContainerError, match="2-255"):
            write_container(Container(2, 0, 0, [AliasDefinition(64969, (5,))], []))
        with pytest.raises(ContainerError, match="may not contain alias"):
            write_container(
                Container(2, 0, 0, [AliasDefinition(64969, (5, 64970))], [])
            )

    def test_common_word_tokens_serialize_with_zero_high_byte(self):
        data = write_container(Container(0, 0, 0, [], list(range(256))))
        stream = data[HEADER_LEN:]
        assert all(stream[i] == 0 for i in range(0, len(stream), 2))


ROUND_TRIP_SAMPLES = [
    b"",
    b"in the house",
    b"in the house.\n",
    b"the cat isn't here, it's in the house!",
    b"the the the the",
    b"unknownword and 1234567 and Mixed9Case",
    b"  leading spaces and trailing  ",
    b"tabs\tand\r\nCRLF and \x00 control \x07 bytes",
    b"high bytes: \x80\xfe\xff\xa0",
    b"spaces" + b" " * 200 + b"run",
    b"!!!???...;;;'''",
    b"a b a b a b a b a b a b a b a b",
    b"word. word. word. word. word. word. word. word.",
    b"we'll see; don't panic. I'm here & he's there (for now).",
    b"x" * 501,
    b"9" * 100,
    bytes(range(256)),
]


class TestRoundTrip:
    @pytest.mark.parametrize("parse2", [False, True])
    @pytest.mark.parametrize("parse4", [False, True])
    def test_samples_all_configurations(self, small_dict, parse2, parse4):
        for text in ROUND_TRIP_SAMPLES:
            container = compress(text, small_dict, parse2=parse2, parse4=parse4)
            assert decompress(container, small_dict) == text

    @given(st.binary(max_size=400))
    @settings(max_examples=150, deadline=None)
    def test_arbitrary_bytes(self, small_dict, data):
        assert decompress(compress(data, small_dict), small_dict) == data

    @given(
        st.lists(
            st.sampled_from(
                [b"the", b"in", b"house", b"isn't", b"qzx", b"1234", b" ", b"  ",
                 b"\n", b"\t", b". ", b"?!", b"\xff", b"the the"]
            ),
            max_size=30,
        )
    )
    @settings(max_examples=150, deadline=None)
    def test_textlike_all_parses(self, small_dict, parts):
        text = b" ".join(parts)
        for parse2 in (False, True):
            for parse4 in (False, True):
                container = compress(text, small_dict, parse2=parse2, parse4=parse4)
                assert decompress(container, small_dict) == text

    def test_compression_flags_recorded(self, small_dict):
        c = read_container(compress(b"in the", small_dict, parse2=True, parse4=True))
        assert c.flags == 3
        c = read_container(compress(b"in the", small_dict, parse2=False, parse4=False))
        assert c.flags == 0


class TestNoExpansionGuarantee:
    def test_alnum_escape_bytes_never_exceed_original(self, small_dict):
        # Word of length n plus its following space occupies n+1 bytes; the
        # escape chain must fit in that budget.
        for n in range(1, 61):
            word = bytes(0x71 + (i % 9) for i in range(n))
            toks = []
            codec._append_alnum_chain(word, toks)
            assert len(toks) == (n + 1) // 2
            assert 2 * len(toks) <= n + 1
            if n >= 2:
                assert small_dict.lookup_word(word) is None
                assert parse1(word, small_dict) == toks

    def test_numeric_escape_matches_triplet_accounting(self, small_dict):
        for n in range(1, 61):
            word = bytes(0x30 + (i % 10) for i in range(n))
            toks = parse1(word, small_dict)
            assert len(toks) == (n + 2) // 3
            assert 2 * len(toks) <= n + 1


class TestDecompressErrors:
    def test_dictionary_hash_mismatch(self, small_dict):
        container = bytearray(compress(b"in the", small_dict))
        container[10] ^= 0xFF  # corrupt the digest field
        with pytest.raises(DictionaryMismatchError):
            decompress(bytes(container), small_dict)

    def test_stream_opening_with_continuation_token(self, small_dict):
        data = write_container(Container(0, small_dict.hash, 2, [], [61189]))
        with pytest.raises(ContainerError, match="without a start"):
            decompress(data, small_dict)

    def test_word_repeat_without_word(self, small_dict):
        data = write_container(Container(0, small_dict.hash, 8, [], [256]))
        with pytest.raises(ContainerError, match="word repeat"):
            decompress(data, small_dict)

    def test_undefined_alias(self, small_dict):
        data = write_container(Container(2, small_dict.hash, 4, [], [65000]))
        with pytest.raises(ContainerError, match="undefined alias"):
            decompress(data, small_dict)

    def test_alias_token_without_parse4_flag(self, small_dict):
        data = write_container(
            Container(0, small_dict.hash, 4, [AliasDefinition(65000, (0, 1))], [65000])
        )
        with pytest.raises(ContainerError, match="undefined alias"):
            decompress(data, small_dict)

    def test_reserved_token(self, small_dict):
        data = write_container(Container(0, small_dict.hash, 1, [], [450]))
        with pytest.raises(ContainerError, match="reserved"):
            decompress(data, small_dict)

    def test_unassigned_word_slot(self, small_dict):
        data = write_container(Container(0, small_dict.hash, 3, [], [3999]))
        with pytest.raises(ContainerError, match="no assigned surface"):
            decompress(data, small_dict)

    def test_declared_length_mismatch(self, small_dict):
        data = write_container(
            Container(0, small_dict.hash, 99, [], [small_dict.lookup_word(b"the")])
        )
        with pytest.raises(ContainerError, match="header declares"):
            decompress(data, small_dict)

    def test_padded_pair_inside_chain(self, small_dict):
        padded = 56500 + 63 * 1  # ('a', pad) as a start pair
        cont = 61000 + 63 * 2 + 3
        data = write_container(Container(0, small_dict.hash, 4, [], [padded, cont]))
        with pytest.raises(ContainerError, match="after padding"):
            decompress(data, small_dict)
