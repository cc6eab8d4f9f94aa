"""Lexical breakdown: splitting rules, contraction joining, losslessness."""

from hypothesis import given, settings
from hypothesis import strategies as st

from wordref.tokenizer import (
    NEWLINE,
    RAW,
    SPACES,
    SYMBOLS,
    TAB,
    WORD,
    Lexeme,
    lex,
    render,
)


def kinds(lexemes):
    return [lx.kind for lx in lexemes]


class TestSplitting:
    def test_two_words(self, small_dict):
        assert lex(b"in the", small_dict) == [
            Lexeme(WORD, b"in"),
            Lexeme(SPACES, count=1),
            Lexeme(WORD, b"the"),
        ]

    def test_sentence_boundary(self, small_dict):
        assert lex(b"end.\nNew", small_dict) == [
            Lexeme(WORD, b"end"),
            Lexeme(SYMBOLS, b"."),
            Lexeme(NEWLINE),
            Lexeme(WORD, b"New"),
        ]

    def test_symbol_groups_absorb_adjacent_spaces(self, small_dict):
        assert lex(b"end. New", small_dict) == [
            Lexeme(WORD, b"end"),
            Lexeme(SYMBOLS, b". "),
            Lexeme(WORD, b"New"),
        ]

    def test_pure_space_runs(self):
        assert lex(b"a   b") == [
            Lexeme(WORD, b"a"),
            Lexeme(SPACES, count=3),
            Lexeme(WORD, b"b"),
        ]

    def test_tab_and_raw_bytes(self):
        assert lex(b"a\tb\x00c\x80") == [
            Lexeme(WORD, b"a"),
            Lexeme(TAB),
            Lexeme(WORD, b"b"),
            Lexeme(RAW, b"\x00"),
            Lexeme(WORD, b"c"),
            Lexeme(RAW, b"\x80"),
        ]

    def test_crlf(self):
        assert kinds(lex(b"a\r\nb")) == [WORD, RAW, NEWLINE, WORD]

    def test_digits_are_word_bytes(self):
        assert lex(b"ab12 345") == [
            Lexeme(WORD, b"ab12"),
            Lexeme(SPACES, count=1),
            Lexeme(WORD, b"345"),
        ]

    def test_empty_input(self):
        assert lex(b"") == []


class TestContractions:
    def test_known_contraction_joins(self, small_dict):
        assert lex(b"isn't", small_dict) == [Lexeme(WORD, b"isn't")]

    def test_unknown_contraction_stays_split(self, small_dict):
        assert lex(b"can't", small_dict) == [
            Lexeme(WORD, b"can"),
            Lexeme(SYMBOLS, b"'"),
            Lexeme(WORD, b"t"),
        ]

    def test_no_join_without_dictionary(self):
        assert kinds(lex(b"isn't")) == [WORD, SYMBOLS, WORD]

    def test_no_join_across_wider_symbol_group(self, small_dict):
        # The apostrophe group here is "' " so the surface "isn' t" differs.
        assert kinds(lex(b"isn' t", small_dict)) == [WORD, SYMBOLS, WORD]

    def test_single_apostrophe_only(self, small_dict):
        # After a join the merged word is not extended again.
        lexemes = lex(b"isn't's", small_dict)
        assert lexemes[0] == Lexeme(WORD, b"isn't")
        assert kinds(lexemes) == [WORD, SYMBOLS, WORD]

    def test_hyphenated_words_stay_split(self, small_dict):
        assert kinds(lex(b"well-known", small_dict)) == [WORD, SYMBOLS, WORD]


class TestLosslessness:
    def test_examples(self):
        assert render([Lexeme(WORD, b"a")]) == b"a"
        assert render([Lexeme(SPACES, count=3)]) == b"   "

    @given(st.binary(max_size=300))
    @settings(max_examples=300, deadline=None)
    def test_render_inverts_lex(self, data):
        assert render(lex(data)) == data

    @given(
        st.lists(
            st.sampled_from(
                [b"the", b"isn't", b"x1", b" ", b"  ", b"\t", b"\n", b"\r\n",
                 b". ", b"...", b"?!", b"\x00", b"\xff", b"'", b"123"]
            ),
            max_size=40,
        )
    )
    @settings(max_examples=200, deadline=None)
    def test_render_inverts_lex_on_textlike_input(self, small_dict, parts):
        data = b"".join(parts)
        assert render(lex(data, small_dict)) == data

    @given(st.binary(max_size=300))
    @settings(max_examples=200, deadline=None)
    def test_maximality(self, data):
        lexemes = lex(data)
        for a, b in zip(lexemes, lexemes[1:]):
            assert not (a.kind == b.kind and a.kind in (WORD, SPACES, SYMBOLS))

    @given(st.binary(max_size=300))
    @settings(max_examples=200, deadline=None)
    def test_lexeme_shape_invariants(self, data):
        for lx in lex(data):
            if lx.kind == SPACES:
                assert lx.count >= 1
            elif lx.kind == SYMBOLS:
                assert lx.text.strip(b" ")  # never purely spaces
                assert not any(b in b"\t\n" for b in lx.text)
                assert not any(
                    0x30 <= b <= 0x39 or 0x41 <= b <= 0x5A or 0x61 <= b <= 0x7A
                    for b in lx.text
                )
            elif lx.kind == WORD:
                assert lx.text
            elif lx.kind == RAW:
                assert len(lx.text) == 1
