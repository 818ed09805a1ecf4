from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from defs.errors import LexicalError
from defs.lexer import Kind, Scanner, classify_word, dump_tokens, get_line_col, scan_all
from defs.syntax import Pos


def kinds(source, ext=False):
    return [t.kind for t in scan_all(source, ext)]


# -- get_line_col ---------------------------------------------------------

def test_first_character():
    assert get_line_col(0, [0], 1) == (1, 0)


@pytest.mark.parametrize("offset, expected", [(7, (2, 2)), (4, (1, 4)), (5, (2, 0))])
def test_line_col_second_line(offset, expected):
    assert get_line_col(offset, [0, 5], 2) == expected


def test_offset_past_last_line_start():
    assert get_line_col(100, [0, 5], 2) == (2, 95)


# -- next_token -----------------------------------------------------------

def test_tilde_integer():
    (tok, eof) = scan_all("~12")
    assert (tok.kind, tok.value, tok.pos) == (Kind.NUM, -12, (1, 0))
    assert eof.kind is Kind.EOF


def test_all_digits_is_integer_not_float():
    tok = scan_all("123")[0]
    assert tok.kind is Kind.NUM and tok.value == 123


def test_float_with_tilde_exponent():
    tok = scan_all("1.5e~2")[0]
    assert tok.kind is Kind.FLOAT
    assert tok.value == float(Fraction(15, 10) * Fraction(1, 100))


@pytest.mark.parametrize(
    "text, value",
    [("1.", 1.0), (".5", 0.5), ("~.5", -0.5), ("1e3", 1000.0), ("1.e3", 1000.0), ("2E+2", 200.0), ("~0.0", -0.0)],
)
def test_float_shapes(text, value):
    (tok, _) = scan_all(text)
    assert tok.kind is Kind.FLOAT and tok.value == value


def test_incomplete_exponent_is_longest_valid_prefix():
    toks = scan_all("1e")
    assert [(t.kind, t.value) for t in toks[:2]] == [(Kind.NUM, 1), (Kind.ID, "e")]


def test_identifier():
    tok = scan_all("quux123")[0]
    assert (tok.kind, tok.value) == (Kind.ID, "quux123")


def test_bell_is_illegal():
    with pytest.raises(LexicalError) as info:
        scan_all("\x07")
    assert info.value.message == "Illegal symbol in input"
    assert info.value.pos == (1, 0)


@pytest.mark.parametrize("text", ["~", ".", "~a", "#", "é", "a_b"])
def test_illegal_symbols(text):
    with pytest.raises(LexicalError, match="Illegal symbol in input"):
        scan_all(text)


def test_bad_integer_reports_start_of_numeral():
    with pytest.raises(LexicalError) as info:
        scan_all("x=\n  99999999999999999999")
    assert info.value.message == "Bad integer"
    assert info.value.pos == (2, 2)


def test_integer_range_edges():
    assert scan_all("9223372036854775807")[0].value == 2**63 - 1
    assert scan_all("~9223372036854775808")[0].value == -(2**63)
    with pytest.raises(LexicalError, match="Bad integer"):
        scan_all("9223372036854775808")


def test_bad_float():
    with pytest.raises(LexicalError, match="Bad float"):
        scan_all("1e400")


def test_minus_is_separate_from_literal():
    toks = scan_all("b=-1.2")
    assert [t.kind for t in toks] == [Kind.ID, Kind.EQ, Kind.MINUS, Kind.FLOAT, Kind.EOF]
    assert toks[3].value == 1.2


def test_comment_and_newline_positions():
    toks = scan_all("a=10 \\ comment\n")
    assert [(t.kind, t.pos) for t in toks] == [
        (Kind.ID, (1, 0)),
        (Kind.EQ, (1, 1)),
        (Kind.NUM, (1, 2)),
        (Kind.EOF, (2, 0)),
    ]


def test_empty_input():
    assert [(t.kind, t.pos) for t in scan_all("")] == [(Kind.EOF, (1, 0))]


def test_form_feed_counts_as_line_break():
    toks = scan_all("a\x0cb")
    assert toks[1].pos == (2, 0)


def test_carriage_return_does_not_count_lines():
    toks = scan_all("a\r\nb\r\n")
    assert toks[1].pos == (2, 0)
    assert toks[-1].pos == (3, 0)


def test_comment_may_contain_non_ascii():
    src = "a=1 \\ коментар\nb=2".encode()
    assert kinds(src) == [Kind.ID, Kind.EQ, Kind.NUM, Kind.ID, Kind.EQ, Kind.NUM, Kind.EOF]


def test_operators():
    assert kinds("+-*/()=") == [
        Kind.PLUS, Kind.MINUS, Kind.TIMES, Kind.DIVIDE, Kind.LPAR, Kind.RPAR, Kind.EQ, Kind.EOF
    ]


# -- classify_word --------------------------------------------------------

@pytest.mark.parametrize(
    "word, kind",
    [("if", Kind.IF), ("then", Kind.THEN), ("else", Kind.ELSE), ("and", Kind.AND), ("or", Kind.OR), ("not", Kind.NOT)],
)
def test_keywords(word, kind):
    assert classify_word(word, Pos(1, 0)).kind is kind


def test_while_is_identifier_without_extension():
    tok = classify_word("while", Pos(1, 0), False)
    assert (tok.kind, tok.value) == (Kind.ID, "while")


@pytest.mark.parametrize("word, kind", [("while", Kind.WHILE), ("do", Kind.DO), ("end", Kind.END)])
def test_extension_keywords(word, kind):
    tok = classify_word(word, Pos(4, 1), True)
    assert (tok.kind, tok.pos, tok.value) == (kind, (4, 1), None)


def test_keywords_are_case_sensitive():
    assert classify_word("If", Pos(1, 0)).kind is Kind.ID


# -- scanner state --------------------------------------------------------

def test_line_starts_track_newlines():
    sc = Scanner(b"a\nbb\n\nc")
    list(sc)
    assert sc.line_starts == [0, 2, 5, 6]
    assert sc.current_line == len(sc.line_starts)


def test_token_dump_format():
    text = dump_tokens(scan_all("a=10 b=~2.5"))
    assert text.splitlines() == [
        "1:0\tID(a)",
        "1:1\tEQ",
        "1:2\tNUM(10)",
        "1:5\tID(b)",
        "1:6\tEQ",
        "1:7\tFLOAT(~2.5)",
        "1:11\tEOF",
    ]


# -- properties -----------------------------------------------------------

PIECES = {
    Kind.ID: st.from_regex(r"\A[a-zA-Z][a-zA-Z0-9]{0,5}\Z").filter(lambda s: s not in ("if", "then", "else", "and", "or", "not")),
    Kind.NUM: st.from_regex(r"\A~?[0-9]{1,10}\Z"),
    Kind.FLOAT: st.from_regex(r"\A~?(?:[0-9]{1,3}\.[0-9]{0,3}|\.[0-9]{1,3}|[0-9]{1,3}[eE][+~]?[0-9]{1,2})\Z"),
    Kind.PLUS: st.just("+"),
    Kind.EQ: st.just("="),
    Kind.LPAR: st.just("("),
    Kind.DIVIDE: st.just("/"),
}
SEPARATORS = st.sampled_from([" ", "\t", "\r", "\n", "\x0c", "  \\ note\n", "\n\n"])


@st.composite
def sources(draw):
    """(text, [(kind, lexeme)]) with every lexeme followed by a separator."""
    chosen = draw(st.lists(st.sampled_from(list(PIECES)), max_size=25))
    text, pieces = draw(SEPARATORS) if draw(st.booleans()) else "", []
    for k in chosen:
        lexeme = draw(PIECES[k])
        text += lexeme
        pieces.append((k, lexeme))
        text += draw(SEPARATORS)
    return text, pieces


@settings(max_examples=300, suppress_health_check=[HealthCheck.too_slow])
@given(sources())
def test_positions_round_trip(case):
    text, pieces = case
    sc = Scanner(text)
    toks = list(sc)
    assert [t.kind for t in toks] == [k for k, _ in pieces] + [Kind.EOF]
    raw = text.encode()
    for tok, (_, lexeme) in zip(toks, pieces):
        offset = sc.offset_of(tok.pos)
        assert sc.pos_at(offset) == tok.pos
        assert raw[offset:offset + len(lexeme)] == lexeme.encode()


@given(st.from_regex(r"\A~?[0-9]{1,25}\Z"))
def test_all_digit_numerals_never_float(text):
    try:
        toks = scan_all(text)
    except LexicalError as exc:
        assert exc.message == "Bad integer"
        return
    assert [t.kind for t in toks] == [Kind.NUM, Kind.EOF]


@settings(suppress_health_check=[HealthCheck.too_slow])
@given(sources(), st.text(alphabet=st.characters(blacklist_characters="\n"), max_size=20))
def test_comments_are_transparent(case, comment):
    text, _ = case
    plain = [(t.kind, t.value) for t in scan_all(text)]
    commented = text.replace("\n", "\\" + comment + "\n")
    assert [(t.kind, t.value) for t in scan_all(commented)] == plain


@given(sources())
def test_line_count(case):
    text, _ = case
    sc = Scanner(text)
    list(sc)
    assert len(sc.line_starts) == 1 + text.count("\n") + text.count("\x0c")


@given(sources())
def test_scanning_is_deterministic(case):
    text, _ = case
    assert scan_all(text) == scan_all(text)
