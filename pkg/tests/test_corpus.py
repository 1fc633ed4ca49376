import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sttstag.corpus import (DEFAULT_TAGSET, Corpus, TaggedToken, is_digit_sequence,
                            is_ordinal_digits, load_bundled, parse_untagged, parse_vertical,
                            remap_cardnum, split_sentencewise, write_vertical)
from sttstag.errors import ParseError, TagsetError

TEXT = "der\tART\nHund\tNN\n.\t$.\n"


def test_tagset_has_stts_plus_cardnum():
    assert len(DEFAULT_TAGSET) == 55
    assert "CARD" in DEFAULT_TAGSET and "CARDNUM" in DEFAULT_TAGSET
    assert DEFAULT_TAGSET.punctuation == {"$,", "$.", "$("}


def test_parse_one_sentence():
    c = parse_vertical(TEXT)
    assert len(c) == 1 and c.n_tokens == 3
    assert c.sentences[0][1] == TaggedToken("Hund", "NN")


def test_parse_empty():
    assert len(parse_vertical("")) == 0


def test_parse_missing_tab_reports_line():
    with pytest.raises(ParseError) as info:
        parse_vertical("der\tART\nHund\n")
    assert info.value.lineno == 2


@pytest.mark.parametrize("text,line", [("\tNN\n", 1), ("der\tART\nHund\t\n", 2)])
def test_parse_empty_fields(text, line):
    with pytest.raises(ParseError) as info:
        parse_vertical(text)
    assert info.value.lineno == line


def test_unknown_tag_is_rejected_unless_disabled():
    with pytest.raises(TagsetError) as info:
        parse_vertical("Hund\tNOUN\n")
    assert info.value.tag == "NOUN"
    assert parse_vertical("Hund\tNOUN\n", tagset=None).n_tokens == 1


def test_trailing_blank_lines_and_crlf():
    c = parse_vertical("a\tNN\r\n\r\n\r\nb\tNE\n\n\n")
    assert [len(s) for s in c.sentences] == [1, 1]
    assert c.sentences[0][0].tag == "NN"


def test_write_vertical():
    assert write_vertical(parse_vertical(TEXT)) == TEXT
    assert write_vertical(Corpus()) == ""
    two = write_vertical(parse_vertical(TEXT + "\n" + TEXT))
    assert two.count("\n\n") == 1


form = st.text(st.characters(blacklist_categories=("Cc", "Cs", "Zl", "Zp")), min_size=1,
               max_size=6).filter(lambda s: s.strip() == s and s)
sentence = st.lists(st.tuples(form, st.sampled_from(sorted(DEFAULT_TAGSET.tags))), min_size=1, max_size=6)


@given(st.lists(sentence, max_size=5))
@settings(max_examples=200)
def test_roundtrip(sents):
    c = Corpus(tuple(tuple(TaggedToken(f, t) for f, t in s) for s in sents))
    assert parse_vertical(write_vertical(c)) == c


@given(st.integers(0, 60), st.integers(2, 12))
def test_split_partition(n, d):
    c = Corpus(tuple((TaggedToken(str(i), "CARD"),) for i in range(1, n + 1)))
    train, test = split_sentencewise(c, d)
    assert len(train) + len(test) == n
    assert len(test) == n // d
    assert [int(s[0].form) for s in test.sentences] == list(range(d, n + 1, d))


def test_split_examples():
    c = Corpus(tuple((TaggedToken(str(i), "CARD"),) for i in range(1, 17)))
    train, test = split_sentencewise(c, 8)
    assert [s[0].form for s in test.sentences] == ["8", "16"]
    assert len(train) == 14
    with pytest.raises(ValueError):
        split_sentencewise(c, 1)
    assert split_sentencewise(Corpus(), 8) == (Corpus(), Corpus())


@pytest.mark.parametrize("form,digit", [("2", True), ("100", True), ("3,5", True), ("12:30", True),
                                        ("1.000.000", True), ("3.", False), ("3,", False),
                                        ("hundert", False), ("2a", False), ("", False)])
def test_digit_pattern(form, digit):
    assert is_digit_sequence(form) == digit


def test_ordinal_pattern():
    assert is_ordinal_digits("42.")
    assert not is_ordinal_digits("42") and not is_ordinal_digits("4.2.")


def test_remap_cardnum():
    c = parse_vertical("100\tCARD\nhundert\tCARD\n3,5\tCARD\n100\tNN\n")
    assert [t.tag for t in remap_cardnum(c).tokens()] == ["CARDNUM", "CARD", "CARDNUM", "NN"]
    assert remap_cardnum(remap_cardnum(c)) == remap_cardnum(c)


def test_untagged_input():
    assert parse_untagged("a\nb\tNN\n\nc\n") == [["a", "b"], ["c"]]
    with pytest.raises(ParseError) as info:
        parse_untagged("a\nb\n\tNN\n")
    assert info.value.lineno == 3


def test_bundled_corpus():
    c = load_bundled()
    assert 19000 <= c.n_tokens <= 21000
    assert c.n_tokens == sum(len(s) for s in c.sentences)
