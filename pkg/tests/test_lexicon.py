import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sttstag.corpus import Corpus, TaggedToken, parse_vertical
from sttstag.errors import ParseError, SttsTagError, TagsetError
from sttstag.lexicon import (CORPUS, EXTERNAL, Lexicon, LexiconEntry, TagPriors,
                             add_corpus_counts, ambiguity, build, merge_external,
                             most_frequent_tag, parse_lexicon, parse_priors, tag_priors,
                             unknown_types, write_lexicon, write_priors)


def corpus(pairs):
    return Corpus((tuple(TaggedToken(f, t) for f, t in pairs),))


DER_DAS = corpus([("der", "ART"), ("der", "ART"), ("das", "ART"), ("das", "PDS")])


def test_build():
    lex = build(DER_DAS)
    assert lex["der"].tags == (("ART", 2),)
    assert lex["das"].tags == (("ART", 1), ("PDS", 1))
    assert lex["das"].origin == CORPUS
    assert len(build(Corpus())) == 0


def test_ambiguity_and_most_frequent():
    lex = build(DER_DAS)
    assert ambiguity(lex, "das") == 2
    assert ambiguity(lex, "xyz") == 0
    assert most_frequent_tag(lex["das"]) == "ART"
    assert most_frequent_tag(lex["der"]) == "ART"


def test_priors():
    p = tag_priors(corpus([("a", "ART"), ("b", "ART"), ("c", "NN"), ("d", "NN")]))
    assert p.get("ART") == 0.5 and p.get("NN") == 0.5 and p.get("VVFIN") == 0.0
    assert tag_priors(corpus([("a", "NN")])).get("NN") == 1.0
    with pytest.raises(SttsTagError):
        tag_priors(Corpus())


PRIORS = TagPriors({"NN": 0.5, "VVFIN": 0.3, "NE": 0.2})


def test_merge_external():
    lex = build(DER_DAS)
    merged = merge_external(lex, {"Häuser": {"NN"}, "laufen": {"VVFIN", "NN"}, "xy": set()}, PRIORS)
    assert merged["Häuser"].tags == (("NN", 0),)
    assert merged["laufen"].tag_names == ("NN", "VVFIN")
    assert merged["laufen"].origin == EXTERNAL
    assert most_frequent_tag(merged["laufen"]) == "NN"
    assert "xy" not in merged
    assert merged["das"] == lex["das"]
    assert "Häuser" not in lex  # original untouched


def test_merge_external_rejects_unknown_tags():
    with pytest.raises(TagsetError) as info:
        merge_external(build(DER_DAS), {"x": {"NOUN"}}, PRIORS)
    assert info.value.tag == "NOUN"


def test_merge_keeps_existing_entries():
    lex = build(DER_DAS)
    merged = merge_external(lex, {"das": {"NN"}}, PRIORS)
    assert merged["das"] == lex["das"]


def test_tied_priors_break_by_name():
    merged = merge_external(Lexicon(), {"x": {"VVFIN", "ADJA"}}, TagPriors({"VVFIN": 0.1, "ADJA": 0.1}))
    assert merged["x"].tag_names == ("ADJA", "VVFIN")


def test_add_corpus_counts():
    lex = merge_external(build(DER_DAS), {"ext": {"NN"}}, PRIORS)
    extra = corpus([("neu", "NN"), ("der", "PDS"), ("ext", "NE")])
    only = add_corpus_counts(lex, extra)
    assert only["neu"].tags == (("NN", 1),)
    assert only["der"] == lex["der"] and only["ext"] == lex["ext"]
    every = add_corpus_counts(lex, extra, only_unknown=False)
    assert every["der"].tags == (("ART", 2), ("PDS", 1))
    assert every["ext"] == lex["ext"]


def test_unknown_types_in_first_occurrence_order():
    lex = build(DER_DAS)
    assert unknown_types(lex, [["b", "der", "a"], ["b", "c"]]) == ["b", "a", "c"]


def test_lexicon_file_roundtrip():
    lex = merge_external(build(DER_DAS), {"Häuser": {"NN", "NE"}}, PRIORS)
    text = write_lexicon(lex)
    assert "das\tART 1\tPDS 1\n" in text
    assert "Häuser\tNN 0\tNE 0\n" in text
    assert parse_lexicon(text) == lex


def test_lexicon_file_errors():
    with pytest.raises(ParseError) as info:
        parse_lexicon("a\tNN 1\nb\tNN 0\tNE 2\n")
    assert info.value.lineno == 2
    with pytest.raises(ParseError):
        parse_lexicon("a\tNN x\n")
    with pytest.raises(ParseError):
        parse_lexicon("a\n")


def test_priors_file_roundtrip():
    p = tag_priors(parse_vertical("a\tNN\nb\tNE\nc\tNN\n"))
    assert parse_priors(write_priors(p)).probabilities == p.probabilities


tags = st.sampled_from(["ART", "NN", "NE", "VVFIN", "ADJA", "PDS"])
forms = st.sampled_from(["a", "b", "c", "d", "e"])


@given(st.lists(st.lists(st.tuples(forms, tags), min_size=1, max_size=8), min_size=1, max_size=6))
def test_lexicon_properties(sents):
    c = Corpus(tuple(tuple(TaggedToken(f, t) for f, t in s) for s in sents))
    lex = build(c)
    assert sum(e.total for e in lex.values()) == c.n_tokens
    for e in lex.values():
        counts = [n for _, n in e.tags]
        assert all(n >= 1 for n in counts)
        assert e.tags == tuple(sorted(e.tags, key=lambda tc: (-tc[1], tc[0])))
    pri = tag_priors(c)
    assert math.isclose(sum(pri.probabilities.values()), 1.0, abs_tol=1e-9)
    assert build(c) == lex
    merged = merge_external(lex, {"zz": {"NN", "NE"}, "a": {"ADJA"}}, pri)
    for f in lex:
        assert ambiguity(merged, f) == ambiguity(lex, f)
    assert ambiguity(merged, "zz") >= 2


def test_entry_invariants():
    with pytest.raises(ValueError):
        LexiconEntry("x", ())
    with pytest.raises(ValueError):
        LexiconEntry("x", (("NN", 1), ("NN", 2)))
