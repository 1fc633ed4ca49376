"""Tagged corpora in the one-token-per-line vertical format.

A file holds ``form<TAB>tag`` lines, sentences separated by a blank line::

    der	ART
    Hund	NN
    .	$.

Corpora are immutable: sentences are tuples of :class:`TaggedToken`.
"""
from __future__ import annotations

import io
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, NamedTuple, Sequence

from .errors import ParseError, TagsetError

DIGIT_SEQUENCE = re.compile(r"[0-9]+(?:[.,:][0-9]+)*")
# "42." is the written form of an ordinal
ORDINAL_DIGITS = re.compile(r"[0-9]+\.")

PUNCTUATION_TAGS = frozenset({"$,", "$.", "$("})


def is_digit_sequence(form: str) -> bool:
    return DIGIT_SEQUENCE.fullmatch(form) is not None


def is_ordinal_digits(form: str) -> bool:
    return ORDINAL_DIGITS.fullmatch(form) is not None


@dataclass(frozen=True)
class Tagset:
    tags: frozenset
    punctuation: frozenset = PUNCTUATION_TAGS

    def __contains__(self, tag) -> bool:
        return tag in self.tags

    def __len__(self) -> int:
        return len(self.tags)

    def __iter__(self):
        return iter(sorted(self.tags))

    def check(self, tag: str, context: str = "") -> str:
        if tag not in self.tags:
            raise TagsetError(tag, context)
        return tag

    def with_tags(self, extra: Iterable[str]) -> "Tagset":
        return Tagset(self.tags | frozenset(extra), self.punctuation)


def parse_tagset(text: str) -> Tagset:
    tags = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if any(c.isspace() for c in line):
            raise ParseError(lineno, f"tag name contains whitespace: {line!r}")
        tags.add(line)
    return Tagset(frozenset(tags), PUNCTUATION_TAGS & frozenset(tags))


def load_tagset(path=None) -> Tagset:
    """Load a tagset file; ``None`` loads the bundled STTS + CARDNUM inventory."""
    if path is None:
        text = resources.files("sttstag.data").joinpath("stts.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    return parse_tagset(text)


DEFAULT_TAGSET = load_tagset()


class TaggedToken(NamedTuple):
    form: str
    tag: str


@dataclass(frozen=True)
class Corpus:
    sentences: tuple = ()
    _ntokens: int = field(default=-1, repr=False, compare=False)

    def __post_init__(self):
        sents = tuple(tuple(TaggedToken(*t) for t in s) for s in self.sentences)
        object.__setattr__(self, "sentences", sents)
        object.__setattr__(self, "_ntokens", sum(len(s) for s in sents))

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def __getitem__(self, i):
        return self.sentences[i]

    def __add__(self, other: "Corpus") -> "Corpus":
        return Corpus(self.sentences + other.sentences)

    @property
    def n_tokens(self) -> int:
        return self._ntokens

    def tokens(self):
        for sent in self.sentences:
            yield from sent

    def forms(self) -> list:
        """Sentences with the tags stripped (tagger input)."""
        return [[t.form for t in s] for s in self.sentences]

    def tags(self) -> list:
        return [[t.tag for t in s] for s in self.sentences]

    @classmethod
    def from_tags(cls, forms: Sequence[Sequence[str]], tags: Sequence[Sequence[str]]) -> "Corpus":
        if len(forms) != len(tags):
            raise ValueError("forms and tags differ in sentence count")
        sents = []
        for f, t in zip(forms, tags):
            if len(f) != len(t):
                raise ValueError("forms and tags differ in sentence length")
            sents.append(tuple(TaggedToken(a, b) for a, b in zip(f, t)))
        return cls(tuple(sents))


def parse_vertical(text, tagset: Tagset | None = DEFAULT_TAGSET, source=None) -> Corpus:
    """Parse vertical text (a string or text stream) into a Corpus.

    Pass ``tagset=None`` to skip tag validation.
    """
    if not isinstance(text, str):
        text = text.read()
    sentences = []
    current = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if not line.strip():
            if current:
                sentences.append(tuple(current))
                current = []
            continue
        if "\t" not in line:
            raise ParseError(lineno, "expected form<TAB>tag", source)
        form, tag = line.split("\t", 1)
        if not form:
            raise ParseError(lineno, "empty word form", source)
        tag = tag.strip()
        if not tag or "\t" in tag:
            raise ParseError(lineno, "empty or malformed tag", source)
        if tagset is not None and tag not in tagset:
            raise TagsetError(tag, f"line {lineno}")
        current.append(TaggedToken(form, tag))
    if current:
        sentences.append(tuple(current))
    return Corpus(tuple(sentences))


def write_vertical(corpus: Corpus) -> str:
    out = io.StringIO()
    for i, sent in enumerate(corpus.sentences):
        if i:
            out.write("\n")
        for form, tag in sent:
            out.write(f"{form}\t{tag}\n")
    return out.getvalue()


def read_corpus(path, tagset: Tagset | None = DEFAULT_TAGSET) -> Corpus:
    with open(path, encoding="utf-8") as f:
        return parse_vertical(f.read(), tagset, source=str(path))


def write_corpus(corpus: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(write_vertical(corpus))


def parse_untagged(text, source=None) -> list:
    """Tagger input: one form per line (anything after a tab is ignored)."""
    if not isinstance(text, str):
        text = text.read()
    sentences, current = [], []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        form = line.split("\t", 1)[0]
        if not form:
            raise ParseError(lineno, "empty word form", source)
        current.append(form)
    if current:
        sentences.append(current)
    return sentences


def split_sentencewise(corpus: Corpus, denominator: int = 8):
    """Round-robin split: sentences whose 1-based index is divisible by
    ``denominator`` go to the test part."""
    if denominator < 2:
        raise ValueError("denominator must be >= 2")
    train, test = [], []
    for i, sent in enumerate(corpus.sentences, 1):
        (test if i % denominator == 0 else train).append(sent)
    return Corpus(tuple(train)), Corpus(tuple(test))


def remap_cardnum(corpus: Corpus) -> Corpus:
    """Retag digit-sequence cardinals CARD -> CARDNUM."""
    return Corpus(tuple(
        tuple(TaggedToken(form, "CARDNUM") if tag == "CARD" and is_digit_sequence(form)
              else TaggedToken(form, tag) for form, tag in sent)
        for sent in corpus.sentences))


def bundled_corpus_path(name: str = "fr_synth.vrt"):
    return resources.files("sttstag.data").joinpath(name)


def load_bundled(name: str = "fr_synth.vrt", tagset: Tagset | None = DEFAULT_TAGSET) -> Corpus:
    return parse_vertical(bundled_corpus_path(name).read_text("utf-8"), tagset, source=name)
