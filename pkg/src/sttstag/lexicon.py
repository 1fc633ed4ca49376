"""Fullform lexicon: word form -> ordered tag/frequency list.

Entries built from a corpus carry occurrence counts and are ordered by
descending count. Entries added from an external analyzer carry count 0
and are ordered by descending corpus-wide tag prior. Ties are broken by
tag name everywhere.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .corpus import DEFAULT_TAGSET, Corpus, Tagset
from .errors import ParseError, SttsTagError

CORPUS = "corpus"
EXTERNAL = "external"


@dataclass(frozen=True)
class LexiconEntry:
    form: str
    tags: tuple  # ((tag, count), ...)
    origin: str = CORPUS

    def __post_init__(self):
        if not self.tags:
            raise ValueError(f"lexicon entry for {self.form!r} has no tags")
        names = [t for t, _ in self.tags]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate tags in lexicon entry for {self.form!r}")

    @property
    def tagset(self) -> frozenset:
        return frozenset(t for t, _ in self.tags)

    @property
    def tag_names(self) -> tuple:
        return tuple(t for t, _ in self.tags)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.tags)

    def count(self, tag: str) -> int:
        for t, c in self.tags:
            if t == tag:
                return c
        return 0


def _by_count(counts: Mapping[str, int]) -> tuple:
    return tuple(sorted(counts.items(), key=lambda tc: (-tc[1], tc[0])))


def _by_prior(tags: Iterable[str], priors: "TagPriors") -> tuple:
    return tuple((t, 0) for t in sorted(set(tags), key=lambda t: (-priors.get(t), t)))


class Lexicon(Mapping):
    """Immutable mapping form -> LexiconEntry."""

    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        self._entries = {e.form: e for e in entries}

    def __getitem__(self, form):
        return self._entries[form]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __contains__(self, form):
        return form in self._entries

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"Lexicon({len(self)} entries)"

    def tags_of(self, form: str) -> tuple:
        e = self._entries.get(form)
        return e.tag_names if e else ()

    def all_tags(self) -> set:
        out = set()
        for e in self._entries.values():
            out.update(e.tag_names)
        return out


@dataclass(frozen=True)
class TagPriors:
    probabilities: Mapping[str, float]

    def get(self, tag: str) -> float:
        return self.probabilities.get(tag, 0.0)

    def __getitem__(self, tag):
        return self.probabilities[tag]

    def __contains__(self, tag):
        return tag in self.probabilities

    def __iter__(self):
        return iter(sorted(self.probabilities))


def build(corpus: Corpus) -> Lexicon:
    counts = defaultdict(Counter)
    for form, tag in corpus.tokens():
        counts[form][tag] += 1
    return Lexicon(LexiconEntry(form, _by_count(c)) for form, c in counts.items())


def ambiguity(lex: Lexicon, form: str) -> int:
    e = lex.get(form)
    return len(e.tags) if e is not None else 0


def most_frequent_tag(entry: LexiconEntry) -> str:
    return entry.tags[0][0]


def tag_priors(corpus: Corpus) -> TagPriors:
    counts = Counter(tag for _, tag in corpus.tokens())
    total = sum(counts.values())
    if not total:
        raise SttsTagError("tag priors are undefined for an empty corpus")
    return TagPriors({t: c / total for t, c in sorted(counts.items())})


def merge_external(lex: Lexicon, analyses: Mapping[str, Iterable[str]], priors: TagPriors,
                   tagset: Tagset | None = DEFAULT_TAGSET) -> Lexicon:
    """Return a new lexicon extended with external analyses.

    Forms with an empty analysis stay lexicon gaps. Forms already present
    in ``lex`` keep their entries.
    """
    new = dict(lex.items())
    for form, tags in analyses.items():
        tags = set(tags)
        if tagset is not None:
            for t in sorted(tags):
                tagset.check(t, f"analysis of {form!r}")
        if not tags or form in lex:
            continue
        new[form] = LexiconEntry(form, _by_prior(tags, priors), EXTERNAL)
    return Lexicon(new.values())


def add_corpus_counts(lex: Lexicon, corpus: Corpus, only_unknown: bool = True) -> Lexicon:
    """Add (form, tag) counts from ``corpus`` for forms absent from ``lex``.

    With ``only_unknown=False`` counts of corpus-derived entries are
    incremented too; external entries are never touched.
    """
    counts = defaultdict(Counter)
    for form, tag in corpus.tokens():
        counts[form][tag] += 1
    new = dict(lex.items())
    for form, c in counts.items():
        old = lex.get(form)
        if old is None:
            new[form] = LexiconEntry(form, _by_count(c))
        elif not only_unknown and old.origin == CORPUS:
            merged = Counter(dict(old.tags))
            merged.update(c)
            new[form] = LexiconEntry(form, _by_count(merged))
    return Lexicon(new.values())


def unknown_types(lex: Lexicon, sentences) -> list:
    """Distinct forms absent from ``lex``, in order of first occurrence."""
    seen = {}
    for sent in sentences:
        for form in sent:
            if form not in lex and form not in seen:
                seen[form] = None
    return list(seen)


# -- files -----------------------------------------------------------------

def write_lexicon(lex: Lexicon) -> str:
    lines = []
    for form in sorted(lex):
        e = lex[form]
        lines.append(form + "".join(f"\t{t} {c}" for t, c in e.tags))
    return "".join(line + "\n" for line in lines)


def parse_lexicon(text: str, tagset: Tagset | None = DEFAULT_TAGSET, source=None) -> Lexicon:
    entries = []
    for lineno, line in enumerate(text.split("\n"), 1):
        line = line.rstrip("\r")
        if not line:
            continue
        fields = line.split("\t")
        form, rest = fields[0], fields[1:]
        if not form or not rest:
            raise ParseError(lineno, "expected form<TAB>tag count...", source)
        tags = []
        for field in rest:
            parts = field.split(" ")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(lineno, f"malformed tag/count field {field!r}", source)
            if tagset is not None:
                tagset.check(parts[0], f"line {lineno}")
            tags.append((parts[0], int(parts[1])))
        counts = [c for _, c in tags]
        if all(c == 0 for c in counts):
            origin = EXTERNAL
        elif all(c > 0 for c in counts):
            origin = CORPUS
        else:
            raise ParseError(lineno, "mixed zero and non-zero counts", source)
        try:
            entries.append(LexiconEntry(form, tuple(tags), origin))
        except ValueError as exc:
            raise ParseError(lineno, str(exc), source) from None
    return Lexicon(entries)


def read_lexicon(path, tagset: Tagset | None = DEFAULT_TAGSET) -> Lexicon:
    with open(path, encoding="utf-8") as f:
        return parse_lexicon(f.read(), tagset, source=str(path))


def save_lexicon(lex: Lexicon, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(write_lexicon(lex))


def write_priors(priors: TagPriors) -> str:
    return "".join(f"{t}\t{priors[t]!r}\n" for t in priors)


def parse_priors(text: str, source=None) -> TagPriors:
    probs = {}
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line.strip():
            continue
        try:
            tag, p = line.split("\t")
            probs[tag] = float(p)
        except ValueError:
            raise ParseError(lineno, "expected tag<TAB>probability", source) from None
    return TagPriors(probs)
