"""Rule templates for the transformation-based tagger and their text format.

Lexical rules guess tags for unknown words from the form itself or an
adjacent frequent word. Contextual rules rewrite a tag given tags or
frequent words at most three tokens away. Both files are plain text, one
rule per line, and can be edited by hand.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..corpus import DEFAULT_TAGSET, Tagset
from ..errors import ParseError

WILDCARD = "*"
BOUNDARY = "STAART"  # tag/word outside the sentence
MAX_AFFIX = 4

LEXICAL_TEMPLATES = ("has-suffix", "has-prefix", "char-contains", "good-right-word", "good-left-word")

# name -> trigger kinds ("T" tag, "W" frequent word); index is the kernel id
CONTEXTUAL_TEMPLATES = {
    "prev-tag": "T",
    "next-tag": "T",
    "prev-1-or-2-tag": "T",
    "prev-1-or-2-or-3-tag": "T",
    "next-1-or-2-tag": "T",
    "next-1-or-2-or-3-tag": "T",
    "prev-bigram-tags": "TT",
    "next-bigram-tags": "TT",
    "surround-tags": "TT",
    "prev-word": "W",
    "next-word": "W",
    "current-word-and-prev-tag": "WT",
    "current-word-and-next-tag": "WT",
}
TEMPLATE_IDS = {name: i for i, name in enumerate(CONTEXTUAL_TEMPLATES)}
TEMPLATE_NAMES = list(CONTEXTUAL_TEMPLATES)
# furthest token a template inspects, as (left, right) offsets
TEMPLATE_REACH = {
    "prev-tag": (1, 0), "next-tag": (0, 1), "prev-1-or-2-tag": (2, 0),
    "prev-1-or-2-or-3-tag": (3, 0), "next-1-or-2-tag": (0, 2), "next-1-or-2-or-3-tag": (0, 3),
    "prev-bigram-tags": (2, 0), "next-bigram-tags": (0, 2), "surround-tags": (1, 1),
    "prev-word": (1, 0), "next-word": (0, 1),
    "current-word-and-prev-tag": (1, 0), "current-word-and-next-tag": (0, 1),
}


@dataclass(frozen=True)
class LexicalRule:
    template: str
    trigger: str
    from_tag: str
    to_tag: str
    score: int = 0

    def __post_init__(self):
        if self.template not in LEXICAL_TEMPLATES:
            raise ValueError(f"unknown lexical template {self.template!r}")
        if self.template in ("has-suffix", "has-prefix") and not 1 <= len(self.trigger) <= MAX_AFFIX:
            raise ValueError(f"affix trigger length must be 1..{MAX_AFFIX}: {self.trigger!r}")
        if self.template == "char-contains" and len(self.trigger) != 1:
            raise ValueError(f"char-contains needs a single character: {self.trigger!r}")

    def matches(self, form: str, tag: str, prev_word, next_word) -> bool:
        if self.from_tag != WILDCARD and tag != self.from_tag:
            return False
        t = self.template
        if t == "has-suffix":
            return len(form) > len(self.trigger) and form.endswith(self.trigger)
        if t == "has-prefix":
            return len(form) > len(self.trigger) and form.startswith(self.trigger)
        if t == "char-contains":
            return self.trigger in form
        if t == "good-right-word":
            return prev_word == self.trigger
        return next_word == self.trigger

    def to_line(self) -> str:
        return f"{self.template} {self.trigger} {self.from_tag} {self.to_tag} {self.score}"


@dataclass(frozen=True)
class ContextualRule:
    template: str
    triggers: tuple
    from_tag: str
    to_tag: str
    score: int = 0

    def __post_init__(self):
        kinds = CONTEXTUAL_TEMPLATES.get(self.template)
        if kinds is None:
            raise ValueError(f"unknown contextual template {self.template!r}")
        if len(self.triggers) != len(kinds):
            raise ValueError(f"{self.template} takes {len(kinds)} trigger(s)")

    @property
    def kinds(self) -> str:
        return CONTEXTUAL_TEMPLATES[self.template]

    def to_line(self) -> str:
        return " ".join((self.template, *self.triggers, self.from_tag, self.to_tag, str(self.score)))


def _check_tag(tag, tagset, lineno, source, allow=()):
    if tagset is not None and tag not in tagset and tag not in allow:
        raise ParseError(lineno, f"unknown tag {tag!r}", source)


def parse_lexical_rules(text: str, tagset: Tagset | None = DEFAULT_TAGSET, source=None) -> list:
    rules = []
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split(" ")
        if len(parts) != 5:
            raise ParseError(lineno, "expected: template trigger from to score", source)
        template, trigger, frm, to, score = parts
        _check_tag(frm, tagset, lineno, source, allow=(WILDCARD,))
        _check_tag(to, tagset, lineno, source)
        try:
            rules.append(LexicalRule(template, trigger, frm, to, int(score)))
        except ValueError as exc:
            raise ParseError(lineno, str(exc), source) from None
    return rules


def parse_contextual_rules(text: str, tagset: Tagset | None = DEFAULT_TAGSET, source=None) -> list:
    rules = []
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split(" ")
        kinds = CONTEXTUAL_TEMPLATES.get(parts[0])
        if kinds is None:
            raise ParseError(lineno, f"unknown contextual template {parts[0]!r}", source)
        if len(parts) != 4 + len(kinds):
            raise ParseError(lineno, f"{parts[0]} expects {len(kinds)} trigger(s)", source)
        triggers = tuple(parts[1:1 + len(kinds)])
        for kind, trig in zip(kinds, triggers):
            if kind == "T":
                _check_tag(trig, tagset, lineno, source, allow=(BOUNDARY,))
        frm, to, score = parts[-3:]
        _check_tag(frm, tagset, lineno, source)
        _check_tag(to, tagset, lineno, source)
        try:
            rules.append(ContextualRule(parts[0], triggers, frm, to, int(score)))
        except ValueError as exc:
            raise ParseError(lineno, str(exc), source) from None
    return rules


def write_rules(rules) -> str:
    return "".join(r.to_line() + "\n" for r in rules)
