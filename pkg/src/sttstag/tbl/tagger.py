"""Applying a trained transformation-based model."""
from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .. import _kernels
from ..corpus import DEFAULT_TAGSET, Corpus
from ..errors import ModelError
from ..lexicon import Lexicon, most_frequent_tag, read_lexicon, save_lexicon
from .rules import (BOUNDARY, TEMPLATE_IDS, parse_contextual_rules, parse_lexical_rules,
                    write_rules)

PAD = 3  # boundary tokens around each sentence; covers the widest template


@dataclass(frozen=True)
class TblParams:
    lexical_threshold: int = 2
    contextual_threshold: int = 1
    bigram_restriction: int = 500
    default_tag: str = "NN"

    def __post_init__(self):
        if self.lexical_threshold < 1 or self.contextual_threshold < 1:
            raise ValueError("rule thresholds must be >= 1")
        if self.bigram_restriction < 0:
            raise ValueError("bigram_restriction must be >= 0")


@dataclass(frozen=True)
class TblModel:
    lexicon: Lexicon
    lexical_rules: tuple = ()
    contextual_rules: tuple = ()
    frequent_words: tuple = ()
    params: TblParams = field(default_factory=TblParams)

    def with_lexicon(self, lexicon: Lexicon) -> "TblModel":
        """The same rules over a different lexicon; no retraining involved."""
        return replace(self, lexicon=lexicon)


class Encoding:
    """Integer ids for tags and trigger words.

    Ids follow name order, so comparing ids compares names. The boundary
    tag gets the last id; word id 0 means "not a trigger word".
    """

    def __init__(self, tags, words=()):
        self.tags = sorted(set(tags))
        self.tag_id = {t: i for i, t in enumerate(self.tags)}
        self.boundary = len(self.tags)
        # whitespace cannot be written into a rule file
        self.words = [None] + sorted({w for w in words if not any(c.isspace() for c in w)})
        self.word_id = {w: i for i, w in enumerate(self.words) if i}
        self.T = len(self.tags) + 1
        self.W = max(self.T, len(self.words))

    def tag_name(self, i: int) -> str:
        return BOUNDARY if i == self.boundary else self.tags[i]

    def tag_code(self, name: str) -> int:
        return self.boundary if name == BOUNDARY else self.tag_id[name]

    def flatten(self, sentences, tags):
        """Concatenate sentences with PAD boundary tokens on each side.

        Returns (tag array, word array, positions of real tokens).
        """
        total = PAD + sum(len(s) + PAD for s in sentences)
        t = np.full(total, self.boundary, dtype=np.int32)
        w = np.zeros(total, dtype=np.int32)
        pos = np.empty(total - PAD * (len(sentences) + 1), dtype=np.intp)
        i, k = PAD, 0
        wid, tid = self.word_id, self.tag_id
        for forms, stags in zip(sentences, tags):
            for form, tag in zip(forms, stags):
                t[i] = tid[tag]
                w[i] = wid.get(form, 0)
                pos[k] = i
                i += 1
                k += 1
            i += PAD
        return t, w, pos

    def unflatten(self, arr, pos, sentences) -> list:
        names = [self.tags[i] for i in arr[pos]]
        out, k = [], 0
        for s in sentences:
            out.append(names[k:k + len(s)])
            k += len(s)
        return out


def model_encoding(model: TblModel, extra_tags=()) -> Encoding:
    tags = set(DEFAULT_TAGSET.tags) | model.lexicon.all_tags() | set(extra_tags) | {model.params.default_tag}
    words = set(model.frequent_words)
    for r in model.lexical_rules:
        tags.update((r.to_tag,) if r.from_tag == "*" else (r.from_tag, r.to_tag))
    for r in model.contextual_rules:
        tags.update((r.from_tag, r.to_tag))
        for kind, trig in zip(r.kinds, r.triggers):
            if kind == "T" and trig != BOUNDARY:
                tags.add(trig)
            elif kind == "W":
                words.add(trig)
    return Encoding(tags, words)


def initial_tag(sentences, lex: Lexicon, default_tag: str = "NN") -> list:
    """Most frequent lexicon tag for known forms, ``default_tag`` otherwise."""
    out = []
    for sent in sentences:
        tags = []
        for form in sent:
            e = lex.get(form)
            tags.append(most_frequent_tag(e) if e is not None else default_tag)
        out.append(tags)
    return out


def apply_lexical(sentences, tags, rules, lex: Lexicon) -> list:
    """Run lexical rules, in order, over the tokens whose form is not in ``lex``."""
    out = []
    for forms, stags in zip(sentences, tags):
        stags = list(stags)
        n = len(forms)
        for i, form in enumerate(forms):
            if form in lex:
                continue
            prev_w = forms[i - 1] if i > 0 else None
            next_w = forms[i + 1] if i + 1 < n else None
            tag = stags[i]
            for r in rules:
                if r.matches(form, tag, prev_w, next_w):
                    tag = r.to_tag
            stags[i] = tag
        out.append(stags)
    return out


def apply_contextual_flat(cur, words, rules, enc: Encoding) -> None:
    """Apply rules in order to a flattened tag array, in place. Each rule
    sees the tags as they were at the start of its pass."""
    for r in rules:
        trig = []
        for kind, t in zip(r.kinds, r.triggers):
            if kind == "T":
                trig.append(enc.tag_code(t))
            else:
                trig.append(enc.word_id.get(t, -1))
        a = trig[0]
        b = trig[1] if len(trig) > 1 else 0
        frm = enc.tag_id[r.from_tag]
        positions = np.flatnonzero(cur == frm)
        if not len(positions):
            continue
        hit = _kernels.rule_matches(cur, words, positions, TEMPLATE_IDS[r.template], a, b)
        cur[hit] = enc.tag_id[r.to_tag]


def tag_corpus(sentences, model: TblModel) -> Corpus:
    """Tag a list of untagged sentences (lists of forms)."""
    sentences = [list(s) for s in sentences]
    tags = initial_tag(sentences, model.lexicon, model.params.default_tag)
    tags = apply_lexical(sentences, tags, model.lexical_rules, model.lexicon)
    if model.contextual_rules and sentences:
        enc = model_encoding(model)
        cur, words, pos = enc.flatten(sentences, tags)
        apply_contextual_flat(cur, words, model.contextual_rules, enc)
        tags = enc.unflatten(cur, pos, sentences)
    return Corpus.from_tags(sentences, tags)


def tag(sentence, model: TblModel):
    return tag_corpus([sentence], model).sentences[0]


# -- persistence -------------------------------------------------------------

FILES = ("lexicon.lex", "lexical.rules", "contextual.rules", "frequent.txt", "params.conf")


def save_model(model: TblModel, directory) -> None:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    save_lexicon(model.lexicon, d / "lexicon.lex")
    for name, rules in (("lexical.rules", model.lexical_rules), ("contextual.rules", model.contextual_rules)):
        with open(d / name, "w", encoding="utf-8", newline="\n") as f:
            f.write(write_rules(rules))
    with open(d / "frequent.txt", "w", encoding="utf-8", newline="\n") as f:
        f.write("".join(w + "\n" for w in model.frequent_words))
    p = model.params
    with open(d / "params.conf", "w", encoding="utf-8", newline="\n") as f:
        f.write(f"lexical_threshold={p.lexical_threshold}\n"
                f"contextual_threshold={p.contextual_threshold}\n"
                f"bigram_restriction={p.bigram_restriction}\n"
                f"default_tag={p.default_tag}\n")


def load_model(directory, lexicon: Lexicon | None = None, tagset=DEFAULT_TAGSET) -> TblModel:
    """Load a model directory; ``lexicon`` replaces the stored lexicon."""
    d = Path(directory)
    missing = [n for n in FILES if not (d / n).exists()]
    if missing:
        raise ModelError(f"{d}: missing model file(s): {', '.join(missing)}")

    def read(name):
        with open(d / name, encoding="utf-8") as f:
            return f.read()

    conf = {}
    for line in read("params.conf").splitlines():
        if line.strip():
            k, _, v = line.partition("=")
            conf[k.strip()] = v.strip()
    params = TblParams(int(conf.get("lexical_threshold", 2)), int(conf.get("contextual_threshold", 1)),
                       int(conf.get("bigram_restriction", 500)), conf.get("default_tag", "NN"))
    if lexicon is None:
        lexicon = read_lexicon(d / "lexicon.lex", tagset)
    freq = read("frequent.txt")
    return TblModel(
        lexicon=lexicon,
        lexical_rules=tuple(parse_lexical_rules(read("lexical.rules"), tagset, str(d / "lexical.rules"))),
        contextual_rules=tuple(parse_contextual_rules(read("contextual.rules"), tagset,
                                                      str(d / "contextual.rules"))),
        frequent_words=tuple(w for w in freq.split("\n") if w),
        params=params,
    )


def tag_parallel(sentences, model: TblModel, jobs: int = 1) -> Corpus:
    if jobs <= 1 or len(sentences) < 2 * jobs:
        return tag_corpus(sentences, model)
    from concurrent.futures import ProcessPoolExecutor
    size = -(-len(sentences) // jobs)
    chunks = [sentences[i:i + size] for i in range(0, len(sentences), size)]
    with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1)) as ex:
        parts = list(ex.map(tag_corpus, chunks, [model] * len(chunks)))
    out = Corpus()
    for p in parts:
        out = out + p
    return out
