"""Greedy error-driven learning of lexical and contextual rules.

Both learners repeat: score every candidate rule on the current tagging
as corrections minus miscorrections, keep the best one, apply it, and stop
once the best score falls below the threshold. Ties go to the rule that
sorts first (template order, then trigger/tag names).
"""
from __future__ import annotations

import logging
from collections import Counter, defaultdict

import numpy as np

from .. import _kernels
from ..corpus import Corpus
from ..lexicon import Lexicon, build
from .rules import (CONTEXTUAL_TEMPLATES, LEXICAL_TEMPLATES, MAX_AFFIX, TEMPLATE_NAMES,
                    WILDCARD, ContextualRule, LexicalRule)
from .tagger import (TblModel, TblParams, apply_contextual_flat, apply_lexical, initial_tag,
                     model_encoding)

log = logging.getLogger(__name__)

_LEX_ORDER = {t: i for i, t in enumerate(LEXICAL_TEMPLATES)}


def frequent_words(corpus: Corpus, n: int) -> tuple:
    """The ``n`` most frequent forms, most frequent first (ties by form)."""
    counts = Counter(form for form, _ in corpus.tokens())
    return tuple(w for w, _ in sorted(counts.items(), key=lambda wc: (-wc[1], wc[0]))[:n])


def _lexical_features(form, prev_w, next_w, frequent):
    feats = set()
    for k in range(1, min(MAX_AFFIX, len(form) - 1) + 1):
        feats.add(("has-suffix", form[-k:]))
        feats.add(("has-prefix", form[:k]))
    for c in form:
        if not c.isspace():
            feats.add(("char-contains", c))
    if prev_w is not None and prev_w in frequent:
        feats.add(("good-right-word", prev_w))
    if next_w is not None and next_w in frequent:
        feats.add(("good-left-word", next_w))
    return feats


def _lexical_key(feat, frm, to):
    template, trigger = feat
    return (_LEX_ORDER[template], len(trigger), trigger, frm == WILDCARD, frm, to)


def learn_lexical(train: Corpus, lex: Lexicon | None = None, threshold: int = 2,
                  bigram_restriction: int = 500, default_tag: str = "NN",
                  frequent=None, max_rules: int | None = None) -> list:
    """Learn unknown-word rules on simulated unknowns.

    Tokens of forms seen once in ``train`` (or missing from ``lex``) stand in
    for unknown words; they start out as ``default_tag``.
    """
    if frequent is None:
        frequent = frequent_words(train, bigram_restriction)
    frequent = {w for w in frequent if not any(c.isspace() for c in w)}
    counts = Counter(form for form, _ in train.tokens())

    gold, cur, feats = [], [], []
    for sent in train.sentences:
        for i, (form, tag) in enumerate(sent):
            if counts[form] != 1 and (lex is None or form in lex):
                continue
            prev_w = sent[i - 1].form if i > 0 else None
            next_w = sent[i + 1].form if i + 1 < len(sent) else None
            gold.append(tag)
            cur.append(default_tag)
            feats.append(_lexical_features(form, prev_w, next_w, frequent))

    index = defaultdict(list)
    for i, fs in enumerate(feats):
        for f in fs:
            index[f].append(i)

    rules = []
    while max_rules is None or len(rules) < max_rules:
        good = Counter()
        for i in range(len(gold)):
            if cur[i] != gold[i]:
                for f in feats[i]:
                    good[(f, cur[i], gold[i])] += 1
                    good[(f, WILDCARD, gold[i])] += 1
        ranked = sorted(good.items(), key=lambda kv: (-kv[1], _lexical_key(*kv[0])))
        best, best_net, best_key = None, None, None
        for (f, frm, to), g in ranked:
            if g < threshold or (best_net is not None and g < best_net):
                break
            bad = 0
            for i in index[f]:
                c = cur[i]
                if c == gold[i] and c != to and (frm == WILDCARD or c == frm):
                    bad += 1
            net = g - bad
            key = _lexical_key(f, frm, to)
            if best_net is None or net > best_net or (net == best_net and key < best_key):
                best, best_net, best_key = (f, frm, to), net, key
        if best is None or best_net < threshold:
            break
        (template, trigger), frm, to = best
        for i in index[(template, trigger)]:
            if frm == WILDCARD or cur[i] == frm:
                cur[i] = to
        rules.append(LexicalRule(template, trigger, frm, to, best_net))
        log.debug("lexical rule %d: %s", len(rules), rules[-1].to_line())
    return rules


def _decode(key, enc):
    T, W = enc.T, enc.W
    to = key % T
    key //= T
    b = key % W
    key //= W
    a = key % W
    key //= W
    frm = key % T
    tmpl = key // T
    return int(tmpl), int(frm), int(a), int(b), int(to)


def learn_contextual(train: Corpus, lex: Lexicon | None = None, threshold: int = 1,
                     bigram_restriction: int = 500, lexical_rules=(), default_tag: str = "NN",
                     frequent=None, max_rules: int | None = None) -> list:
    """Learn contextual rules on the whole training corpus, starting from
    the initial tagging followed by ``lexical_rules``."""
    if lex is None:
        lex = build(train)
    if frequent is None:
        frequent = frequent_words(train, bigram_restriction)
    sentences = train.forms()
    tags = initial_tag(sentences, lex, default_tag)
    tags = apply_lexical(sentences, tags, lexical_rules, lex)

    probe = TblModel(lex, tuple(lexical_rules), (), tuple(frequent),
                     TblParams(default_tag=default_tag))
    enc = model_encoding(probe, extra_tags={t for s in train.tags() for t in s})
    if enc.W >= 1 << 20:
        raise ValueError("too many trigger words for the packed candidate keys")
    cur, words, pos = enc.flatten(sentences, tags)
    gold, _, _ = enc.flatten(sentences, train.tags())
    zeros = np.zeros_like(cur)
    T = enc.T

    rules = []
    while max_rules is None or len(rules) < max_rules:
        right = cur[pos] == gold[pos]
        errors = pos[~right]
        if not len(errors):
            break
        gkeys, gcount = np.unique(_kernels.context_keys(cur, words, errors, gold, T, enc.W),
                                  return_counts=True)
        bkeys, bcount = np.unique(_kernels.context_keys(cur, words, pos[right], zeros, T, enc.W),
                                  return_counts=True)
        base = gkeys - gkeys % T
        bad = np.zeros(len(gkeys), dtype=np.int64)
        if len(bkeys):
            j = np.minimum(np.searchsorted(bkeys, base), len(bkeys) - 1)
            hit = bkeys[j] == base
            bad[hit] = bcount[j[hit]]
        net = gcount - bad
        top = int(net.max())
        if top < threshold:
            break
        # np.unique sorts keys ascending: the first maximum is the canonical pick
        key = int(gkeys[int(np.argmax(net))])
        tmpl, frm, a, b, to = _decode(key, enc)
        name = TEMPLATE_NAMES[tmpl]
        triggers = []
        for kind, v in zip(CONTEXTUAL_TEMPLATES[name], (a, b)):
            triggers.append(enc.tag_name(v) if kind == "T" else enc.words[v])
        rule = ContextualRule(name, tuple(triggers), enc.tags[frm], enc.tags[to], top)
        before = int(np.count_nonzero(right))
        apply_contextual_flat(cur, words, [rule], enc)
        gained = int(np.count_nonzero(cur[pos] == gold[pos])) - before
        if gained != top:
            raise AssertionError(f"rule {rule.to_line()} changed accuracy by {gained}, expected {top}")
        rules.append(rule)
        log.debug("contextual rule %d: %s", len(rules), rule.to_line())
    return rules


def train(corpus: Corpus, params: TblParams = TblParams(), lexicon: Lexicon | None = None,
          max_rules: int | None = None) -> TblModel:
    """Learn a full model: lexicon, frequent words, lexical then contextual rules."""
    lex = build(corpus) if lexicon is None else lexicon
    freq = frequent_words(corpus, params.bigram_restriction)
    lexical = learn_lexical(corpus, lex, params.lexical_threshold, params.bigram_restriction,
                            params.default_tag, freq, max_rules)
    log.info("learned %d lexical rules", len(lexical))
    contextual = learn_contextual(corpus, lex, params.contextual_threshold, params.bigram_restriction,
                                  lexical, params.default_tag, freq, max_rules)
    log.info("learned %d contextual rules", len(contextual))
    return TblModel(lex, tuple(lexical), tuple(contextual), freq, params)
