"""Decoding with the decision-tree tagger."""
from __future__ import annotations

import itertools
import math
import os

import numpy as np

from .. import _kernels
from ..corpus import Corpus
from .model import DTreeModel, emission_weight


def lattice(sentence, m: DTreeModel):
    """Per token: sorted candidate tag ids and their log emission weights."""
    out = []
    for form in sentence:
        names = m.candidates(form) or m.tags
        ids = [m.tag_id[t] for t in names]
        logs = []
        for t in names:
            w = emission_weight(m, form, t)
            logs.append(math.log(w) if w > 0 else -math.inf)
        out.append((ids, logs))
    return out


def _decode2(lat, m):
    n = len(lat)
    width = max(len(ids) for ids, _ in lat)
    cand = np.zeros((n, width), dtype=np.int32)
    ncand = np.zeros(n, dtype=np.int32)
    emit = np.full((n, width), -np.inf)
    for i, (ids, logs) in enumerate(lat):
        cand[i, :len(ids)] = ids
        ncand[i] = len(ids)
        emit[i, :len(ids)] = logs
    path, score = _kernels.viterbi2(cand, ncand, emit, m.log_transitions, m.boundary)
    return [int(t) for t in path], float(score)


def _decode_generic(lat, m):
    L = m.params.context_length
    trans_cache = {}

    def logtrans(state):
        row = trans_cache.get(state)
        if row is None:
            row = trans_cache[state] = np.log(m.transition(state))
        return row

    best = {(m.boundary,) * L: 0.0}
    back = []
    for ids, logs in lat:
        nxt, bp = {}, {}
        for state in sorted(best):
            row = logtrans(state)
            base = best[state]
            for k, e in zip(ids, logs):
                s = base + row[k] + e
                new = (k,) + state[:-1]
                if new not in nxt or s > nxt[new]:
                    nxt[new] = s
                    bp[new] = state
        back.append(bp)
        best = nxt
    state = max(sorted(best), key=lambda s: best[s])
    score = best[state]
    path = []
    for bp in reversed(back):
        path.append(state[0])
        state = bp[state]
    return path[::-1], score


def decode(sentence, m: DTreeModel):
    """Best tag-id path and its log score."""
    if not sentence:
        return [], 0.0
    lat = lattice(sentence, m)
    if m.params.context_length <= 2:
        return _decode2(lat, m)
    return _decode_generic(lat, m)


def viterbi(sentence, m: DTreeModel) -> list:
    path, _ = decode(list(sentence), m)
    return [m.tags[i] for i in path]


def path_score(sentence, tags, m: DTreeModel) -> float:
    """Log score of one tag sequence (for checking the decoder)."""
    L = m.params.context_length
    hist = [m.boundary] * L
    total = 0.0
    for form, tag in zip(sentence, tags):
        k = m.tag_id[tag]
        w = emission_weight(m, form, tag)
        total += math.log(m.transition(hist)[k]) + (math.log(w) if w > 0 else -math.inf)
        hist = [k] + hist[:-1]
    return total


def brute_force(sentence, m: DTreeModel):
    """Exhaustive argmax over all candidate paths; exponential, for tests."""
    options = [m.candidates(f) or m.tags for f in sentence]
    best, best_score = None, -math.inf
    for tags in itertools.product(*options):
        s = path_score(sentence, tags, m)
        if best is None or s > best_score:
            best, best_score = list(tags), s
    return best or [], best_score if best else 0.0


def tag_corpus(sentences, m: DTreeModel) -> Corpus:
    sentences = [list(s) for s in sentences]
    return Corpus.from_tags(sentences, [viterbi(s, m) for s in sentences])


def tag_parallel(sentences, m: DTreeModel, jobs: int = 1) -> Corpus:
    if jobs <= 1 or len(sentences) < 2 * jobs:
        return tag_corpus(sentences, m)
    from concurrent.futures import ProcessPoolExecutor
    size = -(-len(sentences) // jobs)
    chunks = [sentences[i:i + size] for i in range(0, len(sentences), size)]
    with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1)) as ex:
        parts = list(ex.map(tag_corpus, chunks, [m] * len(chunks)))
    out = Corpus()
    for p in parts:
        out = out + p
    return out
