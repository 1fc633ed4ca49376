"""Pure-Python/numpy twins of the compiled kernels in ``_ckernels.pyx``."""
import numpy as np


def _mask(tags, words, p, template, a, b):
    if template == 0:
        return tags[p - 1] == a
    if template == 1:
        return tags[p + 1] == a
    if template == 2:
        return (tags[p - 1] == a) | (tags[p - 2] == a)
    if template == 3:
        return (tags[p - 1] == a) | (tags[p - 2] == a) | (tags[p - 3] == a)
    if template == 4:
        return (tags[p + 1] == a) | (tags[p + 2] == a)
    if template == 5:
        return (tags[p + 1] == a) | (tags[p + 2] == a) | (tags[p + 3] == a)
    if template == 6:
        return (tags[p - 2] == a) & (tags[p - 1] == b)
    if template == 7:
        return (tags[p + 1] == a) & (tags[p + 2] == b)
    if template == 8:
        return (tags[p - 1] == a) & (tags[p + 1] == b)
    if template == 9:
        return words[p - 1] == a
    if template == 10:
        return words[p + 1] == a
    if template == 11:
        return (words[p] == a) & (tags[p - 1] == b)
    if template == 12:
        return (words[p] == a) & (tags[p + 1] == b)
    return np.zeros(len(p), dtype=bool)


def context_keys(tags, words, positions, last, T, W):
    p = np.asarray(positions)
    f = tags[p].astype(np.int64)
    lst = last[p].astype(np.int64)
    t1, t2, t3 = tags[p - 1], tags[p - 2], tags[p - 3]
    u1, u2, u3 = tags[p + 1], tags[p + 2], tags[p + 3]
    w0, wl, wr = words[p], words[p - 1], words[p + 1]
    every = np.ones(len(p), dtype=bool)
    zero = np.zeros(len(p), dtype=np.int64)
    parts = [
        (0, t1, zero, every), (1, u1, zero, every),
        (2, t1, zero, every), (2, t2, zero, t2 != t1),
        (3, t1, zero, every), (3, t2, zero, t2 != t1), (3, t3, zero, (t3 != t1) & (t3 != t2)),
        (4, u1, zero, every), (4, u2, zero, u2 != u1),
        (5, u1, zero, every), (5, u2, zero, u2 != u1), (5, u3, zero, (u3 != u1) & (u3 != u2)),
        (6, t2, t1, every), (7, u1, u2, every), (8, t1, u1, every),
        (9, wl, zero, wl != 0), (10, wr, zero, wr != 0),
        (11, w0, t1, w0 != 0), (12, w0, u1, w0 != 0),
    ]
    out = []
    for tmpl, a, b, m in parts:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out.append(((((tmpl * T + f[m]) * W + a[m]) * W + b[m]) * T + lst[m]))
    return np.concatenate(out) if out else np.empty(0, dtype=np.int64)


def rule_counts(tags, gold, words, positions, template, a, b, to_tag):
    p = np.asarray(positions)
    hit = p[_mask(tags, words, p, template, a, b)]
    g = gold[hit]
    good = int(np.count_nonzero(g == to_tag))
    bad = int(np.count_nonzero((g != to_tag) & (g == tags[hit])))
    return good, bad


def rule_matches(tags, words, positions, template, a, b):
    p = np.asarray(positions)
    return p[_mask(tags, words, p, template, a, b)].astype(np.intp)


def viterbi2(cand, ncand, logemit, logtrans, boundary):
    n = cand.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.int32), 0.0
    bnd = np.array([boundary])
    cands = [cand[i, :ncand[i]] for i in range(n)]
    emits = [logemit[i, :ncand[i]] for i in range(n)]
    prev = np.zeros((1, 1))
    bps = []
    for i in range(n):
        hs = bnd if i < 2 else cands[i - 2]
        js = bnd if i < 1 else cands[i - 1]
        ks = cands[i]
        scores = prev[:, :, None] + logtrans[np.ix_(hs, js, ks)]
        # argmax keeps the first maximum: the smallest tag id
        bp = np.argmax(scores, axis=0)
        best = np.take_along_axis(scores, bp[None], axis=0)[0]
        prev = best + emits[i][None, :]
        bps.append(bp)
    flat = int(np.argmax(prev))
    best_j, best_k = divmod(flat, prev.shape[1])
    total = float(prev[best_j, best_k])
    path = np.empty(n, dtype=np.int32)
    for i in range(n - 1, -1, -1):
        path[i] = cands[i][best_k]
        if i == 0:
            break
        best_h = int(bps[i][best_j, best_k])
        best_k, best_j = best_j, best_h
    return path, total
