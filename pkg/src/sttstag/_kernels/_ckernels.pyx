# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: trigram Viterbi and contextual-rule scoring.

Must stay behaviourally identical to ``_pykernels``.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport INFINITY

cnp.import_array()


cdef inline bint _match(const int[:] tags, const int[:] words, Py_ssize_t p,
                        int template, int a, int b) noexcept nogil:
    if template == 0:
        return tags[p - 1] == a
    elif template == 1:
        return tags[p + 1] == a
    elif template == 2:
        return tags[p - 1] == a or tags[p - 2] == a
    elif template == 3:
        return tags[p - 1] == a or tags[p - 2] == a or tags[p - 3] == a
    elif template == 4:
        return tags[p + 1] == a or tags[p + 2] == a
    elif template == 5:
        return tags[p + 1] == a or tags[p + 2] == a or tags[p + 3] == a
    elif template == 6:
        return tags[p - 2] == a and tags[p - 1] == b
    elif template == 7:
        return tags[p + 1] == a and tags[p + 2] == b
    elif template == 8:
        return tags[p - 1] == a and tags[p + 1] == b
    elif template == 9:
        return words[p - 1] == a
    elif template == 10:
        return words[p + 1] == a
    elif template == 11:
        return words[p] == a and tags[p - 1] == b
    elif template == 12:
        return words[p] == a and tags[p + 1] == b
    return False


cdef inline Py_ssize_t _emit(long long[:] out, Py_ssize_t k, long long tmpl, long long f,
                             long long a, long long b, long long last, long long T,
                             long long W) noexcept nogil:
    out[k] = (((tmpl * T + f) * W + a) * W + b) * T + last
    return k + 1


def context_keys(const int[:] tags, const int[:] words, const Py_ssize_t[:] positions,
                 const int[:] last, long long T, long long W):
    """Packed (template, from, a, b, last) keys of every contextual rule
    instance that matches at each position; one key per rule per site."""
    cdef Py_ssize_t i, p, k = 0, n = positions.shape[0]
    cdef long long f, l
    cdef int t1, t2, t3, u1, u2, u3, w
    out_arr = np.empty(n * 19, dtype=np.int64)
    cdef long long[:] out = out_arr
    with nogil:
        for i in range(n):
            p = positions[i]
            f = tags[p]
            l = last[p]
            t1 = tags[p - 1]; t2 = tags[p - 2]; t3 = tags[p - 3]
            u1 = tags[p + 1]; u2 = tags[p + 2]; u3 = tags[p + 3]
            k = _emit(out, k, 0, f, t1, 0, l, T, W)
            k = _emit(out, k, 1, f, u1, 0, l, T, W)
            k = _emit(out, k, 2, f, t1, 0, l, T, W)
            if t2 != t1:
                k = _emit(out, k, 2, f, t2, 0, l, T, W)
            k = _emit(out, k, 3, f, t1, 0, l, T, W)
            if t2 != t1:
                k = _emit(out, k, 3, f, t2, 0, l, T, W)
            if t3 != t1 and t3 != t2:
                k = _emit(out, k, 3, f, t3, 0, l, T, W)
            k = _emit(out, k, 4, f, u1, 0, l, T, W)
            if u2 != u1:
                k = _emit(out, k, 4, f, u2, 0, l, T, W)
            k = _emit(out, k, 5, f, u1, 0, l, T, W)
            if u2 != u1:
                k = _emit(out, k, 5, f, u2, 0, l, T, W)
            if u3 != u1 and u3 != u2:
                k = _emit(out, k, 5, f, u3, 0, l, T, W)
            k = _emit(out, k, 6, f, t2, t1, l, T, W)
            k = _emit(out, k, 7, f, u1, u2, l, T, W)
            k = _emit(out, k, 8, f, t1, u1, l, T, W)
            w = words[p - 1]
            if w != 0:
                k = _emit(out, k, 9, f, w, 0, l, T, W)
            w = words[p + 1]
            if w != 0:
                k = _emit(out, k, 10, f, w, 0, l, T, W)
            w = words[p]
            if w != 0:
                k = _emit(out, k, 11, f, w, t1, l, T, W)
                k = _emit(out, k, 12, f, w, u1, l, T, W)
    return out_arr[:k]


def rule_counts(const int[:] tags, const int[:] gold, const int[:] words,
                const Py_ssize_t[:] positions, int template, int a, int b, int to_tag):
    """(good, bad) for a contextual rule over ``positions`` (all tagged with
    the rule's from-tag)."""
    cdef Py_ssize_t i, p, n = positions.shape[0]
    cdef long good = 0, bad = 0
    cdef int g
    with nogil:
        for i in range(n):
            p = positions[i]
            if _match(tags, words, p, template, a, b):
                g = gold[p]
                if g == to_tag:
                    good += 1
                elif g == tags[p]:
                    bad += 1
    return good, bad


def rule_matches(const int[:] tags, const int[:] words, const Py_ssize_t[:] positions,
                 int template, int a, int b):
    cdef Py_ssize_t i, p, k = 0, n = positions.shape[0]
    out = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t[:] o = out
    with nogil:
        for i in range(n):
            p = positions[i]
            if _match(tags, words, p, template, a, b):
                o[k] = p
                k += 1
    return out[:k]


def viterbi2(const int[:, :] cand, const int[:] ncand, const double[:, :] logemit,
             const double[:, :, :] logtrans, int boundary):
    """Second-order Viterbi over candidate tag lists.

    ``logtrans[h, j, k]`` is log P(k | previous j, before that h); index
    ``boundary`` pads the left context. Candidate lists must be sorted by tag
    id; ties resolve to the smallest id. Returns (path, best log score).
    """
    cdef Py_ssize_t n = cand.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.int32), 0.0
    cdef Py_ssize_t M = max(cand.shape[1], 1)
    bp_arr = np.zeros((n, M, M), dtype=np.int32)
    prev_arr = np.full((M, M), -INFINITY)
    cur_arr = np.full((M, M), -INFINITY)
    cdef int[:, :, :] bp = bp_arr
    cdef double[:, :] prev = prev_arr
    cdef double[:, :] cur = cur_arr
    cdef double[:, :] tmp
    cdef Py_ssize_t i, hi, ji, ki, nh, nj, nk, best_h, best_j, best_k
    cdef int h, j, k
    cdef double s, best, total
    path_arr = np.empty(n, dtype=np.int32)
    cdef int[:] path = path_arr

    with nogil:
        prev[0, 0] = 0.0
        for i in range(n):
            nh = 1 if i < 2 else ncand[i - 2]
            nj = 1 if i < 1 else ncand[i - 1]
            nk = ncand[i]
            for ji in range(nj):
                j = boundary if i < 1 else cand[i - 1, ji]
                for ki in range(nk):
                    k = cand[i, ki]
                    best = -INFINITY
                    best_h = 0
                    for hi in range(nh):
                        h = boundary if i < 2 else cand[i - 2, hi]
                        s = prev[hi, ji] + logtrans[h, j, k]
                        if s > best:
                            best = s
                            best_h = hi
                    cur[ji, ki] = best + logemit[i, ki]
                    bp[i, ji, ki] = <int>best_h
            tmp = prev
            prev = cur
            cur = tmp

        nj = 1 if n < 2 else ncand[n - 2]
        nk = ncand[n - 1]
        total = -INFINITY
        best_j = 0
        best_k = 0
        for ji in range(nj):
            for ki in range(nk):
                if prev[ji, ki] > total:
                    total = prev[ji, ki]
                    best_j = ji
                    best_k = ki
        i = n - 1
        while True:
            path[i] = cand[i, best_k]
            if i == 0:
                break
            best_h = bp[i, best_j, best_k]
            best_k = best_j
            best_j = best_h
            i -= 1
    return path_arr, total
