"""Entropy and information gain, in bits."""
from __future__ import annotations

from typing import Mapping

import numpy as np


def _counts(c) -> np.ndarray:
    if isinstance(c, Mapping):
        c = list(c.values())
    return np.asarray(c, dtype=float)


def entropy(counts) -> float:
    """Shannon entropy (bits) of a count vector or tag->count mapping; 0*log0 = 0."""
    c = _counts(counts)
    n = c.sum()
    if n <= 0:
        return 0.0
    p = c[c > 0] / n
    return float(max(0.0, -(p * np.log2(p)).sum()))


def info_gain(parent, yes, no) -> float:
    """H(parent) - n_yes/n H(yes) - n_no/n H(no).

    Mappings are aligned by key; missing keys count as 0.
    """
    if isinstance(parent, Mapping):
        keys = sorted(set(parent) | set(yes) | set(no))
        parent, yes, no = ([m.get(k, 0) for k in keys] for m in (parent, yes, no))
    p, y, n_ = _counts(parent), _counts(yes), _counts(no)
    total = p.sum()
    if total <= 0:
        raise ValueError("information gain of an empty node is undefined")
    if not np.allclose(y + n_, p):
        raise ValueError("yes and no counts must add up to the parent counts")
    g = entropy(p) - y.sum() / total * entropy(y) - n_.sum() / total * entropy(n_)
    return max(0.0, g)


def row_entropy(m: np.ndarray) -> np.ndarray:
    """Entropy (bits) of every row of a count matrix."""
    m = np.asarray(m, dtype=float)
    n = m.sum(axis=1, keepdims=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        p = np.where(n > 0, m / np.where(n > 0, n, 1), 0.0)
        logs = np.where(p > 0, np.log2(np.where(p > 0, p, 1)), 0.0)
    return np.maximum(0.0, -(p * logs).sum(axis=1))


def kl_divergence(p, q) -> float:
    """KL(p || q) in bits for probability vectors; q must cover p's support."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    m = p > 0
    return float(max(0.0, (p[m] * np.log2(p[m] / q[m])).sum()))
