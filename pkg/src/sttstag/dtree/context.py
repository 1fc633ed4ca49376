"""Binary decision tree over preceding-tag contexts.

Samples are (context, tag) pairs, where ``context[p]`` is the tag id at
relative position ``-(p + 1)``. Every test node asks "is the tag at
position -(p+1) equal to t?". The tree is grown until no test has
positive gain, then pruned bottom-up: a test node whose children are both
leaves is merged back into a leaf when its gain is below the threshold.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gain import row_entropy

BOUNDARY = "STAART"  # name of the padding tag left of a sentence


@dataclass(frozen=True)
class Leaf:
    counts: tuple  # per tag id

    @property
    def n(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class Test:
    position: int
    tag: int
    gain: float  # information gain of the split, bits per sample
    yes: object
    no: object
    counts: tuple

    @property
    def n(self) -> int:
        return sum(self.counts)


def _best_split(ctx, counts, n_values):
    """(gain per sample, position, value) of the best test, or None."""
    total = counts.sum(axis=0)
    n = total.sum()
    h_parent = row_entropy(total[None, :])[0]
    best = None
    for p in range(ctx.shape[1]):
        yes = np.zeros((n_values, counts.shape[1]), dtype=np.int64)
        np.add.at(yes, ctx[:, p], counts)
        no = total[None, :] - yes
        ny = yes.sum(axis=1)
        valid = (ny > 0) & (ny < n)
        if not valid.any():
            continue
        gain = h_parent - (ny * row_entropy(yes) + (n - ny) * row_entropy(no)) / n
        gain[~valid] = -1.0
        v = int(np.argmax(gain))
        if best is None or gain[v] > best[0]:
            best = (float(gain[v]), p, v)
    return best


def grow(ctx: np.ndarray, counts: np.ndarray, n_values: int, eps: float = 1e-12):
    """Grow the full tree over aggregated samples.

    ``ctx`` is an (n, L) int array of distinct contexts and ``counts`` the
    (n, K) tag counts observed after each.
    """
    node_counts = tuple(int(c) for c in counts.sum(axis=0))
    best = _best_split(ctx, counts, n_values) if len(ctx) > 1 else None
    if best is None or best[0] <= eps:
        return Leaf(node_counts)
    gain, p, v = best
    m = ctx[:, p] == v
    return Test(p, v, gain, grow(ctx[m], counts[m], n_values, eps),
                grow(ctx[~m], counts[~m], n_values, eps), node_counts)


def split_score(node: Test, weighted: bool = True) -> float:
    """The value compared against the pruning threshold."""
    return node.gain * node.n if weighted else node.gain


def prune(node, threshold: float, weighted: bool = True):
    if isinstance(node, Leaf):
        return node
    yes = prune(node.yes, threshold, weighted)
    no = prune(node.no, threshold, weighted)
    if isinstance(yes, Leaf) and isinstance(no, Leaf) and split_score(node, weighted) < threshold:
        return Leaf(node.counts)
    return Test(node.position, node.tag, node.gain, yes, no, node.counts)


def lookup(node, context) -> Leaf:
    while isinstance(node, Test):
        node = node.yes if context[node.position] == node.tag else node.no
    return node


def iter_nodes(node):
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        if isinstance(n, Test):
            stack.append(n.no)
            stack.append(n.yes)


def count_nodes(node) -> int:
    return sum(1 for _ in iter_nodes(node))


def leaves(node) -> list:
    return [n for n in iter_nodes(node) if isinstance(n, Leaf)]


def to_json(node, names):
    if isinstance(node, Leaf):
        return {"counts": {names[i]: c for i, c in enumerate(node.counts) if c}}
    tag = names[node.tag] if node.tag < len(names) else BOUNDARY
    return {"position": node.position, "tag": tag, "gain": node.gain,
            "counts": {names[i]: c for i, c in enumerate(node.counts) if c},
            "yes": to_json(node.yes, names), "no": to_json(node.no, names)}


def from_json(obj, ids, n_tags):
    counts = [0] * n_tags
    for t, c in obj["counts"].items():
        counts[ids[t]] = c
    if "position" not in obj:
        return Leaf(tuple(counts))
    tag = n_tags if obj["tag"] == BOUNDARY else ids[obj["tag"]]
    return Test(obj["position"], tag, obj["gain"], from_json(obj["yes"], ids, n_tags),
                from_json(obj["no"], ids, n_tags), tuple(counts))
