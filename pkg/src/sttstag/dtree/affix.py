"""Suffix trie estimating tag distributions for unknown words.

The trie is keyed by reversed word endings (last character first) and
built from (word type, tag) pairs of the lexicon restricted to open-class
tags. Each node's distribution is its raw counts smoothed towards its
parent's distribution. A leaf is deleted when ``n * KL(leaf || parent)``
falls below the gain threshold; deletion repeats bottom-up.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .gain import kl_divergence

OPEN_CLASS = ("ADJA", "ADJD", "ADV", "CARD", "CARDNUM", "FM", "ITJ", "NE", "NN", "TRUNC",
              "VVFIN", "VVIMP", "VVINF", "VVIZU", "VVPP", "XY")
ROOT_LAMBDA = 0.1
PARENT_WEIGHT = 1.0


@dataclass
class AffixNode:
    counts: Counter
    children: dict = field(default_factory=dict)
    dist: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return sum(self.counts.values())


@dataclass
class AffixTree:
    root: AffixNode
    tags: tuple  # tags the distributions range over
    max_suffix: int = 5


def _insert(root, form, tag, max_suffix):
    root.counts[tag] += 1
    node = root
    for k in range(1, min(max_suffix, len(form) - 1) + 1):
        ch = form[-k]
        child = node.children.get(ch)
        if child is None:
            child = node.children[ch] = AffixNode(Counter())
        child.counts[tag] += 1
        node = child


def _smooth(node, parent_dist, tags):
    n = node.n
    if parent_dist is None:
        denom = n + ROOT_LAMBDA * len(tags)
        node.dist = {t: (node.counts[t] + ROOT_LAMBDA) / denom for t in tags}
    else:
        denom = n + PARENT_WEIGHT
        node.dist = {t: (node.counts[t] + PARENT_WEIGHT * parent_dist[t]) / denom for t in tags}
    for ch in sorted(node.children):
        _smooth(node.children[ch], node.dist, tags)


def leaf_gain(child: AffixNode, parent: AffixNode, tags) -> float:
    return child.n * kl_divergence([child.dist[t] for t in tags], [parent.dist[t] for t in tags])


def _prune(node, threshold, tags):
    for ch in sorted(node.children):
        child = node.children[ch]
        _prune(child, threshold, tags)
        if not child.children and leaf_gain(child, node, tags) < threshold:
            del node.children[ch]


def build_affix_tree(samples, gain_threshold: float = 1.2, max_suffix: int = 5,
                     tags=OPEN_CLASS) -> AffixTree:
    """``samples``: iterable of (form, tag); tags outside ``tags`` are skipped."""
    tags = tuple(sorted(tags))
    allowed = set(tags)
    root = AffixNode(Counter())
    for form, tag in samples:
        if tag in allowed:
            _insert(root, form, tag, max_suffix)
    _smooth(root, None, tags)
    _prune(root, gain_threshold, tags)
    return AffixTree(root, tags, max_suffix)


def affix_node(tree: AffixTree, form: str) -> AffixNode:
    node = tree.root
    for k in range(1, min(tree.max_suffix, len(form) - 1) + 1):
        child = node.children.get(form[-k])
        if child is None:
            break
        node = child
    return node


def affix_lookup(tree: AffixTree, form: str) -> dict:
    """Distribution at the deepest node matching the ending of ``form``."""
    return affix_node(tree, form).dist


def count_nodes(tree: AffixTree) -> int:
    stack, n = [tree.root], 0
    while stack:
        node = stack.pop()
        n += 1
        stack.extend(node.children.values())
    return n


def to_json(node: AffixNode):
    out = {"counts": dict(sorted(node.counts.items()))}
    if node.children:
        out["children"] = {ch: to_json(node.children[ch]) for ch in sorted(node.children)}
    return out


def from_json(obj, tags, max_suffix) -> AffixTree:
    def rebuild(o):
        node = AffixNode(Counter(o["counts"]))
        for ch, c in o.get("children", {}).items():
            node.children[ch] = rebuild(c)
        return node
    root = rebuild(obj)
    tags = tuple(tags)
    _smooth(root, None, tags)
    return AffixTree(root, tags, max_suffix)
