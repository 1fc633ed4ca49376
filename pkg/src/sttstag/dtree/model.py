"""Training, probabilities and persistence of the decision-tree tagger."""
from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from ..corpus import DEFAULT_TAGSET, Corpus, Tagset
from ..errors import ModelError, SttsTagError
from ..lexicon import Lexicon, build, parse_lexicon, write_lexicon
from . import affix as _affix
from . import context as _context

FORMAT_VERSION = 1
LEAF_LAMBDA = 0.1   # add-lambda for context-tree leaves
PRIOR_LAMBDA = 0.1  # add-lambda for tag priors


@dataclass(frozen=True)
class DTreeParams:
    context_length: int = 2
    min_gain: float = 0.7
    eq_class_weight: float = 0.15
    affix_gain: float = 1.2
    max_suffix: int = 5
    weighted_gain: bool = True  # compare n * gain (bits) against min_gain

    def __post_init__(self):
        if self.context_length < 1:
            raise ValueError("context_length must be >= 1")
        if self.min_gain < 0 or self.affix_gain < 0:
            raise ValueError("gain thresholds must be >= 0")
        if not 0.0 <= self.eq_class_weight <= 1.0:
            raise ValueError("eq_class_weight must be in [0, 1]")
        if self.max_suffix < 0:
            raise ValueError("max_suffix must be >= 0")


@dataclass(frozen=True, eq=False)
class DTreeModel:
    params: DTreeParams
    tags: tuple            # sorted tag names; id = index, boundary id = len(tags)
    context_tree: object
    affix_tree: _affix.AffixTree
    lexicon: Lexicon
    tag_counts: dict = field(default_factory=dict)

    @property
    def boundary(self) -> int:
        return len(self.tags)

    @cached_property
    def tag_id(self) -> dict:
        return {t: i for i, t in enumerate(self.tags)}

    @cached_property
    def priors(self) -> dict:
        n = sum(self.tag_counts.values())
        denom = n + PRIOR_LAMBDA * len(self.tags)
        return {t: (self.tag_counts.get(t, 0) + PRIOR_LAMBDA) / denom for t in self.tags}

    @cached_property
    def class_distributions(self) -> dict:
        return ambiguity_class_distributions(self.lexicon)

    @cached_property
    def log_transitions(self) -> np.ndarray:
        """Dense log P(t | t-1, t-2) indexed [t-2, t-1, t] (boundary id = K).

        Only meaningful for context_length <= 2.
        """
        K = len(self.tags)
        table = np.empty((K + 1, K + 1, K))
        cache = {}
        for h in range(K + 1):
            for j in range(K + 1):
                leaf = _context.lookup(self.context_tree, (j, h))
                row = cache.get(id(leaf))
                if row is None:
                    row = cache[id(leaf)] = np.log(leaf_distribution(leaf))
                table[h, j] = row
        return table

    def transition(self, context) -> np.ndarray:
        """Distribution over tag ids given preceding tag ids (most recent first)."""
        return leaf_distribution(_context.lookup(self.context_tree, tuple(context)))

    def candidates(self, form: str) -> tuple:
        e = self.lexicon.get(form)
        if e is not None:
            return tuple(sorted(t for t in e.tag_names if t in self.tag_id))
        dist = _affix.affix_lookup(self.affix_tree, form)
        return tuple(t for t in sorted(dist) if dist[t] > 0 and t in self.tag_id)


def leaf_distribution(leaf) -> np.ndarray:
    c = np.asarray(leaf.counts, dtype=float)
    return (c + LEAF_LAMBDA) / (c.sum() + LEAF_LAMBDA * len(c))


def ambiguity_class_distributions(lex: Lexicon) -> dict:
    """Pooled tag distribution of every ambiguity class (set of lexicon tags)
    over corpus-derived entries."""
    pooled = defaultdict(Counter)
    for e in lex.values():
        if e.total:
            pooled[e.tagset].update(dict(e.tags))
    out = {}
    for cls, c in pooled.items():
        n = sum(c.values())
        out[cls] = {t: c[t] / n for t in sorted(cls)}
    return out


def conditional(m: DTreeModel, form: str) -> dict:
    """Smoothed P(t | form) for a known form: lexical estimate interpolated
    with its ambiguity class."""
    e = m.lexicon[form]
    w = m.params.eq_class_weight
    if e.total:
        p_lex = {t: c / e.total for t, c in e.tags}
    else:
        p_lex = _normalized_priors(m, e.tag_names)
    p_cls = m.class_distributions.get(e.tagset) or _normalized_priors(m, e.tag_names)
    return {t: (1 - w) * p_lex[t] + w * p_cls[t] for t in e.tag_names}


def _normalized_priors(m, tags):
    z = sum(m.priors.get(t, 0.0) for t in tags)
    if z <= 0:
        return {t: 1.0 / len(tags) for t in tags}
    return {t: m.priors.get(t, 0.0) / z for t in tags}


def emission_weight(m: DTreeModel, form: str, tag: str) -> float:
    """Generative weight proportional to P(form | tag)."""
    prior = m.priors.get(tag, 0.0)
    if prior <= 0:
        raise ModelError(f"tag {tag!r} has zero prior probability")
    if form in m.lexicon:
        p = conditional(m, form).get(tag, 0.0)
    else:
        p = _affix.affix_lookup(m.affix_tree, form).get(tag, 0.0)
    return p / prior


# -- training ------------------------------------------------------------------

def context_samples(corpus: Corpus, tag_id: dict, length: int, boundary: int):
    """Aggregate (preceding tags, tag) samples: returns (contexts, counts)."""
    agg = defaultdict(Counter)
    for sent in corpus.sentences:
        hist = [boundary] * length
        for _, tag in sent:
            t = tag_id[tag]
            agg[tuple(hist)][t] += 1
            hist = [t] + hist[:-1]
    keys = sorted(agg)
    ctx = np.array(keys, dtype=np.int64).reshape(len(keys), length)
    counts = np.zeros((len(keys), len(tag_id)), dtype=np.int64)
    for i, k in enumerate(keys):
        for t, c in agg[k].items():
            counts[i, t] = c
    return ctx, counts


def affix_samples(lex: Lexicon):
    for form in sorted(lex):
        for tag in lex[form].tag_names:
            yield form, tag


def model_tags(corpus: Corpus, lex: Lexicon, tagset: Tagset | None) -> tuple:
    tags = set(tagset.tags) if tagset is not None else set()
    tags.update(t for _, t in corpus.tokens())
    tags.update(lex.all_tags())
    return tuple(sorted(tags))


def train(corpus: Corpus, lex: Lexicon | None = None, params: DTreeParams = DTreeParams(),
          tagset: Tagset | None = DEFAULT_TAGSET) -> DTreeModel:
    """Train on ``corpus``. ``lex`` defaults to the corpus lexicon; pass an
    extended lexicon to retrain after adding external entries."""
    if not corpus.n_tokens:
        raise SttsTagError("cannot train on an empty corpus")
    if lex is None:
        lex = build(corpus)
    tags = model_tags(corpus, lex, tagset)
    tag_id = {t: i for i, t in enumerate(tags)}
    ctx, counts = context_samples(corpus, tag_id, params.context_length, len(tags))
    tree = _context.grow(ctx, counts, len(tags) + 1)
    tree = _context.prune(tree, params.min_gain, params.weighted_gain)
    open_tags = [t for t in _affix.OPEN_CLASS if t in tag_id]
    atree = _affix.build_affix_tree(affix_samples(lex), params.affix_gain, params.max_suffix,
                                    open_tags or tags)
    tag_counts = dict(sorted(Counter(t for _, t in corpus.tokens()).items()))
    return DTreeModel(params, tags, tree, atree, lex, tag_counts)


# -- persistence ---------------------------------------------------------------

def dumps(m: DTreeModel) -> str:
    obj = {
        "format": "sttstag-dtree",
        "version": FORMAT_VERSION,
        "params": asdict(m.params),
        "tags": list(m.tags),
        "tag_counts": m.tag_counts,
        "context_tree": _context.to_json(m.context_tree, m.tags),
        "affix_tags": list(m.affix_tree.tags),
        "affix_tree": _affix.to_json(m.affix_tree.root),
        "lexicon": write_lexicon(m.lexicon),
    }
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=1) + "\n"


def loads(text: str, source=None) -> DTreeModel:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"{source or 'model'}: not a model file ({exc})") from None
    if not isinstance(obj, dict) or obj.get("format") != "sttstag-dtree":
        raise ModelError(f"{source or 'model'}: not a decision-tree model file")
    if obj.get("version") != FORMAT_VERSION:
        raise ModelError(f"{source or 'model'}: unsupported model version {obj.get('version')}")
    try:
        params = DTreeParams(**obj["params"])
        tags = tuple(obj["tags"])
        ids = {t: i for i, t in enumerate(tags)}
        tree = _context.from_json(obj["context_tree"], ids, len(tags))
        atree = _affix.from_json(obj["affix_tree"], obj["affix_tags"], params.max_suffix)
        lex = parse_lexicon(obj["lexicon"], None, source)
        return DTreeModel(params, tags, tree, atree, lex, dict(obj["tag_counts"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelError(f"{source or 'model'}: corrupt model file ({exc})") from None


def save_model(m: DTreeModel, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps(m))


def load_model(path) -> DTreeModel:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelError(f"{p}: cannot read model ({exc.strerror})") from None
    return loads(text, str(p))

