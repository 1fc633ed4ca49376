import itertools
import math
import random
from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sttstag import dtree
from sttstag._kernels import _pykernels, compiled
from sttstag.corpus import Corpus, TaggedToken
from sttstag.dtree import affix as A
from sttstag.dtree import context as C
from sttstag.dtree.gain import entropy, info_gain
from sttstag.dtree.model import DTreeModel, conditional, dumps, leaf_distribution, loads
from sttstag.errors import ModelError, SttsTagError
from sttstag.lexicon import Lexicon, LexiconEntry, TagPriors, build, merge_external

BACKENDS = [_pykernels] + ([compiled()] if compiled() else [])


def corpus(*sents):
    return Corpus(tuple(tuple(TaggedToken(*p) for p in s) for s in sents))


# -- information gain ---------------------------------------------------------------

def test_gain_identical_children():
    assert info_gain({"NN": 4, "ART": 2}, {"NN": 2, "ART": 1}, {"NN": 2, "ART": 1}) == pytest.approx(0.0, abs=1e-12)


def test_gain_perfect_split():
    assert info_gain({"NN": 5, "ART": 5}, {"NN": 5}, {"ART": 5}) == pytest.approx(1.0, abs=1e-12)


def test_gain_errors():
    with pytest.raises(ValueError):
        info_gain({}, {}, {})
    with pytest.raises(ValueError):
        info_gain({"NN": 2}, {"NN": 1}, {"NN": 2})


def test_entropy_values():
    assert entropy({"a": 1, "b": 1, "c": 1, "d": 1}) == pytest.approx(2.0)
    assert entropy([7, 0]) == 0.0


@given(st.lists(st.tuples(st.integers(0, 20), st.integers(0, 20)), min_size=1, max_size=6))
def test_gain_nonnegative(pairs):
    yes = [a for a, _ in pairs]
    no = [b for _, b in pairs]
    parent = [a + b for a, b in pairs]
    if sum(parent):
        assert info_gain(parent, yes, no) >= 0.0


# -- context tree ---------------------------------------------------------------------

def leaf(counts):
    return C.Leaf(tuple(counts))


def test_pruning_threshold_per_sample():
    # gain 0.6 < 0.7 is pruned, 0.8 kept
    low = C.Test(0, 1, 0.6, leaf([3, 0]), leaf([0, 3]), (3, 3))
    high = C.Test(0, 1, 0.8, leaf([3, 0]), leaf([0, 3]), (3, 3))
    assert isinstance(C.prune(low, 0.7, weighted=False), C.Leaf)
    assert isinstance(C.prune(high, 0.7, weighted=False), C.Test)


def test_pruning_weighted():
    # 6 samples * 0.1 bits = 0.6 < 0.7; 6 * 0.125 = 0.75 kept
    assert isinstance(C.prune(C.Test(0, 1, 0.1, leaf([3, 0]), leaf([0, 3]), (3, 3)), 0.7), C.Leaf)
    assert isinstance(C.prune(C.Test(0, 1, 0.125, leaf([3, 0]), leaf([0, 3]), (3, 3)), 0.7), C.Test)


def test_pruning_only_collapses_frontier():
    inner = C.Test(1, 0, 0.01, leaf([1, 0]), leaf([0, 1]), (1, 1))
    top = C.Test(0, 2, 0.9, inner, leaf([4, 0]), (5, 1))
    pruned = C.prune(top, 0.7, weighted=False)
    assert isinstance(pruned, C.Test) and isinstance(pruned.yes, C.Leaf)


def test_grow_finds_the_informative_test():
    # tag 0 always follows tag 1 at position -1, tag 1 follows anything else
    ctx = np.array([[1, 0], [2, 0], [0, 1]])
    counts = np.array([[5, 0], [0, 5], [0, 5]])
    tree = C.grow(ctx, counts, 3)
    assert (tree.position, tree.tag) == (0, 1)
    assert tree.gain == pytest.approx(info_gain([5, 10], [5, 0], [0, 10]))
    assert C.lookup(tree, (1, 2)).counts == (5, 0)


def paths(node, prefix=()):
    yield prefix, node
    if isinstance(node, C.Test):
        yield from paths(node.yes, prefix + ("y",))
        yield from paths(node.no, prefix + ("n",))


@pytest.mark.parametrize("weighted", [True, False])
def test_pruning_removes_exactly_low_gain_nodes(bundled_split, weighted):
    train = bundled_split[0]
    model = dtree.train(train, params=dtree.DTreeParams(min_gain=0.0, weighted_gain=weighted))
    full = model.context_tree
    pruned = C.prune(full, 0.7, weighted)
    kept = dict(paths(pruned))
    for p, node in paths(full):
        if not isinstance(node, C.Test):
            continue
        if p not in kept or isinstance(kept[p], C.Leaf):
            assert C.split_score(node, weighted) < 0.7
    for p, node in kept.items():
        if isinstance(node, C.Test) and isinstance(node.yes, C.Leaf) and isinstance(node.no, C.Leaf):
            assert C.split_score(node, weighted) >= 0.7


def test_paths_test_each_pair_once(dtree_model):
    def walk(node, seen):
        if isinstance(node, C.Test):
            key = (node.position, node.tag)
            assert key not in seen
            walk(node.yes, seen | {key})
            walk(node.no, seen | {key})
    walk(dtree_model.context_tree, frozenset())


def test_pruning_monotone(bundled_split):
    train = bundled_split[0]
    sizes = []
    for g in (0.0, 0.7, 5.0, 50.0):
        m = dtree.train(train, params=dtree.DTreeParams(min_gain=g, affix_gain=g))
        sizes.append((C.count_nodes(m.context_tree), A.count_nodes(m.affix_tree)))
    for a, b in zip(sizes, sizes[1:]):
        assert b[0] <= a[0] and b[1] <= a[1]


# -- affix tree ------------------------------------------------------------------------

def test_affix_walk_hand_value():
    tree = A.build_affix_tree([("Runde", "NN"), ("Stunde", "NN"), ("gesunde", "ADJA")],
                              gain_threshold=0.0, tags=("ADJA", "NN"))
    # root (2 + 0.1) / (3 + 0.2), then four levels of (2 + p) / 4 down to "-unde"
    p = 2.1 / 3.2
    for _ in range(4):
        p = (2 + p) / 4
    dist = A.affix_lookup(tree, "Verhandlungsrunde")
    assert dist["NN"] == pytest.approx(p, abs=1e-12)
    assert max(dist, key=dist.get) == "NN"
    assert A.affix_lookup(tree, "Haus") == tree.root.dist
    assert A.affix_node(tree, "Stunde") is not A.affix_node(tree, "Verhandlungsrunde")


def test_affix_suffixes_are_proper_and_bounded():
    tree = A.build_affix_tree([("abcdefgh", "NN"), ("ab", "NN")], 0.0, 5, ("NN",))
    depth, node = 0, tree.root
    while node.children:
        (node,) = node.children.values() if len(node.children) == 1 else (node.children["h"],)
        depth += 1
    assert depth == 5
    assert "a" not in tree.root.children["b"].children  # "ab" only has the suffix "b"


def test_affix_pruning(dtree_model):
    tags = dtree_model.affix_tree.tags

    def check(node):
        for child in node.children.values():
            if not child.children:
                assert A.leaf_gain(child, node, tags) >= dtree_model.params.affix_gain
            check(child)
    check(dtree_model.affix_tree.root)


def test_distributions_sum_to_one(dtree_model):
    for lf in C.leaves(dtree_model.context_tree):
        assert leaf_distribution(lf).sum() == pytest.approx(1.0, abs=1e-9)
    stack = [dtree_model.affix_tree.root]
    while stack:
        node = stack.pop()
        assert sum(node.dist.values()) == pytest.approx(1.0, abs=1e-9)
        stack.extend(node.children.values())
    for dist in dtree_model.class_distributions.values():
        assert sum(dist.values()) == pytest.approx(1.0, abs=1e-9)
    assert sum(dtree_model.priors.values()) == pytest.approx(1.0, abs=1e-9)


# -- emissions ---------------------------------------------------------------------

def das_model(w):
    train = corpus([("das", "ART")] * 3 + [("das", "PDS")], [("dies", "ART")] * 3 + [("dies", "PDS")] * 3,
                   [("Haus", "NN"), ("steht", "VVFIN")])
    return dtree.train(train, params=dtree.DTreeParams(eq_class_weight=w))


def test_class_interpolation_hand_value():
    m = das_model(0.15)
    assert m.class_distributions[frozenset({"ART", "PDS"})]["ART"] == pytest.approx(0.6)
    assert conditional(m, "das")["ART"] == pytest.approx(0.85 * 0.75 + 0.15 * 0.6)
    assert conditional(m, "das")["ART"] == pytest.approx(0.7275)


def test_zero_weight_is_relative_frequency():
    m = das_model(0.0)
    assert conditional(m, "das") == {"ART": 0.75, "PDS": 0.25}
    w = dtree.emission_weight(m, "das", "ART")
    assert w == pytest.approx(0.75 / m.priors["ART"])


def test_candidates_restricted_to_lexicon(dtree_model, bundled_lexicon):
    form = next(f for f, e in sorted(bundled_lexicon.items()) if len(e.tags) == 1)
    tag = bundled_lexicon[form].tags[0][0]
    assert dtree_model.candidates(form) == (tag,)
    for t in dtree_model.tags:
        w = dtree.emission_weight(dtree_model, form, t)
        assert (w > 0) == (t == tag)


def test_zero_prior_is_an_error(dtree_model):
    with pytest.raises(ModelError):
        dtree.emission_weight(dtree_model, "Haus", "NOTATAG")


def test_empty_training_corpus():
    with pytest.raises(SttsTagError):
        dtree.train(Corpus())


# -- decoding ----------------------------------------------------------------------

def brute(cand, ncand, emit, logtrans, boundary):
    best, best_s = None, -math.inf
    n = len(ncand)
    for idx in itertools.product(*[range(ncand[i]) for i in range(n)]):
        s, h, j = 0.0, boundary, boundary
        for i, ki in enumerate(idx):
            k = cand[i, ki]
            s += logtrans[h, j, k] + emit[i, ki]
            h, j = j, k
        if best is None or s > best_s:
            best, best_s = [int(cand[i, ki]) for i, ki in enumerate(idx)], s
    return best, best_s


def random_lattice(rng, K, n, ties=False):
    M = 3
    cand = np.zeros((n, M), dtype=np.int32)
    ncand = np.zeros(n, dtype=np.int32)
    emit = np.full((n, M), -np.inf)
    for i in range(n):
        c = sorted(rng.sample(range(K), rng.randint(1, min(M, K))))
        cand[i, :len(c)] = c
        ncand[i] = len(c)
        emit[i, :len(c)] = [rng.choice([-1.0, -2.0]) if ties else math.log(rng.random() + 1e-3) for _ in c]
    if ties:
        lt = np.array([rng.choice([-1.0, -2.0]) for _ in range((K + 1) * (K + 1) * K)]).reshape(K + 1, K + 1, K)
    else:
        lt = np.log(np.random.default_rng(rng.randint(0, 10**9)).dirichlet(np.ones(K), size=(K + 1, K + 1)))
    return cand, ncand, emit, lt


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
def test_viterbi_kernel_matches_enumeration(backend):
    rng = random.Random(7)
    for trial in range(300):
        K = rng.randint(1, 6)
        n = rng.randint(1, 5)
        cand, ncand, emit, lt = random_lattice(rng, K, n)
        path, score = backend.viterbi2(cand, ncand, emit, lt, K)
        bpath, bscore = brute(cand, ncand, emit, lt, K)
        assert list(path) == bpath
        assert score == pytest.approx(bscore, abs=1e-9)


def test_kernel_backends_agree_on_ties():
    if len(BACKENDS) < 2:
        pytest.skip("compiled extension not built")
    rng = random.Random(3)
    for _ in range(300):
        K = rng.randint(1, 4)
        lat = random_lattice(rng, K, rng.randint(1, 5), ties=True)
        a = BACKENDS[0].viterbi2(*lat, K)
        b = BACKENDS[1].viterbi2(*lat, K)
        assert list(a[0]) == list(b[0]) and a[1] == b[1]


def test_empty_sentence(dtree_model):
    assert dtree.viterbi([], dtree_model) == []


def test_unambiguous_sentence_gets_lexicon_tags(dtree_model, bundled_lexicon):
    forms = [f for f, e in sorted(bundled_lexicon.items()) if len(e.tags) == 1][:8]
    assert dtree.viterbi(forms, dtree_model) == [bundled_lexicon[f].tags[0][0] for f in forms]


@pytest.mark.parametrize("length", [1, 2, 3])
def test_model_decoding_matches_brute_force(bundled_split, length):
    train, test = bundled_split
    m = dtree.train(train, params=dtree.DTreeParams(context_length=length))
    short = [s for s in test.forms() if len(s) <= 5][:25]
    short.append(["Der", "Quorxel", "lief", "2345", "."])
    for s in short:
        path, score = dtree.decode(s, m)
        best, bscore = dtree.brute_force(s, m)
        assert [m.tags[i] for i in path] == best
        assert score == pytest.approx(bscore, abs=1e-9)


def test_two_token_exhaustive():
    train = corpus([("a", "NN"), ("b", "VVFIN")], [("a", "NE"), ("b", "NN")], [("a", "NN"), ("b", "NN")])
    m = dtree.train(train)
    scores = {(x, y): dtree.path_score(["a", "b"], [x, y], m) for x in ("NE", "NN") for y in ("NN", "VVFIN")}
    best = max(sorted(scores), key=scores.get)
    assert tuple(dtree.viterbi(["a", "b"], m)) == best


def test_bundled_accuracy(dtree_model, bundled_split):
    test = bundled_split[1]
    out = dtree.tag_corpus(test.forms(), dtree_model)
    right = sum(a.tag == b.tag for a, b in zip(out.tokens(), test.tokens()))
    assert right / test.n_tokens > 0.97


def test_parallel_matches(dtree_model, bundled_split):
    forms = bundled_split[1].forms()[:120]
    assert dtree.tag_parallel(forms, dtree_model, 2) == dtree.tag_corpus(forms, dtree_model)


# -- retraining and persistence --------------------------------------------------------

def test_retraining_after_extension_differs(dtree_model, bundled_split, bundled_lexicon):
    train = bundled_split[0]
    ext = merge_external(bundled_lexicon, {"Quorxelung": {"NN"}, "quorxelt": {"VVFIN"}},
                         TagPriors({"NN": 0.6, "VVFIN": 0.4}))
    retrained = dtree.train(train, ext)
    swapped = DTreeModel(dtree_model.params, dtree_model.tags, dtree_model.context_tree,
                         dtree_model.affix_tree, ext, dtree_model.tag_counts)
    assert dumps(retrained) != dumps(swapped)
    assert retrained.affix_tree.root.n == dtree_model.affix_tree.root.n + 2


def test_model_roundtrip(dtree_model, bundled_split, tmp_path):
    path = tmp_path / "m.json"
    dtree.save_model(dtree_model, path)
    loaded = dtree.load_model(path)
    dtree.save_model(loaded, tmp_path / "m2.json")
    assert path.read_bytes() == (tmp_path / "m2.json").read_bytes()
    forms = bundled_split[1].forms()
    assert dtree.tag_corpus(forms, loaded) == dtree.tag_corpus(forms, dtree_model)


def test_training_is_deterministic(bundled_split, dtree_model):
    assert dumps(dtree.train(bundled_split[0])) == dumps(dtree_model)


@pytest.mark.parametrize("text", ["", "{}", '{"format": "sttstag-dtree", "version": 99}',
                                  '{"format": "sttstag-dtree", "version": 1}'])
def test_bad_model_files(text):
    with pytest.raises(ModelError):
        loads(text)


def test_params_validation():
    for bad in ({"context_length": 0}, {"min_gain": -1}, {"eq_class_weight": 1.5}):
        with pytest.raises(ValueError):
            dtree.DTreeParams(**bad)
