"""Decision-tree trigram tagger with an affix tree for unknown words."""
from .affix import AffixTree, affix_lookup, build_affix_tree
from .gain import entropy, info_gain
from .model import (DTreeModel, DTreeParams, conditional, emission_weight, load_model,
                    save_model, train)
from .viterbi import brute_force, decode, path_score, tag_corpus, tag_parallel, viterbi

__all__ = ["AffixTree", "DTreeModel", "DTreeParams", "affix_lookup", "brute_force",
           "build_affix_tree", "conditional", "decode", "emission_weight", "entropy",
           "info_gain", "load_model", "path_score", "save_model", "tag_corpus", "tag_parallel",
           "train", "viterbi"]
