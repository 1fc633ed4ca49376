"""Transformation-based rule tagger."""
from .learn import frequent_words, learn_contextual, learn_lexical, train
from .rules import ContextualRule, LexicalRule
from .tagger import (TblModel, TblParams, initial_tag, load_model, save_model, tag, tag_corpus,
                     tag_parallel)

__all__ = ["ContextualRule", "LexicalRule", "TblModel", "TblParams", "frequent_words",
           "initial_tag", "learn_contextual", "learn_lexical", "load_model", "save_model",
           "tag", "tag_corpus", "tag_parallel", "train"]
