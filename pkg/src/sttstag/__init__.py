"""German part-of-speech tagging toolkit.

Two taggers (transformation-based rules and a decision-tree trigram
model), ambiguity-stratified evaluation, lexicon extension from a
morphological analyzer, and sequential combination of the taggers.
"""
from .corpus import (DEFAULT_TAGSET, Corpus, TaggedToken, Tagset, load_bundled, load_tagset,
                     parse_vertical, read_corpus, remap_cardnum, split_sentencewise,
                     write_corpus, write_vertical)
from .errors import (AlignmentError, AnalyzerError, MappingError, ModelError, ParseError,
                     SttsTagError, TagsetError)
from .eval import EvalReport, EvalRow, error_types, evaluate, render_table
from .lexicon import Lexicon, LexiconEntry, ambiguity, build, merge_external, tag_priors

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TAGSET", "AlignmentError", "AnalyzerError", "Corpus", "EvalReport", "EvalRow",
    "Lexicon", "LexiconEntry", "MappingError", "ModelError", "ParseError", "SttsTagError",
    "TaggedToken", "Tagset", "TagsetError", "ambiguity", "build", "error_types", "evaluate",
    "load_bundled", "load_tagset", "merge_external", "parse_vertical", "read_corpus",
    "remap_cardnum", "render_table", "split_sentencewise", "tag_priors", "write_corpus",
    "write_vertical",
]
