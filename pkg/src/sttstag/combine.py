"""Sequential combination of the two taggers.

tree -> tbl: the decision-tree tagger labels the test input, tags for the
forms unknown to the rule tagger are exported into its lexicon (only for
this run), and the rule tagger re-tags the input.

tbl -> tree: the rule tagger labels the test input, which is appended to
the training corpus; the decision-tree tagger is retrained on it and
re-tags the input.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

from . import dtree, tbl
from .corpus import Corpus, is_digit_sequence, is_ordinal_digits
from .eval import EvalReport, evaluate
from .lexicon import Lexicon, add_corpus_counts, merge_external, tag_priors, unknown_types

DIGIT_PATTERN = "digit-pattern"
MORPH_PERMITS = "morph-permits"
MORPH_UNIQUE = "morph-unique"
NE_UNANALYZED = "ne-unanalyzed"
NO_EXPORT = "no-export"
REASONS = (DIGIT_PATTERN, MORPH_PERMITS, MORPH_UNIQUE, NE_UNANALYZED, NO_EXPORT)
EXPORT_ALL = "export-all"

NO_TAG = "∅"  # printed for decisions without an exported tag


@dataclass(frozen=True)
class ExportDecision:
    form: str
    exported_tag: str | None
    reason: str

    def __post_init__(self):
        if (self.reason == NO_EXPORT) != (self.exported_tag is None):
            raise ValueError("exactly the no-export decisions carry no tag")

    def to_line(self) -> str:
        return f"{self.form}\t{self.exported_tag or NO_TAG}\t{self.reason}"


@dataclass(frozen=True)
class ExportPolicy:
    mode: str = "filtered"   # or "all"
    analyses: dict | None = None  # form -> tag set, needed in filtered mode
    cardinal_tag: str = "CARDNUM"
    ordinal_tag: str = "ADJA"

    def __post_init__(self):
        if self.mode not in ("filtered", "all"):
            raise ValueError(f"unknown export mode {self.mode!r}")
        if self.mode == "filtered" and self.analyses is None:
            raise ValueError("filtered export needs morphological analyses")


def export_filter(form: str, tree_tag: str, morph_tags, cardinal_tag: str = "CARDNUM",
                  ordinal_tag: str = "ADJA") -> ExportDecision:
    """Decide which tag (if any) to export for one unknown form."""
    if is_digit_sequence(form):
        return ExportDecision(form, cardinal_tag, DIGIT_PATTERN)
    if is_ordinal_digits(form):
        return ExportDecision(form, ordinal_tag, DIGIT_PATTERN)
    morph = frozenset(morph_tags or ())
    if tree_tag in morph:
        return ExportDecision(form, tree_tag, MORPH_PERMITS)
    if len(morph) == 1:
        return ExportDecision(form, next(iter(morph)), MORPH_UNIQUE)
    if not morph and tree_tag == "NE":
        return ExportDecision(form, "NE", NE_UNANALYZED)
    return ExportDecision(form, None, NO_EXPORT)


@dataclass(frozen=True)
class CombineResult:
    tagged: Corpus
    report: EvalReport | None
    decisions: tuple = ()
    lexicon: Lexicon | None = None  # the lexicon the second tagger used


def majority_tags(tagged: Corpus, forms) -> dict:
    """Most frequent tag per form in ``tagged`` (ties by tag name)."""
    wanted = set(forms)
    counts = defaultdict(Counter)
    for form, tag in tagged.tokens():
        if form in wanted:
            counts[form][tag] += 1
    return {f: min(c.items(), key=lambda tc: (-tc[1], tc[0]))[0] for f, c in counts.items()}


def export_decisions(tree_tagged: Corpus, lex: Lexicon, policy: ExportPolicy) -> list:
    forms = unknown_types(lex, tree_tagged.forms())
    tree_tag = majority_tags(tree_tagged, forms)
    out = []
    for f in forms:
        if policy.mode == "all":
            out.append(ExportDecision(f, tree_tag[f], EXPORT_ALL))
        else:
            out.append(export_filter(f, tree_tag[f], policy.analyses.get(f),
                                     policy.cardinal_tag, policy.ordinal_tag))
    return out


def run_tree_then_tbl(train: Corpus, test_forms, dmodel, tmodel, policy: ExportPolicy,
                      gold: Corpus | None = None, jobs: int = 1) -> CombineResult:
    test_forms = [list(s) for s in test_forms]
    tree_tagged = dtree.tag_parallel(test_forms, dmodel, jobs)
    decisions = export_decisions(tree_tagged, tmodel.lexicon, policy)
    exports = {d.form: {d.exported_tag} for d in decisions if d.exported_tag is not None}
    lex = merge_external(tmodel.lexicon, exports, tag_priors(train), None)
    tagged = tbl.tag_parallel(test_forms, tmodel.with_lexicon(lex), jobs)
    report = evaluate(gold, tagged, lex) if gold is not None else None
    return CombineResult(tagged, report, tuple(decisions), lex)


def run_tbl_then_tree(train: Corpus, test_forms, tmodel, dparams, lex: Lexicon,
                      gold: Corpus | None = None, jobs: int = 1) -> CombineResult:
    test_forms = [list(s) for s in test_forms]
    tbl_tagged = tbl.tag_parallel(test_forms, tmodel, jobs)
    ext = add_corpus_counts(lex, tbl_tagged, only_unknown=True)
    model = dtree.train(train + tbl_tagged, ext, dparams)
    tagged = dtree.tag_parallel(test_forms, model, jobs)
    report = evaluate(gold, tagged, ext) if gold is not None else None
    return CombineResult(tagged, report, (), ext)
