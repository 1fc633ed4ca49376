"""Command-line interface.

Exit status: 0 success, 1 usage error, 2 data error (bad input files,
models, analyzer failures), 3 internal error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import combine, dtree, tbl
from .config import PARAMS, RunConfig, apply_overrides, parse_config
from .corpus import (DEFAULT_TAGSET, bundled_corpus_path, load_tagset, parse_untagged,
                     read_corpus, remap_cardnum, split_sentencewise, write_corpus,
                     write_vertical)
from .errors import SttsTagError
from .eval import error_types, evaluate, render_csv, render_error_types, render_table
from .lexicon import (build, merge_external, read_lexicon, save_lexicon, tag_priors,
                      unknown_types)
from .morph import analyses_dict, make_analyzer

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _params_epilog() -> str:
    lines = ["parameters (--param name=value or config file):"]
    for name, (section, typ, default, text) in PARAMS.items():
        shown = str(default).lower() if typ is bool else default
        lines.append(f"  {name}={shown}  [{section}] {text}")
    return "\n".join(lines)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("common options")
    g.add_argument("--config", metavar="FILE", help="key=value parameter file (default: none)")
    g.add_argument("--param", action="append", metavar="NAME=VALUE", default=[],
                   help="override one parameter; repeatable (default: none)")
    g.add_argument("--tagset", metavar="FILE", help="tagset file (default: bundled STTS + CARDNUM)")
    g.add_argument("--no-validate", action="store_true",
                   help="accept tags outside the tagset (default: validate)")
    g.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="worker processes for tagging (default: 1)")
    g.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    return p


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.RawDescriptionHelpFormatter
    parser = _Parser(prog="sttstag", description="German POS tagging toolkit (STTS).",
                     epilog=_params_epilog(), formatter_class=fmt)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    common = _common()

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, description=help_text, parents=[common],
                              epilog=_params_epilog(), formatter_class=fmt)

    p = add("split", "Split a tagged corpus sentence-wise into train and test parts.")
    p.add_argument("--in", dest="inp", required=True, metavar="VRT", help="tagged corpus")
    p.add_argument("--denominator", type=int, metavar="N",
                   help="every N-th sentence goes to test (default: 8)")
    p.add_argument("--train", required=True, metavar="VRT", help="output training part")
    p.add_argument("--test", required=True, metavar="VRT", help="output test part")
    p.add_argument("--no-remap", action="store_true",
                   help="keep CARD on digit sequences (default: retag them CARDNUM)")

    p = add("train-dtree", "Train the decision-tree trigram tagger.")
    p.add_argument("--train", required=True, metavar="VRT", help="training corpus")
    p.add_argument("--lexicon", metavar="LEX", help="lexicon to train with (default: built from the corpus)")
    p.add_argument("--model", required=True, metavar="FILE", help="output model file")

    p = add("train-tbl", "Train the transformation-based tagger.")
    p.add_argument("--train", required=True, metavar="VRT", help="training corpus")
    p.add_argument("--lexicon", metavar="LEX", help="lexicon (default: built from the corpus)")
    p.add_argument("--model", required=True, metavar="DIR", help="output model directory")

    p = add("tag", "Tag untagged text (one form per line, blank line between sentences).")
    p.add_argument("--model", required=True, metavar="PATH",
                   help="dtree model file or tbl model directory")
    p.add_argument("--in", dest="inp", required=True, metavar="FILE", help="input forms")
    p.add_argument("--out", metavar="VRT", help="output (default: stdout)")
    p.add_argument("--lexicon", metavar="LEX",
                   help="tbl only: lexicon to load instead of the stored one (default: stored)")

    p = add("eval", "Evaluate a tagged corpus against gold tags.")
    p.add_argument("--gold", required=True, metavar="VRT")
    p.add_argument("--pred", required=True, metavar="VRT")
    p.add_argument("--lexicon", required=True, metavar="LEX", help="lexicon defining ambiguity levels")
    p.add_argument("--csv", metavar="FILE", help="also write the table as CSV (default: no)")

    p = add("error-types", "List (gold tag, predicted tag) confusions, most frequent first.")
    p.add_argument("--gold", required=True, metavar="VRT")
    p.add_argument("--pred", required=True, metavar="VRT")
    p.add_argument("--limit", type=int, metavar="N", help="show only the top N (default: all)")

    p = add("merge-lex", "Add analyzer output for unknown forms to a lexicon.")
    p.add_argument("--lexicon", required=True, metavar="LEX", help="base lexicon")
    p.add_argument("--forms", required=True, metavar="FILE",
                   help="text whose unknown forms are analyzed (vertical, tags optional)")
    p.add_argument("--train", required=True, metavar="VRT", help="corpus for tag priors")
    p.add_argument("--analyzer", default="stub", metavar="SPEC",
                   help="stub or file:REQUEST,RESPONSE (default: stub)")
    p.add_argument("--analyzer-command", metavar="CMD",
                   help="command producing the response file (default: none)")
    p.add_argument("--mapping", metavar="FILE", help="category mapping (default: bundled)")
    p.add_argument("--out", required=True, metavar="LEX", help="merged lexicon")

    p = add("combine", "Run the two taggers in sequence.")
    p.add_argument("--order", choices=("tree-tbl", "tbl-tree"), default="tree-tbl",
                   help="which tagger runs first (default: tree-tbl)")
    p.add_argument("--policy", choices=("all", "filtered"), default="filtered",
                   help="tree-tbl only: which tags to export (default: filtered)")
    p.add_argument("--analyzer", default="stub", metavar="SPEC",
                   help="stub or file:REQUEST,RESPONSE (default: stub)")
    p.add_argument("--analyzer-command", metavar="CMD", help="(default: none)")
    p.add_argument("--mapping", metavar="FILE", help="category mapping (default: bundled)")
    p.add_argument("--train", required=True, metavar="VRT", help="training corpus of both models")
    p.add_argument("--in", dest="inp", required=True, metavar="FILE",
                   help="test input; if it carries tags they are used as gold")
    p.add_argument("--dtree-model", metavar="FILE", help="(default: trained on --train)")
    p.add_argument("--tbl-model", metavar="DIR", help="(default: trained on --train)")
    p.add_argument("--out", metavar="VRT", help="tagged output (default: stdout)")
    p.add_argument("--decisions", metavar="FILE", help="export decisions (default: not written)")
    p.add_argument("--csv", metavar="FILE", help="evaluation CSV (default: no)")

    p = add("repro", "Run the whole pipeline: split, train, tag, evaluate, merge, combine.")
    p.add_argument("--corpus", metavar="VRT", help="tagged corpus (default: bundled newspaper sample)")
    p.add_argument("--text-type", metavar="VRT",
                   help="second corpus of another text type (default: bundled administrative sample)")
    p.add_argument("--no-text-type", action="store_true", help="skip the text-type evaluation")
    p.add_argument("--analyzer", default="stub", metavar="SPEC", help="(default: stub)")
    p.add_argument("--analyzer-command", metavar="CMD", help="(default: none)")
    p.add_argument("--mapping", metavar="FILE", help="category mapping (default: bundled)")
    p.add_argument("--out", required=True, metavar="DIR", help="output directory")
    return parser


# -- helpers -------------------------------------------------------------------

def _config(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        cfg = parse_config(Path(args.config).read_text(encoding="utf-8"), cfg, args.config)
    try:
        cfg = apply_overrides(cfg, args.param)
        cfg.dtree_params(), cfg.tbl_params()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return cfg


def _tagset(args, cfg):
    if args.no_validate or not cfg.validate_tagset:
        return None
    return load_tagset(args.tagset) if args.tagset else DEFAULT_TAGSET


def _read_forms(path):
    with open(path, encoding="utf-8") as f:
        return parse_untagged(f.read(), str(path))


def _maybe_gold(path, tagset):
    """The corpus at ``path`` if every token line carries a tag, else None."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if lines and all("\t" in ln for ln in lines):
        return read_corpus(path, tagset)
    return None


def _emit(text: str, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _load_any(path, tagset, lexicon=None):
    p = Path(path)
    if p.is_dir():
        return "tbl", tbl.load_model(p, lexicon, tagset or None)
    return "dtree", dtree.load_model(p)


# -- commands --------------------------------------------------------------------

def cmd_split(args, cfg):
    denominator = args.denominator or cfg.denominator
    if denominator < 2:
        raise UsageError("--denominator must be >= 2")
    tagset = _tagset(args, cfg)
    corpus = read_corpus(args.inp, tagset)
    if cfg.remap_cardnum and not args.no_remap:
        corpus = remap_cardnum(corpus)
    train, test = split_sentencewise(corpus, denominator)
    write_corpus(train, args.train)
    write_corpus(test, args.test)


def cmd_train_dtree(args, cfg):
    tagset = _tagset(args, cfg)
    corpus = read_corpus(args.train, tagset)
    lex = read_lexicon(args.lexicon, tagset) if args.lexicon else None
    dtree.save_model(dtree.train(corpus, lex, cfg.dtree_params(), tagset or DEFAULT_TAGSET), args.model)


def cmd_train_tbl(args, cfg):
    tagset = _tagset(args, cfg)
    corpus = read_corpus(args.train, tagset)
    lex = read_lexicon(args.lexicon, tagset) if args.lexicon else None
    tbl.save_model(tbl.train(corpus, cfg.tbl_params(), lex), args.model)


def cmd_tag(args, cfg):
    tagset = _tagset(args, cfg)
    lex = read_lexicon(args.lexicon, tagset) if args.lexicon else None
    kind, model = _load_any(args.model, tagset, lex)
    if lex is not None and kind != "tbl":
        raise UsageError("--lexicon only applies to tbl models; retrain the dtree model instead")
    forms = _read_forms(args.inp)
    tagged = (tbl.tag_parallel if kind == "tbl" else dtree.tag_parallel)(forms, model, args.jobs)
    _emit(write_vertical(tagged), args.out)


def cmd_eval(args, cfg):
    tagset = _tagset(args, cfg)
    gold = read_corpus(args.gold, tagset)
    pred = read_corpus(args.pred, tagset)
    rep = evaluate(gold, pred, read_lexicon(args.lexicon, tagset))
    sys.stdout.write(render_table(rep))
    sys.stdout.write(f"mean ambiguity (in-lexicon tokens): {rep.mean_ambiguity:.2f}\n")
    if args.csv:
        _emit(render_csv(rep), args.csv)


def cmd_error_types(args, cfg):
    tagset = _tagset(args, cfg)
    types = error_types(read_corpus(args.gold, tagset), read_corpus(args.pred, tagset))
    sys.stdout.write(render_error_types(types, args.limit))


def _analyzer(args, tagset):
    try:
        return make_analyzer(args.analyzer, args.analyzer_command, args.mapping,
                             tagset or DEFAULT_TAGSET)
    except ValueError as exc:
        if isinstance(exc, SttsTagError):
            raise
        raise UsageError(str(exc)) from None


def cmd_merge_lex(args, cfg):
    tagset = _tagset(args, cfg)
    lex = read_lexicon(args.lexicon, tagset)
    train = read_corpus(args.train, tagset)
    forms = _read_forms(args.forms)
    unknown = unknown_types(lex, forms)
    analyses = analyses_dict(_analyzer(args, tagset).analyze_batch(unknown))
    merged = merge_external(lex, analyses, tag_priors(train), tagset)
    save_lexicon(merged, args.out)
    analyzed = sum(1 for f in unknown if analyses.get(f))
    print(f"unknown types: {len(unknown)}, analyzed: {analyzed}, still unknown: {len(unknown) - analyzed}",
          file=sys.stderr)


def cmd_combine(args, cfg):
    tagset = _tagset(args, cfg)
    train = read_corpus(args.train, tagset)
    forms = _read_forms(args.inp)
    gold = _maybe_gold(args.inp, tagset)
    lex = build(train)
    tmodel = tbl.load_model(args.tbl_model, None, tagset) if args.tbl_model else \
        tbl.train(train, cfg.tbl_params(), lex)
    if args.order == "tree-tbl":
        dmodel = dtree.load_model(args.dtree_model) if args.dtree_model else \
            dtree.train(train, lex, cfg.dtree_params())
        analyses = None
        if args.policy == "filtered":
            unknown = unknown_types(tmodel.lexicon, forms)
            analyses = analyses_dict(_analyzer(args, tagset).analyze_batch(unknown))
        res = combine.run_tree_then_tbl(train, forms, dmodel, tmodel,
                                        combine.ExportPolicy(args.policy, analyses), gold, args.jobs)
    else:
        res = combine.run_tbl_then_tree(train, forms, tmodel, cfg.dtree_params(), lex, gold, args.jobs)
    _emit(write_vertical(res.tagged), args.out)
    if args.decisions:
        _emit("".join(d.to_line() + "\n" for d in res.decisions), args.decisions)
    if res.report is not None:
        sys.stderr.write(render_table(res.report))
        if args.csv:
            _emit(render_csv(res.report), args.csv)


def cmd_repro(args, cfg):
    from .repro import run_repro
    tagset = _tagset(args, cfg)
    corpus = read_corpus(args.corpus or bundled_corpus_path(), tagset)
    text_type = None
    if not args.no_text_type:
        text_type = read_corpus(args.text_type or bundled_corpus_path("admin_synth.vrt"), tagset)
    summary = run_repro(corpus, args.out, cfg, _analyzer(args, tagset), text_type, args.jobs)
    for k, v in summary["timings"].items():
        print(f"time {k}: {v:.2f}s", file=sys.stderr)
    sys.stdout.write(Path(args.out, "report.txt").read_text(encoding="utf-8"))


COMMANDS = {
    "split": cmd_split, "train-dtree": cmd_train_dtree, "train-tbl": cmd_train_tbl,
    "tag": cmd_tag, "eval": cmd_eval, "error-types": cmd_error_types,
    "merge-lex": cmd_merge_lex, "combine": cmd_combine, "repro": cmd_repro,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("sttstag: a subcommand is required (see --help)")
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(name)s: %(message)s", stream=sys.stderr)
        cfg = _config(args)
        COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SttsTagError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {_one_line(exc)}", file=sys.stderr)
        return EXIT_DATA
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {_one_line(exc)}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _one_line(exc) -> str:
    if isinstance(exc, OSError) and exc.filename and exc.strerror:
        return f"{exc.filename}: {exc.strerror}"
    return " ".join(str(exc).split())


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
