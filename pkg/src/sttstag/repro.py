"""The full experimental pipeline in one call.

split -> train both taggers -> tag -> evaluate -> lexicon merge with an
analyzer -> both combination orders -> text-type evaluation. Everything
written to the output directory is deterministic; wall-clock timings are
only returned to the caller.
"""
from __future__ import annotations

import json
import time
from pathlib import Path

from . import combine, dtree, tbl
from .config import RunConfig
from .corpus import Corpus, remap_cardnum, split_sentencewise, write_vertical
from .eval import error_types, evaluate, render_csv, render_error_types, render_table
from .lexicon import build, merge_external, save_lexicon, tag_priors, unknown_types
from .morph import StubAnalyzer, analyses_dict


def _write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _row_acc(report, level):
    r = report.row(level)
    return round(100.0 * r.correct / r.tokens, 2) if r.tokens else None


def _high_amb_acc(report, level=4):
    rows = [r for r in report.rows if r.ambiguity_level >= level]
    n = sum(r.tokens for r in rows)
    return round(100.0 * sum(r.correct for r in rows) / n, 2) if n else None


def run_repro(corpus: Corpus, out_dir, cfg: RunConfig = RunConfig(), analyzer=None,
              text_type: Corpus | None = None, jobs: int = 1) -> dict:
    """Run everything; returns the summary plus a ``timings`` entry."""
    out = Path(out_dir)
    analyzer = analyzer or StubAnalyzer()
    timings = {}
    if cfg.remap_cardnum:
        corpus = remap_cardnum(corpus)
        if text_type is not None:
            text_type = remap_cardnum(text_type)
    train, test = split_sentencewise(corpus, cfg.denominator)
    _write(out / "split" / "train.vrt", write_vertical(train))
    _write(out / "split" / "test.vrt", write_vertical(test))
    forms = test.forms()

    lex = build(train)
    (out / "models").mkdir(parents=True, exist_ok=True)
    save_lexicon(lex, out / "split" / "train.lex")
    t = time.perf_counter()
    tmodel = tbl.train(train, cfg.tbl_params(), lex)
    timings["tbl_train"] = time.perf_counter() - t
    t = time.perf_counter()
    dmodel = dtree.train(train, lex, cfg.dtree_params())
    timings["dtree_train"] = time.perf_counter() - t
    tbl.save_model(tmodel, out / "models" / "tbl")
    dtree.save_model(dmodel, out / "models" / "dtree.json")

    runs = {}   # name -> (tagged corpus, lexicon used for evaluation)
    runs["baseline"] = (tbl.tag_corpus(forms, tbl.TblModel(lex, params=cfg.tbl_params())), lex)
    t = time.perf_counter()
    runs["tbl"] = (tbl.tag_parallel(forms, tmodel, jobs), lex)
    timings["tbl_tag"] = time.perf_counter() - t
    t = time.perf_counter()
    runs["dtree"] = (dtree.tag_parallel(forms, dmodel, jobs), lex)
    timings["dtree_tag"] = time.perf_counter() - t

    # lexicon extension with analyses of the unknown test types
    unknown = unknown_types(lex, forms)
    analyses = analyses_dict(analyzer.analyze_batch(unknown))
    merged = merge_external(lex, analyses, tag_priors(train))
    save_lexicon(merged, out / "split" / "merged.lex")
    t = time.perf_counter()
    dmerged = dtree.train(train, merged, cfg.dtree_params())
    timings["dtree_retrain"] = time.perf_counter() - t
    runs["dtree_merged"] = (dtree.tag_parallel(forms, dmerged, jobs), merged)
    runs["tbl_merged"] = (tbl.tag_parallel(forms, tmodel.with_lexicon(merged), jobs), merged)

    decisions = {}
    for mode in ("all", "filtered"):
        policy = combine.ExportPolicy(mode, analyses if mode == "filtered" else None)
        res = combine.run_tree_then_tbl(train, forms, dmodel, tmodel, policy, test, jobs)
        runs[f"tree_tbl_{mode}"] = (res.tagged, res.lexicon)
        decisions[mode] = res.decisions
        _write(out / "combine" / f"decisions_{mode}.tsv", "".join(d.to_line() + "\n" for d in res.decisions))
    t = time.perf_counter()
    res = combine.run_tbl_then_tree(train, forms, tmodel, cfg.dtree_params(), lex, test, jobs)
    timings["tbl_tree"] = time.perf_counter() - t
    runs["tbl_tree"] = (res.tagged, res.lexicon)

    summary = {"corpus": {"sentences": len(corpus), "tokens": corpus.n_tokens,
                          "train_tokens": train.n_tokens, "test_tokens": test.n_tokens,
                          "lexicon_entries": len(lex)},
               "tbl_rules": {"lexical": len(tmodel.lexical_rules),
                             "contextual": len(tmodel.contextual_rules)},
               "unknown_types": len(unknown),
               "analyzed_types": sum(1 for f in unknown if analyses.get(f)),
               "exported_types": {m: sum(1 for d in ds if d.exported_tag is not None)
                                  for m, ds in decisions.items()},
               "runs": {}}
    report_parts = []
    for name, (tagged, used) in runs.items():
        rep = evaluate(test, tagged, used)
        _write(out / "tagged" / f"{name}.vrt", write_vertical(tagged))
        _write(out / "tables" / f"{name}.txt", render_table(rep))
        _write(out / "tables" / f"{name}.csv", render_csv(rep))
        _write(out / "errors" / f"{name}.tsv", render_error_types(error_types(test, tagged)))
        summary["runs"][name] = {"accuracy": round(rep.accuracy, 2),
                                 "lexicon_gap_tokens": rep.row(0).tokens,
                                 "unknown_accuracy": _row_acc(rep, 0),
                                 "ambiguity_4plus_accuracy": _high_amb_acc(rep),
                                 "mean_ambiguity": round(rep.mean_ambiguity, 2)}
        report_parts.append(render_table(rep, f"== {name} =="))

    if text_type is not None:
        for name, model_tag in (("tbl", lambda f: tbl.tag_parallel(f, tmodel, jobs)),
                                ("dtree", lambda f: dtree.tag_parallel(f, dmodel, jobs))):
            tagged = model_tag(text_type.forms())
            rep = evaluate(text_type, tagged, lex)
            key = f"text_type_{name}"
            summary["runs"][key] = {"accuracy": round(rep.accuracy, 2),
                                    "lexicon_gap_tokens": rep.row(0).tokens,
                                    "unknown_accuracy": _row_acc(rep, 0),
                                    "ambiguity_4plus_accuracy": _high_amb_acc(rep),
                                    "mean_ambiguity": round(rep.mean_ambiguity, 2)}
            _write(out / "tables" / f"{key}.txt", render_table(rep))
            report_parts.append(render_table(rep, f"== {key} =="))

    r = summary["runs"]
    findings = {
        "dtree_better_on_unknowns": _gt(r["dtree"]["unknown_accuracy"], r["tbl"]["unknown_accuracy"]),
        "tbl_better_at_ambiguity_4plus": _gt(r["tbl"]["ambiguity_4plus_accuracy"],
                                             r["dtree"]["ambiguity_4plus_accuracy"]),
    }
    summary["findings"] = findings
    report_parts.append("== comparison ==\n" + "".join(
        f"{k}: {'yes' if v else 'no' if v is not None else 'n/a'}\n" for k, v in findings.items()))
    _write(out / "report.txt", "\n".join(report_parts))
    _write(out / "summary.json", json.dumps(summary, indent=1, sort_keys=True) + "\n")
    _write(out / "config.conf", cfg.dump())
    return dict(summary, timings=timings)


def _gt(a, b):
    if a is None or b is None:
        return None
    return a > b
