"""Accuracy tables split by lexicon ambiguity, with lexical vs disambiguation errors.

An error is *lexical* (LE) when the gold tag is not among the lexicon tags
of the token's form (every error on an unknown form is one), and a
*disambiguation* error (DE) otherwise.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import NamedTuple

from .corpus import Corpus
from .errors import AlignmentError
from .lexicon import Lexicon

MAX_LEVEL = 6  # levels >= this are pooled into one row


@dataclass(frozen=True)
class EvalRow:
    ambiguity_level: int
    tokens: int = 0
    correct: int = 0
    lexical_errors: int = 0
    disambiguation_errors: int = 0

    @property
    def errors(self) -> int:
        return self.lexical_errors + self.disambiguation_errors

    def label(self) -> str:
        return f">={MAX_LEVEL}" if self.ambiguity_level >= MAX_LEVEL else str(self.ambiguity_level)


@dataclass(frozen=True)
class EvalReport:
    rows: tuple
    totals: EvalRow
    mean_ambiguity: float

    @property
    def accuracy(self) -> float:
        return 100.0 * self.totals.correct / self.totals.tokens if self.totals.tokens else 0.0

    def row(self, level: int) -> EvalRow:
        for r in self.rows:
            if r.ambiguity_level == level:
                return r
        return EvalRow(level)


class ErrorTypeCount(NamedTuple):
    correct_tag: str
    tagger_tag: str
    count: int


def _aligned(gold: Corpus, predicted: Corpus):
    if len(gold) != len(predicted):
        raise AlignmentError(min(len(gold), len(predicted)) + 1, 0,
                             f"gold has {len(gold)} sentences, prediction has {len(predicted)}")
    for si, (gs, ps) in enumerate(zip(gold.sentences, predicted.sentences), 1):
        if len(gs) != len(ps):
            raise AlignmentError(si, min(len(gs), len(ps)) + 1,
                                 f"sentence lengths differ ({len(gs)} vs {len(ps)})")
        for ti, (g, p) in enumerate(zip(gs, ps), 1):
            if g.form != p.form:
                raise AlignmentError(si, ti, f"forms differ: {g.form!r} vs {p.form!r}")
            yield g, p


def evaluate(gold: Corpus, predicted: Corpus, lex: Lexicon) -> EvalReport:
    counts = {}
    amb_sum = amb_tokens = 0
    for g, p in _aligned(gold, predicted):
        e = lex.get(g.form)
        level = len(e.tags) if e is not None else 0
        if level:
            amb_sum += level
            amb_tokens += 1
        bucket = min(level, MAX_LEVEL)
        c = counts.setdefault(bucket, [0, 0, 0, 0])
        c[0] += 1
        if g.tag == p.tag:
            c[1] += 1
        elif e is None or g.tag not in e.tagset:
            c[2] += 1
        else:
            c[3] += 1
    rows = tuple(EvalRow(level, *counts[level]) for level in sorted(counts))
    totals = EvalRow(-1, *(sum(getattr(r, f) for r in rows)
                           for f in ("tokens", "correct", "lexical_errors", "disambiguation_errors")))
    return EvalReport(rows, totals, amb_sum / amb_tokens if amb_tokens else 0.0)


def error_types(gold: Corpus, predicted: Corpus) -> list:
    """(gold tag, predicted tag, count) for every confusion, most frequent first."""
    c = Counter((g.tag, p.tag) for g, p in _aligned(gold, predicted) if g.tag != p.tag)
    return [ErrorTypeCount(a, b, n) for (a, b), n in sorted(c.items(), key=lambda kv: (-kv[1], kv[0]))]


def pct(part: int, whole: int) -> str:
    """Percentage with 2 decimals, rounded half up."""
    if not whole:
        return "0.00"
    q = Decimal(100 * part) / Decimal(whole)
    return str(q.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _cells(r: EvalRow, label: str, all_tokens: int) -> list:
    return [label, str(r.tokens), pct(r.tokens, all_tokens), str(r.correct), pct(r.correct, r.tokens),
            str(r.lexical_errors), pct(r.lexical_errors, r.tokens),
            str(r.disambiguation_errors), pct(r.disambiguation_errors, r.tokens)]


HEADER = ["ambiguity", "tokens", "%", "correct", "%", "LE", "%", "DE", "%"]


def table_rows(report: EvalReport) -> list:
    n = report.totals.tokens
    out = [_cells(r, r.label(), n) for r in report.rows]
    out.append(_cells(report.totals, "total", n))
    return out


def render_table(report: EvalReport, title: str | None = None) -> str:
    """Fixed-width table: header, one line per ambiguity level, then the total."""
    rows = [HEADER] + table_rows(report)
    widths = [max(len(r[i]) for r in rows) for i in range(len(HEADER))]
    lines = [title] if title else []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells))
    return "\n".join(lines) + "\n"


def render_csv(report: EvalReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["ambiguity", "tokens", "tokens_pct", "correct", "correct_pct", "le", "le_pct",
                "de", "de_pct"])
    w.writerows(table_rows(report))
    return buf.getvalue()


def render_error_types(types, limit: int | None = None) -> str:
    return "".join(f"{t.correct_tag}\t{t.tagger_tag}\t{t.count}\n" for t in types[:limit])
