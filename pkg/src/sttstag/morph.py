"""Morphological analyzer adapters.

An analyzer maps a batch of word types to sets of tags. Two are provided:
a rule-of-thumb stub that needs nothing external, and a file-based
adapter for a real analyzer run as a batch job. The adapter writes one
form per line to a request file, optionally runs a command, and reads
``form<TAB>CAT1 CAT2 ...`` lines back. Native categories are mapped to
tags through a mapping table (bundled: ``data/morph_map.txt``).
"""
from __future__ import annotations

import shlex
import subprocess
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Protocol

from .corpus import DEFAULT_TAGSET, Tagset, is_digit_sequence, is_ordinal_digits
from .errors import AnalyzerError, MappingError, ParseError


@dataclass(frozen=True)
class MorphAnalysis:
    form: str
    tags: frozenset

    @property
    def analyzed(self) -> bool:
        return bool(self.tags)


class Analyzer(Protocol):
    def analyze_batch(self, forms) -> list: ...


VERBAL_ENDINGS = ("en", "eln", "ern")


def stub_tags(form: str) -> frozenset:
    if is_digit_sequence(form):
        return frozenset({"CARDNUM"})
    if is_ordinal_digits(form):
        return frozenset({"ADJA"})
    tags = set()
    if form[:1].isupper():
        tags |= {"NN", "NE"}
    if form.endswith(VERBAL_ENDINGS):
        tags |= {"VVFIN", "VVINF"}
    return frozenset(tags)


class StubAnalyzer:
    """Heuristic stand-in for a wide-coverage analyzer."""

    def analyze_batch(self, forms) -> list:
        return [MorphAnalysis(f, stub_tags(f)) for f in forms]


def parse_mapping(text: str, tagset: Tagset = DEFAULT_TAGSET, source=None) -> dict:
    table = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cat, sep, tags = line.partition("\t")
        if not sep or not tags.split():
            raise ParseError(lineno, "expected: category<TAB>TAG [TAG ...]", source)
        for t in tags.split():
            tagset.check(t, f"mapping of {cat!r}")
        table[cat.strip()] = frozenset(tags.split())
    return table


def load_mapping(path=None, tagset: Tagset = DEFAULT_TAGSET) -> dict:
    if path is None:
        text = resources.files("sttstag.data").joinpath("morph_map.txt").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_mapping(text, tagset, str(path) if path else "morph_map.txt")


def map_categories(cats, mapping: dict, tagset: Tagset = DEFAULT_TAGSET) -> frozenset:
    out = set()
    for c in cats:
        if c in mapping:
            out |= mapping[c]
        elif c in tagset:
            out.add(c)
        else:
            raise MappingError(c)
    return frozenset(out)


class FileAnalyzer:
    """Batch adapter around request/response files.

    ``command`` (a string or argument list) is run after the request is
    written and must produce the response file. Without a command the
    response file is expected to exist already. Forms absent from the
    response count as unanalyzable.
    """

    def __init__(self, request, response, command=None, mapping=None,
                 tagset: Tagset = DEFAULT_TAGSET, timeout: float | None = None):
        self.request = Path(request)
        self.response = Path(response)
        self.command = shlex.split(command) if isinstance(command, str) else command
        self.mapping = load_mapping(tagset=tagset) if mapping is None else mapping
        self.tagset = tagset
        self.timeout = timeout

    def _run(self):
        try:
            proc = subprocess.run(self.command, capture_output=True, text=True, timeout=self.timeout)
        except (OSError, subprocess.SubprocessError) as exc:
            raise AnalyzerError(f"analyzer command failed: {exc}") from None
        if proc.returncode:
            detail = proc.stderr.strip().splitlines()[-1:] or [""]
            raise AnalyzerError(f"analyzer command exited with status {proc.returncode}: {detail[0]}")

    def read_response(self) -> dict:
        try:
            text = self.response.read_text(encoding="utf-8")
        except OSError as exc:
            raise AnalyzerError(f"{self.response}: cannot read analyzer response ({exc.strerror})") from None
        out = {}
        for lineno, line in enumerate(text.split("\n"), 1):
            if not line.strip():
                continue
            form, sep, cats = line.partition("\t")
            if not sep or not form:
                raise AnalyzerError(f"{self.response}:line {lineno}: expected form<TAB>categories")
            out[form] = map_categories(cats.split(), self.mapping, self.tagset)
        return out

    def analyze_batch(self, forms) -> list:
        forms = list(forms)
        try:
            self.request.write_text("".join(f + "\n" for f in forms), encoding="utf-8")
        except OSError as exc:
            raise AnalyzerError(f"{self.request}: cannot write request ({exc.strerror})") from None
        if self.command:
            self._run()
        answers = self.read_response()
        return [MorphAnalysis(f, answers.get(f, frozenset())) for f in forms]


def make_analyzer(spec: str, command=None, mapping_path=None, tagset: Tagset = DEFAULT_TAGSET):
    """``stub`` or ``file:REQUEST,RESPONSE``."""
    if spec == "stub":
        return StubAnalyzer()
    if spec.startswith("file:"):
        paths = spec[5:].split(",")
        if len(paths) != 2 or not all(paths):
            raise ValueError("file analyzer expects file:REQUEST,RESPONSE")
        mapping = load_mapping(mapping_path, tagset) if mapping_path else None
        return FileAnalyzer(paths[0], paths[1], command, mapping, tagset)
    raise ValueError(f"unknown analyzer {spec!r} (expected stub or file:REQUEST,RESPONSE)")


def analyses_dict(analyses) -> dict:
    return {a.form: a.tags for a in analyses}
