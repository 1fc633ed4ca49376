import sys

import pytest

from sttstag.errors import AnalyzerError, MappingError, ParseError, TagsetError
from sttstag.morph import (FileAnalyzer, MorphAnalysis, StubAnalyzer, analyses_dict, load_mapping,
                           make_analyzer, map_categories, parse_mapping, stub_tags)


@pytest.mark.parametrize("form,tags", [
    ("2345", {"CARDNUM"}),
    ("3,5", {"CARDNUM"}),
    ("17.", {"ADJA"}),
    ("Quorxel", {"NN", "NE"}),
    ("quorxeln", {"VVFIN", "VVINF"}),
    ("Wandern", {"NN", "NE", "VVFIN", "VVINF"}),
    ("schnell", set()),
])
def test_stub(form, tags):
    assert stub_tags(form) == frozenset(tags)


def test_stub_batch_keeps_order():
    out = StubAnalyzer().analyze_batch(["zu", "Haus", "zu"])
    assert [a.form for a in out] == ["zu", "Haus", "zu"]
    assert not out[0].analyzed and out[1].analyzed
    assert analyses_dict(out) == {"zu": frozenset(), "Haus": frozenset({"NN", "NE"})}


def test_bundled_mapping():
    m = load_mapping()
    assert m["S"] == {"NN"} and m["A"] == {"ADJA", "ADJD"}
    assert map_categories(["S", "V-FIN"], m) == {"NN", "VVFIN"}
    assert map_categories(["NN"], m) == {"NN"}   # tag names map to themselves
    with pytest.raises(MappingError) as exc:
        map_categories(["S", "FOO"], m)
    assert exc.value.category == "FOO"


@pytest.mark.parametrize("text,err", [("S\n", ParseError), ("S\tXYZ\n", TagsetError), ("S\t\n", ParseError)])
def test_bad_mapping(text, err):
    with pytest.raises(err):
        parse_mapping(text)


def test_file_adapter_without_command(tmp_path):
    req, resp = tmp_path / "req.txt", tmp_path / "resp.txt"
    resp.write_text("Quorxel\tS EIGEN\nschnell\tA-PRED ADV\n", encoding="utf-8")
    out = FileAnalyzer(req, resp).analyze_batch(["Quorxel", "schnell", "fehlt"])
    assert req.read_text(encoding="utf-8") == "Quorxel\nschnell\nfehlt\n"
    assert out == [MorphAnalysis("Quorxel", frozenset({"NN", "NE"})),
                   MorphAnalysis("schnell", frozenset({"ADJD", "ADV"})),
                   MorphAnalysis("fehlt", frozenset())]


def test_file_adapter_runs_command(tmp_path):
    req, resp = tmp_path / "req.txt", tmp_path / "resp.txt"
    script = ("import sys\n"
              "forms = open(sys.argv[1], encoding='utf-8').read().split()\n"
              "with open(sys.argv[2], 'w', encoding='utf-8') as f:\n"
              "    for w in forms:\n"
              "        f.write(w + '\\t' + ('S' if w[0].isupper() else 'ADV') + '\\n')\n")
    (tmp_path / "an.py").write_text(script)
    a = FileAnalyzer(req, resp, [sys.executable, str(tmp_path / "an.py"), str(req), str(resp)])
    assert analyses_dict(a.analyze_batch(["Haus", "oft"])) == {"Haus": {"NN"}, "oft": {"ADV"}}


def test_command_failure(tmp_path):
    a = FileAnalyzer(tmp_path / "r", tmp_path / "s", [sys.executable, "-c", "import sys; sys.exit('boom')"])
    with pytest.raises(AnalyzerError, match="status 1: boom"):
        a.analyze_batch(["x"])
    with pytest.raises(AnalyzerError):
        FileAnalyzer(tmp_path / "r", tmp_path / "s", [str(tmp_path / "missing-binary")]).analyze_batch(["x"])


def test_missing_or_malformed_response(tmp_path):
    with pytest.raises(AnalyzerError, match="cannot read"):
        FileAnalyzer(tmp_path / "r", tmp_path / "nope").analyze_batch(["x"])
    (tmp_path / "s").write_text("no tab here\n", encoding="utf-8")
    with pytest.raises(AnalyzerError, match="line 1"):
        FileAnalyzer(tmp_path / "r", tmp_path / "s").analyze_batch(["x"])
    (tmp_path / "s").write_text("x\tUNKNOWNCAT\n", encoding="utf-8")
    with pytest.raises(MappingError):
        FileAnalyzer(tmp_path / "r", tmp_path / "s").analyze_batch(["x"])


def test_make_analyzer(tmp_path):
    assert isinstance(make_analyzer("stub"), StubAnalyzer)
    a = make_analyzer(f"file:{tmp_path / 'a'},{tmp_path / 'b'}")
    assert isinstance(a, FileAnalyzer) and a.response == tmp_path / "b"
    for bad in ("nope", "file:", "file:onlyone"):
        with pytest.raises(ValueError):
            make_analyzer(bad)
