import pytest

from sttstag import dtree, tbl
from sttstag.corpus import load_bundled, remap_cardnum, split_sentencewise
from sttstag.lexicon import build


@pytest.fixture(scope="session")
def bundled_split():
    return split_sentencewise(remap_cardnum(load_bundled()), 8)


@pytest.fixture(scope="session")
def bundled_lexicon(bundled_split):
    return build(bundled_split[0])


@pytest.fixture(scope="session")
def tbl_model(bundled_split, bundled_lexicon):
    return tbl.train(bundled_split[0], tbl.TblParams(), bundled_lexicon)


@pytest.fixture(scope="session")
def dtree_model(bundled_split, bundled_lexicon):
    return dtree.train(bundled_split[0], bundled_lexicon)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[n])
