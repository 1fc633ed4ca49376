"""Compare the compiled kernels with their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings use arrays derived from the bundled corpus; the end-to-end
rows swap the backend under TBL training and dtree tagging.
"""
import argparse
import sys
import timeit
from contextlib import contextmanager

import numpy as np

from sttstag import _kernels, dtree, tbl
from sttstag._kernels import _pykernels, compiled
from sttstag.corpus import load_bundled, remap_cardnum, split_sentencewise
from sttstag.dtree.viterbi import _decode2, lattice
from sttstag.tbl.tagger import TblParams, model_encoding

NAMES = ("context_keys", "rule_counts", "rule_matches", "viterbi2")


@contextmanager
def backend(mod):
    saved = {n: getattr(_kernels, n) for n in NAMES}
    for n in NAMES:
        setattr(_kernels, n, getattr(mod, n))
    try:
        yield
    finally:
        for n, f in saved.items():
            setattr(_kernels, n, f)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="timing repetitions, best taken (default: 5)")
    args = ap.parse_args(argv)
    cmod = compiled()
    if cmod is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1

    train, test = split_sentencewise(remap_cardnum(load_bundled()), 8)
    tmodel = tbl.train(train, TblParams())
    dmodel = dtree.train(train)
    enc = model_encoding(tmodel)
    tags, words, pos = enc.flatten(train.forms(), train.tags())
    gold = tags.copy()
    rng = np.random.default_rng(0)
    noisy = tags.copy()
    flip = rng.choice(pos, size=len(pos) // 10, replace=False)
    noisy[flip] = rng.integers(0, enc.T - 1, len(flip))
    lats = [lattice(s, dmodel) for s in test.forms()]

    def kernels(mod):
        return {
            "context_keys": lambda: mod.context_keys(noisy, words, flip.astype(np.intp), gold, enc.T, enc.W),
            "rule_counts": lambda: [mod.rule_counts(noisy, gold, words, pos, t, 1, 2, 3) for t in range(13)],
            "rule_matches": lambda: [mod.rule_matches(noisy, words, pos, t, 1, 2) for t in range(13)],
        }

    rows = []
    py, cy = kernels(_pykernels), kernels(cmod)
    for name in py:
        rows.append((name, best(py[name], args.repeat), best(cy[name], args.repeat)))
    times = []
    for mod in (_pykernels, cmod):
        with backend(mod):
            times.append(best(lambda: [_decode2(lat, dmodel) for lat in lats], args.repeat))
    rows.append((f"viterbi2 ({len(lats)} sentences)", *times))
    for label, fn in (("tbl.train (end to end)", lambda: tbl.train(train, TblParams())),
                      ("dtree.tag_corpus (end to end)", lambda: dtree.tag_corpus(test.forms(), dmodel))):
        times = []
        for mod in (_pykernels, cmod):
            with backend(mod):
                times.append(best(fn, max(1, args.repeat // 2)))
        rows.append((label, *times))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel'.ljust(width)}  {'python [ms]':>12}  {'cython [ms]':>12}  {'speedup':>8}")
    for name, p, c in rows:
        print(f"{name.ljust(width)}  {p * 1e3:12.2f}  {c * 1e3:12.2f}  {p / c:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
