"""Hot kernels, compiled when available.

The Cython extension is used if it was built; otherwise (or when the
environment variable ``STTSTAG_PURE_PYTHON`` is set) the numpy twins in
:mod:`._pykernels` are used. ``BACKEND`` names the active implementation.
"""
import os

from . import _pykernels

if os.environ.get("STTSTAG_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

context_keys = _impl.context_keys
rule_counts = _impl.rule_counts
rule_matches = _impl.rule_matches
viterbi2 = _impl.viterbi2


def compiled():
    """The compiled module, or None if the extension is not built."""
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels
