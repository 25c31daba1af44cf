"""Ortholattice kernel with a compiled fast path.

Imports the Cython build of the core when present, otherwise the pure
twin.  `FOLPROOF_PURE_OLCORE=1` forces the pure implementation (used by
the benchmark and by tests that compare the two).
"""

import os

from . import _pure

if os.environ.get("FOLPROOF_PURE_OLCORE"):
    _impl = _pure
else:
    try:
        from . import _speed as _impl
    except ImportError:
        _impl = _pure

OLCore = _impl.OLCore
IMPLEMENTATION = "compiled" if _impl is not _pure else "pure"

ZERO = _pure.ZERO
ONE = _pure.ONE
LIT = _pure.LIT
MEET = _pure.MEET
JOIN = _pure.JOIN

PureOLCore = _pure.OLCore
