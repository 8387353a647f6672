"""Selects the band-scan implementation at import time.

The compiled extension is preferred; the pure-Python module is a drop-in
fallback.  Set CRIPT_PURE=1 to force the fallback (used by the benchmark
and the twin-equivalence tests).
"""

import os

import numpy as np

from . import _bandscan_py

if os.environ.get("CRIPT_PURE"):
    _impl = _bandscan_py
else:
    try:
        from . import _bandscan as _impl
    except ImportError:
        _impl = _bandscan_py

IMPLEMENTATION = _impl.IMPLEMENTATION

KIND_BYTES = b"CBD"  # index = kind rank
_KIND_LOOKUP = np.frombuffer(KIND_BYTES, dtype=np.uint8)


def band_scan(n, m, impl=None):
    """Sorted letter arrays for the band between upper row n and lower row m.

    Returns (rank, key2, tie2, jj, ii) sorted by (key2, tie2, rank), which
    realizes the left-to-right position order of the letters.
    """
    module = impl or _impl
    n = np.ascontiguousarray(n, dtype=np.int32)
    m = np.ascontiguousarray(m, dtype=np.int32)
    rank, key2, tie2, jj, ii = module.emit_letters(n, m)
    if rank.size == 0:
        return rank, key2, tie2, jj, ii
    order = np.lexsort((rank, tie2, key2))
    return rank[order], key2[order], tie2[order], jj[order], ii[order]


def kinds_text(rank: np.ndarray) -> str:
    """Kind ranks to the band's letter string, e.g. [0,1,1,0] -> 'CBBC'."""
    if rank.size == 0:
        return ""
    return _KIND_LOOKUP[rank].tobytes().decode("ascii")
