"""Clique-search circuits over 1-factorization layering.

The compiled core lives in ``_qclique``; installed wheels place it inside
this package, in-tree builds leave it next to the build directory.
"""

try:
    from qclique._qclique import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _qclique import *  # noqa: F401,F403  (in-tree build layout)
