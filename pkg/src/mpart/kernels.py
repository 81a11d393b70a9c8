"""Selects the compiled walker kernels, falling back to pure Python.

The compiled extension (mpart._walkers, built from Cython) and the
pure-Python module (mpart._walkers_py) implement identical functions; the
extension is used when it imported successfully, unless MPART_PURE_PYTHON
is set to a nonempty value other than 0.

The compiled walkers work in 64-bit integers.  Calls whose intermediate
values could overflow (huge n or caps) are routed to the pure-Python
implementation, whose integers are unbounded.
"""

from __future__ import annotations

import os

from . import _walkers_py

try:
    from . import _walkers as _compiled
except ImportError:
    _compiled = None

_forced_py = os.environ.get("MPART_PURE_PYTHON", "0") not in ("", "0")
_default = _walkers_py if (_forced_py or _compiled is None) else _compiled

IMPLEMENTATION = "python" if _default is _walkers_py else "compiled"

# Loop bounds reach at most m*cap + m and tops/n; stay well below 2**63.
_INT64_SAFE = 2**59


def nested_sum_b(m: int, alpha, cap: int) -> int:
    impl = _default if m * cap < _INT64_SAFE and len(alpha) <= 60 else _walkers_py
    return impl.nested_sum_b(m, list(alpha), cap)


def nested_sum_c(m: int, alpha, chi, tops, cap: int) -> int:
    safe = m * cap < _INT64_SAFE and len(alpha) <= 60 and all(t < _INT64_SAFE for t in tops)
    impl = _default if safe else _walkers_py
    return impl.nested_sum_c(m, list(alpha), list(chi), list(tops), cap)


def walk_partitions(m: int, n: int, cap: int) -> int:
    impl = _default if n < _INT64_SAFE and cap < _INT64_SAFE else _walkers_py
    return impl.walk_partitions(m, n, cap)


def walk_gapfree(m: int, n: int, cap: int) -> int:
    impl = _default if n < _INT64_SAFE and cap < _INT64_SAFE else _walkers_py
    return impl.walk_gapfree(m, n, cap)
