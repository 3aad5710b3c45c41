"""Select the compiled kernels when available, else the pure-Python ones.

Set ``NILHALL_PURE_PYTHON=1`` to force the fallback.
"""

import os

from nilhall import _pykernels

if os.environ.get("NILHALL_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from nilhall import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
Engine = _impl.Engine
mul_terms = _impl.mul_terms
eval_int_terms = _impl.eval_int_terms
CollectionLimitExceeded = _pykernels.CollectionLimitExceeded
