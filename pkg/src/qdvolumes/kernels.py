"""Backend selection for the hot loops.

The compiled module is used when it was built; otherwise the pure-Python
mirror. Set QDVOLUMES_BACKEND=python to force the fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("QDVOLUMES_BACKEND", "").lower() != "python":
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

rim_hooks = _impl.rim_hooks
dim = _impl.dim
character = _impl.character
lehmer_rank = _impl.lehmer_rank
count_product_one = _impl.count_product_one
count_torus = _impl.count_torus


def clear_caches():
    python_backend.clear_caches()
    if compiled_backend is not None:
        compiled_backend.clear_caches()


def cache_size():
    return _impl.cache_size()


def export_memo():
    return _impl.export_memo()


def import_memo(entries):
    _impl.import_memo(entries)
