"""Select the compiled signature kernel when it is built, else the Python one.

Set ``YOUNGWALLS_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _signature_py

BACKEND = "python"
reduce_signature = _signature_py.reduce_signature

if not os.environ.get("YOUNGWALLS_PURE_PYTHON"):
    try:
        from ._signature_ext import reduce_signature  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

reduce_signature_py = _signature_py.reduce_signature
