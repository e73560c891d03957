"""Kernel selection: compiled extension when available, pure Python otherwise.

Set GRASSGAL_PURE=1 to force the pure-Python kernel.
"""

import os

from . import _fallback

if os.environ.get("GRASSGAL_PURE"):
    _impl = _fallback
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _fallback

KERNEL_NAME = "pure-python" if _impl is _fallback else "compiled"

count_completions = _impl.count_completions
expand = _impl.expand
analyze_problem = _impl.analyze_problem
