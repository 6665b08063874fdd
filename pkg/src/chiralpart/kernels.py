"""Per-cell kernels, compiled when the extension is built.

``BACKEND`` is ``"cython"`` when ``chiralpart._speedups`` imports and
``"python"`` otherwise. Both backends return identical values.
"""

try:
    from chiralpart import _speedups as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    from chiralpart import _purepy as _impl

    BACKEND = "python"

content_sum = _impl.content_sum
hook_v2_sum = _impl.hook_v2_sum
core_quotient = _impl.core_quotient
assemble = _impl.assemble

__all__ = ["BACKEND", "assemble", "content_sum", "core_quotient", "hook_v2_sum"]
