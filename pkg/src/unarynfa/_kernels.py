"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``UNARYNFA_KERNELS=python`` to force the fallback.
"""
import os

if os.environ.get("UNARYNFA_KERNELS", "").lower() == "python":
    from ._kernels_py import accepting_lengths, closed_walk_lengths

    BACKEND = "python"
else:
    try:
        from ._ckernels import accepting_lengths, closed_walk_lengths

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import accepting_lengths, closed_walk_lengths

        BACKEND = "python"

__all__ = ["BACKEND", "accepting_lengths", "closed_walk_lengths"]
