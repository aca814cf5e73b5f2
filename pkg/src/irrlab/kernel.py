"""Kernel selection: compiled extension when available, pure Python otherwise.

``search_coloring`` is the single hot entry point; both backends implement
identical semantics including node accounting, so results (and therefore
reports) are bit-identical across backends.  ``force_backend`` exists for the
benchmark and the parity tests.
"""

from __future__ import annotations

from . import _kernel_py

FOUND = _kernel_py.FOUND
EXHAUSTED = _kernel_py.EXHAUSTED
BUDGET_HIT = _kernel_py.BUDGET_HIT

MODE_CODES = {
    "weak": _kernel_py.MODE_WEAK,
    "strong": _kernel_py.MODE_STRONG,
    "pp": _kernel_py.MODE_PP,
    "pm": _kernel_py.MODE_PM,
    "mp": _kernel_py.MODE_MP,
    "mm": _kernel_py.MODE_MM,
    "graph": _kernel_py.MODE_GRAPH,
}

try:
    from . import _speedups  # type: ignore[attr-defined]

    _COMPILED = _speedups
except ImportError:  # pragma: no cover - depends on the build
    _COMPILED = None

BACKEND = "cython" if _COMPILED is not None else "python"
_active = _COMPILED if _COMPILED is not None else _kernel_py


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _COMPILED is not None else [])


def force_backend(name: str) -> None:
    """Select 'python' or 'cython' explicitly (benchmarks and tests)."""
    global _active, BACKEND
    if name == "python":
        _active = _kernel_py
    elif name == "cython":
        if _COMPILED is None:
            raise RuntimeError("compiled kernel is not built")
        _active = _COMPILED
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name


def search_coloring(n, arcs, mode, num_colors, fixed=None, symmetry_break=False, budget=10**8):
    """Dispatch to the active backend; see irrlab._kernel_py.search_coloring."""
    if _active is not _kernel_py:
        # The compiled kernel has fixed-size buffers; fall back beyond them.
        if n > 64 or len(arcs) > 192 or num_colors > 15:
            return _kernel_py.search_coloring(
                n, arcs, mode, num_colors, fixed, symmetry_break, budget
            )
    return _active.search_coloring(n, arcs, mode, num_colors, fixed, symmetry_break, budget)
