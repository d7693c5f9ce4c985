"""Kernel selection: compiled GF(p) elimination if available, numpy otherwise."""

try:
    from ._gfelim import row_echelon_modp

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from ._gfelim_py import row_echelon_modp

    BACKEND = "python"

__all__ = ["row_echelon_modp", "BACKEND"]
