"""Kernel selection: compiled extension when importable, pure Python otherwise.

The compiled core works on int64 values, so it is only used when the
modulus is small enough that a product of two residues fits (p < 2^31);
larger moduli always run the big-int Python kernels. Set ADAPTPOLY_PURE=1
to force the Python kernels regardless (used by the kernel benchmark).
"""

from __future__ import annotations

import os

from adaptpoly import _pykernels as python_kernels

try:
    from adaptpoly import _kernels as compiled_kernels  # type: ignore
except ImportError:  # pragma: no cover - depends on build environment
    compiled_kernels = None

COMPILED_MAX_MODULUS = 2**31 - 1

_FORCE_PURE = bool(os.environ.get("ADAPTPOLY_PURE"))

ACTIVE = "python" if (compiled_kernels is None or _FORCE_PURE) else "compiled"


def have_compiled() -> bool:
    return compiled_kernels is not None


def _impl(p: int):
    if compiled_kernels is not None and not _FORCE_PURE and p <= COMPILED_MAX_MODULUS:
        return compiled_kernels
    return python_kernels


def dense_kernel_mul(a: list, b: list, p: int, threshold: int):
    """Multiply two coefficient lists: schoolbook below the threshold, Karatsuba above.

    Returns (coeffs, muls, adds).
    """
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return [], 0, 0
    impl = _impl(p)
    if min(la, lb) < threshold:
        return impl.schoolbook_mul(a, b, p)
    return impl.karatsuba_mul(a, b, p, threshold)


def schoolbook_mul(a: list, b: list, p: int):
    return _impl(p).schoolbook_mul(a, b, p)


def karatsuba_mul(a: list, b: list, p: int, threshold: int):
    return _impl(p).karatsuba_mul(a, b, p, threshold)


def sparse_kernel_mul(ca: list, ea: list, cb: list, eb: list, p: int):
    """Heap-merged sparse product. Returns (coeffs, exps, muls, adds)."""
    return _impl(p).sparse_heap_mul(ca, ea, cb, eb, p)
