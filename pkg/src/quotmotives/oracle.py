"""Brute-force point counts of (punctual) Quot schemes over small finite fields.

A length-n quotient of the trivial rank-r sheaf on affine d-space over
F_q is the same thing as a stable framed representation: d pairwise
commuting n x n matrices (nilpotent ones for quotients supported at the
origin) together with an n x r framing whose columns generate F_q^n
under the matrix action.  Stable framed representations have trivial
stabilizer in GL_n(F_q), so the number of points is the raw number of
stable instances divided by |GL_n(F_q)| -- the division is asserted to
be exact.

The enumeration kernel exists twice: a compiled Cython extension and a
pure-Python fallback with identical semantics; the compiled one is
selected at import time when available (set QUOTMOTIVES_PURE=1 to force
the fallback).
"""

from __future__ import annotations

import os

from . import _enum_py

_kernel = _enum_py
_BACKEND = "python"
if not os.environ.get("QUOTMOTIVES_PURE"):
    try:
        from . import _enum_cy as _kernel_cy

        _kernel = _kernel_cy
        _BACKEND = "compiled"
    except ImportError:
        pass


def active_backend() -> str:
    """Which enumeration kernel is in use: "compiled" or "python"."""
    return _BACKEND


class BudgetError(ValueError):
    """Requested enumeration exceeds the supported desk-scale budget."""


_MAX_N = {1: 4, 2: 3}
_PRIMES = (2, 3, 5)
_MAX_R = 8


def _validate(n: int, r: int, q: int, d: int):
    if d not in (1, 2):
        raise ValueError(f"ambient dimension must be 1 or 2, got {d}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if r < 0:
        raise ValueError(f"rank must be >= 0, got {r}")
    if q not in _PRIMES:
        raise BudgetError(f"field size must be a prime <= 5, got {q}")
    if n > _MAX_N[d]:
        raise BudgetError(
            f"n = {n} exceeds the enumeration budget for d = {d} (max {_MAX_N[d]})")
    if r > _MAX_R:
        raise BudgetError(f"rank {r} exceeds the enumeration budget (max {_MAX_R})")


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{i<n} (q^n - q^i)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def is_stable(mats, framing, n: int, r: int, q: int) -> bool:
    """Stability of an explicit instance: the framing columns generate
    F_q^n under the matrix action.

    `mats` are flat row-major n*n tuples, `framing` a flat row-major
    n*r tuple.
    """
    cols = [tuple(framing[i * r + j] for i in range(n)) for j in range(r)]
    return _enum_py.is_stable(mats, cols, n, q)


def raw_stable_count(n: int, r: int, q: int, d: int, punctual: bool) -> int:
    """Raw number of stable (nilpotent/commuting) matrix-tuple instances."""
    _validate(n, r, q, d)
    return _kernel.count_stable(n, r, q, d, punctual)


def _orbit_count(n: int, r: int, q: int, d: int, punctual: bool) -> int:
    raw = raw_stable_count(n, r, q, d, punctual)
    g = gl_order(n, q)
    if raw % g:
        raise ArithmeticError(
            f"stable-instance count {raw} is not divisible by |GL_{n}(F_{q})| = {g}; "
            "this indicates a bug in the stability test")
    return raw // g


def count_punctual(n: int, r: int, q: int, d: int) -> int:
    """Number of F_q-points of the punctual Quot scheme (quotients of the
    trivial rank-r sheaf on affine d-space supported at the origin)."""
    return _orbit_count(n, r, q, d, punctual=True)


def count_global_affine(n: int, r: int, q: int, d: int) -> int:
    """Number of F_q-points of the Quot scheme of the trivial rank-r sheaf
    on affine d-space."""
    return _orbit_count(n, r, q, d, punctual=False)
