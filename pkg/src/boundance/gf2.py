"""Exact linear algebra over the two-element field.

Vectors and matrices are bit-packed: a vector is one Python int mask, a
matrix is one mask per row.  The elimination kernels come from the
compiled extension ``_gf2core`` when it is built, else from the pure
fallback ``_gf2py``; set ``BOUNDANCE_GF2_BACKEND=python`` or
``=compiled`` to force one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

_env = os.environ.get("BOUNDANCE_GF2_BACKEND", "").strip().lower()
if _env in ("python", "pure"):
    from . import _gf2py as kernel

    BACKEND = "python"
elif _env in ("", "compiled", "cython"):
    try:
        from . import _gf2core as kernel  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _env:
            raise
        from . import _gf2py as kernel  # type: ignore[no-redef]

        BACKEND = "python"
else:
    raise ImportError(f"unknown BOUNDANCE_GF2_BACKEND value: {_env!r}")


@dataclass(frozen=True)
class Gf2Vector:
    """Bit vector over GF(2); bit i of ``mask`` is coordinate i."""

    length: int
    mask: int = 0

    def __post_init__(self):
        if self.length < 0 or self.mask < 0 or self.mask >> self.length:
            raise ValueError("mask does not fit the declared length")

    @classmethod
    def from_support(cls, length: int, support) -> Gf2Vector:
        mask = 0
        for i in support:
            if not 0 <= i < length:
                raise ValueError(f"index {i} out of range for length {length}")
            mask ^= 1 << i
        return cls(length, mask)

    def __xor__(self, other: Gf2Vector) -> Gf2Vector:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return Gf2Vector(self.length, self.mask ^ other.mask)

    __add__ = __xor__

    def bit(self, i: int) -> int:
        return (self.mask >> i) & 1

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.mask >> i) & 1)

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.mask == 0


@dataclass(frozen=True)
class Gf2Matrix:
    """Dense bit-packed GF(2) matrix; ``rows[i]`` has bit j = entry (i, j)."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError("row does not fit the declared width")

    @classmethod
    def from_columns(cls, nrows: int, columns: list[int]) -> Gf2Matrix:
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in range(nrows):
                if (col >> i) & 1:
                    rows[i] |= 1 << j
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> Gf2Matrix:
        return cls(nrows, ncols, (0,) * nrows)

    def column(self, j: int) -> int:
        mask = 0
        for i, row in enumerate(self.rows):
            if (row >> j) & 1:
                mask |= 1 << i
        return mask

    def columns(self) -> list[Gf2Vector]:
        return [Gf2Vector(self.nrows, self.column(j)) for j in range(self.ncols)]

    def mul(self, x: Gf2Vector) -> Gf2Vector:
        if x.length != self.ncols:
            raise ValueError("dimension mismatch")
        mask = 0
        for i, row in enumerate(self.rows):
            if (row & x.mask).bit_count() & 1:
                mask |= 1 << i
        return Gf2Vector(self.nrows, mask)

    @property
    def full_column_mask(self) -> int:
        return (1 << self.ncols) - 1


def rank(M: Gf2Matrix) -> int:
    """GF(2) row rank; the input is not mutated."""
    _, pivots = kernel.rref(list(M.rows), M.ncols)
    return len(pivots)


def solve(M: Gf2Matrix, b: Gf2Vector) -> Gf2Vector | None:
    """Some x with Mx = b (free variables 0), or None if none exists."""
    if b.length != M.nrows:
        raise ValueError(f"dimension mismatch: {b.length} rhs vs {M.nrows} rows")
    x = kernel.solve_masked(list(M.rows), M.ncols, b.mask, M.full_column_mask)
    if x is None:
        return None
    return Gf2Vector(M.ncols, x)


def nullspace_basis(M: Gf2Matrix) -> list[Gf2Vector]:
    """Basis of {x : Mx = 0}, one vector per free column, ascending."""
    masks = kernel.nullspace_masked(list(M.rows), M.ncols, M.full_column_mask)
    return [Gf2Vector(M.ncols, m) for m in masks]


def rref_basis(vectors: list[Gf2Vector]) -> list[Gf2Vector]:
    """Canonical (reduced row echelon) basis of the span of ``vectors``."""
    if not vectors:
        return []
    length = vectors[0].length
    for v in vectors:
        if v.length != length:
            raise ValueError("length mismatch")
    reduced, pivots = kernel.rref([v.mask for v in vectors], length)
    return [Gf2Vector(length, m) for m in reduced[: len(pivots)]]


def span_contains(vectors: list[Gf2Vector], v: Gf2Vector) -> bool:
    """Whether v lies in the span of ``vectors``."""
    masks = [w.mask for w in vectors]
    base = len(kernel.rref(masks, v.length)[1])
    return len(kernel.rref(masks + [v.mask], v.length)[1]) == base


def intersect_subspaces(A: list[Gf2Vector], B: list[Gf2Vector]) -> list[Gf2Vector]:
    """Canonical basis of span(A) ∩ span(B).

    Solves for coefficient vectors that express one element two ways: the
    kernel of the matrix whose columns are the concatenated generators.
    """
    if not A or not B:
        return []
    length = A[0].length
    for v in A + B:
        if v.length != length:
            raise ValueError("length mismatch")
    gens = A + B
    # row per coordinate, column per generator
    rows = [0] * length
    for j, g in enumerate(gens):
        for i in range(length):
            if (g.mask >> i) & 1:
                rows[i] |= 1 << j
    ngens = len(gens)
    combos = kernel.nullspace_masked(rows, ngens, (1 << ngens) - 1)
    found = []
    for combo in combos:
        mask = 0
        for i, g in enumerate(A):
            if (combo >> i) & 1:
                mask ^= g.mask
        if mask:
            found.append(Gf2Vector(length, mask))
    return rref_basis(found)
