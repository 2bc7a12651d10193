"""Pure-Python GF(2) elimination kernels on integer bitmasks.

Fallback for the compiled kernel in ``_gf2core``; both expose the same
three functions with identical bit-for-bit behaviour.  A row is a Python
int whose bit ``j`` is the entry in column ``j``.
"""

from __future__ import annotations


def rref(rows: list[int], ncols: int, pivot_limit: int = -1) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2).

    Pivot search runs over columns ``< pivot_limit`` (all ``ncols`` when
    -1), always picking the lowest eligible column and the topmost
    remaining row; row operations apply to the full row width.

    Returns ``(reduced, pivots)`` where ``reduced`` holds the pivot rows
    first (ordered by pivot column) followed by the remaining rows, which
    are zero in every eligible column.
    """
    work = list(rows)
    m = len(work)
    limit = ncols if pivot_limit < 0 else pivot_limit
    pivots: list[int] = []
    r = 0
    for col in range(limit):
        if r == m:
            break
        bit = 1 << col
        piv = -1
        for i in range(r, m):
            if work[i] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            work[r], work[piv] = work[piv], work[r]
        for i in range(m):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    return work, pivots


def solve_masked(rows: list[int], ncols: int, rhs: int, allowed: int) -> int | None:
    """Solve ``M x = b`` with the support of ``x`` restricted to ``allowed``.

    ``rhs`` packs the right-hand side as a bitmask over row indices.
    Free variables are fixed to 0, so the solution is unique for a given
    pivoting order.  Returns the solution bitmask, or None if the
    restricted system is inconsistent.
    """
    aug_bit = 1 << ncols
    aug = []
    for i, row in enumerate(rows):
        aug.append((row & allowed) | (aug_bit if (rhs >> i) & 1 else 0))
    reduced, pivots = rref(aug, ncols + 1, pivot_limit=ncols)
    for row in reduced[len(pivots):]:
        if row:
            return None
    x = 0
    for col, row in zip(pivots, reduced):
        if row & aug_bit:
            x |= 1 << col
    return x


def nullspace_masked(rows: list[int], ncols: int, allowed: int) -> list[int]:
    """Basis of ``{x subset of allowed : M x = 0}`` as bitmasks.

    One basis vector per free column, in ascending column order; columns
    outside ``allowed`` are forced to 0 and never free.
    """
    reduced, pivots = rref([row & allowed for row in rows], ncols)
    reduced = reduced[: len(pivots)]
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if not (allowed >> f) & 1 or f in pivot_set:
            continue
        v = 1 << f
        fbit = 1 << f
        for col, row in zip(pivots, reduced):
            if row & fbit:
                v |= 1 << col
        basis.append(v)
    return basis
