# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled GF(2) elimination kernels on integer bitmasks.

Same contract as ``_gf2py``: rows come in as Python ints, get packed into
64-bit words, and the elimination loops run in C.  Selected over the pure
backend at import time by ``boundance.gf2``.
"""

from libc.stdlib cimport calloc, free
from libc.stdint cimport uint64_t

cdef uint64_t WORD_MASK = 0xFFFFFFFFFFFFFFFFu


cdef void _pack_row(uint64_t* dst, object mask, Py_ssize_t nwords):
    cdef Py_ssize_t w
    for w in range(nwords):
        dst[w] = <uint64_t>(mask & 0xFFFFFFFFFFFFFFFF)
        mask >>= 64


cdef object _unpack_row(uint64_t* src, Py_ssize_t nwords):
    cdef object mask = 0
    cdef Py_ssize_t w
    for w in range(nwords - 1, -1, -1):
        mask = (mask << 64) | src[w]
    return mask


cdef Py_ssize_t _rref_buf(uint64_t* buf, Py_ssize_t m, Py_ssize_t nwords,
                          Py_ssize_t limit, Py_ssize_t* pivots) noexcept nogil:
    """In-place full reduction; returns the number of pivots."""
    cdef Py_ssize_t r = 0, col, i, w, ww, piv
    cdef uint64_t bit, tmp
    cdef uint64_t* prow
    cdef uint64_t* irow
    for col in range(limit):
        if r == m:
            break
        w = col >> 6
        bit = (<uint64_t>1) << (col & 63)
        piv = -1
        for i in range(r, m):
            if buf[i * nwords + w] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for ww in range(nwords):
                tmp = buf[r * nwords + ww]
                buf[r * nwords + ww] = buf[piv * nwords + ww]
                buf[piv * nwords + ww] = tmp
        prow = buf + r * nwords
        for i in range(m):
            if i != r and (buf[i * nwords + w] & bit):
                irow = buf + i * nwords
                for ww in range(nwords):
                    irow[ww] ^= prow[ww]
        pivots[r] = col
        r += 1
    return r


def rref(rows, int ncols, int pivot_limit=-1):
    """Reduced row echelon form over GF(2); see ``_gf2py.rref``."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t limit = ncols if pivot_limit < 0 else pivot_limit
    cdef Py_ssize_t nwords = ((ncols if ncols > 0 else 1) + 63) >> 6
    if m == 0:
        return [], []
    cdef uint64_t* buf = <uint64_t*>calloc(m * nwords, sizeof(uint64_t))
    cdef Py_ssize_t* pivots = <Py_ssize_t*>calloc(m, sizeof(Py_ssize_t))
    if buf == NULL or pivots == NULL:
        free(buf); free(pivots)
        raise MemoryError()
    cdef Py_ssize_t i, r
    try:
        for i in range(m):
            _pack_row(buf + i * nwords, rows[i], nwords)
        r = _rref_buf(buf, m, nwords, limit, pivots)
        reduced = [_unpack_row(buf + i * nwords, nwords) for i in range(m)]
        pivot_cols = [pivots[i] for i in range(r)]
        return reduced, pivot_cols
    finally:
        free(buf)
        free(pivots)


def solve_masked(rows, int ncols, rhs, allowed):
    """Solve ``M x = b`` with ``x`` restricted to ``allowed``; see ``_gf2py``."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t width = ncols + 1
    cdef Py_ssize_t nwords = (width + 63) >> 6
    cdef Py_ssize_t aw = ncols >> 6
    cdef uint64_t abit = (<uint64_t>1) << (ncols & 63)
    if m == 0:
        return 0
    cdef uint64_t* buf = <uint64_t*>calloc(m * nwords, sizeof(uint64_t))
    cdef Py_ssize_t* pivots = <Py_ssize_t*>calloc(m, sizeof(Py_ssize_t))
    if buf == NULL or pivots == NULL:
        free(buf); free(pivots)
        raise MemoryError()
    cdef Py_ssize_t i, r, ww
    cdef uint64_t acc
    try:
        for i in range(m):
            _pack_row(buf + i * nwords, rows[i] & allowed, nwords)
            if (rhs >> i) & 1:
                buf[i * nwords + aw] |= abit
        r = _rref_buf(buf, m, nwords, ncols, pivots)
        for i in range(r, m):
            acc = 0
            for ww in range(nwords):
                acc |= buf[i * nwords + ww]
            if acc:
                return None
        x = 0
        one = 1  # Python int: shifts must not wrap at the C word size
        for i in range(r):
            if buf[i * nwords + aw] & abit:
                x |= one << pivots[i]
        return x
    finally:
        free(buf)
        free(pivots)


def nullspace_masked(rows, int ncols, allowed):
    """Basis of the ``allowed``-restricted kernel; see ``_gf2py``."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t nwords = ((ncols if ncols > 0 else 1) + 63) >> 6
    cdef Py_ssize_t i, r, f
    one = 1  # Python int: shifts must not wrap at the C word size
    if m == 0:
        return [one << f for f in range(ncols) if (allowed >> f) & 1]
    cdef uint64_t* buf = <uint64_t*>calloc(m * nwords, sizeof(uint64_t))
    cdef Py_ssize_t* pivots = <Py_ssize_t*>calloc(m, sizeof(Py_ssize_t))
    if buf == NULL or pivots == NULL:
        free(buf); free(pivots)
        raise MemoryError()
    try:
        for i in range(m):
            _pack_row(buf + i * nwords, rows[i] & allowed, nwords)
        r = _rref_buf(buf, m, nwords, ncols, pivots)
        pivot_set = {pivots[i] for i in range(r)}
        basis = []
        for f in range(ncols):
            if not (allowed >> f) & 1 or f in pivot_set:
                continue
            v = one << f
            for i in range(r):
                if buf[i * nwords + (f >> 6)] & ((<uint64_t>1) << (f & 63)):
                    v |= one << pivots[i]
            basis.append(v)
        return basis
    finally:
        free(buf)
        free(pivots)
