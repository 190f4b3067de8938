# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exponent-vector kernels (int64 fast path).

Inputs whose exponents do not fit in int64 raise OverflowError during packing;
:mod:`upd.kernels` then retries with the pure-Python twin.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc


def canon_key(e):
    return (sum(e), tuple(-a for a in e))


cdef int64_t* _pack(seq, Py_ssize_t n, Py_ssize_t d) except NULL:
    cdef int64_t* buf = <int64_t*> malloc((n * d + 1) * sizeof(int64_t))
    cdef Py_ssize_t i, j
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            row = seq[i]
            for j in range(d):
                buf[i * d + j] = row[j]
    except BaseException:
        free(buf)
        raise
    return buf


cdef inline bint _div(const int64_t* a, const int64_t* b, Py_ssize_t d) noexcept nogil:
    cdef Py_ssize_t j
    for j in range(d):
        if a[j] > b[j]:
            return False
    return True


def divides(a, b):
    cdef Py_ssize_t j, d = len(a)
    cdef int64_t x, y
    for j in range(d):
        x = a[j]
        y = b[j]
        if x > y:
            return False
    return True


def divides_any(gens, m):
    gens = list(gens)
    cdef Py_ssize_t n = len(gens)
    if n == 0:
        return False
    cdef Py_ssize_t d = len(m)
    cdef int64_t* G = _pack(gens, n, d)
    cdef int64_t* M
    cdef Py_ssize_t i
    cdef bint hit = False
    try:
        M = _pack((m,), 1, d)
    except BaseException:
        free(G)
        raise
    with nogil:
        for i in range(n):
            if _div(G + i * d, M, d):
                hit = True
                break
    free(G)
    free(M)
    return hit


def minimalize(gens):
    cdef list uniq = sorted(set(gens), key=canon_key)
    cdef Py_ssize_t n = len(uniq)
    if n == 0:
        return ()
    cdef Py_ssize_t d = len(uniq[0])
    cdef int64_t* G = _pack(uniq, n, d)
    cdef int* keep = <int*> malloc(n * sizeof(int))
    cdef Py_ssize_t i, k, nkept = 0
    cdef bint covered
    if keep == NULL:
        free(G)
        raise MemoryError()
    with nogil:
        for i in range(n):
            covered = False
            for k in range(nkept):
                if _div(G + keep[k] * d, G + i * d, d):
                    covered = True
                    break
            if not covered:
                keep[nkept] = <int> i
                nkept += 1
    out = tuple([uniq[keep[k]] for k in range(nkept)])
    free(G)
    free(keep)
    return out


def pairwise_mul(A, B):
    A = list(A)
    B = list(B)
    cdef Py_ssize_t na = len(A), nb = len(B)
    if na == 0 or nb == 0:
        return []
    cdef Py_ssize_t d = len(A[0])
    cdef int64_t* PA = _pack(A, na, d)
    cdef int64_t* PB
    try:
        PB = _pack(B, nb, d)
    except BaseException:
        free(PA)
        raise
    cdef Py_ssize_t i, j, c
    cdef int64_t s
    cdef list out = []
    try:
        for i in range(na):
            for j in range(nb):
                row = []
                for c in range(d):
                    s = PA[i * d + c] + PB[j * d + c]
                    if s < 0:
                        raise OverflowError("exponent sum overflows int64")
                    row.append(s)
                out.append(tuple(row))
    finally:
        free(PA)
        free(PB)
    return out


def pairwise_lcm(A, B):
    A = list(A)
    B = list(B)
    cdef Py_ssize_t na = len(A), nb = len(B)
    if na == 0 or nb == 0:
        return []
    cdef Py_ssize_t d = len(A[0])
    cdef int64_t* PA = _pack(A, na, d)
    cdef int64_t* PB
    try:
        PB = _pack(B, nb, d)
    except BaseException:
        free(PA)
        raise
    cdef Py_ssize_t i, j, c
    cdef int64_t x, y
    cdef list out = []
    for i in range(na):
        for j in range(nb):
            row = []
            for c in range(d):
                x = PA[i * d + c]
                y = PB[j * d + c]
                row.append(x if x > y else y)
            out.append(tuple(row))
    free(PA)
    free(PB)
    return out


def colon_monomial(gens, g):
    gens = list(gens)
    cdef Py_ssize_t n = len(gens)
    if n == 0:
        return []
    cdef Py_ssize_t d = len(g)
    cdef int64_t* G = _pack(gens, n, d)
    cdef int64_t* M
    try:
        M = _pack((g,), 1, d)
    except BaseException:
        free(G)
        raise
    cdef Py_ssize_t i, c
    cdef int64_t x, y
    cdef list out = []
    for i in range(n):
        row = []
        for c in range(d):
            x = G[i * d + c]
            y = M[c]
            row.append(x - y if x > y else 0)
        out.append(tuple(row))
    free(G)
    free(M)
    return out
