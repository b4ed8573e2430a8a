# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled tableau kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free

from ..errors import DominanceViolation, NotACorner

BACKEND = "cython"


def column_insert(tuple cols, int x):
    cdef list out = [list(c) for c in cols]
    cdef list col
    cdef Py_ssize_t k, n
    cdef int y
    cdef bint placed
    for col in out:
        placed = False
        n = len(col)
        for k in range(n):
            y = col[k]
            if y >= x:
                col[k] = x
                x = y
                placed = True
                break
        if not placed:
            col.append(x)
            return tuple([tuple(c) for c in out])
    out.append([x])
    return tuple([tuple(c) for c in out])


def reverse_extract(tuple cols, rows):
    cdef list work = [list(c) for c in cols]
    cdef Py_ssize_t height = len(work[0]) if work else 0
    cdef list shape = [0] * height
    cdef list col
    cdef list bumped = []
    cdef Py_ssize_t i, j, jj, k, r, below
    cdef int y, z
    for col in work:
        for i in range(len(col)):
            shape[i] += 1
    for r in sorted(rows, reverse=True):
        if r < 1 or r > len(shape) or shape[r - 1] == 0:
            raise NotACorner(f"row {r} is empty")
        below = shape[r] if r < len(shape) else 0
        if below >= shape[r - 1]:
            raise NotACorner(f"row {r} does not end in a removable corner")
        j = shape[r - 1] - 1
        y = (<list>work[j]).pop()
        shape[r - 1] -= 1
        for jj in range(j - 1, -1, -1):
            col = work[jj]
            k = len(col) - 1
            while <int>col[k] > y:
                k -= 1
            z = col[k]
            col[k] = y
            y = z
        bumped.append(y)
        if not work[len(work) - 1]:
            work.pop()
        while shape and shape[len(shape) - 1] == 0:
            shape.pop()
    bumped.sort()
    return tuple(bumped), tuple([tuple(c) for c in work])


def prepend_column(column, tuple cols):
    cdef Py_ssize_t i
    cdef tuple first
    column = tuple(column)
    if cols:
        first = cols[0]
        if len(column) < len(first):
            raise DominanceViolation(
                f"column of length {len(column)} is shorter than the first "
                f"column of length {len(first)}")
        for i in range(len(first)):
            if column[i] > first[i]:
                raise DominanceViolation(f"row {i + 1}: {column[i]} > {first[i]}")
    return (column,) + cols


cdef struct Filling:
    int ncells
    int nrows
    int m
    int *ci
    int *cj
    int *above      # index of the cell above, or -1
    int *left       # index of the cell to the left, or -1
    int *vals
    int *row_start  # first cell index of each row
    int *row_len


cdef void _emit(Filling *f, list out):
    cdef int i, k
    rows = []
    for i in range(f.nrows):
        rows.append(tuple([f.vals[k] for k in range(f.row_start[i], f.row_start[i] + f.row_len[i])]))
    out.append(tuple(rows))


cdef void _rec(Filling *f, int k, list out):
    cdef int lo, v
    if k == f.ncells:
        _emit(f, out)
        return
    lo = 1
    if f.left[k] >= 0:
        lo = f.vals[f.left[k]]
    if f.above[k] >= 0 and f.vals[f.above[k]] + 1 > lo:
        lo = f.vals[f.above[k]] + 1
    for v in range(lo, f.m + 1):
        f.vals[k] = v
        _rec(f, k + 1, out)


def sst_rows(outer, inner, int m):
    cdef Filling f
    cdef int i, j, k, start, prev_start, nrows = len(outer)
    cdef int ncells = 0
    for i in range(nrows):
        start = inner[i] if i < len(inner) else 0
        ncells += outer[i] - start
    f.ncells = ncells
    f.nrows = nrows
    f.m = m
    f.ci = <int *>malloc((ncells + 1) * sizeof(int))
    f.cj = <int *>malloc((ncells + 1) * sizeof(int))
    f.above = <int *>malloc((ncells + 1) * sizeof(int))
    f.left = <int *>malloc((ncells + 1) * sizeof(int))
    f.vals = <int *>malloc((ncells + 1) * sizeof(int))
    f.row_start = <int *>malloc((nrows + 1) * sizeof(int))
    f.row_len = <int *>malloc((nrows + 1) * sizeof(int))
    cdef list out = []
    try:
        k = 0
        for i in range(nrows):
            start = inner[i] if i < len(inner) else 0
            f.row_start[i] = k
            f.row_len[i] = outer[i] - start
            for j in range(start, outer[i]):
                f.ci[k] = i
                f.cj[k] = j
                f.left[k] = k - 1 if j > start else -1
                f.above[k] = -1
                if i > 0:
                    prev_start = inner[i - 1] if i - 1 < len(inner) else 0
                    if j >= prev_start:
                        f.above[k] = f.row_start[i - 1] + (j - prev_start)
                f.vals[k] = 0
                k += 1
        _rec(&f, 0, out)
    finally:
        free(f.ci)
        free(f.cj)
        free(f.above)
        free(f.left)
        free(f.vals)
        free(f.row_start)
        free(f.row_len)
    return out
