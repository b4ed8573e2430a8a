"""Pure-Python tableau kernels.

Tableaux are passed as tuples of columns (left to right, each column top
to bottom); straight shapes only, except for :func:`sst_rows`.  This module
is the reference backend; ``_ckernels.pyx`` mirrors it line for line.
"""

from ..errors import DominanceViolation, NotACorner

BACKEND = "python"


def column_insert(cols, x):
    """Schensted column insertion of ``x``."""
    out = [list(c) for c in cols]
    for col in out:
        for k, y in enumerate(col):
            if y >= x:
                col[k], x = x, y
                break
        else:
            col.append(x)
            return tuple(tuple(c) for c in out)
    out.append([x])
    return tuple(tuple(c) for c in out)


def reverse_extract(cols, rows):
    """Reverse column insertion from the end of each row in ``rows``, largest first.

    Returns ``(bumped, remainder)`` with ``bumped`` sorted increasingly.
    """
    work = [list(c) for c in cols]
    shape = [0] * (len(work[0]) if work else 0)
    for c in work:
        for i in range(len(c)):
            shape[i] += 1
    bumped = []
    for r in sorted(rows, reverse=True):
        if r < 1 or r > len(shape) or shape[r - 1] == 0:
            raise NotACorner(f"row {r} is empty")
        below = shape[r] if r < len(shape) else 0
        if below >= shape[r - 1]:
            raise NotACorner(f"row {r} does not end in a removable corner")
        j = shape[r - 1] - 1
        y = work[j].pop()
        shape[r - 1] -= 1
        for jj in range(j - 1, -1, -1):
            col = work[jj]
            k = len(col) - 1
            while col[k] > y:
                k -= 1
            col[k], y = y, col[k]
        bumped.append(y)
        if not work[-1]:
            work.pop()
        while shape and shape[-1] == 0:
            shape.pop()
    bumped.sort()
    return tuple(bumped), tuple(tuple(c) for c in work)


def prepend_column(column, cols):
    """Literal concatenation ``column . T``; requires entrywise dominance."""
    if cols:
        first = cols[0]
        if len(column) < len(first):
            raise DominanceViolation(
                f"column of length {len(column)} is shorter than the first "
                f"column of length {len(first)}")
        for i, y in enumerate(first):
            if column[i] > y:
                raise DominanceViolation(
                    f"row {i + 1}: {column[i]} > {y}")
    return (tuple(column),) + tuple(cols)


def sst_rows(outer, inner, m):
    """All semistandard fillings of ``outer/inner`` with entries in ``[1, m]``.

    Rows are returned as tuples of present entries, in lexicographic order of
    the row reading.
    """
    cells = []
    for i, length in enumerate(outer):
        start = inner[i] if i < len(inner) else 0
        for j in range(start, length):
            cells.append((i, j))
    grid = [[0] * length for length in outer]
    starts = [inner[i] if i < len(inner) else 0 for i in range(len(outer))]
    out = []
    ncells = len(cells)

    def rec(k):
        if k == ncells:
            out.append(tuple(tuple(grid[i][starts[i]:]) for i in range(len(outer))))
            return
        i, j = cells[k]
        lo = 1
        if j > starts[i]:
            lo = grid[i][j - 1]
        if i > 0 and j >= starts[i - 1] and j < outer[i - 1]:
            above = grid[i - 1][j] + 1
            if above > lo:
                lo = above
        for v in range(lo, m + 1):
            grid[i][j] = v
            rec(k + 1)

    rec(0)
    return out
