"""Column insertion, the Pieri product, column prepending and reverse extraction.

All operations here act on straight-shape semistandard tableaux and are thin
wrappers around :mod:`qlrinv._kernels`, which works with tuples of columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from . import _kernels
from .shapes import SkewTableau

Column = Tuple[int, ...]


def _require_straight(T: SkewTableau, op: str) -> None:
    if not T.is_straight:
        raise ValueError(f"{op} needs a straight shape, got inner shape {T.inner}")


def column_insert(x: int, T: SkewTableau) -> SkewTableau:
    """Schensted column insertion of the letter ``x`` into ``T``.

    ``x`` replaces the topmost entry ``>= x`` of column 1 and the displaced
    entry moves on to column 2; if a column has no such entry, the travelling
    value is appended at its bottom.
    """
    _require_straight(T, "column_insert")
    return SkewTableau.from_columns(_kernels.column_insert(T.columns(), x))


def pieri_product(S: Sequence[int], T: SkewTableau) -> SkewTableau:
    """``S ⊙ T`` for a strictly increasing column ``S``.

    The entries of ``S`` are column inserted in increasing order; with this
    order the product agrees with :func:`prepend_column` whenever ``S``
    dominates the first column of ``T``.
    """
    _require_straight(T, "pieri_product")
    cols = T.columns()
    for x in S:
        cols = _kernels.column_insert(cols, x)
    return SkewTableau.from_columns(cols)


def prepend_column(C: Sequence[int], T: SkewTableau) -> SkewTableau:
    """Literal concatenation ``C.T``: ``C`` becomes column 1.

    Raises:
        DominanceViolation: if ``C`` is shorter than the first column of ``T``
            or exceeds it in some row.
    """
    _require_straight(T, "prepend_column")
    return SkewTableau.from_columns(_kernels.prepend_column(tuple(C), T.columns()))


@dataclass(frozen=True)
class BumpExtraction:
    """Result of :func:`reverse_extract`: the ejected values and what is left."""

    bumped: Column
    remainder: SkewTableau


def reverse_extract(S: SkewTableau, r: Sequence[int]) -> BumpExtraction:
    """Reverse column insertion from the end of each row in ``r``, bottom row first.

    The value removed from row ``r_i`` travels leftwards; in each column it
    replaces the bottom-most entry ``<= y``.  The values pushed out of column
    1 are returned sorted, together with the tableau of shape ``μ - δ_r``.

    Raises:
        NotACorner: if a row of ``r`` does not end in a removable corner when
            it is processed.
    """
    _require_straight(S, "reverse_extract")
    bumped, cols = _kernels.reverse_extract(S.columns(), tuple(r))
    return BumpExtraction(bumped, SkewTableau.from_columns(cols))
