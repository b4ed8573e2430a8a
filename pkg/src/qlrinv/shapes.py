"""Partitions, skew shapes, tableaux and reading words.

Partitions are plain tuples in canonical form (no trailing zeros).  Cells
use 1-based matrix coordinates ``(row, column)``.  Cells of the inner shape
of a skew tableau carry no entry at all; every word and weight below is
computed over present cells only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

Partition = Tuple[int, ...]
Row = Tuple[int, ...]
Word = Tuple[int, ...]
Cell = Tuple[int, int]


def partition(parts: Sequence[int]) -> Partition:
    """Return the canonical form of ``parts``.

    Raises:
        ValueError: if ``parts`` has a negative entry or is not weakly decreasing.
    """
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"partition parts must be nonnegative: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def pad(gamma: Sequence[int], length: int) -> Tuple[int, ...]:
    if len(gamma) > length:
        raise ValueError(f"cannot pad {tuple(gamma)} to length {length}")
    return tuple(gamma) + (0,) * (length - len(gamma))


def part(gamma: Sequence[int], i: int) -> int:
    """The ``i``-th part (1-based), zero past the end."""
    return gamma[i - 1] if i <= len(gamma) else 0


def ones(m: int) -> Partition:
    """The single column partition ``(1^m)``."""
    return (1,) * m


def add(alpha: Sequence[int], beta: Sequence[int]) -> Partition:
    length = max(len(alpha), len(beta))
    return partition(a + b for a, b in zip(pad(alpha, length), pad(beta, length)))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    return len(inner) <= len(outer) and all(b <= a for a, b in zip(outer, inner))


def conjugate(gamma: Sequence[int]) -> Partition:
    if not gamma:
        return ()
    return tuple(sum(1 for p in gamma if p >= j) for j in range(1, gamma[0] + 1))


def is_even_partition(gamma: Sequence[int]) -> bool:
    padded = pad(gamma, len(gamma) + len(gamma) % 2)
    return all(padded[i] == padded[i + 1] for i in range(0, len(padded), 2))


def is_vertical_strip(inner: Sequence[int], outer: Sequence[int]) -> bool:
    if not contains(outer, inner):
        return False
    return all(a - part(inner, i) <= 1 for i, a in enumerate(outer, start=1))


def removable_rows(gamma: Sequence[int]) -> Tuple[int, ...]:
    """Rows whose last cell is a removable corner."""
    return tuple(
        i for i in range(1, len(gamma) + 1) if gamma[i - 1] > part(gamma, i + 1)
    )


# ---------------------------------------------------------------------------
# enumeration of partitions


def partitions_of(size: int, max_length: Optional[int] = None,
                  max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``size`` in reverse lexicographic order."""
    max_part = size if max_part is None else max_part
    max_length = size if max_length is None else max_length

    def rec(rest: int, bound: int, slots: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(size, max_part, max_length)


def partitions_up_to(max_size: int, max_length: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of size ``0..max_size``, by size then reverse lex."""
    for size in range(max_size + 1):
        yield from partitions_of(size, max_length=max_length)


def subpartitions(gamma: Sequence[int], max_length: Optional[int] = None) -> Iterator[Partition]:
    """All partitions contained in ``gamma`` (optionally with bounded length)."""
    gamma = tuple(gamma)
    rows = len(gamma) if max_length is None else min(len(gamma), max_length)

    def rec(i: int, bound: int) -> Iterator[Tuple[int, ...]]:
        if i == rows:
            yield ()
            return
        for x in range(min(bound, gamma[i]), -1, -1):
            if x == 0:
                yield ()
                continue
            for tail in rec(i + 1, x):
                yield (x,) + tail

    yield from rec(0, gamma[0] if gamma else 0)


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def cells(self) -> Iterator[Cell]:
        for i, length in enumerate(self.outer, start=1):
            for j in range(part(self.inner, i) + 1, length + 1):
                yield (i, j)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def is_vertical_strip(self) -> bool:
        return is_vertical_strip(self.inner, self.outer)


@dataclass(frozen=True)
class SkewTableau:
    """A filling of ``outer/inner``; ``rows[i]`` holds the present cells of row ``i+1``.

    The dataclass is hashable and compares by value, which the audit relies
    on to detect collisions.
    """

    outer: Partition
    inner: Partition
    rows: Tuple[Row, ...]

    def __post_init__(self) -> None:
        outer = partition(self.outer)
        inner = partition(self.inner)
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)
        if not contains(outer, inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        if len(rows) != len(outer):
            raise ValueError(f"expected {len(outer)} rows, got {len(rows)}")
        for i, r in enumerate(rows, start=1):
            if len(r) != outer[i - 1] - part(inner, i):
                raise ValueError(f"row {i} has {len(r)} entries, shape needs "
                                 f"{outer[i - 1] - part(inner, i)}")
            if any(x <= 0 for x in r):
                raise ValueError(f"row {i} has a nonpositive entry: {r}")

    # -- construction ------------------------------------------------------

    @classmethod
    def empty(cls, inner: Sequence[int] = ()) -> "SkewTableau":
        inner = partition(inner)
        return cls(inner, inner, tuple(() for _ in inner))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]],
                  inner: Sequence[int] = ()) -> "SkewTableau":
        """Build from the present entries of each row, deriving the outer shape."""
        inner = partition(inner)
        rows = [tuple(r) for r in rows]
        while rows and not rows[-1] and len(rows) > len(inner):
            rows.pop()
        rows += [()] * (len(inner) - len(rows))
        outer = tuple(part(inner, i) + len(r) for i, r in enumerate(rows, start=1))
        return cls(outer, inner, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "SkewTableau":
        """Build a straight-shape tableau from its columns, left to right."""
        if not columns:
            return cls((), (), ())
        height = len(columns[0])
        rows: List[List[int]] = [[] for _ in range(height)]
        for col in columns:
            for i, x in enumerate(col):
                rows[i].append(x)
        return cls.from_rows(rows)

    @classmethod
    def from_cells(cls, outer: Sequence[int], inner: Sequence[int],
                   entries: Dict[Cell, int]) -> "SkewTableau":
        shape = SkewShape(tuple(outer), tuple(inner))
        rows = [[] for _ in shape.outer]
        for (i, j) in shape.cells():
            rows[i - 1].append(entries[(i, j)])
        return cls(shape.outer, shape.inner, tuple(tuple(r) for r in rows))

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def entry(self, i: int, j: int) -> Optional[int]:
        """Entry at ``(i, j)``, or ``None`` for inner cells and cells outside."""
        if i < 1 or i > len(self.rows):
            return None
        offset = part(self.inner, i)
        k = j - offset - 1
        if 0 <= k < len(self.rows[i - 1]):
            return self.rows[i - 1][k]
        return None

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        """Present cells as ``(row, column, entry)`` in row reading order."""
        for i, r in enumerate(self.rows, start=1):
            offset = part(self.inner, i)
            for k, x in enumerate(r, start=1):
                yield (i, offset + k, x)

    def as_dict(self) -> Dict[Cell, int]:
        return {(i, j): x for i, j, x in self.cells()}

    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        """Present entries of each column, top to bottom, left to right."""
        if not self.outer:
            return ()
        cols: List[List[int]] = [[] for _ in range(self.outer[0])]
        for _, j, x in self.cells():
            cols[j - 1].append(x)
        return tuple(tuple(c) for c in cols)

    def content(self) -> Counter:
        return Counter(x for r in self.rows for x in r)

    def weight(self, m: Optional[int] = None) -> Tuple[int, ...]:
        """``(T[1], ..., T[m])``; ``m`` defaults to the largest entry."""
        counts = self.content()
        if m is None:
            m = max(counts, default=0)
        return tuple(counts[k] for k in range(1, m + 1))

    def max_entry(self) -> int:
        return max((x for r in self.rows for x in r), default=0)

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for i, j, x in self.cells():
            below = self.entry(i + 1, j)
            if below is not None and below <= x:
                return False
        return True

    def restrict(self, gamma: Sequence[int]) -> "SkewTableau":
        """The subtableau on ``gamma/inner`` (``gamma`` must contain the inner shape)."""
        gamma = partition(gamma)
        entries = {c: x for c, x in self.as_dict().items()
                   if c[1] <= part(gamma, c[0])}
        return SkewTableau.from_cells(gamma, self.inner, entries)

    def __str__(self) -> str:
        return render(self)


def render(T: SkewTableau) -> str:
    """One line per row, entries space separated, inner cells as ``.``."""
    lines = []
    for i, r in enumerate(T.rows, start=1):
        lines.append(" ".join(["."] * part(T.inner, i) + [str(x) for x in r]))
    return "\n".join(lines)


def parse_text(text: str) -> SkewTableau:
    """Inverse of :func:`render`."""
    inner: List[int] = []
    rows: List[List[int]] = []
    for line in text.strip("\n").splitlines():
        tokens = line.split()
        dots = 0
        while dots < len(tokens) and tokens[dots] == ".":
            dots += 1
        inner.append(dots)
        rows.append([int(tok) for tok in tokens[dots:]])
    return SkewTableau.from_rows(rows, partition(inner))


# ---------------------------------------------------------------------------
# words


def reverse_row_word(T: SkewTableau) -> Word:
    return tuple(x for r in T.rows for x in reversed(r))


def column_word(T: SkewTableau) -> Word:
    return tuple(x for col in T.columns() for x in reversed(col))


def reverse_column_word(T: SkewTableau) -> Word:
    return tuple(x for col in reversed(T.columns()) for x in col)


def words(T: SkewTableau) -> Tuple[Word, Word, Word]:
    """``(reverse_row, column, reverse_column)`` reading words of ``T``."""
    return reverse_row_word(T), column_word(T), reverse_column_word(T)


def is_yamanouchi(word: Sequence[int]) -> bool:
    counts: Counter = Counter()
    for x in word:
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def yamanouchi_tableau(nu: Sequence[int]) -> SkewTableau:
    nu = partition(nu)
    return SkewTableau.from_rows([(i,) * p for i, p in enumerate(nu, start=1)])
