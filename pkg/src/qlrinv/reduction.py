"""Removal sets, column reduction and its inverse.

A column is a strictly increasing tuple of positive integers.  ``reduce``
deletes the removal set ``rem(a)`` and lands in the symplectic columns;
``reduce_inverse`` is its inverse at a prescribed column length.

Two inverses are provided.  :func:`reduce_inverse_formula` evaluates the
closed-form gap formula literally.  It reproduces every worked value but is
not a left inverse of :func:`reduce` in general: the gaps it computes are
the widest ones available, and they can leave adjacent pairs ``(2j-1, 2j)``
that ``reduce`` later refuses to delete.  :func:`reduce_inverse` is the
exact inverse used by the rest of the package.  It agrees with the formula
on every worked value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import InvalidTarget, NegativeGap

Column = Tuple[int, ...]


def partner(x: int) -> int:
    """``x + 1`` for odd ``x``, ``x - 1`` for even ``x``."""
    if x < 1:
        raise ValueError(f"partner is defined on positive integers, got {x}")
    return x + 1 if x % 2 else x - 1


def is_increasing(a: Sequence[int]) -> bool:
    return all(x < y for x, y in zip(a, a[1:])) and all(x >= 1 for x in a)


def is_symplectic_column(a: Sequence[int], n: int | None = None) -> bool:
    """Strictly increasing with ``a_i >= 2i - 1``; at most ``n`` entries, all ``<= 2n``."""
    if not is_increasing(a):
        return False
    if any(x < 2 * i - 1 for i, x in enumerate(a, start=1)):
        return False
    if n is not None and (len(a) > n or any(x > 2 * n for x in a)):
        return False
    return True


@dataclass(frozen=True)
class SymplecticColumn:
    entries: Column

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not is_symplectic_column(entries):
            raise ValueError(f"{entries} is not a symplectic column")

    def __len__(self) -> int:
        return len(self.entries)


def removals(a: Sequence[int]) -> Column:
    """The removal set ``rem(a)`` as an increasing tuple.

    One left to right pass; ``count[i]`` holds ``|rem(a_1..a_i)|``.
    """
    a = tuple(a)
    l = len(a)
    count = [0] * (l + 1)
    keep: List[bool] = [False] * l
    for i in range(1, l + 1):
        x = a[i - 1]
        if x % 2:
            hit = i < l and a[i] == x + 1 and x < 2 * i - count[i - 1]
        else:
            hit = i > 1 and x == a[i - 2] + 1 and x < 2 * i - count[i - 2] - 1
        keep[i - 1] = hit
        count[i] = count[i - 1] + hit
    return tuple(x for x, hit in zip(a, keep) if hit)


def reduce(a: Sequence[int]) -> Column:
    """``red(a)``: ``a`` with ``rem(a)`` deleted."""
    removed = set(removals(a))
    return tuple(x for x in a if x not in removed)


def _check_target(a: Column, l: int) -> None:
    k = len(a)
    if not is_symplectic_column(a):
        raise InvalidTarget(f"{a} is not a symplectic column")
    if l < k or (l - k) % 2:
        raise InvalidTarget(f"target length {l} incompatible with column of length {k}")


def reduce_inverse(a: Sequence[int], l: int, n: int | None = None) -> Column:
    """The unique column ``b`` of length ``l`` with ``reduce(b) == a``.

    ``b`` is ``a`` together with ``(l - k) / 2`` pairs ``(2j-1, 2j)`` disjoint
    from ``a``.  Pairs are taken lowest first, except that a pair of ``a``
    of the form ``(a_i, a_i + 1)`` with ``a_i`` odd, sitting at position
    ``i``, tolerates at most ``a_{i+1}/2 - 1 - i`` added pairs below it (more
    would make that pair removable); a candidate that would exceed some such
    budget is skipped.

    Raises:
        InvalidTarget: if ``a`` is not symplectic, ``l - k`` is odd or
            negative, or (with ``n`` given) the result would leave ``[1, 2n]``.
    """
    a = tuple(a)
    _check_target(a, l)
    k = len(a)
    present = set(a)
    budgets = [
        [a[i + 1], a[i + 1] // 2 - 2 - i]
        for i in range(k - 1)
        if a[i] % 2 and a[i + 1] == a[i] + 1
    ]
    wanted = (l - k) // 2
    added: List[int] = []
    j = 0
    while len(added) < 2 * wanted:
        j += 1
        lo, hi = 2 * j - 1, 2 * j
        if lo in present or hi in present:
            continue
        above = [b for b in budgets if b[0] > hi]
        if any(b[1] <= 0 for b in above):
            continue
        for b in above:
            b[1] -= 1
        added += [lo, hi]
    out = tuple(sorted(present.union(added)))
    if n is not None and out and out[-1] > 2 * n:
        raise InvalidTarget(f"expansion {out} leaves the alphabet [1, {2 * n}]")
    return out


def gap_lengths(a: Sequence[int], l: int) -> Tuple[int, ...]:
    """The gaps ``(l_1, ..., l_{t0+1})`` of the closed-form expansion."""
    a = tuple(a)
    t0 = len(a)
    if t0 == 0:
        return (l,)
    gaps = [a[0] - 2 if a[0] % 2 == 0 else a[0] - 1]
    for x, y in zip(a, a[1:]):
        if x % 2 == y % 2:
            gaps.append(y - x - 2)
        elif x % 2 == 0:
            gaps.append(y - x - 1)
        elif y - x >= 3:
            gaps.append(y - x - 3)
        else:
            gaps.append(0)
    gaps.append(l - t0 - sum(gaps))
    return tuple(gaps)


def reduce_inverse_formula(a: Sequence[int], l: int) -> Column:
    """Literal closed-form expansion ``T_0 T_1 ... T_{t0}``.

    ``T_0 = (1..l_1)``; for ``a_i`` even ``T_i = (a_i, a_i+1, ..., a_i+l_{i+1})``
    and for ``a_i`` odd ``T_i = (a_i, a_i+2, ..., a_i+1+l_{i+1})``.

    Raises:
        InvalidTarget: on the same preconditions as :func:`reduce_inverse`.
        NegativeGap: if some computed gap is negative.
    """
    a = tuple(a)
    _check_target(a, l)
    gaps = gap_lengths(a, l)
    if any(g < 0 for g in gaps):
        raise NegativeGap(f"gaps {gaps} for {a} at length {l}")
    out = list(range(1, gaps[0] + 1))
    for x, g in zip(a, gaps[1:]):
        if x % 2 == 0:
            out.extend(range(x, x + g + 1))
        else:
            out.append(x)
            out.extend(range(x + 2, x + g + 2))
    return tuple(out)
