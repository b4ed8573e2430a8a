"""LR-Sundaram tableaux, strip chains and recording tableaux.

A recording tableau ``Q`` of shape ``λ/μ`` is equivalent to a chain of
partitions ``λ = μ^(0) ⊃ μ^(1) ⊃ ... ⊃ μ^(N) = μ`` whose steps are vertical
strips of even size: strip ``k`` is the set of cells of ``Q`` holding ``k``.
LR-Sundaram tableaux carry the same chain, with strip ``k`` filled top to
bottom by ``1, 2, ..., Q[k]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from . import _kernels
from .errors import MalformedLRS
from .shapes import (
    Cell,
    Partition,
    SkewTableau,
    conjugate,
    contains,
    is_even_partition,
    is_vertical_strip,
    is_yamanouchi,
    pad,
    part,
    partition,
    reverse_column_word,
)


# ---------------------------------------------------------------------------
# strip chains


@dataclass(frozen=True)
class StripChain:
    """``shapes[0] = λ ⊃ shapes[1] ⊃ ... ⊃ shapes[N] = μ``, each step a vertical strip."""

    shapes: Tuple[Partition, ...]

    def __post_init__(self) -> None:
        shapes = tuple(partition(s) for s in self.shapes)
        object.__setattr__(self, "shapes", shapes)
        if not shapes:
            raise ValueError("a strip chain needs at least one shape")
        for outer, inner in zip(shapes, shapes[1:]):
            if not is_vertical_strip(inner, outer):
                raise ValueError(f"{outer}/{inner} is not a vertical strip")

    @property
    def outer(self) -> Partition:
        return self.shapes[0]

    @property
    def inner(self) -> Partition:
        return self.shapes[-1]

    @property
    def length(self) -> int:
        """The number ``N`` of strips."""
        return len(self.shapes) - 1

    def mu(self, i: int) -> Partition:
        """``μ^(i)`` for ``0 <= i <= N``."""
        return self.shapes[i]

    def strip_rows(self, i: int) -> Tuple[int, ...]:
        """Rows (1-based, increasing) of the cells of strip ``i``."""
        outer, inner = self.shapes[i - 1], self.shapes[i]
        return tuple(r for r in range(1, len(outer) + 1) if outer[r - 1] > part(inner, r))

    def strip_cells(self, i: int) -> Tuple[Cell, ...]:
        outer = self.shapes[i - 1]
        return tuple((r, outer[r - 1]) for r in self.strip_rows(i))

    def sizes(self) -> Tuple[int, ...]:
        return tuple(sum(a) - sum(b) for a, b in zip(self.shapes, self.shapes[1:]))

    def to_tableau(self) -> SkewTableau:
        """The filling with strip ``i`` labelled ``i``."""
        entries: Dict[Cell, int] = {}
        for i in range(1, self.length + 1):
            for c in self.strip_cells(i):
                entries[c] = i
        return SkewTableau.from_cells(self.outer, self.inner, entries)

    @classmethod
    def from_tableau(cls, Q: SkewTableau) -> "StripChain":
        """Chain of ``μ ∪ {Q >= k}``; ``Q`` must satisfy R1 and R2."""
        N = Q.max_entry()
        shapes = []
        for k in range(1, N + 2):
            shapes.append(_nested_shape(Q, k))
        return cls(tuple(shapes))


def _nested_shape(Q: SkewTableau, k: int) -> Partition:
    """``μ^(k-1)``: the inner shape together with the cells holding values ``>= k``."""
    rows = []
    for i, r in enumerate(Q.rows, start=1):
        rows.append(part(Q.inner, i) + sum(1 for x in r if x >= k))
    return tuple(x for x in rows if x)


# ---------------------------------------------------------------------------
# recording tableaux


def _bounds_ok(outer: Partition, inner: Partition, n: int) -> bool:
    return len(inner) <= n and len(outer) <= 2 * n


def is_recording(Q: SkewTableau, n: int) -> bool:
    """Conditions R1-R5 (with ``ℓ(μ) <= n`` and ``ℓ(λ) <= 2n``)."""
    if not _bounds_ok(Q.outer, Q.inner, n):
        return False
    # R1: rows strictly decrease
    for r in Q.rows:
        if any(a <= b for a, b in zip(r, r[1:])):
            return False
    # R2: columns weakly decrease
    for i, j, x in Q.cells():
        below = Q.entry(i + 1, j)
        if below is not None and below > x:
            return False
    N = Q.max_entry()
    weight = Q.weight(N)
    # R3
    if any(c % 2 for c in weight):
        return False
    # R4, with μ^(k-1) recomputed from Q for each k
    for k in range(1, N + 1):
        if weight[k - 1] < 2 * (len(_nested_shape(Q, k)) - n):
            return False
    # R5
    counts = [0] * (N + 2)
    for r in Q.rows:
        for x in r:
            counts[x] += 1
        if any(counts[k + 1] > counts[k] for k in range(1, N + 1)):
            return False
    return True


@dataclass(frozen=True)
class RecordingTableau:
    """A filling of ``λ/μ`` satisfying R1-R5 for the alphabet ``[1, 2n]``."""

    tableau: SkewTableau
    n: int

    def __post_init__(self) -> None:
        if not is_recording(self.tableau, self.n):
            raise ValueError(f"not a recording tableau for n={self.n}:\n{self.tableau}")

    @classmethod
    def from_chain(cls, chain: StripChain, n: int) -> "RecordingTableau":
        return cls(chain.to_tableau(), n)

    @property
    def outer(self) -> Partition:
        return self.tableau.outer

    @property
    def inner(self) -> Partition:
        return self.tableau.inner

    @property
    def length(self) -> int:
        return self.tableau.max_entry()

    @property
    def weight(self) -> Tuple[int, ...]:
        """``(Q[1], ..., Q[N])``."""
        return self.tableau.weight(self.length)

    @property
    def chain(self) -> StripChain:
        return StripChain.from_tableau(self.tableau)

    def __str__(self) -> str:
        return str(self.tableau)


# ---------------------------------------------------------------------------
# enumeration


def _strip_removals(gamma: Partition, mu: Partition) -> Iterator[Tuple[Partition, Tuple[int, ...]]]:
    """Partitions ``δ`` with ``μ ⊆ δ`` and ``γ/δ`` a vertical strip, with the strip rows."""
    candidates = [i for i in range(1, len(gamma) + 1) if gamma[i - 1] > part(mu, i)]
    for choice in product((0, 1), repeat=len(candidates)):
        taken = tuple(i for i, c in zip(candidates, choice) if c)
        if not taken:
            continue
        delta = list(gamma)
        for i in taken:
            delta[i - 1] -= 1
        if any(a < b for a, b in zip(delta, delta[1:])):
            continue
        yield partition(delta), taken


def _prefix_counts(rows: Sequence[int], height: int) -> List[int]:
    counts = [0] * (height + 1)
    for r in rows:
        counts[r] += 1
    for r in range(1, height + 1):
        counts[r] += counts[r - 1]
    return counts


def enumerate_chains(lam: Sequence[int], mu: Sequence[int], n: int) -> List[StripChain]:
    """Strip chains from ``λ`` down to ``μ`` whose labelling is a recording tableau.

    Chains are grown inwards from ``λ``; R3 and R4 are checked on each new
    strip and R5 against the previous one.
    """
    lam, mu = partition(lam), partition(mu)
    if not contains(lam, mu) or not _bounds_ok(lam, mu, n):
        return []
    height = len(lam)
    out: List[StripChain] = []

    def grow(chain: List[Partition], prev: List[int] | None) -> None:
        gamma = chain[-1]
        if gamma == mu:
            out.append(StripChain(tuple(chain)))
            return
        for delta, taken in _strip_removals(gamma, mu):
            size = len(taken)
            if size % 2 or size < 2 * (len(gamma) - n):
                continue
            counts = _prefix_counts(taken, height)
            if prev is not None and any(c > p for c, p in zip(counts, prev)):
                continue
            grow(chain + [delta], counts)

    grow([lam], None)
    return out


def _sort_key(Q: SkewTableau) -> Tuple[Tuple[int, ...], ...]:
    return Q.rows


def enumerate_rec(lam: Sequence[int], mu: Sequence[int], n: int) -> List[RecordingTableau]:
    """``Rec_{2n}(λ/μ)`` in lexicographic order of the row reading."""
    tableaux = [c.to_tableau() for c in enumerate_chains(lam, mu, n)]
    tableaux.sort(key=_sort_key)
    return [RecordingTableau(Q, n) for Q in tableaux]


def enumerate_rec_by_filling(lam: Sequence[int], mu: Sequence[int], n: int) -> List[RecordingTableau]:
    """Reference enumeration: every R1/R2 filling of ``λ/μ``, filtered by R1-R5.

    R1/R2 fillings with values in ``[1, M]`` are the transposes of
    semistandard fillings of the conjugate shape under ``x -> M + 1 - x``.
    """
    lam, mu = partition(lam), partition(mu)
    if not contains(lam, mu) or not _bounds_ok(lam, mu, n):
        return []
    size = sum(lam) - sum(mu)
    M = max(size // 2, 1)
    lam_t, mu_t = conjugate(lam), conjugate(mu)
    found = []
    for rows_t in _kernels.sst_rows(lam_t, mu_t, M):
        entries = {}
        for j, r in enumerate(rows_t, start=1):
            offset = part(mu_t, j)
            for k, x in enumerate(r, start=1):
                entries[(offset + k, j)] = M + 1 - x
        Q = SkewTableau.from_cells(lam, mu, entries)
        if is_recording(Q, n):
            found.append(Q)
    found.sort(key=_sort_key)
    return [RecordingTableau(Q, n) for Q in found]


# ---------------------------------------------------------------------------
# LR-Sundaram tableaux


def is_lrs(T: SkewTableau, n: int) -> bool:
    """Yamanouchi reverse column word, even weight, and ``T(n+i, 1) >= 2i``."""
    if not _bounds_ok(T.outer, T.inner, n) or T.max_entry() > 2 * n:
        return False
    if not T.is_semistandard():
        return False
    if not is_yamanouchi(reverse_column_word(T)):
        return False
    weight = T.weight(2 * n)
    if any(a < b for a, b in zip(weight, weight[1:])) or not is_even_partition(weight):
        return False
    for i in range(1, len(T.rows) - n + 1):
        x = T.entry(n + i, 1)
        if x is not None and x < 2 * i:
            return False
    return True


def strip_decomposition(T: SkewTableau) -> StripChain:
    """The chain of an LR-Sundaram tableau.

    In round ``k`` the cells filled ``1, ..., ν^t_k`` are erased, each time
    taking the rightmost remaining cell with the wanted value.

    Raises:
        MalformedLRS: if a round fails to erase a vertical strip filled
            ``1, ..., ν^t_k`` from top to bottom.
    """
    nu = partition(sorted(T.weight(), reverse=True))
    if T.weight() != pad(nu, len(T.weight())):
        raise MalformedLRS(f"weight {T.weight()} is not a partition")
    sizes = conjugate(nu)
    remaining = T.as_dict()
    shapes = [T.outer]
    for k, size in enumerate(sizes, start=1):
        picked = []
        for v in range(1, size + 1):
            cells = [c for c, x in remaining.items() if x == v]
            if not cells:
                raise MalformedLRS(f"round {k}: no cell holds {v}")
            picked.append(max(cells, key=lambda c: (c[1], -c[0])))
        rows = [c[0] for c in picked]
        if any(a >= b for a, b in zip(rows, rows[1:])):
            raise MalformedLRS(f"round {k}: cells {picked} are not stacked top to bottom")
        gamma = list(shapes[-1])
        for (i, j) in picked:
            if j != gamma[i - 1]:
                raise MalformedLRS(f"round {k}: cell {(i, j)} is not at the end of its row")
            gamma[i - 1] -= 1
            del remaining[(i, j)]
        if any(a < b for a, b in zip(gamma, gamma[1:])):
            raise MalformedLRS(f"round {k}: erasing {picked} leaves a non-partition")
        shapes.append(partition(gamma))
    if shapes[-1] != T.inner:
        raise MalformedLRS(f"erasure stops at {shapes[-1]}, not {T.inner}")
    return StripChain(tuple(shapes))


def lozenge(T: SkewTableau) -> SkewTableau:
    """◊: relabel strip ``i`` of the decomposition with ``i``."""
    return strip_decomposition(T).to_tableau()


def lozenge_inverse(Q: SkewTableau) -> SkewTableau:
    """Relabel the cells holding ``k`` by ``1, 2, ..., Q[k]`` from top to bottom."""
    by_value: Dict[int, List[Cell]] = {}
    for i, j, x in Q.cells():
        by_value.setdefault(x, []).append((i, j))
    entries: Dict[Cell, int] = {}
    for cells in by_value.values():
        for label, c in enumerate(sorted(cells), start=1):
            entries[c] = label
    return SkewTableau.from_cells(Q.outer, Q.inner, entries)


def blacklozenge(T: SkewTableau) -> SkewTableau:
    """◆ = π ∘ tr ∘ ◊: the cell ``(i, j)`` of ``◊(T)`` moves to ``(b+1-j, a+1-i)``.

    Here ``a = ℓ(λ)`` and ``b = λ_1``; the result has shape
    ``(μ^∨)^t / (λ^∨)^t`` with complements taken in the ``a × b`` rectangle.
    """
    Q = lozenge(T)
    lam, mu = T.outer, T.inner
    a = len(lam)
    b = lam[0] if lam else 0
    lam_c = partition(b - part(lam, a + 1 - i) for i in range(1, a + 1))
    mu_c = partition(b - part(mu, a + 1 - i) for i in range(1, a + 1))
    entries = {(b + 1 - j, a + 1 - i): x for i, j, x in Q.cells()}
    return SkewTableau.from_cells(conjugate(mu_c), conjugate(lam_c), entries)
