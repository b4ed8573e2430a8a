"""𝔨-weights, extremal symplectic tableaux and generation of 𝔨-highest/lowest weight tableaux.

The alphabet ``[1, 2n]`` is split into the interleaved sequences
``u = (2, 3, 6, 7, 10, ...)`` and ``v = (1, 4, 5, 8, 9, ...)``; the 𝔨-weight of
a tableau pairs the multiplicities of ``u_k`` and ``v_k``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .insertion import prepend_column
from .inverse import lr_aii_inverse
from .recording import RecordingTableau, enumerate_rec
from .reduction import reduce_inverse
from .shapes import Partition, SkewTableau, add, partition, subpartitions

HIGHEST = "highest"
LOWEST = "lowest"
KINDS = (HIGHEST, LOWEST)


@dataclass(frozen=True)
class KWeight:
    coords: Tuple[int, ...]

    @property
    def is_dominant(self) -> bool:
        c = self.coords
        return all(x >= 0 for x in c) and all(a >= b for a, b in zip(c, c[1:]))

    def __neg__(self) -> "KWeight":
        return KWeight(tuple(-x for x in self.coords))


def u_value(k: int) -> int:
    return 2 * k - (1 + (-1) ** k) // 2


def v_value(k: int) -> int:
    return 2 * k - (1 + (-1) ** (k + 1)) // 2


def uv_sequences(n: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """``(u_1..u_n)`` and ``(v_1..v_n)``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (tuple(u_value(k) for k in range(1, n + 1)),
            tuple(v_value(k) for k in range(1, n + 1)))


def k_weight(S: SkewTableau, n: int) -> KWeight:
    """``(S[u_k] - S[v_k])_k``."""
    counts = S.content()
    u, v = uv_sequences(n)
    return KWeight(tuple(counts[a] - counts[b] for a, b in zip(u, v)))


def extremal_symplectic(mu: Sequence[int], n: int, kind: str = HIGHEST) -> SkewTableau:
    """Row ``i`` constant ``u_i`` (highest) or ``v_i`` (lowest)."""
    mu = partition(mu)
    if len(mu) > n:
        raise ValueError(f"{mu} has more than {n} parts")
    u, v = uv_sequences(n)
    letters = {HIGHEST: u, LOWEST: v}[kind]
    return SkewTableau.from_rows([(letters[i],) * p for i, p in enumerate(mu)])


def khw_vertical_strip(mu_prime: Sequence[int], u_subset: Sequence[int],
                       l: int, n: int) -> SkewTableau:
    """``red^{-1}(u_subset) . S^{H,μ'}``, a 𝔨-highest weight tableau of 𝔨-weight ``μ' + δ_r``.

    ``r`` is the index set of ``u_subset`` inside ``u``.

    Raises:
        ValueError: if ``u_subset`` is not made of ``u`` values or ``μ' + δ_r``
            is not a partition with at most ``n`` parts.
        InvalidTarget: as in :func:`~qlrinv.reduction.reduce_inverse`.
    """
    mu_prime = partition(mu_prime)
    u, _ = uv_sequences(n)
    u_subset = tuple(u_subset)
    if any(x not in u for x in u_subset) or list(u_subset) != sorted(set(u_subset)):
        raise ValueError(f"{u_subset} is not an increasing subset of {u}")
    r = [u.index(x) + 1 for x in u_subset]
    delta = [1 if i in r else 0 for i in range(1, n + 1)]
    padded = list(mu_prime) + [0] * (n - len(mu_prime))
    mu = [a + b for a, b in zip(padded, delta)]
    if any(a < b for a, b in zip(mu, mu[1:])):
        raise ValueError(f"{mu_prime} + δ_{tuple(r)} is not a partition")
    column = reduce_inverse(u_subset, l, n)
    return prepend_column(column, extremal_symplectic(mu_prime, n, HIGHEST))


@dataclass(frozen=True)
class KhwEntry:
    mu: Partition
    Q: RecordingTableau
    T: SkewTableau


def generate_khw_entries(lam: Sequence[int], n: int, kind: str = HIGHEST) -> List[KhwEntry]:
    """Every ``LR^{-1}(S_μ, Q)`` with ``S_μ`` extremal of shape ``μ``, grouped by ``μ``.

    Raises:
        AssertionError: if two pairs produce the same tableau.
    """
    lam = partition(lam)
    out: List[KhwEntry] = []
    if len(lam) > 2 * n:
        return out
    for mu in sorted(subpartitions(lam, n)):
        recs = enumerate_rec(lam, mu, n)
        if not recs:
            continue
        S = extremal_symplectic(mu, n, kind)
        out.extend(KhwEntry(mu, Q, lr_aii_inverse(S, Q)) for Q in recs)
    seen = Counter(e.T for e in out)
    assert all(c == 1 for c in seen.values()), "generated sets are not disjoint"
    return out


def generate_khw_set(lam: Sequence[int], n: int, kind: str = HIGHEST) -> List[SkewTableau]:
    """The 𝔨-highest (or lowest) weight tableaux of ``SST_{2n}(λ)``."""
    return [e.T for e in generate_khw_entries(lam, n, kind)]


# ---------------------------------------------------------------------------
# n = 2 patterns

TYPE1 = "type1"
TYPE2 = "type2"
REJECT = "reject"

_SHARED = {(1, 2, 3, 4), (1, 2, 3), (1, 2, 4), (2, 3), (2,)}
_TYPE1_COLUMNS = _SHARED | {(1, 2)}
_TYPE2_COLUMNS = _SHARED | {(2, 3, 4)}


@dataclass(frozen=True)
class N2Class:
    """Pattern label with the multiplicities of ``(1,2,3)``, ``(1,2,4)``, ``(2,3)``, ``(2)``."""

    label: str
    x: int
    y: int
    z: int
    w: int
    ambiguous: bool = False

    @property
    def inequalities_hold(self) -> bool:
        return self.x <= self.w and self.y <= self.z


def classify_n2(T: SkewTableau, tie: Optional[str] = None) -> N2Class:
    """Match the column multiset of ``T`` against the two n=2 𝔨-highest weight patterns.

    A tableau using neither ``(1,2)`` nor ``(2,3,4)`` fits both patterns; it
    is labelled ``tie`` (default ``type2``) and flagged ambiguous.
    """
    cols = Counter(T.columns())
    x, y, z, w = cols[(1, 2, 3)], cols[(1, 2, 4)], cols[(2, 3)], cols[(2,)]
    kinds = set(cols)
    fits1 = kinds <= _TYPE1_COLUMNS
    fits2 = kinds <= _TYPE2_COLUMNS
    if fits1 and fits2:
        return N2Class(tie or TYPE2, x, y, z, w, ambiguous=True)
    if fits1:
        return N2Class(TYPE1, x, y, z, w)
    if fits2:
        return N2Class(TYPE2, x, y, z, w)
    return N2Class(REJECT, x, y, z, w)


def slack_row_counts(Q: RecordingTableau) -> Counter:
    """How often each row index occurs across the slack vectors of ``Q``."""
    from .slack import slack_profile

    return Counter(x for r in slack_profile(Q).vector_sequence for x in r)


def hook_rows(kind: str, N: int, u: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The two rows of the n=1 hook tableau for ``N`` strips and ``S`` of length ``u``."""
    if kind == HIGHEST:
        return (1,) * N + (2,) * u, (2,) * N
    return (1,) * (N + u), (2,) * N


def hook_shape(N: int, u: int) -> Partition:
    return add((N + u,), (0, N))
