"""Slack numbers, slack row-index vectors and incidence data of recording tableaux.

For strip ``i`` of a chain ``μ^(i-1) ⊃ μ^(i)``, the slack row-index vector
``r^(i)`` lists the rows of ``[1, ℓ(μ^(i))]`` that the strip misses and the
slack ``t0^(i)`` is its length.  Strips are stored as indexed (``1..N``);
the displayed sequences run from strip ``N`` down to strip ``1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .recording import RecordingTableau, StripChain
from .shapes import Partition, SkewTableau

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class StripSlack:
    t0: int
    r: Vector
    delta: Vector

    def __post_init__(self) -> None:
        if len(self.r) != self.t0:
            raise ValueError(f"slack {self.t0} does not match row vector {self.r}")


@dataclass(frozen=True)
class SlackProfile:
    """Slack data of every strip of a chain; ``strips[i-1]`` belongs to strip ``i``."""

    chain: StripChain
    strips: Tuple[StripSlack, ...]

    def __post_init__(self) -> None:
        if len(self.strips) != self.chain.length:
            raise ValueError(f"{len(self.strips)} strips for a chain of length {self.chain.length}")

    @property
    def length(self) -> int:
        return len(self.strips)

    def strip(self, i: int) -> StripSlack:
        return self.strips[i - 1]

    def target_length(self, i: int) -> int:
        """``l = ℓ(μ^(i-1))``, the column length produced when undoing strip ``i``."""
        return len(self.chain.mu(i - 1))

    @property
    def slack_sequence(self) -> Vector:
        """``(t0^(N), ..., t0^(1))``."""
        return tuple(s.t0 for s in reversed(self.strips))

    @property
    def vector_sequence(self) -> Tuple[Vector, ...]:
        """``[r^(N), ..., r^(1)]``."""
        return tuple(s.r for s in reversed(self.strips))

    @property
    def incidence_matrix(self) -> Tuple[Vector, ...]:
        """The ``ℓ(μ^(1)) × N`` matrix with columns ``δ_{r^(N)}, ..., δ_{r^(1)}``, as rows."""
        return self.padded_incidence_matrix()

    def padded_incidence_matrix(self, height: int | None = None) -> Tuple[Vector, ...]:
        """The incidence matrix with ``height`` rows (default ``ℓ(μ^(1))``), padded with zero rows."""
        if not self.strips:
            return ()
        natural = len(self.chain.mu(1))
        height = natural if height is None else height
        if height < natural:
            raise ValueError(f"height {height} is below ℓ(μ^(1)) = {natural}")
        columns = [s.delta + (0,) * (height - len(s.delta)) for s in reversed(self.strips)]
        return tuple(tuple(col[i] for col in columns) for i in range(height))

    @property
    def is_null(self) -> bool:
        return all(s.t0 == 0 for s in self.strips)


def incidence_vector(r: Sequence[int], length: int) -> Vector:
    marked = set(r)
    return tuple(1 if i in marked else 0 for i in range(1, length + 1))


def strip_slack(outer: Partition, inner: Partition) -> StripSlack:
    """Slack data of the vertical strip ``outer/inner``."""
    height = len(inner)
    rows = {i for i in range(1, len(outer) + 1)
            if outer[i - 1] > (inner[i - 1] if i <= height else 0)}
    r = tuple(i for i in range(1, height + 1) if i not in rows)
    return StripSlack(len(r), r, incidence_vector(r, height))


def slack_profile(Q: Union[RecordingTableau, SkewTableau, StripChain]) -> SlackProfile:
    if isinstance(Q, RecordingTableau):
        chain = Q.chain
    elif isinstance(Q, SkewTableau):
        chain = StripChain.from_tableau(Q)
    else:
        chain = Q
    strips = tuple(strip_slack(chain.mu(i - 1), chain.mu(i))
                   for i in range(1, chain.length + 1))
    return SlackProfile(chain, strips)


def leq_r(x: Sequence[int], y: Sequence[int]) -> bool:
    """``x ≤_r y``: ``len(x) >= len(y)`` and ``x_i <= y_i`` wherever ``y_i > 0``."""
    if len(x) < len(y):
        return False
    return all(a <= b for a, b in zip(x, y) if b > 0)


def validate_slack(p: SlackProfile, n: int) -> bool:
    """Clauses (a)-(e) of slack monotonicity, for every strip."""
    chain = p.chain
    prev_t0, prev_r = 0, ()
    for i in range(1, p.length + 1):
        s = p.strip(i)
        outer, inner = chain.mu(i - 1), chain.mu(i)
        size = sum(outer) - sum(inner)
        if s.r != tuple(sorted(set(s.r))) or len(s.delta) != len(inner):
            return False
        if s.delta != incidence_vector(s.r, len(inner)):
            return False
        if len(outer) != size + s.t0 or len(outer) < len(inner):  # (a)
            return False
        if not prev_t0 <= s.t0 <= len(inner):  # (b)
            return False
        if 2 * n < size + 2 * s.t0:  # (c)
            return False
        if not leq_r(s.r, prev_r):  # (d)
            return False
        if any(not 1 <= x <= min(len(inner), 2 * n - s.t0) for x in s.r):  # (e)
            return False
        prev_t0, prev_r = s.t0, s.r
    return True


def admissible_slacks(n: int) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    """Pairs ``(Q[i], allowed t0^(i))`` permitted by ``2n >= Q[i] + 2 t0``, largest ``Q[i]`` first."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return tuple((q, tuple(range((2 * n - q) // 2 + 1)))
                 for q in range(2 * n, 1, -2))
