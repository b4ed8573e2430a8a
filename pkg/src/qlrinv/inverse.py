"""The inverse of the type AII quantum LR map, strip by strip.

Undoing strip ``i`` of a recording tableau: reverse-extract the slack rows
``r^(i)`` from the current tableau, expand the ejected column to length
``l = ℓ(μ^(i-1))`` with :func:`~qlrinv.reduction.reduce_inverse`, and prepend
it.  Strips are undone from ``N`` (innermost) down to ``1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .errors import InvalidTarget, InvariantViolation, NonzeroSlack, ShapeMismatch
from .insertion import pieri_product, prepend_column, reverse_extract
from .recording import RecordingTableau
from .reduction import reduce_inverse
from .shapes import SkewTableau, conjugate, yamanouchi_tableau
from .slack import SlackProfile, slack_profile

Column = Tuple[int, ...]


@dataclass(frozen=True)
class InversePair:
    """A symplectic tableau ``S`` of shape ``μ`` and a recording tableau on ``λ/μ``."""

    S: SkewTableau
    Q: RecordingTableau

    def __post_init__(self) -> None:
        if self.S.outer != self.Q.inner or not self.S.is_straight:
            raise ShapeMismatch(f"S has shape {self.S.shape.outer}/{self.S.inner}, "
                                f"Q has inner shape {self.Q.inner}")


@dataclass(frozen=True)
class StripStep:
    """One application of :func:`inverse_one_strip`, kept for tracing."""

    strip: int
    r: Column
    l: int
    bumped: Column
    remainder: SkewTableau
    column: Column
    result: SkewTableau


def _one_strip(S: SkewTableau, r: Sequence[int], l: int, n: int, strip: int = 0) -> StripStep:
    r = tuple(r)
    t0 = len(r)
    if l < t0 or l > 2 * n - t0 or (l - t0) % 2:
        raise InvalidTarget(f"target length {l} is not admissible for slack {t0} and n={n}")
    extraction = reverse_extract(S, r)
    column = reduce_inverse(extraction.bumped, l, n)
    result = prepend_column(column, extraction.remainder)
    return StripStep(strip, r, l, extraction.bumped, extraction.remainder, column, result)


def inverse_one_strip(S: SkewTableau, r: Sequence[int], l: int, n: int) -> SkewTableau:
    """``S^r``: extract along ``r``, expand the bumped column to length ``l``, prepend.

    Raises:
        NotACorner, InvalidTarget, DominanceViolation: when ``(S, r, l)`` is
            outside the domain of the one-strip step.
    """
    return _one_strip(S, r, l, n).result


def _as_recording(Q: Union[RecordingTableau, SkewTableau], n: int | None) -> RecordingTableau:
    if isinstance(Q, RecordingTableau):
        if n is not None and n != Q.n:
            raise ValueError(f"recording tableau is for n={Q.n}, not n={n}")
        return Q
    if n is None:
        raise ValueError("n is required when Q is a plain tableau")
    return RecordingTableau(Q, n)


def inverse_trace(S: SkewTableau, Q: Union[RecordingTableau, SkewTableau],
                  n: int | None = None) -> Tuple[SlackProfile, List[StripStep]]:
    """The slack profile of ``Q`` and every intermediate step of the inverse map."""
    Q = _as_recording(Q, n)
    InversePair(S, Q)
    profile = slack_profile(Q)
    steps: List[StripStep] = []
    T = S
    for i in range(profile.length, 0, -1):
        step = _one_strip(T, profile.strip(i).r, profile.target_length(i), Q.n, i)
        if step.result.outer != profile.chain.mu(i - 1):
            raise InvariantViolation(f"strip {i}: produced shape {step.result.outer}, "
                                f"expected {profile.chain.mu(i - 1)}")
        steps.append(step)
        T = step.result
    return profile, steps


def lr_aii_inverse(S: SkewTableau, Q: Union[RecordingTableau, SkewTableau],
                   n: int | None = None) -> SkewTableau:
    """``S^{r^(N) ... r^(1)}``, a semistandard tableau of shape ``λ``.

    Raises:
        ShapeMismatch: if the inner shape of ``Q`` is not the shape of ``S``.
        InvariantViolation: if some step leaves the domain of the map.
    """
    _, steps = inverse_trace(S, Q, n)
    return steps[-1].result if steps else S


def inverse_null_slack(S: SkewTableau, Q: Union[RecordingTableau, SkewTableau],
                       n: int | None = None) -> SkewTableau:
    """``Y(ν) ⊙ S`` with ``ν = wt(Q)^t``, valid when every strip has slack 0.

    The columns of ``Y(ν)`` are inserted rightmost first.

    Raises:
        NonzeroSlack: if some strip of ``Q`` has positive slack.
    """
    Q = _as_recording(Q, n)
    InversePair(S, Q)
    if not slack_profile(Q).is_null:
        raise NonzeroSlack(f"recording tableau has slack {slack_profile(Q).slack_sequence}")
    Y = yamanouchi_tableau(conjugate(Q.weight))
    T = S
    for col in reversed(Y.columns()):
        T = pieri_product(col, T)
    return T

