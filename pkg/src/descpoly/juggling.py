"""Periodic juggling sequences (siteswaps), the bounded-drop permutation
encoding, and the ball-removing transform induced by one bubble sort pass.

A period-n sequence of throw heights is a valid siteswap exactly when the
landing times t_i + i are pairwise distinct modulo n; the ball count is then
the mean throw height.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .permutation import Permutation


class DropExceedsK(ValueError):
    """The permutation has a drop larger than the requested ball count."""


@dataclass(frozen=True, slots=True)
class JugglingSequence:
    """Throw heights (t_1, ..., t_n) for one period, n >= 1."""

    throws: tuple[int, ...]

    def __init__(self, throws: Iterable[int]):
        ts = tuple(throws)
        if not ts:
            raise ValueError("a juggling sequence needs period >= 1")
        if any(not isinstance(t, int) or t < 0 for t in ts):
            raise ValueError(f"throw heights must be nonnegative integers: {ts}")
        object.__setattr__(self, "throws", ts)

    @property
    def period(self) -> int:
        return len(self.throws)

    def is_valid(self) -> bool:
        """True when all landing times are distinct modulo the period.

        >>> JugglingSequence((3, 5, 0, 2, 0)).is_valid()
        True
        """
        n = self.period
        return len({(t + i + 1) % n for i, t in enumerate(self.throws)}) == n

    def ball_count(self) -> int:
        """Mean throw height; defined only for valid sequences."""
        if not self.is_valid():
            raise ValueError(f"not a valid juggling sequence: {self.throws}")
        return sum(self.throws) // self.period


def throw_sequence(p: Permutation, k: int) -> JugglingSequence:
    """Encode a permutation with maxdrop <= k as the k-ball siteswap whose
    throw at time i is k - i + value(i)."""
    if p.n == 0:
        raise ValueError("cannot encode the empty permutation")
    if p.maxdrop() > k:
        raise DropExceedsK(f"maxdrop {p.maxdrop()} of {p.values} exceeds k={k}")
    return JugglingSequence(tuple(k - (i + 1) + v for i, v in enumerate(p.values)))


def _remove_ball_word(seg: tuple[int, ...]) -> tuple[int, ...]:
    # mirror of one bubble pass: the latest-landing throw moves to the end of
    # the current segment, shortened by the segment length plus one
    if not seg:
        return seg
    landings = [t + i + 1 for i, t in enumerate(seg)]
    top = max(landings)
    if landings.count(top) > 1:
        raise ValueError(f"ambiguous latest landing in {seg}; not a permutation encoding")
    j = landings.index(top)
    return _remove_ball_word(seg[:j]) + seg[j + 1 :] + (top - len(seg) - 1,)


def remove_ball(T: JugglingSequence) -> JugglingSequence:
    """Transform a k-ball sequence arising from a bounded-drop permutation
    into the (k-1)-ball sequence of its bubble-sorted image."""
    if T.ball_count() == 0:
        raise ValueError("no ball to remove")
    return JugglingSequence(_remove_ball_word(T.throws))
