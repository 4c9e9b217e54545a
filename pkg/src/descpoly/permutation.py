"""Permutations of [n] with descent and drop statistics, the one-pass bubble
and stack sort operators, standardization, and the tail-peeling bijection pair
that underlies the descent-polynomial recurrence.

Positions and values are 1-based throughout, matching the usual one-line
notation: ``Permutation((3, 1, 2))`` sends 1 to 3.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from math import comb, factorial


def _bsort_word(w: tuple[int, ...]) -> tuple[int, ...]:
    # one bubble pass: split at the maximum, move it past the right block
    if not w:
        return w
    m = w.index(max(w))
    return _bsort_word(w[:m]) + w[m + 1 :] + (w[m],)


def _ssort_word(w: tuple[int, ...]) -> tuple[int, ...]:
    # one stack pass: recurse on both sides of the maximum
    if not w:
        return w
    m = w.index(max(w))
    return _ssort_word(w[:m]) + _ssort_word(w[m + 1 :]) + (w[m],)


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()):
        vs = tuple(values)
        if sorted(vs) != list(range(1, len(vs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(vs)}: {vs}")
        object.__setattr__(self, "values", vs)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def descent_set(self) -> frozenset[int]:
        """Positions i with value(i) > value(i+1).

        >>> sorted(Permutation((1, 3, 8, 4, 2, 5, 9, 7, 6)).descent_set())
        [3, 4, 7, 8]
        """
        v = self.values
        return frozenset(i + 1 for i in range(len(v) - 1) if v[i] > v[i + 1])

    def des(self) -> int:
        v = self.values
        return sum(v[i] > v[i + 1] for i in range(len(v) - 1))

    def maxdrop(self) -> int:
        """Largest value of position minus entry; 0 for the identity."""
        return max((i + 1 - v for i, v in enumerate(self.values)), default=0)

    def bsort(self) -> Permutation:
        """One bubble sort pass."""
        return Permutation(_bsort_word(self.values))

    def ssort(self) -> Permutation:
        """One stack sort pass."""
        return Permutation(_ssort_word(self.values))

    def bsc(self) -> int:
        """Number of bubble passes needed to reach the identity."""
        ident = tuple(range(1, self.n + 1))
        w = self.values
        m = 0
        while w != ident:
            w = _bsort_word(w)
            m += 1
            assert m <= self.n, "bubble sort failed to terminate"
        return m

    def __str__(self) -> str:
        return "".join(map(str, self.values)) if all(
            v < 10 for v in self.values
        ) else ",".join(map(str, self.values))


def standardize(word: Sequence[int]) -> Permutation:
    """Rank-replace a word of distinct integers onto 1..len(word); the result
    is order isomorphic to the input and has the same descent set.

    >>> standardize((1, 9, 4, 5, 2)).values
    (1, 5, 3, 4, 2)
    """
    if len(set(word)) != len(word):
        raise ValueError(f"entries must be distinct: {tuple(word)}")
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return Permutation(rank[v] for v in word)


def unstandardize(p: Permutation, ground: Iterable[int]) -> tuple[int, ...]:
    """Inverse of :func:`standardize` onto the given ground set.

    >>> unstandardize(Permutation((1, 5, 3, 4, 2)), {1, 2, 4, 5, 9})
    (1, 9, 4, 5, 2)
    """
    g = sorted(set(ground))
    if len(g) != p.n:
        raise ValueError(f"ground set of size {len(g)} for a permutation of length {p.n}")
    return tuple(g[v - 1] for v in p.values)


@dataclass(frozen=True, slots=True)
class DescentSetSpec:
    """A required descent set: positions inside [1, n-1] for length n."""

    n: int
    positions: frozenset[int]

    def __init__(self, n: int, positions: Iterable[int] = ()):
        ps = frozenset(positions)
        if any(not 1 <= i <= n - 1 for i in ps):
            raise ValueError(f"positions {sorted(ps)} not within [1, {n - 1}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "positions", ps)

    def tail_length(self) -> int:
        """Length of the maximal run n-i, ..., n-1 contained in the position
        set; 0 whenever n-1 is absent."""
        i = 0
        while (self.n - 1 - i) in self.positions:
            i += 1
        return i


def detach_tail(p: Permutation, spec: DescentSetSpec) -> tuple[Permutation, frozenset[int]]:
    """Peel the forced decreasing tail off ``p`` and standardize the rest.

    With i the tail length of ``spec``, returns the standardization of the
    first n-i-1 entries together with the set of the last i+1 entries.  The
    descent set of ``p`` must contain the required positions.
    """
    if spec.n != p.n:
        raise ValueError(f"spec length {spec.n} != permutation length {p.n}")
    if not spec.positions <= p.descent_set():
        missing = sorted(spec.positions - p.descent_set())
        raise ValueError(f"required descents {missing} absent from {p.values}")
    i = spec.tail_length()
    cut = p.n - i - 1
    return standardize(p.values[:cut]), frozenset(p.values[cut:])


def attach_tail(p: Permutation, tail: Iterable[int]) -> Permutation:
    """Inverse of :func:`detach_tail`: relabel ``p`` into the complement of
    ``tail`` inside [1, n] and append ``tail`` in decreasing order.

    >>> attach_tail(Permutation((3, 1, 4, 2)), {4, 6, 7}).values
    (3, 1, 5, 2, 7, 6, 4)
    """
    xs = sorted(set(tail))
    if not xs:
        raise ValueError("tail must be nonempty")
    n = p.n + len(xs)
    if xs[0] < 1 or xs[-1] > n:
        raise ValueError(f"tail values {xs} not within [1, {n}]")
    ground = sorted(set(range(1, n + 1)) - set(xs))
    return Permutation(unstandardize(p, ground) + tuple(reversed(xs)))


def _bounded_drop_tuples(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # fill positions right to left; position i may hold any unused value >= i-k
    out = [0] * n
    avail = list(range(1, n + 1))

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == 0:
            yield tuple(out)
            return
        for idx in range(bisect_left(avail, i - k), len(avail)):
            v = avail.pop(idx)
            out[i - 1] = v
            yield from rec(i - 1)
            avail.insert(idx, v)

    return rec(n)


def enumerate_bounded_drop(n: int, k: int) -> Iterator[Permutation]:
    """Yield every permutation of [n] with maxdrop at most k, each exactly
    once, without filtering the full symmetric group."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    for values in _bounded_drop_tuples(n, k):
        yield Permutation(values)


def bounded_drop_count(n: int, k: int) -> int:
    """Cardinality of the maxdrop <= k class: k!(k+1)^(n-k) for n >= k,
    n! otherwise."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k >= n:
        return factorial(n)
    return factorial(k) * (k + 1) ** (n - k)


def _superset_count_unrestricted(n: int, positions: frozenset[int]) -> int:
    # permutations of [n] whose descent set contains the given positions:
    # complementation turns this into a descents-only-allowed count, which is
    # the multinomial over the blocks cut by the complementary positions
    if n == 0:
        return 1
    blocks = []
    prev = 0
    for c in sorted(set(range(1, n)) - positions):
        blocks.append(c - prev)
        prev = c
    blocks.append(n - prev)
    r = factorial(n)
    for b in blocks:
        r //= factorial(b)
    return r


def count_descent_superset(spec: DescentSetSpec, k: int, method: str = "recurrence") -> int:
    """Number of maxdrop <= k permutations whose descent set contains the
    positions of ``spec``.

    ``method="recurrence"`` peels the forced tail and multiplies by the
    binomial number of admissible tail sets; the step is valid only while
    n >= k+1, below which the drop bound is vacuous and the count is the
    unrestricted multinomial.  ``method="brute"`` filters the enumeration.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if method == "brute":
        return sum(
            1
            for p in enumerate_bounded_drop(spec.n, k)
            if spec.positions <= p.descent_set()
        )
    if method != "recurrence":
        raise ValueError(f"unknown method {method!r}")

    def rec(n: int, positions: frozenset[int]) -> int:
        if n <= k:
            return _superset_count_unrestricted(n, positions)
        i = DescentSetSpec(n, positions).tail_length()
        c = comb(k + 1, i + 1)
        if c == 0:
            return 0
        return c * rec(n - i - 1, frozenset(x for x in positions if x <= n - i - 2))

    return rec(spec.n, spec.positions)
