"""Independent brute-force oracles used only by the tests.

Everything here goes through the full symmetric group, so it stays honest at
the cost of n! work; the library must never call into this module.
"""

from itertools import permutations


def descent_count(values) -> int:
    return sum(values[i] > values[i + 1] for i in range(len(values) - 1))


def max_drop(values) -> int:
    return max((i + 1 - v for i, v in enumerate(values)), default=0)


def sn_descent_census(n: int) -> list[int]:
    """Coefficient list of the order-n Eulerian polynomial by direct count."""
    counts = [0] * max(n, 1)
    for p in permutations(range(1, n + 1)):
        counts[descent_count(p)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def bounded_drop_by_filter(n: int, k: int) -> list[tuple[int, ...]]:
    """All maxdrop <= k permutations, found by filtering the symmetric group."""
    if n == 0:
        return [()]
    return [p for p in permutations(range(1, n + 1)) if max_drop(p) <= k]


def bounded_drop_census(n: int, k: int) -> list[int]:
    counts = [0] * max(n, 1)
    for p in bounded_drop_by_filter(n, k):
        counts[descent_count(p)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts
