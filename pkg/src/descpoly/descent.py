"""Descent polynomials of bounded-drop permutations by three independent
routes, and the symmetric unimodal kernel polynomials behind the closed form.

For parameters (n, k), the descent polynomial counts permutations of [n] with
maxdrop at most k by their number of descents.  The three routes are direct
enumeration, the tail-peeling linear recurrence, and multisection of the
kernel polynomial times a geometric power.  The kernel itself has four
constructions that must agree: the closed-form sum, its stretched variant,
iterated stretch-and-multiply, and duplicate-insertion.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cache
from math import comb

from .eulerian import eulerian_poly
from .polynomial import IntPoly, LaurentPoly, geometric


class CapExceeded(ValueError):
    """Enumeration was requested beyond its configured size cap."""


@dataclass(frozen=True, slots=True)
class DescentPolyResult:
    """A descent polynomial together with the parameters and route that
    produced it; coefficient r counts permutations with r descents."""

    n: int
    k: int
    poly: IntPoly
    route: str

    def total(self) -> int:
        """Number of permutations counted, i.e. the polynomial at 1."""
        return self.poly.evaluate(1)


def _descent_census(n: int, k: int) -> list[int]:
    # same right-to-left value choice as the enumeration generator, but only
    # the running descent count survives to the leaves
    if n == 0:
        return [1]
    counts = [0] * n
    avail = list(range(1, n + 1))
    out = [0] * (n + 2)

    def rec(i: int, d: int) -> None:
        if i == 0:
            counts[d] += 1
            return
        right = out[i + 1] if i < n else 0
        for idx in range(bisect_left(avail, i - k), len(avail)):
            v = avail.pop(idx)
            out[i] = v
            rec(i - 1, d + 1 if right and v > right else d)
            avail.insert(idx, v)

    rec(n, 0)
    return counts


def descent_poly_by_enumeration(n: int, k: int, cap: int = 10) -> DescentPolyResult:
    """Exact descent census over the bounded-drop class; refuses n beyond
    ``cap`` since the work grows like k!(k+1)^(n-k)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n > cap:
        raise CapExceeded(f"enumeration for n={n} exceeds cap {cap}")
    return DescentPolyResult(n, k, IntPoly(_descent_census(n, k)), "enumeration")


@cache
def _recurrence_weights(k: int) -> tuple[IntPoly, ...]:
    ym1 = IntPoly((-1, 1))
    return tuple(comb(k + 1, i) * ym1 ** (i - 1) for i in range(1, k + 2))


@cache
def _recurrence_prefix(k: int, n: int) -> tuple[IntPoly, ...]:
    # descent polynomials for 0..n at fixed k; Eulerian up to index k, then
    # the order-(k+1) linear recurrence
    if n <= k:
        return tuple(eulerian_poly(i) for i in range(n + 1))
    prev = _recurrence_prefix(k, n - 1)
    weights = _recurrence_weights(k)
    acc = IntPoly()
    for i in range(1, k + 2):
        acc = acc + weights[i - 1] * prev[n - i]
    return prev + (acc,)


def descent_poly_by_recurrence(n: int, k: int) -> DescentPolyResult:
    """Descent polynomial through the tail-peeling recurrence with Eulerian
    initial conditions."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n <= k:
        return DescentPolyResult(n, k, eulerian_poly(n), "recurrence")
    for m in range(k + 1, n):  # warm the cache without deep recursion
        _recurrence_prefix(k, m)
    return DescentPolyResult(n, k, _recurrence_prefix(k, n)[n], "recurrence")


@cache
def kernel_poly(k: int) -> IntPoly:
    """The degree-k^2 kernel polynomial of the closed form, evaluated exactly
    in Laurent arithmetic; every negative power must cancel.

    >>> kernel_poly(2).coeffs
    (1, 1, 2, 1, 1)
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    mod = k + 1
    shift_base = IntPoly((-1,) + (0,) * (mod - 1) + (1,))  # u^(k+1) - 1
    total = LaurentPoly()
    for j in range(k + 1):
        head = eulerian_poly(k - j).substitute_power(mod) * shift_base**j
        tail = LaurentPoly([comb(k - t, j) for t in range(k - j + 1)], -k)
        total = total + LaurentPoly.from_poly(head) * tail
    p = total.to_poly()
    assert p.degree == k * k, f"kernel degree {p.degree} != {k * k}"
    return p


def stretched_kernel_poly(k: int) -> IntPoly:
    """The stretched kernel straight from its own closed-form sum (modulus
    k+2 in place of k+1); must equal ``stretch(kernel_poly(k), k)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    mod = k + 2
    shift_base = IntPoly((-1,) + (0,) * (mod - 1) + (1,))
    total = LaurentPoly()
    for t in range(k + 1):
        head = eulerian_poly(k - t).substitute_power(mod) * shift_base**t
        tail = LaurentPoly([comb(k - s, t) for s in range(k - t + 1)], -k)
        total = total + LaurentPoly.from_poly(head) * tail
    p = total.to_poly()
    assert p.degree == k * k + k, f"stretched kernel degree {p.degree} != {k * k + k}"
    return p


def stretch(p: IntPoly, k: int) -> IntPoly:
    """Insert zero coefficients into a degree-k^2 kernel so that the result
    has a gap after the constant term and after every further k+1 entries;
    the result has degree k^2 + k."""
    if p.degree != k * k:
        raise ValueError(f"expected degree {k * k}, got {p.degree}")
    out = [0] * (k * k + k + 1)
    out[0] = p.coeffs[0]
    for i in range(1, len(p.coeffs)):
        out[i + 1 + (i - 1) // (k + 1)] = p.coeffs[i]
    return IntPoly(out)


def kernel_poly_by_stretch(k: int) -> IntPoly:
    """Build the kernel iteratively: each next kernel is the stretch of the
    previous one times the next geometric sum."""
    if k < 1:
        raise ValueError("stretch construction starts at k = 1")
    p = IntPoly((1, 1))
    for j in range(1, k):
        p = stretch(p, j) * geometric(j + 1)
    return p


def kernel_poly_by_duplication(k: int) -> IntPoly:
    """Build the kernel by the coefficient rule of the unimodality argument:
    window-sum the previous coefficient sequence, then duplicate every entry
    whose index is a multiple of the window length.

    >>> kernel_poly_by_duplication(2).coeffs
    (1, 1, 2, 1, 1)
    """
    if k < 1:
        raise ValueError("duplication construction starts at k = 1")
    seq = [1, 1]
    for j in range(1, k):
        window = [sum(seq[max(0, i - j) : i + 1]) for i in range(j * j + j + 1)]
        grown: list[int] = []
        for i, b in enumerate(window):
            grown.append(b)
            if i % (j + 1) == 0:
                grown.append(b)
        seq = grown
    return IntPoly(seq)


def descent_poly_by_closed_form(n: int, k: int) -> DescentPolyResult:
    """Every (k+1)-th coefficient of the kernel times the geometric power.

    For n < k the drop bound is vacuous and the Eulerian polynomial is
    returned directly, avoiding a negative geometric exponent.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n < k:
        poly = eulerian_poly(n)
    else:
        poly = (kernel_poly(k) * geometric(k) ** (n - k)).multisect(k + 1)
    return DescentPolyResult(n, k, poly, "closed_form")


_ROUTES = {
    "enum": descent_poly_by_enumeration,
    "rec": descent_poly_by_recurrence,
    "closed": descent_poly_by_closed_form,
}


def descent_poly(n: int, k: int, route: str = "rec", cap: int = 10) -> DescentPolyResult:
    """Dispatch to one of the three routes by its short name."""
    if route not in _ROUTES:
        raise ValueError(f"unknown route {route!r}")
    if route == "enum":
        return descent_poly_by_enumeration(n, k, cap=cap)
    return _ROUTES[route](n, k)
