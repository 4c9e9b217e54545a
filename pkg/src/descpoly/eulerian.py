"""Eulerian numbers and polynomials, and two identities built from them.

The Eulerian polynomial of order n is the descent generating polynomial over
all permutations of [n]; its coefficients are the Eulerian numbers.  Both
identity checkers return the difference of the two sides as a polynomial, so
"the identity holds" means "the residual is zero".
"""

from __future__ import annotations

from functools import cache
from math import comb, factorial

from .polynomial import IntPoly


def eulerian_number(n: int, k: int) -> int:
    """The number of permutations of [n] with exactly k descents.

    Computed by the classical alternating sum; out-of-range k gives 0 so
    that identity sums may range freely.

    >>> [eulerian_number(4, k) for k in range(4)]
    [1, 11, 11, 1]
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if k < 0 or k >= max(n, 1):
        return 0
    return sum((-1) ** i * comb(n + 1, i) * (k + 1 - i) ** n for i in range(k + 1))


@cache
def eulerian_poly(n: int) -> IntPoly:
    """The order-n Eulerian polynomial as an ``IntPoly``; orders 0 and 1 are 1."""
    return IntPoly([eulerian_number(n, k) for k in range(max(n, 1))])


def gen_binomial(a: int, j: int) -> int:
    """Binomial coefficient by falling factorial, valid for any integer a.

    >>> gen_binomial(-1, 3)
    -1
    >>> gen_binomial(2, 5)
    0
    """
    if j < 0:
        raise ValueError("lower index must be nonnegative")
    num = 1
    for t in range(j):
        num *= a - t
    return num // factorial(j)


def euler_identity_residual(order: int) -> IntPoly:
    """Residual of the binomial recurrence sum against x times the Eulerian
    polynomial of the same order.

    Zero for order >= 1; the order-0 residual is 1 - x and is documented
    rather than asserted away.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    x = IntPoly((0, 1))
    xm1 = IntPoly((-1, 1))
    acc = IntPoly()
    shift = IntPoly((1,))
    for t in range(order + 1):
        acc = acc + shift * eulerian_poly(order - t) * comb(order, t)
        shift = shift * xm1
    return acc - x * eulerian_poly(order)


def ab_identity_residual(a: int, b: int) -> IntPoly:
    """Residual of the two-parameter Eulerian identity with generalized
    binomials; zero whenever a + b >= 0 (the a + b = 0 corner included).
    """
    m = a + b
    if m < 0:
        raise ValueError("requires a + b >= 0")
    x = IntPoly((0, 1))
    one_minus_x = IntPoly((1, -1))
    lhs = IntPoly()
    rhs = IntPoly()
    shift = IntPoly((1,))
    for j in range(m + 1):
        term = shift * eulerian_poly(m - j)
        lhs = lhs + term * ((-1) ** j * gen_binomial(a, j))
        rhs = rhs + term * gen_binomial(b, j)
        shift = shift * one_minus_x
    # after the loop, shift is (1 - x)**(m + 1)
    return lhs - x * rhs - shift * gen_binomial(b, m)
