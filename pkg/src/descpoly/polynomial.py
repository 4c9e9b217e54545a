"""Exact dense polynomial arithmetic over Python's big integers.

``IntPoly`` stores coefficients lowest degree first, so ``IntPoly((1, 0, 2))``
is ``1 + 2u^2``.  ``LaurentPoly`` additionally allows negative exponents; it
carries the ``u**-i`` intermediates of the closed-form constructions, and
converting back to an ``IntPoly`` checks that every negative power cancelled.
"""

from __future__ import annotations

from collections.abc import Iterable


class NegativeExponentResidue(ValueError):
    """A Laurent polynomial kept a nonzero coefficient on a negative power."""


class IntPoly:
    """Immutable dense polynomial with arbitrary-precision integer coefficients.

    The zero polynomial is the empty coefficient tuple; the trailing stored
    coefficient is always nonzero.

    >>> IntPoly((1, 2)) * IntPoly((1, 1))
    IntPoly((1, 3, 2))
    >>> IntPoly((1, 1)) ** 3
    IntPoly((1, 3, 3, 1))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> int:
        """Coefficient of the ``j``-th power; zero outside the stored range."""
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return (-self) + other

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substitute_power(self, m: int) -> IntPoly:
        """Return p(u^m): coefficient ``j`` of p lands on power ``m*j``."""
        if m < 1:
            raise ValueError("power substitution needs m >= 1")
        if m == 1 or self.is_zero():
            return self
        out = [0] * ((len(self.coeffs) - 1) * m + 1)
        for j, c in enumerate(self.coeffs):
            out[m * j] = c
        return IntPoly(out)

    def multisect(self, step: int) -> IntPoly:
        """Keep every ``step``-th coefficient: the new power ``d`` holds the
        old coefficient of power ``d*step``."""
        if step < 1:
            raise ValueError("multisection needs step >= 1")
        return IntPoly(self.coeffs[::step])

    def reverse(self, d: int) -> IntPoly:
        """Return ``u^d * p(1/u)``: old power ``j`` moves to ``d - j``."""
        if self.is_zero():
            return self
        if d < len(self.coeffs) - 1:
            raise ValueError(f"reversal degree {d} below degree {self.degree}")
        out = [0] * (d + 1)
        for j, c in enumerate(self.coeffs):
            out[d - j] = c
        return IntPoly(out)

    def is_symmetric(self) -> bool:
        if self.is_zero():
            raise ValueError("symmetry is undefined for the zero polynomial")
        return self.coeffs == self.coeffs[::-1]

    def is_unimodal(self) -> bool:
        """True when coefficients weakly increase, then weakly decrease."""
        if self.is_zero():
            raise ValueError("unimodality is undefined for the zero polynomial")
        cs = self.coeffs
        i = 0
        while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
            i += 1
        while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
            i += 1
        return i == len(cs) - 1

    def pretty(self, var: str = "u") -> str:
        """
        >>> IntPoly((1, 0, 2, -1)).pretty()
        '1 + 2u^2 - u^3'
        """
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            term = "" if j == 0 else var if j == 1 else f"{var}^{j}"
            body = str(mag) if (j == 0 or mag != 1) else ""
            if not parts:
                parts.append(("-" if c < 0 else "") + body + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + body + term)
        return " ".join(parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"


def geometric(k: int) -> IntPoly:
    """The sum ``1 + u + ... + u^k``; ``geometric(0)`` is 1."""
    if k < 0:
        raise ValueError("geometric sum needs k >= 0")
    return IntPoly((1,) * (k + 1))


class LaurentPoly:
    """Polynomial allowing negative exponents, normalized at both ends.

    ``coeffs[j]`` holds the coefficient of power ``min_exp + j``; the first
    and last stored coefficients are nonzero unless the value is zero.
    """

    __slots__ = ("coeffs", "min_exp")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        drop = 0
        while drop < len(cs) and cs[drop] == 0:
            drop += 1
        cs = cs[drop:]
        self.coeffs = tuple(cs)
        self.min_exp = min_exp + drop if cs else 0

    @classmethod
    def term(cls, coefficient: int, exponent: int) -> LaurentPoly:
        return cls((coefficient,), exponent)

    @classmethod
    def from_poly(cls, p: IntPoly) -> LaurentPoly:
        return cls(p.coeffs, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int | None:
        return self.min_exp + len(self.coeffs) - 1 if self.coeffs else None

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for j, c in enumerate(self.coeffs):
            out[self.min_exp - lo + j] += c
        for j, c in enumerate(other.coeffs):
            out[other.min_exp - lo + j] += c
        return LaurentPoly(out, lo)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple(-c for c in self.coeffs), self.min_exp)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(tuple(c * other for c in self.coeffs), self.min_exp)
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return LaurentPoly(out, self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def to_poly(self) -> IntPoly:
        """Convert to ``IntPoly``; raise ``NegativeExponentResidue`` if a
        negative power survives normalization."""
        if self.is_zero():
            return IntPoly()
        if self.min_exp < 0:
            raise NegativeExponentResidue(
                f"nonzero coefficient {self.coeffs[0]} on power {self.min_exp}"
            )
        return IntPoly((0,) * self.min_exp + self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.coeffs == other.coeffs
            and self.min_exp == other.min_exp
        )

    def __hash__(self) -> int:
        return hash((self.min_exp, self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r}, min_exp={self.min_exp})"
