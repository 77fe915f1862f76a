"""Exact integer polynomials and cyclotomic factorization.

Polynomials over the integers are dense coefficient tuples, constant term
first, so ``IntPoly((-1, 0, 1))`` is x^2 - 1.  Everything here is exact:
Python ints are arbitrary precision and no float ever appears.  The main
consumers are the group-order formulas, which are products of a power of x
and factors of the shape x^n - w with w a root of unity, so they factor
exactly into cyclotomic polynomials.

All values are immutable after construction and every operation is a pure
function, so the module is safe to use from multiple threads.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass


class NotCyclotomicProduct(ValueError):
    """Raised when a polynomial is not a product of x-powers and cyclotomics."""


@dataclass(frozen=True)
class IntPoly:
    """A polynomial with integer coefficients, constant term first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        cs = tuple(int(c) for c in coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @staticmethod
    def x_power_minus(n: int, omega: int) -> IntPoly:
        """Return x^n - omega (the standard order-formula factor)."""
        if n < 1:
            raise ValueError("exponent must be positive")
        return IntPoly((-omega,) + (0,) * (n - 1) + (1,))

    @staticmethod
    def one() -> IntPoly:
        return IntPoly((1,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(tuple(out))

    def shift(self, n: int) -> IntPoly:
        """Multiply by x^n."""
        if self.is_zero():
            return self
        return IntPoly((0,) * n + self.coeffs)

    def divmod_exact(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder over the integers.

        The divisor must be monic (all our divisors are cyclotomics), which
        keeps the division exact in Z[x].
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPoly(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quot[i - dd] = c
                for j, d in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * d
        return IntPoly(tuple(quot)), IntPoly(tuple(rem))

    def divides(self, other: IntPoly) -> bool:
        _, rem = other.divmod_exact(self)
        return rem.is_zero()

    def evaluate(self, x: int) -> int:
        """Exact Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def trailing_zero_count(self) -> int:
        """Multiplicity of the root 0, i.e. the largest n with x^n dividing."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        n = 0
        while self.coeffs[n] == 0:
            n += 1
        return n

    def __repr__(self) -> str:
        if self.is_zero():
            return "IntPoly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = "" if (abs(c) == 1 and i > 0) else str(abs(c))
            var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(("-" if c < 0 else ("+" if terms else "")) + mag + var)
        return f"IntPoly({' '.join(terms)})"


@functools.cache
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial.

    Computed by exact division of x^d - 1 by all lower cyclotomics whose
    index divides d.
    """
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = IntPoly.x_power_minus(d, 1)
    for e in range(1, d):
        if d % e == 0:
            poly, rem = poly.divmod_exact(cyclotomic(e))
            assert rem.is_zero()
    return poly


@dataclass(frozen=True)
class CycloFactorization:
    """x^q_power times a product of cyclotomic polynomials.

    ``factors`` maps the cyclotomic index d to its multiplicity.  Evaluating
    the factorization at any integer point reproduces the original
    polynomial's value exactly.
    """

    q_power: int
    factors: tuple[tuple[int, int], ...]

    def multiplicity(self, d: int) -> int:
        return dict(self.factors).get(d, 0)

    def evaluate(self, q: int) -> int:
        value = q**self.q_power
        for d, e in self.factors:
            value *= cyclotomic(d).evaluate(q) ** e
        return value

    def expand(self) -> IntPoly:
        poly = IntPoly.one().shift(self.q_power)
        for d, e in self.factors:
            for _ in range(e):
                poly = poly * cyclotomic(d)
        return poly

    def merged_with(self, other: CycloFactorization) -> CycloFactorization:
        combined = dict(self.factors)
        for d, e in other.factors:
            combined[d] = combined.get(d, 0) + e
        return CycloFactorization(self.q_power + other.q_power, tuple(sorted(combined.items())))


def factor_into_cyclotomics(poly: IntPoly) -> CycloFactorization:
    """Factor a polynomial as x^N times a product of cyclotomics.

    Greedy trial division by Phi_d in increasing d, repeating each d until
    division fails.  The inputs we care about (products of x^n - w factors
    with w in {1, -1}, plus x^8 + x^4 + 1) are genuine cyclotomic products,
    so the residual always reaches 1; anything else raises
    NotCyclotomicProduct.
    """
    if poly.is_zero():
        raise NotCyclotomicProduct("the zero polynomial has no cyclotomic factorization")
    n = poly.trailing_zero_count()
    rest, _ = poly.divmod_exact(IntPoly.one().shift(n)) if n else (poly, None)
    exponents: dict[int, int] = {}
    # phi(d) >= sqrt(d/2), so any cyclotomic factor of a degree-m polynomial
    # has index at most 2 m^2.
    d_limit = 2 * poly.degree * poly.degree + 4
    d = 0
    while rest.degree > 0:
        d += 1
        if d > d_limit:
            raise NotCyclotomicProduct(f"residual {rest!r} is not a cyclotomic product")
        if euler_totient(d) > rest.degree:
            continue
        phi = cyclotomic(d)
        while phi.degree <= rest.degree:
            quot, rem = rest.divmod_exact(phi)
            if not rem.is_zero():
                break
            exponents[d] = exponents.get(d, 0) + 1
            rest = quot
    if not rest.is_one():
        raise NotCyclotomicProduct(f"constant residual {rest!r} is not 1")
    return CycloFactorization(n, tuple(sorted(exponents.items())))


def euler_totient(n: int) -> int:
    """Euler's totient, by factoring n (small n only; used for cross-checks)."""
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result
