"""Exact arithmetic in cyclotomic fields Q(zeta_N) with rational coefficients.

Elements are stored as coefficient vectors in the power basis
1, zeta, ..., zeta^(phi(N)-1), i.e. reduced modulo the N-th cyclotomic
polynomial.  That basis makes the canonical form unique, so equality of
values is equality of coefficient tuples once both operands are embedded
into a common conductor (the lcm).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = ["Cyclotomic", "cyclotomic_polynomial", "root_of_unity", "rational"]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial,
    computed by dividing x^n - 1 by the product of Phi_d over proper
    divisors d of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (remainder must vanish)."""
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        coef = num[i + len(den) - 1] // den[-1]
        out[i] = coef
        for j, d in enumerate(den):
            num[i + j] -= coef * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k gives zeta_n^(deg+k) in the power basis, where deg = phi(n),
    for k = 0..n-1.  Enough to reduce any product of two reduced elements."""
    phi = list(cyclotomic_polynomial(n))
    deg = len(phi) - 1
    # zeta^deg = -(phi[0] + phi[1] zeta + ...)/phi[deg]; phi is monic.
    rows: list[list[Fraction]] = []
    top = [Fraction(-c) for c in phi[:-1]]
    rows.append(top)
    for _ in range(n - 1):
        prev = rows[-1]
        shifted = [Fraction(0)] + prev[:-1]
        carry = prev[-1]
        if carry:
            shifted = [s + carry * t for s, t in zip(shifted, top)]
        rows.append(shifted)
    return tuple(tuple(r) for r in rows)


def _reduce(n: int, dense: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a coefficient list (any length < phi(n)+n) mod Phi_n."""
    deg = len(cyclotomic_polynomial(n)) - 1
    out = dense[:deg] + [Fraction(0)] * (deg - len(dense))
    rows = _reduction_rows(n)
    for k in range(deg, len(dense)):
        c = dense[k]
        if c:
            row = rows[k - deg]
            for i in range(deg):
                out[i] += c * row[i]
    return tuple(out)


@dataclass(frozen=True)
class Cyclotomic:
    """An exact element of Q(zeta_N), reduced to the power basis."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def zero(conductor: int = 1) -> "Cyclotomic":
        deg = len(cyclotomic_polynomial(conductor)) - 1
        return Cyclotomic(conductor, (Fraction(0),) * deg)

    @staticmethod
    def from_rational(value, conductor: int = 1) -> "Cyclotomic":
        deg = len(cyclotomic_polynomial(conductor)) - 1
        coeffs = (Fraction(value),) + (Fraction(0),) * (deg - 1)
        return Cyclotomic(conductor, coeffs)

    @staticmethod
    def root(conductor: int, power: int = 1) -> "Cyclotomic":
        """zeta_conductor ** power."""
        k = power % conductor
        dense = [Fraction(0)] * (k + 1)
        dense[k] = Fraction(1)
        return Cyclotomic(conductor, _reduce(conductor, dense))

    # -- conversion ---------------------------------------------------------

    def embed(self, conductor: int) -> "Cyclotomic":
        """Re-express in Q(zeta_M) for a multiple M of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor != 0:
            raise ValueError(
                f"{conductor} is not a multiple of {self.conductor}"
            )
        step = conductor // self.conductor
        dense = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            dense[k * step] += c
        return Cyclotomic(conductor, _reduce(conductor, dense))

    @staticmethod
    def _common(u: "Cyclotomic", v: "Cyclotomic"):
        n = lcm(u.conductor, v.conductor)
        return u.embed(n), v.embed(n)

    @staticmethod
    def _coerce(value) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        return Cyclotomic.from_rational(value)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "Cyclotomic":
        u, v = Cyclotomic._common(self, Cyclotomic._coerce(other))
        return Cyclotomic(
            u.conductor, tuple(a + b for a, b in zip(u.coeffs, v.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Cyclotomic":
        return self + (-Cyclotomic._coerce(other))

    def __rsub__(self, other) -> "Cyclotomic":
        return Cyclotomic._coerce(other) - self

    def __mul__(self, other) -> "Cyclotomic":
        u, v = Cyclotomic._common(self, Cyclotomic._coerce(other))
        dense = [Fraction(0)] * (len(u.coeffs) + len(v.coeffs) - 1)
        for i, a in enumerate(u.coeffs):
            if not a:
                continue
            for j, b in enumerate(v.coeffs):
                if b:
                    dense[i + j] += a * b
        return Cyclotomic(u.conductor, _reduce(u.conductor, dense))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclotomic":
        """Division by a rational scalar only."""
        q = Fraction(other)
        return Cyclotomic(self.conductor, tuple(c / q for c in self.coeffs))

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^-1 (a ring involution)."""
        n = self.conductor
        dense = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            dense[(n - k) % n] += c
        return Cyclotomic(n, _reduce(n, dense))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def as_integer(self) -> int:
        q = self.as_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not a rational integer")
        return q.numerator

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        u, v = Cyclotomic._common(self, other)
        return u.coeffs == v.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Cyclotomic({self.coeffs[0]})"
        terms = [
            f"{c}*z{self.conductor}^{k}" for k, c in enumerate(self.coeffs) if c
        ]
        return "Cyclotomic(" + " + ".join(terms) + ")"


def root_of_unity(conductor: int, power: int = 1) -> Cyclotomic:
    return Cyclotomic.root(conductor, power)


def rational(value, conductor: int = 1) -> Cyclotomic:
    return Cyclotomic.from_rational(value, conductor)
