"""The bismash product H = k^G # kF as a symbolic algebra.

Basis symbols p_x # a for x in G, a in F; elements are sparse rational
linear combinations (scalars are conductor-1 cyclotomics, i.e. exact
rationals).  The full multiplication table is never materialized: all
structure maps act symbolically term by term.

Structure maps on the basis:

    (p_x # a)(p_y # b) = delta_{y, x <| a} p_x # ab
    Delta(p_x # a)     = sum_y p_{x y^-1} # (y |> a) (x) p_y # a
    eps(p_x # a)       = delta_{x, 1}
    alpha(p_x # a)     = p_{(x <| a)^-1} # (x |> a)^-1
"""

from __future__ import annotations

import itertools
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclo import Cyclotomic
from .matched_pair import (
    Factorization,
    act_into_F,
    act_into_G,
    inversion_set,
)
from .perm import Permutation

__all__ = ["BasisSymbol", "AlgebraElement", "TensorElement", "BismashAlgebra"]


@dataclass(frozen=True, order=True)
class BasisSymbol:
    """p_x # a with x in G, a in F."""

    x: Permutation
    a: Permutation

    def __repr__(self) -> str:
        return f"p_{self.x.cycle_string()} # {self.a.cycle_string()}"


def _clean(terms: dict) -> dict:
    return {s: c for s, c in terms.items() if not c.is_zero()}


@dataclass(frozen=True)
class AlgebraElement:
    """Sparse linear combination of basis symbols; zero coefficients are
    never stored."""

    ambient: Factorization
    terms: dict[BasisSymbol, Cyclotomic]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_ambient(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, Cyclotomic.zero()) + c
        return AlgebraElement(self.ambient, _clean(out))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def scale(self, scalar) -> "AlgebraElement":
        c = Cyclotomic._coerce(scalar)
        return AlgebraElement(
            self.ambient, _clean({s: c * v for s, v in self.terms.items()})
        )

    def coefficient(self, symbol: BasisSymbol) -> Cyclotomic:
        return self.terms.get(symbol, Cyclotomic.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ambient is other.ambient and (self - other).is_zero()

    def _check_ambient(self, other) -> None:
        if self.ambient is not other.ambient:
            raise ValueError("elements live over different factorizations")

    def to_json(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: kv[0])
        return json.dumps(
            [
                {
                    "x": s.x.cycle_string(),
                    "a": s.a.cycle_string(),
                    "coeff": str(c.as_fraction()),
                }
                for s, c in items
            ]
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "AlgebraElement(0)"
        parts = [
            f"{c.as_fraction() if c.is_rational() else c} * ({s!r})"
            for s, c in sorted(self.terms.items(), key=lambda kv: kv[0])
        ]
        return "AlgebraElement(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class TensorElement:
    """Sparse element of H (x) H."""

    ambient: Factorization
    terms: dict[tuple[BasisSymbol, BasisSymbol], Cyclotomic]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = Cyclotomic.zero()
        return self.ambient is other.ambient and all(
            self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys
        )


@dataclass
class HopfAxiomReport:
    passed: bool = True
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)

    def __bool__(self) -> bool:
        return self.passed


class BismashAlgebra:
    """Structure maps of k^G # kF over a fixed factorization."""

    def __init__(self, fact: Factorization):
        self.fact = fact

    @property
    def dimension(self) -> int:
        return self.fact.F.order * self.fact.G.order

    def basis(self):
        for x in self.fact.G.elements:
            for a in self.fact.F.elements:
                yield BasisSymbol(x, a)

    def element(self, terms: dict[BasisSymbol, Cyclotomic]) -> AlgebraElement:
        return AlgebraElement(self.fact, _clean(dict(terms)))

    def basis_element(self, x: Permutation, a: Permutation) -> AlgebraElement:
        return self.element({BasisSymbol(x, a): Cyclotomic.from_rational(1)})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self.fact, {})

    def one(self) -> AlgebraElement:
        one = Cyclotomic.from_rational(1)
        ident = self.fact.F.identity
        return self.element(
            {BasisSymbol(x, ident): one for x in self.fact.G.elements}
        )

    # -- structure maps -----------------------------------------------------

    def multiply(self, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
        u._check_ambient(v)
        out: dict[BasisSymbol, Cyclotomic] = {}
        for s, c in u.terms.items():
            moved = act_into_G(self.fact, s.x, s.a)
            for t, d in v.terms.items():
                if t.x != moved:
                    continue
                key = BasisSymbol(s.x, s.a * t.a)
                out[key] = out.get(key, Cyclotomic.zero()) + c * d
        return AlgebraElement(self.fact, _clean(out))

    def comultiply(self, u: AlgebraElement) -> TensorElement:
        out: dict[tuple[BasisSymbol, BasisSymbol], Cyclotomic] = {}
        for s, c in u.terms.items():
            for y in self.fact.G.elements:
                left = BasisSymbol(s.x * y.inverse(), act_into_F(self.fact, y, s.a))
                key = (left, BasisSymbol(y, s.a))
                out[key] = out.get(key, Cyclotomic.zero()) + c
        return TensorElement(self.fact, _clean(out))

    def counit(self, u: AlgebraElement) -> Cyclotomic:
        ident = self.fact.G.identity
        total = Cyclotomic.zero()
        for s, c in u.terms.items():
            if s.x == ident:
                total = total + c
        return total

    def antipode_symbol(self, s: BasisSymbol) -> BasisSymbol:
        return BasisSymbol(
            act_into_G(self.fact, s.x, s.a).inverse(),
            act_into_F(self.fact, s.x, s.a).inverse(),
        )

    def antipode(self, u: AlgebraElement) -> AlgebraElement:
        out: dict[BasisSymbol, Cyclotomic] = {}
        for s, c in u.terms.items():
            key = self.antipode_symbol(s)
            out[key] = out.get(key, Cyclotomic.zero()) + c
        return AlgebraElement(self.fact, _clean(out))

    # -- the integral and Lambda^[2] ----------------------------------------

    def integral(self) -> AlgebraElement:
        """Lambda = (1/|F|) sum_a p_1 # a, the unique integral with
        eps(Lambda) = 1."""
        ident = self.fact.G.identity
        coeff = Cyclotomic.from_rational(Fraction(1, self.fact.F.order))
        return self.element(
            {BasisSymbol(ident, a): coeff for a in self.fact.F.elements}
        )

    def lambda_squared(self) -> AlgebraElement:
        """Closed form of m(Delta(Lambda)):
        (1/|F|) sum_y sum_{a: y^-1 <| a = y} p_y # (y^-1 |> a) a."""
        out: dict[BasisSymbol, Cyclotomic] = {}
        coeff = Cyclotomic.from_rational(Fraction(1, self.fact.F.order))
        for y in self.fact.G.elements:
            y_inv = y.inverse()
            for a in inversion_set(self.fact, y_inv):
                key = BasisSymbol(y, act_into_F(self.fact, y_inv, a) * a)
                out[key] = out.get(key, Cyclotomic.zero()) + coeff
        return AlgebraElement(self.fact, _clean(out))

    def lambda_squared_direct(self) -> AlgebraElement:
        """m(Delta(Lambda)) computed literally; cross-check for the closed
        form."""
        total = self.zero()
        for (s, t), c in self.comultiply(self.integral()).terms.items():
            prod = self.multiply(
                self.element({s: c}), self.element({t: Cyclotomic.from_rational(1)})
            )
            total = total + prod
        return total

    def antipode_trace(self) -> int:
        """Tr(alpha) by fixed-point counting: alpha permutes the basis
        without signs, so the trace is the number of fixed symbols."""
        return sum(1 for s in self.basis() if self.antipode_symbol(s) == s)

    # -- axiom verification ---------------------------------------------------

    def verify_hopf_axioms(
        self,
        budget: int = 1_000_000,
        sample_size: int = 40,
        assoc_samples: int = 1_000,
        seed: int = 0,
    ) -> HopfAxiomReport:
        """Check the bialgebra and antipode axioms on basis symbols.

        Per-symbol checks (counit laws, antipode law, alpha^2 = id) run
        exhaustively when dim * |G| <= budget; coassociativity when
        dim * |G|^2 <= budget; associativity over basis triples when
        dim^3 <= budget.  Above the budget, a fixed-seed sample is used.
        """
        # All checks are run on basis symbols, where every structure map has
        # integer coefficients; Counter arithmetic keeps this fast.
        report = HopfAxiomReport()
        rng = random.Random(seed)
        symbols = list(self.basis())
        n_g = self.fact.G.order
        ident_g = self.fact.G.identity
        ident_f = self.fact.F.identity

        def pick(population, full_cost):
            if full_cost <= budget:
                return population
            return [rng.choice(population) for _ in range(sample_size)]

        g_inverses = [(y, y.inverse()) for y in self.fact.G.elements]

        def delta_symbols(s: BasisSymbol) -> list[tuple[BasisSymbol, BasisSymbol]]:
            return [
                (
                    BasisSymbol(s.x * y_inv, act_into_F(self.fact, y, s.a)),
                    BasisSymbol(y, s.a),
                )
                for y, y_inv in g_inverses
            ]

        def multiply_symbols(s: BasisSymbol, t: BasisSymbol) -> BasisSymbol | None:
            if t.x != act_into_G(self.fact, s.x, s.a):
                return None
            return BasisSymbol(s.x, s.a * t.a)

        one_counter = Counter(
            BasisSymbol(x, ident_f) for x in self.fact.G.elements
        )
        for s in pick(symbols, len(symbols) * n_g):
            report.checks += 1
            if self.antipode_symbol(self.antipode_symbol(s)) != s:
                report.fail(f"alpha^2 != id at {s!r}")
            pairs = delta_symbols(s)
            left = Counter(s2 for s1, s2 in pairs if s1.x == ident_g)
            right = Counter(s1 for s1, s2 in pairs if s2.x == ident_g)
            if left != Counter([s]) or right != Counter([s]):
                report.fail(f"counit law failed at {s!r}")
            anti_left: Counter = Counter()
            anti_right: Counter = Counter()
            for s1, s2 in pairs:
                prod = multiply_symbols(self.antipode_symbol(s1), s2)
                if prod is not None:
                    anti_left[prod] += 1
                prod = multiply_symbols(s1, self.antipode_symbol(s2))
                if prod is not None:
                    anti_right[prod] += 1
            target = one_counter if s.x == ident_g else Counter()
            if anti_left != target or anti_right != target:
                report.fail(f"antipode law failed at {s!r}")

        for s in pick(symbols, len(symbols) * n_g * n_g):
            report.checks += 1
            pairs = delta_symbols(s)
            lhs = Counter(
                (t1, t2, s2) for s1, s2 in pairs for t1, t2 in delta_symbols(s1)
            )
            rhs = Counter(
                (s1, t1, t2) for s1, s2 in pairs for t1, t2 in delta_symbols(s2)
            )
            if lhs != rhs:
                report.fail(f"coassociativity failed at {s!r}")

        if len(symbols) ** 3 <= budget:
            triples = itertools.product(symbols, symbols, symbols)
        else:
            triples = (
                (rng.choice(symbols), rng.choice(symbols), rng.choice(symbols))
                for _ in range(assoc_samples)
            )
        for s, t, w in triples:
            report.checks += 1
            st = multiply_symbols(s, t)
            tw = multiply_symbols(t, w)
            left3 = multiply_symbols(st, w) if st is not None else None
            right3 = multiply_symbols(s, tw) if tw is not None else None
            if left3 != right3:
                report.fail(f"associativity failed at ({s!r}, {t!r}, {w!r})")
        return report
