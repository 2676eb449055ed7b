"""Matched-pair actions derived from a group factorization L = FG.

Every element of L is written uniquely as l = a*x with a in F, x in G.
Refactoring the product x*a = (x |> a)(x <| a) defines the mutual actions:
``act_into_F`` computes x |> a (landing in F) and ``act_into_G`` computes
x <| a (landing in G).
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from functools import lru_cache

from .perm import (
    Permutation,
    PermutationGroup,
    cyclic_group,
    symmetric_group,
)

__all__ = [
    "Factorization",
    "FactorizationError",
    "OrbitData",
    "VerificationReport",
    "build_factorization",
    "act_into_G",
    "act_into_F",
    "verify_matched_pair",
    "orbits",
    "invariants_GF",
    "inversion_set",
    "build_hn",
    "build_jn",
    "orbit_table_row",
    "orbit_table_csv",
    "orbit_table_json",
]


class FactorizationError(ValueError):
    """The given subgroups do not factorize L uniquely."""


@dataclass(frozen=True)
class Factorization:
    """A factorizable group L = FG with its unique-factorization table.

    ``factor_table`` maps each l in L to the pair (a, x) with l = a*x,
    a in F, x in G.  Built eagerly; action queries are table lookups.
    """

    L: PermutationGroup
    F: PermutationGroup
    G: PermutationGroup
    factor_table: dict[Permutation, tuple[Permutation, Permutation]]


def build_factorization(
    L: PermutationGroup, F: PermutationGroup, G: PermutationGroup
) -> Factorization:
    if not F.is_subgroup_of(L) or not G.is_subgroup_of(L):
        raise FactorizationError("F and G must be subgroups of L")
    if F.order * G.order != L.order:
        raise FactorizationError(
            f"|F|*|G| = {F.order * G.order} != |L| = {L.order}"
        )
    common = [a for a in F.elements if a in G]
    if len(common) != 1:
        raise FactorizationError(f"F and G intersect in {len(common)} elements")
    table: dict[Permutation, tuple[Permutation, Permutation]] = {}
    for a in F.elements:
        for x in G.elements:
            l = a * x
            if l in table:
                raise FactorizationError(f"{l} factors in more than one way")
            table[l] = (a, x)
    missing = [l for l in L.elements if l not in table]
    if missing:
        raise FactorizationError(f"{missing[0]} has no factorization")
    return Factorization(L, F, G, table)


def _refactor(fact: Factorization, x: Permutation, a: Permutation):
    # only |F|*|G| distinct queries exist; cache them on the instance
    cache = fact.__dict__.get("_action_cache")
    if cache is None:
        cache = {}
        fact.__dict__["_action_cache"] = cache
    key = (x, a)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if x not in fact.G:
        raise ValueError(f"{x} is not in G")
    if a not in fact.F:
        raise ValueError(f"{a} is not in F")
    pair = fact.factor_table[x * a]
    cache[key] = pair
    return pair


def act_into_G(fact: Factorization, x: Permutation, a: Permutation) -> Permutation:
    """x <| a: the G-part of the refactored product x*a."""
    return _refactor(fact, x, a)[1]


def act_into_F(fact: Factorization, x: Permutation, a: Permutation) -> Permutation:
    """x |> a: the F-part of the refactored product x*a."""
    return _refactor(fact, x, a)[0]


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checks: int
    witness: tuple | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.passed


def verify_matched_pair(
    fact: Factorization,
    exhaustive_bound: int = 10_000,
    sample_size: int = 20_000,
    seed: int = 0,
) -> VerificationReport:
    """Check both matched-pair compatibility axioms:

        x |> (ab) = (x |> a) * ((x <| a) |> b)
        (xy) <| a = (x <| (y |> a)) * (y <| a)

    Exhaustive over all triples while |F|*|G| <= exhaustive_bound, otherwise
    a fixed-seed pseudo-random sample of triples.
    """
    F, G = fact.F, fact.G
    exhaustive = F.order * G.order <= exhaustive_bound

    def axiom1(x, a, b):
        lhs = act_into_F(fact, x, a * b)
        rhs = act_into_F(fact, x, a) * act_into_F(fact, act_into_G(fact, x, a), b)
        return lhs == rhs

    def axiom2(x, y, a):
        lhs = act_into_G(fact, x * y, a)
        rhs = act_into_G(fact, x, act_into_F(fact, y, a)) * act_into_G(fact, y, a)
        return lhs == rhs

    checks = 0
    if exhaustive:
        for x in G.elements:
            for a in F.elements:
                for b in F.elements:
                    checks += 1
                    if not axiom1(x, a, b):
                        return VerificationReport(
                            False, checks, (x, a, b), "axiom x|>(ab) failed"
                        )
        for x in G.elements:
            for y in G.elements:
                for a in F.elements:
                    checks += 1
                    if not axiom2(x, y, a):
                        return VerificationReport(
                            False, checks, (x, y, a), "axiom (xy)<|a failed"
                        )
    else:
        rng = random.Random(seed)
        for _ in range(sample_size):
            x, y = rng.choice(G.elements), rng.choice(G.elements)
            a, b = rng.choice(F.elements), rng.choice(F.elements)
            checks += 2
            if not axiom1(x, a, b):
                return VerificationReport(
                    False, checks, (x, a, b), "axiom x|>(ab) failed"
                )
            if not axiom2(x, y, a):
                return VerificationReport(
                    False, checks, (x, y, a), "axiom (xy)<|a failed"
                )
    return VerificationReport(True, checks)


@dataclass(frozen=True)
class OrbitData:
    """One F-orbit of G under <|, with its canonical representative (the
    lexicographic minimum of the orbit) and stabilizer F_x <= F."""

    representative: Permutation
    members: tuple[Permutation, ...]
    stabilizer: PermutationGroup

    @property
    def size(self) -> int:
        return len(self.members)

    def is_free(self) -> bool:
        return self.stabilizer.order == 1

    def contains_involution(self) -> bool:
        return any((y * y).is_identity() for y in self.members)


def orbits(fact: Factorization) -> list[OrbitData]:
    """Partition G into <|-orbits, sorted by canonical representative."""
    remaining = set(fact.G.elements)
    out = []
    while remaining:
        x = min(remaining)
        members = sorted({act_into_G(fact, x, a) for a in fact.F.elements})
        stab = [a for a in fact.F.elements if act_into_G(fact, x, a) == x]
        remaining.difference_update(members)
        out.append(
            OrbitData(
                representative=members[0],
                members=tuple(members),
                stabilizer=PermutationGroup.from_elements(fact.F.degree, stab),
            )
        )
    out.sort(key=lambda o: o.representative)
    return out


def orbit_of(fact: Factorization, x: Permutation) -> OrbitData:
    """The single orbit containing x (representative is still the orbit
    minimum, which need not be x)."""
    members = sorted({act_into_G(fact, x, a) for a in fact.F.elements})
    rep = members[0]
    stab = [a for a in fact.F.elements if act_into_G(fact, rep, a) == rep]
    return OrbitData(
        representative=rep,
        members=tuple(members),
        stabilizer=PermutationGroup.from_elements(fact.F.degree, stab),
    )


def invariants_GF(fact: Factorization) -> PermutationGroup:
    """The invariant subgroup G^F = {x in G : x <| a = x for all a in F}."""
    fixed = [
        x
        for x in fact.G.elements
        if all(act_into_G(fact, x, a) == x for a in fact.F.elements)
    ]
    return PermutationGroup.from_elements(fact.G.degree, fixed)


def inversion_set(fact: Factorization, y: Permutation) -> list[Permutation]:
    """F_{y,y^-1} = {a in F : y <| a = y^-1}, in canonical order."""
    y_inv = y.inverse()
    return [a for a in fact.F.elements if act_into_G(fact, y, a) == y_inv]


# ---------------------------------------------------------------------------
# The two standard factorizations of S_n: F = S_{n-1}, G = C_n (variant H)
# and F = C_n, G = S_{n-1} (variant J), with S_{n-1} the stabilizer of the
# point n and C_n generated by the n-cycle (1 2 ... n).
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def build_hn(n: int) -> Factorization:
    L = symmetric_group(n)
    F = symmetric_group(n - 1, degree=n)
    G = cyclic_group(n)
    return build_factorization(L, F, G)


@lru_cache(maxsize=None)
def build_jn(n: int) -> Factorization:
    L = symmetric_group(n)
    F = cyclic_group(n)
    G = symmetric_group(n - 1, degree=n)
    return build_factorization(L, F, G)


# ---------------------------------------------------------------------------
# Orbit tables in the layout of the paper-style action tables: one row per
# orbit, entries x <| a for a over F in canonical order, final column the
# stabilizer order.
# ---------------------------------------------------------------------------


def orbit_table_row(fact: Factorization, x: Permutation) -> list[Permutation]:
    """The row of the action table under a fixed x: x <| a for every a in F
    in canonical order."""
    return [act_into_G(fact, x, a) for a in fact.F.elements]


def orbit_table_csv(fact: Factorization, rows: list[Permutation] | None = None) -> str:
    if rows is None:
        rows = [o.representative for o in orbits(fact)]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        ["x"] + [a.cycle_string() for a in fact.F.elements] + ["stabilizer_order"]
    )
    for x in rows:
        data = orbit_of(fact, x)
        writer.writerow(
            [x.cycle_string()]
            + [y.cycle_string() for y in orbit_table_row(fact, x)]
            + [data.stabilizer.order]
        )
    return buf.getvalue()


def orbit_table_json(fact: Factorization, rows: list[Permutation] | None = None) -> str:
    if rows is None:
        rows = [o.representative for o in orbits(fact)]
    payload = {
        "columns": [list(a.images) for a in fact.F.elements],
        "rows": [
            {
                "x": list(x.images),
                "orbit_row": [list(y.images) for y in orbit_table_row(fact, x)],
                "stabilizer_order": orbit_of(fact, x).stabilizer.order,
            }
            for x in rows
        ],
    }
    return json.dumps(payload, indent=2)
