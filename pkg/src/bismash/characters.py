"""Irreducible characters of the stabilizer groups that occur here.

Supported stabilizer types: the trivial group, cyclic groups (values in
Q(zeta_m)), and symmetric groups acting as the full symmetric group on
their support (integer values via the Murnaghan-Nakayama rule).  Anything
else raises UnsupportedStabilizerError.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .cyclo import Cyclotomic
from .matched_pair import Factorization, OrbitData, act_into_G
from .perm import Permutation, PermutationGroup

__all__ = [
    "Partition",
    "partitions",
    "hook_length_dimension",
    "mn_character",
    "TrivialLabel",
    "CyclicLabel",
    "SymmetricLabel",
    "IrrepLabel",
    "ClassFunction",
    "cyclic_characters",
    "UnsupportedStabilizerError",
    "stabilizer_irreps",
    "irrep_character",
    "irrep_dimension",
    "transversal",
    "induced_character_value",
    "classical_fs_indicator",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


@lru_cache(maxsize=None)
def partitions(m: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of m in reverse lexicographic order; ((),) for m = 0."""

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(m, m))


def hook_length_dimension(shape: Partition | tuple[int, ...]) -> int:
    """Dimension of the symmetric-group irrep labeled by the partition:
    |shape|! divided by the product of hook lengths."""
    parts = tuple(shape)
    m = sum(parts)
    conj = _conjugate(parts)
    prod = 1
    for i, row in enumerate(parts):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    dim, rem = divmod(factorial(m), prod)
    assert rem == 0
    return dim


def _conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(
        sum(1 for p in parts if p > j) for j in range(parts[0])
    )


@lru_cache(maxsize=None)
def _mn(parts: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    k = mu[0]
    # Beta numbers: removing a border strip of length k is replacing some
    # beta number b by b - k when b - k is not already a beta number; the
    # sign is (-1)^(number of beta numbers strictly between b-k and b).
    ell = len(parts)
    betas = [parts[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(betas)
    total = 0
    for idx, b in enumerate(betas):
        if b >= k and (b - k) not in beta_set:
            height = sum(1 for c in betas if b - k < c < b)
            new = sorted(beta_set - {b} | {b - k}, reverse=True)
            new_parts = tuple(
                v - (len(new) - 1 - i) for i, v in enumerate(new)
            )
            new_parts = tuple(p for p in new_parts if p > 0)
            total += (-1) ** height * _mn(new_parts, mu[1:])
    return total


def mn_character(
    shape: Partition | tuple[int, ...], cycle_type: tuple[int, ...]
) -> int:
    """Value of the symmetric-group irreducible character at the given
    cycle type, by recursive border-strip removal."""
    parts = tuple(shape)
    mu = tuple(sorted(cycle_type, reverse=True))
    if sum(parts) != sum(mu):
        raise ValueError(
            f"weight mismatch: |{parts}| = {sum(parts)}, |{mu}| = {sum(mu)}"
        )
    return _mn(parts, mu)


# ---------------------------------------------------------------------------
# Irrep labels and class functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrivialLabel:
    def __repr__(self) -> str:
        return "triv"


@dataclass(frozen=True)
class CyclicLabel:
    """The linear character g^k -> zeta_m^(j*k) of a cyclic group of
    order m, for a fixed generator g."""

    residue: int
    modulus: int

    def __repr__(self) -> str:
        return f"chi_{self.residue} (mod {self.modulus})"


@dataclass(frozen=True)
class SymmetricLabel:
    """A symmetric-group irrep, labeled by a partition of the support size."""

    shape: Partition

    def __repr__(self) -> str:
        return f"S{self.shape.parts}"


IrrepLabel = TrivialLabel | CyclicLabel | SymmetricLabel


@dataclass(frozen=True)
class ClassFunction:
    group: PermutationGroup
    values: dict[Permutation, Cyclotomic]

    def __call__(self, g: Permutation) -> Cyclotomic:
        return self.values[g]

    @property
    def degree(self) -> Cyclotomic:
        return self.values[self.group.identity]

    def inner(self, other: "ClassFunction") -> Cyclotomic:
        total = Cyclotomic.zero()
        for g in self.group.elements:
            total = total + self(g) * other(g).conjugate()
        return total / self.group.order


class UnsupportedStabilizerError(ValueError):
    """Stabilizer is not trivial, cyclic, or symmetric on its support."""


def _cyclic_generator(group: PermutationGroup) -> Permutation | None:
    for g in group.elements:
        if g.order() == group.order:
            return g
    return None


def _symmetric_support(group: PermutationGroup) -> tuple[int, ...] | None:
    """If the group is the full symmetric group on its moved points, return
    those points; else None."""
    support = sorted({p for g in group.elements for p in g.support()})
    if group.order == factorial(len(support)) and group.order > 1:
        return tuple(support)
    return None


def cyclic_characters(group: PermutationGroup) -> list[ClassFunction]:
    """All m linear characters of a cyclic group of order m."""
    g = _cyclic_generator(group)
    if g is None:
        raise ValueError("group is not cyclic")
    m = group.order
    powers = {}
    h, k = group.identity, 0
    for _ in range(m):
        powers[h] = k
        h, k = h * g, k + 1
    out = []
    for j in range(m):
        values = {
            elem: Cyclotomic.root(m, j * k) if m > 1 else Cyclotomic.from_rational(1)
            for elem, k in powers.items()
        }
        out.append(ClassFunction(group, values))
    return out


def stabilizer_irreps(group: PermutationGroup) -> list[IrrepLabel]:
    """Irrep labels of a supported stabilizer, in a fixed order."""
    if group.order == 1:
        return [TrivialLabel()]
    if _cyclic_generator(group) is not None:
        return [CyclicLabel(j, group.order) for j in range(group.order)]
    support = _symmetric_support(group)
    if support is not None:
        m = len(support)
        return [SymmetricLabel(Partition(p)) for p in partitions(m)]
    raise UnsupportedStabilizerError(
        f"unsupported stabilizer of order {group.order}"
    )


def irrep_dimension(label: IrrepLabel) -> int:
    if isinstance(label, (TrivialLabel, CyclicLabel)):
        return 1
    return hook_length_dimension(label.shape)


def irrep_character(group: PermutationGroup, label: IrrepLabel) -> ClassFunction:
    """The character of the labeled irrep as an explicit value table."""
    if isinstance(label, TrivialLabel):
        one = Cyclotomic.from_rational(1)
        return ClassFunction(group, {g: one for g in group.elements})
    if isinstance(label, CyclicLabel):
        if label.modulus != group.order:
            raise ValueError("label modulus does not match group order")
        return cyclic_characters(group)[label.residue]
    support = _symmetric_support(group)
    if support is None:
        raise UnsupportedStabilizerError(
            f"unsupported stabilizer of order {group.order}"
        )
    if label.shape.weight != len(support):
        raise ValueError("partition weight does not match support size")
    values = {
        g: Cyclotomic.from_rational(mn_character(label.shape, g.cycle_type(support)))
        for g in group.elements
    }
    return ClassFunction(group, values)


# ---------------------------------------------------------------------------
# Coset transversals and induced character values
# ---------------------------------------------------------------------------


def transversal(
    F: PermutationGroup, F_x: PermutationGroup
) -> list[Permutation]:
    """Canonical representatives of the right cosets F_x * b, one per coset,
    each the minimum of its coset (so the identity represents F_x)."""
    if not F_x.is_subgroup_of(F):
        raise ValueError("F_x is not a subgroup of F")
    assigned: set[Permutation] = set()
    reps = []
    for b in F.elements:  # canonical order, so the first hit is the minimum
        if b in assigned:
            continue
        reps.append(b)
        assigned.update(c * b for c in F_x.elements)
    assert len(reps) * F_x.order == F.order
    return reps


def induced_character_value(
    fact: Factorization,
    orbit: OrbitData,
    label: IrrepLabel,
    y: Permutation,
    a: Permutation,
    _cache: dict | None = None,
) -> Cyclotomic:
    """Value at p_y # a of the character induced from the stabilizer irrep:
    the sum of chi(b^-1 a b) over transversal elements b with y <| b equal
    to the orbit representative and b^-1 a b in the stabilizer."""
    x = orbit.representative
    stab = orbit.stabilizer
    if _cache is not None and "chi" in _cache:
        chi, reps = _cache["chi"], _cache["reps"]
    else:
        chi = irrep_character(stab, label)
        reps = transversal(fact.F, stab)
        if _cache is not None:
            _cache["chi"], _cache["reps"] = chi, reps
    total = Cyclotomic.zero()
    for b in reps:
        if act_into_G(fact, y, b) != x:
            continue
        conj = b.inverse() * a * b
        if conj in stab:
            total = total + chi(conj)
    return total


def classical_fs_indicator(chi: ClassFunction) -> int:
    """The Frobenius-Schur sum (1/|F|) sum_a chi(a^2), exact."""
    total = Cyclotomic.zero()
    for a in chi.group.elements:
        total = total + chi(a * a)
    value = total / chi.group.order
    return value.as_integer()


def character_table_json(group: PermutationGroup) -> str:
    """Character table of a supported group: rows are irrep labels, columns
    conjugacy-class representatives in cycle notation."""
    labels = stabilizer_irreps(group)
    classes = _conjugacy_class_reps(group)
    rows = []
    for label in labels:
        chi = irrep_character(group, label)
        rows.append(
            {
                "irrep": repr(label),
                "values": [_scalar_string(chi(g)) for g in classes],
            }
        )
    return json.dumps(
        {"classes": [g.cycle_string() for g in classes], "rows": rows},
        indent=2,
    )


def _conjugacy_class_reps(group: PermutationGroup) -> list[Permutation]:
    remaining = set(group.elements)
    reps = []
    while remaining:
        g = min(remaining)
        reps.append(g)
        remaining -= {h * g * h.inverse() for h in group.elements}
    return reps


def _scalar_string(value: Cyclotomic) -> str:
    if value.is_rational():
        return str(value.as_fraction())
    return repr(value)
