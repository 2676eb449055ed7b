"""Permutations on {1,...,n} and explicit enumeration of small groups.

Composition convention: ``(p * q)(i) = p(q(i))`` -- the right factor acts
first.  Points are 1-based throughout, matching cycle notation like
``(1 2 3 4 5)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

__all__ = [
    "Permutation",
    "PermutationGroup",
    "parse_cycles",
    "enumerate_group",
    "count_involutions",
    "involution_recursion",
    "symmetric_group",
    "cyclic_group",
    "DEFAULT_ORDER_BOUND",
]

# Largest group order enumerate_group will materialize by default (10!).
DEFAULT_ORDER_BOUND = factorial(10)


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation in one-line notation: ``images[i]`` is the image of i+1.

    The derived ordering (lexicographic on the image tuple) is the canonical
    order used for orbit representatives and coset transversals.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    @staticmethod
    def _unchecked(images: tuple[int, ...]) -> "Permutation":
        # products and inverses of valid permutations are valid; skip the
        # bijection re-check on these hot paths
        p = object.__new__(Permutation)
        object.__setattr__(p, "images", images)
        return p

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose: ``(self * other)(i) = self(other(i))``."""
        if len(self.images) != len(other.images):
            raise ValueError(
                f"degree mismatch: {self.degree} != {other.degree}"
            )
        images = self.images
        return Permutation._unchecked(tuple(images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation._unchecked(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def support(self) -> tuple[int, ...]:
        """Points moved by the permutation, sorted."""
        return tuple(
            i for i, j in enumerate(self.images, start=1) if i != j
        )

    def cycle_type(self, points: tuple[int, ...] | None = None) -> tuple[int, ...]:
        """Cycle lengths (weakly decreasing, fixed points included) on the
        given point set; full domain by default."""
        if points is None:
            points = tuple(range(1, self.degree + 1))
        remaining = set(points)
        lengths = []
        while remaining:
            start = min(remaining)
            length = 0
            j = start
            while True:
                remaining.discard(j)
                length += 1
                j = self(j)
                if j == start:
                    break
                if j not in remaining:
                    raise ValueError("point set is not invariant")
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation, e.g. ``"(1 4)(2 5)(3 6)"``.

    Points may be separated by whitespace or commas; unlisted points are
    fixed; the empty string denotes the identity.
    """
    stripped = text.strip()
    body = _CYCLE_RE.sub("", stripped)
    if body.strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    for match in _CYCLE_RE.finditer(stripped):
        tokens = [t for t in re.split(r"[\s,]+", match.group(1).strip()) if t]
        if not tokens:
            continue
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
        for pt in points:
            if not 1 <= pt <= degree:
                raise ValueError(f"point {pt} out of range 1..{degree}")
            if pt in seen:
                raise ValueError(f"repeated point {pt} in {text!r}")
            seen.add(pt)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
    return Permutation(tuple(images))


@dataclass(frozen=True)
class PermutationGroup:
    """A fully enumerated permutation group.

    ``elements`` is the complete member list in canonical (lexicographic
    one-line) order; ``generators`` is whatever generating set the group was
    built from.
    """

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._element_set()

    def _element_set(self) -> frozenset:
        # cached on the instance; dataclass is frozen so go around __setattr__
        cached = self.__dict__.get("_cached_set")
        if cached is None:
            cached = frozenset(self.elements)
            self.__dict__["_cached_set"] = cached
        return cached

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return self.degree == other.degree and all(
            g in other for g in self.elements
        )

    @classmethod
    def from_elements(cls, degree: int, elements, generators=None) -> "PermutationGroup":
        elems = tuple(sorted(set(elements)))
        if generators is None:
            generators = elems
        return cls(degree, tuple(generators), elems)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={self.order})"


def enumerate_group(
    generators: list[Permutation],
    degree: int | None = None,
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> PermutationGroup:
    """Breadth-first closure of the generators.

    ``degree`` is only needed for an empty generating set.  Raises if the
    group order exceeds ``order_bound``.
    """
    if not generators:
        if degree is None:
            raise ValueError("degree required for an empty generating set")
        ident = Permutation.identity(degree)
        return PermutationGroup(degree, (), (ident,))
    degs = {g.degree for g in generators}
    if len(degs) != 1:
        raise ValueError(f"generators of mixed degree: {sorted(degs)}")
    degree = degs.pop()
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = p * g
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > order_bound:
                        raise ValueError(
                            f"group order exceeds bound {order_bound}"
                        )
        frontier = nxt
    return PermutationGroup(degree, tuple(generators), tuple(sorted(seen)))


def count_involutions(group: PermutationGroup) -> int:
    """Number of w in the group with w^2 = 1, identity included."""
    return sum(1 for w in group.elements if (w * w).is_identity())


def involution_recursion(n: int) -> int:
    """Involution count of the symmetric group of degree n by the recursion
    i_n = i_{n-1} + (n-1) i_{n-2}, with i_1 = 1, i_2 = 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = 1, 1  # i_0, i_1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b


@lru_cache(maxsize=None)
def symmetric_group(n: int, degree: int | None = None) -> PermutationGroup:
    """S_n acting on {1..n}, optionally embedded in a larger degree
    (fixing the points above n)."""
    if degree is None:
        degree = n
    if n > degree:
        raise ValueError("n exceeds degree")
    if n <= 1:
        return enumerate_group([], degree=degree)
    gens = [parse_cycles("(1 2)", degree)]
    if n > 2:
        gens.append(parse_cycles("(" + " ".join(map(str, range(1, n + 1))) + ")", degree))
    return enumerate_group(gens)


@lru_cache(maxsize=None)
def cyclic_group(n: int, degree: int | None = None) -> PermutationGroup:
    """C_n generated by the n-cycle (1 2 ... n)."""
    if degree is None:
        degree = n
    if n > degree:
        raise ValueError("n exceeds degree")
    if n <= 1:
        return enumerate_group([], degree=degree)
    z = parse_cycles("(" + " ".join(map(str, range(1, n + 1))) + ")", degree)
    return enumerate_group([z])
