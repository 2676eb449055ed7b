"""Simple modules of k^G # kF and their Frobenius-Schur indicators.

A simple module is an induced module from an irrep of an orbit stabilizer.
Its indicator is computed exactly two ways: the generic character-sum path
(ground truth) and, when F is cyclic of odd prime order, a combinatorial
fast path that only inspects the orbit.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .characters import (
    CyclicLabel,
    IrrepLabel,
    TrivialLabel,
    UnsupportedStabilizerError,
    hook_length_dimension,
    induced_character_value,
    irrep_dimension,
    partitions,
    stabilizer_irreps,
)
from .hopf import BismashAlgebra
from .matched_pair import (
    Factorization,
    OrbitData,
    act_into_F,
    build_jn,
    inversion_set,
    invariants_GF,
    orbits,
)
from math import gcd

from .perm import (
    Permutation,
    count_involutions,
    involution_recursion,
)

__all__ = [
    "SimpleModuleDescriptor",
    "IndicatorReport",
    "ConsistencyError",
    "classify_simples",
    "indicator_generic",
    "indicator_cp",
    "full_report",
    "count_m",
    "JpCounts",
    "jp_counts",
    "ratio",
    "total_orthogonality",
    "sn_invariant_elements",
    "hn_dimension_profile",
]


class ConsistencyError(RuntimeError):
    """An identity the theory guarantees failed; signals a bug."""


@dataclass
class SimpleModuleDescriptor:
    """(orbit, stabilizer irrep) labeling one simple module.

    ``indicator`` is filled in lazily by the indicator routines.
    """

    orbit: OrbitData
    irrep: IrrepLabel
    dimension: int
    indicator: int | None = None


def classify_simples(fact: Factorization) -> list[SimpleModuleDescriptor]:
    """One descriptor per (orbit, stabilizer-irrep) pair, in canonical orbit
    order.  Checks the sum-of-squares count against dim H."""
    out = []
    for orb in orbits(fact):
        index = fact.F.order // orb.stabilizer.order
        for label in stabilizer_irreps(orb.stabilizer):
            out.append(
                SimpleModuleDescriptor(
                    orbit=orb,
                    irrep=label,
                    dimension=index * irrep_dimension(label),
                )
            )
    total = sum(d.dimension**2 for d in out)
    dim_h = fact.F.order * fact.G.order
    if total != dim_h:
        raise ConsistencyError(
            f"sum of squared dimensions {total} != dim H {dim_h}"
        )
    return out


def indicator_generic(fact: Factorization, desc: SimpleModuleDescriptor) -> int:
    """Indicator via the induced character evaluated at Lambda^[2]:

        nu = (1/|F|) sum_{y in O_x} sum_{a: y^-1 <| a = y}
                 chi_hat(p_y # (y^-1 |> a) a)

    The result is certified to be a rational integer in {-1, 0, 1}.
    """
    from .cyclo import Cyclotomic

    if desc.indicator is not None:
        return desc.indicator
    cache: dict = {}
    total = Cyclotomic.zero()
    for y in desc.orbit.members:
        y_inv = y.inverse()
        for a in inversion_set(fact, y_inv):
            c = act_into_F(fact, y_inv, a) * a
            total = total + induced_character_value(
                fact, desc.orbit, desc.irrep, y, c, _cache=cache
            )
    value = total / fact.F.order
    if not value.is_rational_integer():
        raise ConsistencyError(f"indicator is not a rational integer: {value}")
    nu = value.as_integer()
    if nu not in (-1, 0, 1):
        raise ConsistencyError(f"indicator out of range: {nu}")
    desc.indicator = nu
    return nu


def _require_odd_prime_cyclic_f(fact: Factorization) -> int:
    p = fact.F.order
    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise ValueError(f"|F| = {p} is not an odd prime")
    if all(g.order() != p for g in fact.F.elements):
        raise ValueError("F is not cyclic")
    return p


def indicator_cp(fact: Factorization, desc: SimpleModuleDescriptor) -> int:
    """Fast path for F cyclic of odd prime order p.

    Dimension-1 modules (full stabilizer): x = 1 gives 1 only for the
    trivial irrep; an invariant involution gives 1; higher order gives 0.
    Dimension-p modules (free orbit): 1 iff the orbit contains an
    involution.
    """
    _require_odd_prime_cyclic_f(fact)
    x = desc.orbit.representative
    if desc.orbit.stabilizer.order == fact.F.order:
        if x.is_identity():
            trivial = isinstance(desc.irrep, TrivialLabel) or (
                isinstance(desc.irrep, CyclicLabel) and desc.irrep.residue == 0
            )
            return 1 if trivial else 0
        return 1 if (x * x).is_identity() else 0
    if desc.orbit.stabilizer.order != 1:
        raise ValueError("orbit is neither invariant nor free; F is not C_p?")
    return 1 if desc.orbit.contains_involution() else 0


@dataclass
class IndicatorReport:
    descriptors: list[SimpleModuleDescriptor]
    trace_alpha: int
    sum_nu_dim: int
    m0: int | None = None
    m1: int | None = None

    def dimensions(self) -> list[int]:
        return sorted(d.dimension for d in self.descriptors)

    def to_json(self, n: int | None = None, variant: str = "custom") -> str:
        payload = {
            "factorization": {"n": n, "variant": variant},
            "simples": [
                {
                    "orbit_rep": d.orbit.representative.cycle_string(),
                    "stabilizer_order": d.orbit.stabilizer.order,
                    "irrep": repr(d.irrep),
                    "dimension": d.dimension,
                    "indicator": d.indicator,
                }
                for d in self.descriptors
            ],
            "trace_alpha": self.trace_alpha,
            "sum_nu_dim": self.sum_nu_dim,
            "m0": self.m0,
            "m1": self.m1,
        }
        return json.dumps(payload, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            ["orbit_rep", "stabilizer_order", "irrep", "dimension", "indicator"]
        )
        for d in self.descriptors:
            writer.writerow(
                [
                    d.orbit.representative.cycle_string(),
                    d.orbit.stabilizer.order,
                    repr(d.irrep),
                    d.dimension,
                    d.indicator,
                ]
            )
        return buf.getvalue()


def full_report(fact: Factorization) -> IndicatorReport:
    """Classify all simples, compute every indicator by the generic path,
    and check the trace-of-antipode identity Tr(alpha) = sum nu * dim."""
    descs = classify_simples(fact)
    for d in descs:
        indicator_generic(fact, d)
    algebra = BismashAlgebra(fact)
    trace = algebra.antipode_trace()
    sum_nu = sum(d.indicator * d.dimension for d in descs)
    if sum_nu != trace:
        raise ConsistencyError(
            f"sum nu*dim = {sum_nu} != Tr(alpha) = {trace}"
        )
    m0 = m1 = None
    try:
        m0, m1 = count_m(fact)
    except ValueError:
        pass
    return IndicatorReport(descs, trace, sum_nu, m0, m1)


def count_m(fact: Factorization) -> tuple[int, int]:
    """For F = C_p: m1 = number of free orbits containing an involution,
    m0 = remaining free orbits.  Both counting identities are asserted:

        i_L = 1 + p (i_{G^F} - 1) + p m1
        m0 + m1 = (|G| - |G^F|) / p
    """
    p = _require_odd_prime_cyclic_f(fact)
    free = [o for o in orbits(fact) if o.is_free()]
    m1 = sum(1 for o in free if o.contains_involution())
    m0 = len(free) - m1
    gf = invariants_GF(fact)
    i_l = count_involutions(fact.L)
    i_gf = count_involutions(gf)
    if i_l != 1 + p * (i_gf - 1) + p * m1:
        raise ConsistencyError(
            f"i_L identity fails: {i_l} != 1 + {p}({i_gf}-1) + {p}*{m1}"
        )
    if (m0 + m1) * p != fact.G.order - gf.order:
        raise ConsistencyError(
            f"orbit-count identity fails: {m0}+{m1} != ({fact.G.order}-{gf.order})/{p}"
        )
    return m0, m1


@dataclass(frozen=True)
class JpCounts:
    """Closed-form counts for J_p = k^(S_{p-1}) # kC_p, no group built."""

    p: int
    m1: int
    m0: int
    dim1_simples: int
    dim1_positive: int
    dimp_simples: int
    dimp_positive: int


def jp_counts(p: int) -> JpCounts:
    """m1 = (i_p - 1)/p - 1 and m0 + m1 = (p-1)((p-2)! - 1)/p, computed
    purely from the involution recursion."""
    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise ValueError(f"{p} is not an odd prime")
    i_p = involution_recursion(p)
    m1, rem = divmod(i_p - 1, p)
    if rem:
        raise ConsistencyError(f"(i_p - 1) not divisible by p for p = {p}")
    m1 -= 1
    from math import factorial

    total_free, rem = divmod((p - 1) * (factorial(p - 2) - 1), p)
    if rem:
        raise ConsistencyError("free-orbit total not integral")
    return JpCounts(
        p=p,
        m1=m1,
        m0=total_free - m1,
        dim1_simples=p * (p - 1),
        dim1_positive=p + 1,
        dimp_simples=total_free,
        dimp_positive=m1,
    )


def ratio(p: int) -> Fraction:
    """Fraction of simple J_p-modules with indicator +1:
    (i_p + p^2 - 1) / ((p-1)! + (p^2-1)(p-1))."""
    from math import factorial

    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise ValueError(f"{p} is not an odd prime")

    i_p = involution_recursion(p)
    return Fraction(i_p + p * p - 1, factorial(p - 1) + (p * p - 1) * (p - 1))


def total_orthogonality(fact: Factorization, cross_check: bool = True) -> bool:
    """True iff Tr(alpha) equals the sum of the simple dimensions.  With
    cross_check, also computes every indicator and verifies agreement."""
    descs = classify_simples(fact)
    trace = BismashAlgebra(fact).antipode_trace()
    result = trace == sum(d.dimension for d in descs)
    if cross_check:
        try:
            all_one = all(indicator_generic(fact, d) == 1 for d in descs)
        except UnsupportedStabilizerError:
            return result
        if all_one != result:
            raise ConsistencyError(
                "trace criterion disagrees with per-module indicators"
            )
    return result


def sn_invariant_elements(n: int) -> list[tuple[int, Permutation]]:
    """The invariants of S_{n-1} under C_n: for each unit r mod n, the
    permutation x_r(i) = i*r mod n.  Asserted equal to the invariant
    subgroup of the J_n factorization."""
    if n < 2:
        raise ValueError("n must be >= 2")
    out = []
    for r in range(1, n):
        if gcd(r, n) != 1:
            continue
        images = tuple((i * r) % n for i in range(1, n))
        out.append((r, Permutation(images + (n,))))
    computed = {x for _, x in out}
    gf = set(invariants_GF(build_jn(n)).elements)
    if computed != gf:
        raise ConsistencyError("closed-form invariants disagree with the scan")
    return out


def hn_dimension_profile(n: int) -> list[int]:
    """Simple-module dimensions of k^(C_n) # kS_{n-1}: the S_{n-1} irrep
    dimensions together with (n-1) times the S_{n-2} ones.  Their sum is
    asserted to equal the involution count i_n."""
    if n < 3:
        raise ValueError("n must be >= 3")
    dims = [hook_length_dimension(lam) for lam in partitions(n - 1)]
    dims += [(n - 1) * hook_length_dimension(lam) for lam in partitions(n - 2)]
    dims.sort()
    if sum(dims) != involution_recursion(n):
        raise ConsistencyError("dimension profile sum != involution count")
    return dims
