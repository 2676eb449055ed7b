"""End-to-end acceptance checks.

Each test covers one headline capability and prints a single PASS line on
success; run with ``pytest -v`` to see one result line per criterion.
"""

from collections import Counter
from fractions import Fraction
from math import factorial, gcd

from bismash.characters import (
    hook_length_dimension,
    irrep_character,
    partitions,
    stabilizer_irreps,
)
from bismash.cyclo import rational
from bismash.hopf import BismashAlgebra
from bismash.indicators import (
    classify_simples,
    count_m,
    full_report,
    indicator_cp,
    indicator_generic,
    jp_counts,
    ratio,
    sn_invariant_elements,
)
from bismash.matched_pair import (
    act_into_F,
    act_into_G,
    build_hn,
    build_jn,
    invariants_GF,
    inversion_set,
    orbit_of,
    orbit_table_row,
    orbits,
    verify_matched_pair,
)
from bismash.perm import (
    count_involutions,
    involution_recursion,
    parse_cycles,
)


def cyc(text, degree):
    return parse_cycles(text, degree)


def test_criterion_01_j5_action_table():
    """The C_5 action on S_4: full 8-row action table with stabilizers."""
    fact = build_jn(5)
    expected = {
        "()": (["()"] * 5, 5),
        "(1 4)(2 3)": (["(1 4)(2 3)"] * 5, 5),
        "(1 2 4 3)": (["(1 2 4 3)"] * 5, 5),
        "(1 3 4 2)": (["(1 3 4 2)"] * 5, 5),
        "(1 2)": (["(1 2)", "(1 4 3 2)", "(1 2 3 4)", "(3 4)", "(2 3)"], 1),
        "(1 3)": (["(1 3)", "(1 4 2 3)", "(1 4)", "(1 3 2 4)", "(2 4)"], 1),
        "(1 2 3)": (["(1 2 3)", "(2 4 3)", "(1 3 2)", "(1 3)(2 4)", "(2 3 4)"], 1),
        "(1 2 4)": (["(1 2 4)", "(1 2)(3 4)", "(1 4 3)", "(1 3 4)", "(1 4 2)"], 1),
    }
    # the table columns are the powers of (1 2 3 4 5) in order
    powers = [cyc("()", 5)]
    c = cyc("(1 2 3 4 5)", 5)
    for _ in range(4):
        powers.append(c * powers[-1])
    assert list(fact.F.elements) == powers
    for x_text, (row_text, stab) in expected.items():
        x = cyc(x_text, 5)
        row = [y.cycle_string() for y in orbit_table_row(fact, x)]
        assert row == row_text, f"row for x = {x_text}"
        assert orbit_of(fact, x).stabilizer.order == stab
    # the eight listed x cover all orbits
    reps = {o.representative for o in orbits(fact)}
    covered = {min(orbit_of(fact, cyc(t, 5)).members) for t in expected}
    assert reps == covered
    print("PASS criterion 1: J_5 action table matches the published table")


def test_criterion_02_j6_action_table_rows():
    """Three rows of the C_6 action on S_5, one with intermediate stabilizer."""
    fact = build_jn(6)
    expected = {
        "(1 2)": ["(1 2)", "(1 5 4 3 2)", "(1 2 3 4 5)", "(4 5)", "(3 4)", "(2 3)"],
        "(1 3)": ["(1 3)", "(1 5 3)(2 4)", "(1 5)", "(1 3 5)(2 4)", "(3 5)", "(2 4)"],
        "(1 4)": ["(1 4)", "(1 4)(2 5)", "(2 5)", "(1 4)", "(1 4)(2 5)", "(2 5)"],
    }
    for x_text, row_text in expected.items():
        x = cyc(x_text, 6)
        row = [y.cycle_string() for y in orbit_table_row(fact, x)]
        assert row == row_text, f"row for x = {x_text}"
    stab = orbit_of(fact, cyc("(1 4)", 6)).stabilizer
    assert stab.order == 2
    assert set(stab.elements) == {fact.F.identity, cyc("(1 4)(2 5)(3 6)", 6)}
    # the simple modules over that orbit are induced from C_2 and have dim 3
    dims = {
        d.dimension
        for d in classify_simples(fact)
        if d.orbit.representative in orbit_of(fact, cyc("(1 4)", 6)).members
    }
    assert dims == {3}
    print("PASS criterion 2: J_6 table rows and the order-2 stabilizer match")


def test_criterion_03_antipode_trace_counts_involutions():
    expected = {4: 10, 5: 26, 6: 76, 7: 232}
    for n, i_n in expected.items():
        assert involution_recursion(n) == i_n
        for builder in (build_hn, build_jn):
            fact = builder(n)
            assert BismashAlgebra(fact).antipode_trace() == i_n
            assert count_involutions(fact.L) == i_n
    print("PASS criterion 3: Tr(alpha) = i_n = 10, 26, 76, 232 for both variants")


def test_criterion_04_hn_totally_orthogonal():
    for n in (4, 5, 6, 7):
        fact = build_hn(n)
        descs = classify_simples(fact)
        assert all(indicator_generic(fact, d) == 1 for d in descs)
        assert sum(d.dimension for d in descs) == involution_recursion(n)
    print("PASS criterion 4: every H_n simple (n = 4..7) has indicator +1")


def test_criterion_05_j5_profile():
    report = full_report(build_jn(5))
    dims = Counter(d.dimension for d in report.descriptors)
    pos = Counter(d.dimension for d in report.descriptors if d.indicator == 1)
    assert dims == Counter({1: 20, 5: 4})
    assert pos == Counter({1: 6, 5: 4})
    assert (report.m0, report.m1) == (0, 4)
    assert ratio(5) == Fraction(10, 24)
    print("PASS criterion 5: J_5 profile 20+4 simples, 6+4 positive, m = (0,4)")


def test_criterion_06_j7_profile():
    report = full_report(build_jn(7))
    dims = Counter(d.dimension for d in report.descriptors)
    pos = Counter(d.dimension for d in report.descriptors if d.indicator == 1)
    zero = Counter(d.dimension for d in report.descriptors if d.indicator == 0)
    assert dims == Counter({1: 42, 7: 102})
    assert pos == Counter({1: 8, 7: 32})
    assert zero[7] == 70
    assert (report.m0, report.m1) == (70, 32)
    assert ratio(7) == Fraction(40, 144)
    print("PASS criterion 6: J_7 profile 42+102 simples, 8+32 positive, m = (70,32)")


def test_criterion_07_fast_path_agreement():
    for p in (5, 7):
        fact = build_jn(p)
        for d in classify_simples(fact):
            assert indicator_cp(fact, d) == indicator_generic(fact, d)
    print("PASS criterion 7: C_p fast path agrees with the character formula")


def test_criterion_08_counting_identities():
    for p in (5, 7):
        fact = build_jn(p)
        gf = invariants_GF(fact)
        assert gf.order == p - 1
        assert count_involutions(gf) == 2
        m0, m1 = count_m(fact)  # asserts both identities internally
        i_p = involution_recursion(p)
        assert i_p == 1 + p * (2 - 1) + p * m1
        assert (m0 + m1) * p == factorial(p - 1) - (p - 1)
    print("PASS criterion 8: involution and orbit counting identities hold")


def test_criterion_09_closed_form_p11():
    counts = jp_counts(11)
    assert counts.m1 == 3244
    value = ratio(11)
    assert Fraction(986, 100000) <= value < Fraction(988, 100000)
    print("PASS criterion 9: p = 11 closed forms give m1 = 3244, ratio ~ .00986")


def test_criterion_10_invariant_subgroup():
    for n in (5, 6, 7, 8):
        elements = sn_invariant_elements(n)  # asserts the closed form
        assert [r for r, _ in elements] == [
            r for r in range(1, n) if gcd(r, n) == 1
        ]
        for r, x in elements:
            assert all(x(i) == (i * r - 1) % n + 1 for i in range(1, n))
    for p in (5, 7):
        by_r = dict(sn_invariant_elements(p))
        gf = invariants_GF(build_jn(p))
        generators = [x for x in by_r.values() if x.order() == p - 1]
        assert generators, "invariant group is cyclic of order p-1"
        assert all(len(g.support()) == p - 1 for g in generators)
        g = generators[0]
        powers, current = set(), g
        for _ in range(p - 1):
            powers.add(current)
            current = current * g
        assert powers == set(gf.elements)
    print("PASS criterion 10: invariants of J_n are the mod-n multiplication maps")


def test_criterion_11_property_suites():
    for builder, n in ((build_hn, 6), (build_jn, 6), (build_jn, 5)):
        fact = builder(n)
        mp = verify_matched_pair(fact)
        assert mp.passed
        f, g = fact.F.order, fact.G.order
        assert mp.checks == g * f * f + g * g * f  # exhaustive over both axioms
        algebra = BismashAlgebra(fact)
        hopf = algebra.verify_hopf_axioms()
        assert hopf.passed, hopf.failures
        # inverse-action identities on every (y, a) pair
        for y in fact.G.elements:
            y_inv = y.inverse()
            for a in fact.F.elements:
                lhs = act_into_G(fact, y_inv, a).inverse()
                rhs = act_into_G(fact, y, act_into_F(fact, y_inv, a))
                assert lhs == rhs
                inverts = act_into_G(fact, y, a) == y_inv
                inverts_back = act_into_G(fact, y_inv, a.inverse()) == y
                assert inverts == inverts_back
                if a in inversion_set(fact, y_inv):
                    prod = act_into_F(fact, y_inv, a) * a
                    word = y_inv * _as_l(fact, a)
                    assert word * word == _as_l(fact, prod)
        # orbit-inversion dichotomy and the free-orbit bound
        for orb in orbits(fact):
            flags = {y.inverse() in orb.members for y in orb.members}
            assert len(flags) == 1
            if orb.is_free():
                assert all(
                    len(inversion_set(fact, y)) <= 1 for y in orb.members
                )
        assert algebra.lambda_squared() == algebra.lambda_squared_direct()
    # character orthogonality for every supported stabilizer type
    for group in (
        orbit_of(build_hn(5), build_hn(5).G.identity).stabilizer,  # S_4
        build_jn(5).F,  # C_5
    ):
        chars = [irrep_character(group, lab) for lab in stabilizer_irreps(group)]
        for i, chi in enumerate(chars):
            for j, psi in enumerate(chars):
                assert chi.inner(psi) == rational(1 if i == j else 0)
    for m in range(1, 9):
        assert sum(
            hook_length_dimension(lam) ** 2 for lam in partitions(m)
        ) == factorial(m)
    print("PASS criterion 11: axiom, identity, and orthogonality suites all hold")


def test_asymptotic_trend():
    values = [ratio(p) for p in (5, 7, 11, 13)]
    assert all(a > b for a, b in zip(values, values[1:]))
    print("PASS trend check: positive-indicator ratio decreases along p = 5,7,11,13")


def _as_l(fact, a):
    """View a in F as an element of L (same degree, so the identity map)."""
    assert a in fact.L.elements
    return a
