"""Acceptance suite: one test per criterion, each printing a pass line
with its runtime and asserting the stated budget. Everything is exact
arithmetic; there are no tolerances anywhere.

Run with `pytest tests/test_acceptance.py -v -s`.
"""

import random
import time
from fractions import Fraction
from math import lcm

from permchar.characters import (
    ClassFunction,
    char_equal,
    direct_sum,
    frobenius_inner_product,
    induce,
    inner_product,
    linear_characters,
    permutation_character,
    trivial_character,
)
from permchar.cyclotomic import Cyclotomic, euler_phi, root_of_unity, zero
from permchar.gassmann import build_gl3_f2, catalog_get, is_gassmann_triple
from permchar.groups import Subgroup, left_cosets
from permchar.tilde import chi_character, chi_kernel, tilde_build
from permchar.verify import (
    low_index_subgroups,
    verify_decomposition,
    verify_irreducibility,
    verify_main_distinguish,
    verify_theorem_group_exhaustive,
)

from helpers import (
    brute_fixed_cosets,
    brute_force_subgroups,
    cyclic,
    perm,
    s3,
    s4,
    subgroup_c2,
)


class Budget:
    def __init__(self, number, name, seconds):
        self.number = number
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        print("ACCEPTANCE %d %s: %s (%.2fs, budget %ds)"
              % (self.number, self.name, status, elapsed, self.seconds))
        if exc_type is None:
            assert elapsed < self.seconds, (
                "criterion %d exceeded its runtime budget: %.2fs >= %ds"
                % (self.number, elapsed, self.seconds))
        return False


def s3_triple():
    return catalog_get("s3-c2").build()


def test_criterion_1_irreducibility():
    # both the whole-group class sum and the subgroup reciprocity sum give
    # exactly 1, on the small and the large instance
    with Budget(1, "irreducibility s3-c2", 5):
        group, h, _ = s3_triple()
        rep = verify_irreducibility(group, h, 3)
        assert rep.passed
        by = {c["case"]: c for c in rep.cases}
        assert Cyclotomic.from_json(
            by["self_inner_product_over_whole_group"]["value"]).is_integer(1)
        assert Cyclotomic.from_json(
            by["frobenius_sum_over_lift_of_h"]["value"]).is_integer(1)
    with Budget(1, "irreducibility gl3f2", 60):
        group, hpoint, _ = build_gl3_f2()
        rep = verify_irreducibility(group, hpoint, 3)
        assert rep.passed
        by = {c["case"]: c for c in rep.cases}
        assert Cyclotomic.from_json(
            by["self_inner_product_over_whole_group"]["value"]).is_integer(1)
        assert Cyclotomic.from_json(
            by["frobenius_sum_over_lift_of_h"]["value"]).is_integer(1)
        assert by["both_computations_agree"]["ok"]


def test_criterion_2_frobenius_reciprocity_randomized():
    # 50 randomized (subgroup, linear character, class function) cases
    with Budget(2, "Frobenius reciprocity x50", 10):
        group = s4()
        rng = random.Random(2024)
        all_subs = brute_force_subgroups(group)
        table = group.conjugacy_classes()
        for _ in range(50):
            k = Subgroup.from_elements(group, sorted(rng.choice(all_subs)))
            chars = linear_characters(k)
            phi = chars[rng.randrange(len(chars))]
            m = rng.choice([1, 2, 3, 4, 6])
            psi = ClassFunction(
                group, table,
                [Cyclotomic(m, [Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                                for _ in range(euler_phi(m))])
                 for _ in range(table.nclasses)],
            )
            lhs = inner_product(induce(group, k, phi), psi)
            rhs = frobenius_inner_product(phi, psi)
            order = lcm(lhs.order, rhs.order)
            assert lhs.embed(order) == rhs.embed(order)


def test_criterion_3_decomposition():
    with Budget(3, "decomposition s3-c2 + gl3f2", 120):
        group, h, _ = s3_triple()
        rep = verify_decomposition(group, h, 3)
        assert rep.passed
        by = {c["case"]: c for c in rep.cases}
        assert by["degree_bookkeeping"]["value"] == "9 = 3+3+3"
        assert by["negative_control_substituting_trivial_for_conjugate"]["ok"]

        group, hpoint, _ = build_gl3_f2()
        rep = verify_decomposition(group, hpoint, 3)
        assert rep.passed
        by = {c["case"]: c for c in rep.cases}
        assert by["degree_bookkeeping"]["value"] == "21 = 7+7+7"
        assert by["negative_control_substituting_trivial_for_conjugate"]["ok"]
        # pointwise on every conjugacy class
        class_cases = [c for c in rep.cases if c["case"].startswith("class_")]
        assert len(class_cases) == 228
        assert all(c["ok"] for c in class_cases)


def test_criterion_4_theorem_group_exhaustive():
    with Budget(4, "exhaustive conjugacy theorem on s3-c2", 300):
        group, h, _ = s3_triple()
        rep = verify_theorem_group_exhaustive(group, h, 3)
        assert rep.passed
        by = {c["case"]: c for c in rep.cases}
        # every hit implied conjugacy (rep.passed), and hits exist
        assert by["hit_count"]["value"] >= 1
        assert by["positive_control_conjugated_lift"]["ok"]
        assert by["negative_control_trivial_character"]["ok"]

        # the low-index enumeration matches the brute-force all-subgroups
        # oracle on the order-162 group
        t, _ = tilde_build(group, h, 3)
        oracle = sorted(
            tuple(sorted(s)) for s in brute_force_subgroups(t)
            if len(s) == t.order // 3
        )
        ours = sorted(tuple(s.elements) for s in low_index_subgroups(t, 3))
        assert ours == oracle
        assert len(ours) == by["index_3_subgroup_count"]["value"]


def test_criterion_5_distinguishing_statement():
    with Budget(5, "distinguishing statement on gl3f2", 300):
        group, hpoint, hplane = build_gl3_f2()
        rep = verify_main_distinguish(group, hpoint, hplane, 3)
        assert rep.passed
        by = {c["case"]: c for c in rep.cases}
        assert by["a_lifted_permutation_characters_equal"]["ok"]
        assert by["b_lifts_not_conjugate"]["ok"]
        c_cases = [c for c in rep.cases if c["case"].startswith("c_character")]
        assert len(c_cases) == by["c_order3_character_count"]["value"] == 8
        for c in c_cases:
            assert c["induced_trivial_differs_from_u"]
            assert c["kernel_index_in_lift"] == 3


def test_criterion_6_gassmann_detection():
    with Budget(6, "Gassmann detection", 60):
        group, hpoint, hplane = build_gl3_f2()
        rep = is_gassmann_triple(group, hpoint, hplane)
        assert rep.is_gassmann and not rep.is_trivial
        assert all(a == b for _, a, b in rep.class_table)

        # the two criteria agree over every subgroup pair of S3 and S4
        # (is_gassmann_triple raises on any disagreement)
        for g in (s3(), s4()):
            subs = [Subgroup.from_elements(g, sorted(s))
                    for s in brute_force_subgroups(g)]
            for a in subs:
                for b in subs:
                    is_gassmann_triple(g, a, b)


def test_criterion_7_foundation_property_suites():
    with Budget(7, "foundation property suites", 60):
        rng = random.Random(7)

        # cyclotomic ring axioms and Phi_m(zeta_m) = 0 for m <= 30
        for m in range(1, 31):
            z = root_of_unity(m, 1)
            from permchar.cyclotomic import cyclotomic_polynomial

            acc = zero(m)
            for c in reversed(cyclotomic_polynomial(m)):
                acc = acc * z + c
            assert acc.is_zero
        for _ in range(40):
            m = rng.randint(1, 30)
            a, b, c = (
                Cyclotomic(m, [Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                               for _ in range(euler_phi(m))])
                for _ in range(3)
            )
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a.conjugate().conjugate() == a
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()

        # tilde encode/decode bijection, exhaustive at order 162
        group, h, _ = s3_triple()
        t, ht = tilde_build(group, h, 3)
        assert sorted(t.index(t.element(i)) for i in range(t.order)) \
            == list(range(162))

        # tilde multiplication group axioms on random triples
        ident = t.element(t.identity)
        for _ in range(50):
            x, y, z = (t.element(rng.randrange(t.order)) for _ in range(3))
            assert (x * y) * z == x * (y * z)
            assert x * x.inverse() == ident
            assert x * ident == x

        # fixed-point identity for permutation characters, exhaustive on
        # groups of order <= 200
        cases = []
        g3 = s3()
        cases.append((g3, subgroup_c2(g3)))
        cases.append((g3, Subgroup.from_generators(g3, [perm(3, (0, 1, 2))])))
        g4 = s4()
        for gens in ([perm(4, (0, 1, 2, 3)), perm(4, (0, 2))],
                     [perm(4, (0, 1, 2))],
                     [perm(4, (0, 1)), perm(4, (2, 3))]):
            cases.append((g4, Subgroup.from_generators(g4, gens)))
        g6 = cyclic(6)
        cases.append((g6, Subgroup.from_generators(g6, [g6.element(2)])))
        gl, hpoint, hplane = build_gl3_f2()
        cases.append((gl, hpoint))
        cases.append((gl, hplane))
        for grp, sub in cases:
            assert grp.order <= 200
            pc = permutation_character(grp, sub)
            cs = left_cosets(grp, sub)
            for ci, rep in enumerate(grp.conjugacy_classes().reps):
                assert pc.values[ci].rational_value() \
                    == brute_fixed_cosets(grp, cs, rep)
