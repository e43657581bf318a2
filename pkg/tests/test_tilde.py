"""The semidirect-product construction, its character, and its kernel."""

import random

import pytest

from permchar.errors import CapExceeded, UsageError
from permchar.groups import Subgroup, left_cosets
from permchar.tilde import (
    TildeElement,
    chi_character,
    chi_kernel,
    coset_action,
    tilde_build,
    tilde_lift_subgroup,
)

from helpers import perm, s3, subgroup_c2


def s3_instance(l=3):
    g = s3()
    h = subgroup_c2(g)
    t, ht = tilde_build(g, h, l)
    return g, h, t, ht


# ------------------------------------------------------------ coset action

def test_action_s3():
    g = s3()
    h = subgroup_c2(g)
    act = coset_action(g, h)
    assert act.n == 3
    # every generator of H fixes the first coset
    for hg in h.generator_indices:
        assert act.sigma_of(hg)[0] == 0
    # homomorphism on all pairs at this scale
    for a in range(g.order):
        for b in range(g.order):
            sa, sb = act.sigma_of(a), act.sigma_of(b)
            sab = act.sigma_of(g.mul(a, b))
            assert all(sab[i] == sa[sb[i]] for i in range(3))


def test_action_whole_group_is_trivial():
    g = s3()
    whole = Subgroup.from_generators(g, list(g.generator_indices))
    act = coset_action(g, whole)
    assert act.n == 1
    assert all(act.sigma_of(a) == (0,) for a in range(g.order))


# ------------------------------------------------------------- tilde build

def test_tilde_orders():
    g, h, t, ht = s3_instance()
    assert t.order == 162  # 3^3 * 6
    assert ht.order == 54  # 3^3 * 2
    assert t.n == 3

    ident = t.element(t.identity)
    assert ident.exps == (0, 0, 0)
    assert ident.base == g.element(0)


def test_tilde_l_validation():
    g = s3()
    h = subgroup_c2(g)
    for bad in (2, 4, 9, 1, 15):
        with pytest.raises(UsageError):
            tilde_build(g, h, bad)


def test_tilde_cap():
    g = s3()
    h = subgroup_c2(g)
    with pytest.raises(CapExceeded):
        tilde_build(g, h, 3, cap=100)


def test_encode_decode_bijection_exhaustive():
    _, _, t, _ = s3_instance()
    seen = set()
    for i in range(t.order):
        x = t.element(i)
        j = t.index(x)
        assert j == i
        seen.add((x.exps, x.base.images))
    assert len(seen) == 162


def test_group_axioms_random_triples():
    _, _, t, _ = s3_instance()
    rng = random.Random(3)
    ident = t.element(t.identity)
    for _ in range(60):
        a, b, c = (t.element(rng.randrange(t.order)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * ident == ident * a == a
        assert a * a.inverse() == ident


def test_structural_mul_matches_kernel():
    _, _, t, _ = s3_instance()
    rng = random.Random(5)
    for _ in range(120):
        i, j = rng.randrange(t.order), rng.randrange(t.order)
        assert t.index(t.element(i) * t.element(j)) == t.mul(i, j)
        assert t.index(t.element(i).inverse()) == t.inv(i)


def test_chi_hom_formula_exhaustive():
    # chi((v,h)(w,h')) = zeta^(v_1 + w_1), exhaustive over the whole lift:
    # multiplicativity is exactly the fact that H fixes the first coset
    _, _, t, ht = s3_instance()
    chi = chi_character(t, ht)
    elems = list(ht.elements)
    for a in elems:
        assert chi.exponent(a) == t.element(a).exps[0]
        for b in elems:
            assert chi.exponent(t.mul(a, b)) == (chi.exponent(a) + chi.exponent(b)) % 3


def test_projection_is_hom_with_kernel_cln():
    _, _, t, _ = s3_instance()
    rng = random.Random(9)
    for _ in range(60):
        a, b = rng.randrange(t.order), rng.randrange(t.order)
        assert t.base_of(t.mul(a, b)) == t.base.mul(t.base_of(a), t.base_of(b))
    kernel = [i for i in range(t.order) if t.base_of(i) == t.base.identity]
    assert len(kernel) == 27


# -------------------------------------------------------------------- lifts

def test_lift_trivial_and_whole():
    g, h, t, ht = s3_instance()
    trivial = Subgroup.from_elements(g, [g.identity])
    assert tilde_lift_subgroup(t, trivial).order == 27
    whole = Subgroup.from_generators(g, list(g.generator_indices))
    assert tilde_lift_subgroup(t, whole).order == t.order


def test_lift_of_h_equals_h_tilde():
    g, h, t, ht = s3_instance()
    again = tilde_lift_subgroup(t, h)
    assert again == ht
    assert set(ht.elements) == {
        v * g.order + x for v in range(27) for x in h.elements
    }


def test_conjugating_lift_matches_lift_of_conjugate():
    g, h, t, ht = s3_instance()
    rng = random.Random(11)
    for _ in range(4):
        gelem = rng.randrange(g.order)
        lifted_conj = tilde_lift_subgroup(t, h.conjugated_by(gelem))
        # conjugate the lift by (0, g)
        conj_of_lift = ht.conjugated_by(gelem)  # index of (0,g) is g
        assert lifted_conj == conj_of_lift


# ---------------------------------------------------------------- chi and U

def test_chi_values():
    g, h, t, ht = s3_instance()
    chi = chi_character(t, ht)
    assert chi.value(t.identity).is_integer(1)
    # (e_1, h) maps to zeta_3 for every h in H; its index is 1*|G| + h
    for hx in h.elements:
        assert chi.exponent(g.order + hx) == 1
    assert chi.char_order() == 3


def test_chi_rejects_wrong_subgroup():
    g, h, t, ht = s3_instance()
    a3 = Subgroup.from_generators(g, [perm(3, (0, 1, 2))])
    lifted_a3 = tilde_lift_subgroup(t, a3)
    with pytest.raises(UsageError):
        chi_character(t, lifted_a3)
    with pytest.raises(UsageError):
        chi_kernel(t, lifted_a3)


def test_chi_kernel_structure():
    g, h, t, ht = s3_instance()
    u = chi_kernel(t, ht)
    assert ht.order // u.order == 3
    assert u.order == 18  # 3^2 * 2
    assert u.contains(t.identity)
    elems = u.elements
    assert len(elems) == 18
    chi = chi_character(t, ht)
    assert all(chi.exponent(x) == 0 for x in elems)
    rng = random.Random(13)
    for _ in range(40):
        a, b = rng.choice(elems), rng.choice(elems)
        assert u.contains(t.mul(a, b))


def test_transversal_of_u_by_bfs():
    # U has index l*n in the tilde group; the BFS transversal finds it
    g, h, t, ht = s3_instance()
    u = chi_kernel(t, ht)
    cs = left_cosets(t, u)
    assert cs.n == 9
    assert cs.reps[0] == t.identity


def test_lifted_transversal_is_base_cosets():
    g, h, t, ht = s3_instance()
    trans = t.lifted_transversal()
    assert len(trans) == 3
    assert trans[0] == t.identity
    for r in trans:
        assert t.element(r).exps == (0, 0, 0)


def test_class_partition_against_burnside_oracle():
    # the number of conjugacy classes equals the average number of
    # commuting pairs, and each class size is the centralizer index
    _, _, t, _ = s3_instance()
    commuting = sum(
        1
        for a in range(t.order)
        for b in range(t.order)
        if t.mul(a, b) == t.mul(b, a)
    )
    assert commuting % t.order == 0
    table = t.conjugacy_classes()
    assert table.nclasses == commuting // t.order
    for c, rep in enumerate(table.reps):
        centralizer = sum(
            1 for x in range(t.order) if t.mul(x, rep) == t.mul(rep, x)
        )
        assert table.sizes[c] == t.order // centralizer


# --------------------------------------------------------- gl3f2-scale facts

def test_gl3f2_tilde_order():
    from permchar.gassmann import build_gl3_f2

    g, hpoint, _ = build_gl3_f2()
    t, ht = tilde_build(g, hpoint, 3)
    assert t.order == 367416  # 3^7 * 168
    assert ht.order == 52488
    rng = random.Random(17)
    for _ in range(40):
        i = rng.randrange(t.order)
        assert t.index(t.element(i)) == i
    for _ in range(20):
        i, j = rng.randrange(t.order), rng.randrange(t.order)
        assert t.index(t.element(i) * t.element(j)) == t.mul(i, j)


def test_gl3f2_coset_action_matches_natural_action():
    # the coset action on G/Stab(p) is equivalent to the natural action:
    # compare cycle types elementwise (oracle: cycle-type statistics)
    from permchar.gassmann import build_gl3_f2
    from permchar.groups import Permutation

    g, hpoint, _ = build_gl3_f2()
    act = coset_action(g, hpoint)
    for i in range(g.order):
        natural = g.element(i)
        sigma = Permutation(act.sigma_of(i))
        assert sigma.cycle_type() == natural.cycle_type()
