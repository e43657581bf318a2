"""Theorem oracles.

Each verifier builds the semidirect-product instance it needs, runs the
exact character computations on it, and emits a report with the complete
per-case table even on success: the point of these runs is auditability.

A "fail" outcome means the oracle observed a counterexample to the
statement under test; hypothesis violations raise HypothesisNotMet
instead, because the statements are vacuous there.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations as point_permutations
from itertools import product

from .characters import (
    ClassFunction,
    char_equal,
    character_kernel,
    direct_sum,
    frobenius_inner_product,
    induce,
    inner_product,
    linear_characters,
    permutation_character,
    transported_character,
    trivial_character,
)
from .cyclotomic import one
from .errors import HypothesisNotMet, UsageError
from .gassmann import is_gassmann_triple
from .groups import (
    DEFAULT_ELEMENT_CAP,
    Subgroup,
    are_conjugate_subgroups,
    small_generating_set,
)
from .tilde import chi_character, chi_kernel, tilde_build, tilde_lift_subgroup

__all__ = [
    "VerificationReport",
    "verify_irreducibility",
    "verify_decomposition",
    "low_index_subgroups",
    "verify_theorem_group_exhaustive",
    "verify_main_distinguish",
]


@dataclass
class VerificationReport:
    theorem: str
    instance: str
    outcome: str  # "pass" | "fail"
    cases: list
    timing: float

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "outcome": self.outcome,
            "cases": self.cases,
            "timing": self.timing,
        }


def _instance_label(base, h, t):
    name = getattr(base, "name", None) or "G"
    return "%s: |G|=%d, |H|=%d, n=%d, l=%d, |G~|=%d" % (
        name, base.order, h.order, t.n, t.l, t.order)


def _finish(theorem, instance, cases, t0) -> VerificationReport:
    outcome = "pass" if all(c.get("ok", True) for c in cases) else "fail"
    return VerificationReport(theorem, instance, outcome, cases,
                              round(time.perf_counter() - t0, 6))


def _run_cases(fn, items, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


# ------------------------------------------------------------ irreducibility

def verify_irreducibility(base, h, l=3, cap=DEFAULT_ELEMENT_CAP, threads=1):
    """The induced first-coordinate character is irreducible: its self
    inner product is exactly 1, computed independently over the whole
    semidirect product (class sum) and over the lift of H (the Frobenius
    reciprocity sum). Both must equal 1 and each other."""
    t0 = time.perf_counter()
    t, ht = tilde_build(base, h, l, cap=cap)
    chi = chi_character(t, ht)
    ind = induce(t, ht, chi, transversal=t.lifted_transversal())
    ip_group = inner_product(ind, ind)
    ip_sub = frobenius_inner_product(chi, ind)
    m = ip_group.order * ip_sub.order
    cases = [
        {
            "case": "self_inner_product_over_whole_group",
            "value": ip_group.to_json(),
            "ok": ip_group.is_integer(1),
        },
        {
            "case": "frobenius_sum_over_lift_of_h",
            "value": ip_sub.to_json(),
            "ok": ip_sub.is_integer(1),
        },
        {
            "case": "both_computations_agree",
            "ok": ip_group.embed(m) == ip_sub.embed(m),
        },
        {
            "case": "induced_degree_equals_index",
            "value": str(ind.degree()),
            "ok": ind.degree() == t.n,
        },
    ]
    return _finish("irreducibility", _instance_label(base, h, t), cases, t0)


# ------------------------------------------------------------- decomposition

def verify_decomposition(base, h, l=3, cap=DEFAULT_ELEMENT_CAP, threads=1):
    """Inducing the trivial character from U = ker(chi) decomposes as
    Ind(1) + Ind(chi) + Ind(chi bar), pointwise on every conjugacy class.
    Only l = 3 is supported: the cyclic group then has exactly the three
    characters 1, chi, chi bar. A negative control substitutes 1 for
    chi bar and must be detected."""
    if l != 3:
        raise UsageError("the decomposition verifier requires l = 3")
    t0 = time.perf_counter()
    t, ht = tilde_build(base, h, l, cap=cap)
    chi = chi_character(t, ht)
    u = chi_kernel(t, ht)

    trans = t.lifted_transversal()
    lhs = induce(t, u, trivial_character(u))
    ind_one = induce(t, ht, trivial_character(ht), transversal=trans)
    ind_chi = induce(t, ht, chi, transversal=trans)
    ind_bar = induce(t, ht, chi.conjugate(), transversal=trans)
    rhs = direct_sum(ind_one, ind_chi, ind_bar)

    n = t.n
    cases = [
        {
            "case": "degree_bookkeeping",
            "value": "%d = %d+%d+%d" % (3 * n, n, n, n),
            "ok": lhs.degree() == 3 * n
            and ind_one.degree() == ind_chi.degree() == ind_bar.degree() == n,
        }
    ]
    m = max(lhs.order, rhs.order)
    table = t.conjugacy_classes()
    for c in range(table.nclasses):
        a = lhs.values[c].embed(m)
        b = rhs.values[c].embed(m)
        cases.append(
            {
                "case": "class_%d" % c,
                "class_size": table.sizes[c],
                "lhs": a.to_json(),
                "rhs": b.to_json(),
                "ok": a == b,
            }
        )
    wrong = direct_sum(ind_one, ind_chi, ind_one)
    cases.append(
        {
            "case": "negative_control_substituting_trivial_for_conjugate",
            "ok": not char_equal(lhs, wrong),
        }
    )
    return _finish("decomposition", _instance_label(base, h, t), cases, t0)


# ------------------------------------------------------- low-index subgroups

def low_index_subgroups(group, n: int) -> list[Subgroup]:
    """All subgroups of index exactly n.

    Index-n subgroups biject with transitive actions on n points carrying
    a marked point: every candidate assignment of generator images in
    Sym(n) is extended over the whole group along a BFS tree and kept iff
    it is a homomorphism (no conflicts); transitive images contribute the
    preimage of the stabilizer of the marked point. Exhaustive because
    every index-n subgroup arises this way from its coset action.
    """
    if not 1 <= n <= 5:
        raise UsageError("index must be between 1 and 5, got %r" % (n,))
    gens = small_generating_set(group)
    if len(gens) > 3:
        raise UsageError(
            "low-index search needs a generating set of size <= 3, found %d"
            % (len(gens),)
        )

    order = group.order
    mul = group.mul
    # BFS tree over the group: each element reached as parent * generator
    parent = [-1] * order
    via = [-1] * order
    bfs = [group.identity]
    seen = bytearray(order)
    seen[group.identity] = 1
    head = 0
    while head < len(bfs):
        x = bfs[head]
        head += 1
        for i, g in enumerate(gens):
            y = mul(x, g)
            if not seen[y]:
                seen[y] = 1
                parent[y] = x
                via[y] = i
                bfs.append(y)
    assert len(bfs) == order, "generating set does not generate the group"

    def compose(p, q):
        return tuple(p[q[i]] for i in range(n))

    identity_img = tuple(range(n))
    symn = [tuple(p) for p in point_permutations(range(n))]

    found = {}
    for assignment in product(symn, repeat=len(gens)):
        phi = [None] * order
        phi[group.identity] = identity_img
        for x in bfs[1:]:
            phi[x] = compose(phi[parent[x]], assignment[via[x]])
        # homomorphism check on every (element, generator) edge
        if any(
            phi[mul(x, g)] != compose(phi[x], assignment[i])
            for x in range(order)
            for i, g in enumerate(gens)
        ):
            continue
        # transitivity of the image on the n points
        orbit = {0}
        frontier = [0]
        while frontier:
            p = frontier.pop()
            for img in assignment:
                q = img[p]
                if q not in orbit:
                    orbit.add(q)
                    frontier.append(q)
        if len(orbit) != n:
            continue
        stab = tuple(x for x in range(order) if phi[x][0] == 0)
        found.setdefault(stab, None)

    subs = [Subgroup.from_elements(group, elems) for elems in sorted(found)]
    assert all(s.index_in_parent == n for s in subs)
    return subs


# ------------------------------------------------- exhaustive conjugacy check

def verify_theorem_group_exhaustive(base, h, l=3, cap=DEFAULT_ELEMENT_CAP, threads=1):
    """Over every index-n subgroup S of the semidirect product and every
    linear character of S: whenever Ind_S(chi') equals Ind_H~(chi) as a
    class function, S must be conjugate to the lift of H. Includes a
    positive control (a conjugated lift with the transported character
    must produce a hit) and a negative control (the trivial character
    must not).

    The search is restricted to index exactly n because induced degrees
    are [G~ : S] * 1, so any character-equality hit forces index n.
    """
    t0 = time.perf_counter()
    t, ht = tilde_build(base, h, l, cap=cap)
    if not 1 <= t.n <= 5:
        raise UsageError(
            "exhaustive verification enumerates subgroups of index n = %d; "
            "only n <= 5 is supported" % (t.n,)
        )
    chi = chi_character(t, ht)
    target = induce(t, ht, chi, transversal=t.lifted_transversal())
    subs = low_index_subgroups(t, t.n)
    assert any(s == ht for s in subs), "the lift of H must appear in the search"

    def run_case(args):
        si, sub, ci, chp = args
        ind = induce(t, sub, chp)
        equal = char_equal(ind, target)
        record = {
            "case": "subgroup_%d_character_%d" % (si, ci),
            "subgroup_order": sub.order,
            "character_images": list(chp.images) if chp.images else [],
            "character_order": chp.char_order(),
            "induced_equals_target": equal,
        }
        if equal:
            conj = are_conjugate_subgroups(t, sub, ht)
            record["conjugate_to_lift_of_h"] = conj.conjugate
            record["ok"] = conj.conjugate
        else:
            record["ok"] = True
        return record

    items = []
    for si, sub in enumerate(subs):
        for ci, chp in enumerate(linear_characters(sub)):
            items.append((si, sub, ci, chp))
    cases = [{
        "case": "index_%d_subgroup_count" % t.n,
        "value": len(subs),
        "characters_scanned": len(items),
    }]
    cases.extend(_run_cases(run_case, items, threads))
    hits = sum(1 for c in cases if c.get("induced_equals_target"))
    cases.append({"case": "hit_count", "value": hits, "ok": hits >= 1})

    # positive control: a conjugated lift with the transported character
    outside = next(i for i in range(t.order) if not ht.contains(i))
    moved = transported_character(chi, outside)
    pos_equal = char_equal(induce(t, moved.domain, moved), target)
    pos_conj = are_conjugate_subgroups(t, moved.domain, ht).conjugate
    cases.append(
        {
            "case": "positive_control_conjugated_lift",
            "induced_equals_target": pos_equal,
            "conjugate_to_lift_of_h": pos_conj,
            "ok": pos_equal and pos_conj,
        }
    )

    # negative control: Ind(1) has the right degree but is not Ind(chi);
    # (Ind 1, 1) = 1 while (Ind chi, 1) = 0
    ind_triv = induce(t, ht, trivial_character(ht), transversal=t.lifted_transversal())
    ones = ClassFunction(
        t, t.conjugacy_classes(), [one(1)] * t.conjugacy_classes().nclasses,
        is_character=True)
    cases.append(
        {
            "case": "negative_control_trivial_character",
            "induced_equals_target": char_equal(ind_triv, target),
            "ip_ind_one_with_one": inner_product(ind_triv, ones).to_json(),
            "ip_target_with_one": inner_product(target, ones).to_json(),
            "ok": not char_equal(ind_triv, target)
            and inner_product(ind_triv, ones).is_integer(1)
            and inner_product(target, ones).is_integer(0),
        }
    )
    return _finish("theorem-group-exhaustive", _instance_label(base, h, t), cases, t0)


# ------------------------------------------------------- distinguishing check

def verify_main_distinguish(base, h, hprime, l=3, cap=DEFAULT_ELEMENT_CAP, threads=1):
    """For a non-trivial Gassmann triple (G, H, H'), lifted to the
    semidirect product: (a) the lifted permutation characters still agree,
    (b) the lifts are not conjugate, and (c) inducing the trivial
    character from ker(chi') differs from inducing it from U = ker(chi)
    for every order-3 linear character chi' of the lift of H'. Clause (c)
    is the group-theoretic content of the degree-three distinguishing
    statement."""
    t0 = time.perf_counter()
    triple = is_gassmann_triple(base, h, hprime)
    if not triple.is_gassmann:
        raise HypothesisNotMet(
            "(G, H, H') is not a Gassmann triple; the distinguishing "
            "statement is vacuous"
        )
    if triple.is_trivial:
        raise HypothesisNotMet(
            "the Gassmann triple is trivial (subgroups conjugate by %s); "
            "a non-trivial triple is required" % (triple.witness,)
        )

    t, ht = tilde_build(base, h, l, cap=cap)
    htp = tilde_lift_subgroup(t, hprime)
    chi = chi_character(t, ht)
    u = chi_kernel(t, ht)

    cases = []

    perm_h = permutation_character(t, ht)
    perm_hp = permutation_character(t, htp)
    cases.append(
        {
            "case": "a_lifted_permutation_characters_equal",
            "ok": char_equal(perm_h, perm_hp),
        }
    )

    conj = are_conjugate_subgroups(t, ht, htp)
    cases.append(
        {
            "case": "b_lifts_not_conjugate",
            "conjugate": conj.conjugate,
            "ok": not conj.conjugate,
        }
    )

    ind_u = induce(t, u, trivial_character(u))
    chars3 = linear_characters(htp, order_filter=3)
    cases.append(
        {
            "case": "c_order3_character_count",
            "value": len(chars3),
            "ok": len(chars3) >= 1 and len(chars3) % 2 == 0,
        }
    )

    def run_case(args):
        ci, chp = args
        kernel = character_kernel(chp)
        ind_k = induce(t, kernel, trivial_character(kernel))
        differs = not char_equal(ind_k, ind_u)
        return {
            "case": "c_character_%d" % ci,
            "character_images": list(chp.images) if chp.images else [],
            "kernel_index_in_lift": htp.order // kernel.order,
            "induced_trivial_differs_from_u": differs,
            "ok": differs and htp.order // kernel.order == 3,
        }

    cases.extend(_run_cases(run_case, list(enumerate(chars3)), threads))
    return _finish(
        "main-distinguishing", _instance_label(base, h, t) + ", |H'|=%d" % hprime.order,
        cases, t0)
