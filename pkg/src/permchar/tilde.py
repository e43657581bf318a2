"""Semidirect products C_l^n : G from a coset action.

Given a group G with a subgroup H of index n and an odd prime l, G acts
on the n coordinates of C_l^n exactly as it permutes the left cosets
X_1 H, ..., X_n H (with X_1 = identity). Elements are structural pairs
(exponent vector, base element); they are never expanded to degree-l^n
permutations. The dense encoding

    index = (sum_i v_i l^i) * |G| + index_of_base

is a bijection onto 0 .. l^n |G| - 1 and doubles as a perfect hash for
the class-partition kernels.

The action convention is (g.w)_{sigma_g(i)} = w_i. Under it the map
chi((v, h)) = zeta_l^(v_1) is multiplicative on the lift of H precisely
because every h in H fixes coset 1: chi((v,h)(w,h')) = zeta^(v_1 + w_1).
"""

from __future__ import annotations

from .characters import LinearCharacter
from .errors import CapExceeded, UsageError
from .groups import (
    DEFAULT_ELEMENT_CAP,
    ConjugacyClassTable,
    FiniteGroup,
    Subgroup,
    left_cosets,
)
from ._kernel import make_tilde_kernel

_BASE_TABLE_MAX = 1024

__all__ = [
    "CosetActionMap",
    "TildeElement",
    "TildeGroup",
    "coset_action",
    "tilde_build",
    "tilde_lift_subgroup",
    "chi_character",
    "chi_kernel",
]


def is_odd_prime(l: int) -> bool:
    if l < 3 or l % 2 == 0:
        return False
    d = 3
    while d * d <= l:
        if l % d == 0:
            return False
        d += 2
    return True


class CosetActionMap:
    """sigma: G -> Sym({0..n-1}) with sigma_g(i) = j iff g X_i in X_j H."""

    def __init__(self, group, cosets):
        self.group = group
        self.cosets = cosets
        n = cosets.n
        reps = cosets.reps
        sigma = []
        for g in range(group.order):
            sigma.append(tuple(cosets.coset_of(group.mul(g, r)) for r in reps))
        self.sigma = sigma

        gens = group.generator_indices
        for a in gens:
            for b in gens:
                ab = group.mul(a, b)
                sa, sb, sab = sigma[a], sigma[b], sigma[ab]
                assert all(sab[i] == sa[sb[i]] for i in range(n)), \
                    "coset action is not a homomorphism"
        for h in cosets.subgroup.generator_indices:
            assert sigma[h][0] == 0, "subgroup generator moves the first coset"

    @property
    def n(self) -> int:
        return self.cosets.n

    def sigma_of(self, g: int) -> tuple[int, ...]:
        return self.sigma[g]


def coset_action(group, subgroup) -> CosetActionMap:
    return CosetActionMap(group, left_cosets(group, subgroup))


class TildeElement:
    """Structural element (exponent vector, base element) of a TildeGroup."""

    __slots__ = ("group", "exps", "base")

    def __init__(self, group, exps, base):
        self.group = group
        self.exps = tuple(exps)
        self.base = base

    def __mul__(self, other: "TildeElement") -> "TildeElement":
        t = self.group
        if other.group is not t:
            raise UsageError("cannot multiply elements of different tilde groups")
        sig = t.action.sigma_of(t.base.index(self.base))
        out = list(self.exps)
        l = t.l
        for i, w in enumerate(other.exps):
            j = sig[i]
            out[j] = (out[j] + w) % l
        return TildeElement(t, out, self.base * other.base)

    def inverse(self) -> "TildeElement":
        t = self.group
        binv = self.base.inverse()
        sig = t.action.sigma_of(t.base.index(binv))
        out = [0] * t.n
        for i, v in enumerate(self.exps):
            out[sig[i]] = (-v) % t.l
        return TildeElement(t, out, binv)

    def encode(self) -> int:
        return self.group.index(self)

    def order(self) -> int:
        return self.group.element_order(self.encode())

    def __eq__(self, other):
        return (
            isinstance(other, TildeElement)
            and self.group is other.group
            and self.exps == other.exps
            and self.base == other.base
        )

    def __hash__(self):
        return hash((id(self.group), self.exps, self.base))

    def __repr__(self):
        return "(%s | %s)" % (" ".join(map(str, self.exps)), self.base)


class TildeGroup(FiniteGroup):
    """C_l^n : G for the coset action of G on G/H; implements the dense
    index protocol, with the hot loops delegated to the kernel backend."""

    def __init__(self, base, subgroup, l, cap=DEFAULT_ELEMENT_CAP):
        if not is_odd_prime(l):
            raise UsageError("l must be an odd prime, got %r" % (l,))
        if subgroup.parent is not base:
            raise UsageError("subgroup does not live in the base group")
        cosets = left_cosets(base, subgroup)
        n = cosets.n
        order = l**n * base.order
        if order > cap:
            raise CapExceeded(
                "tilde group order %d = %d^%d * %d exceeds the element cap %d"
                % (order, l, n, base.order, cap)
            )
        if base.order > _BASE_TABLE_MAX:
            raise CapExceeded(
                "base group order %d exceeds the dense-table cap %d"
                % (base.order, _BASE_TABLE_MAX)
            )
        assert base.identity == 0

        self.base = base
        self.hbase = subgroup
        self.l = l
        self.n = n
        self.order = order
        self.identity = 0
        self.action = CosetActionMap(base, cosets)

        ng = base.order
        gmul = [0] * (ng * ng)
        for a in range(ng):
            row = a * ng
            for b in range(ng):
                gmul[row + b] = base.mul(a, b)
        ginv = [base.inv(a) for a in range(ng)]
        sigma = [0] * (ng * n)
        for g in range(ng):
            sig = self.action.sigma_of(g)
            sigma[g * n : (g + 1) * n] = list(sig)
        self._k = make_tilde_kernel(l, n, ng, gmul, ginv, sigma)

        # lifted base generators plus the first-coordinate vector generator;
        # the coset action is transitive, so these generate the whole group
        self.generator_indices = tuple(base.generator_indices) + (ng,)
        self._h_tilde = None
        self._classes = None

    # -- index protocol --------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self._k.mul(a, b)

    def inv(self, a: int) -> int:
        return self._k.inv(a)

    def element(self, i: int) -> TildeElement:
        if not 0 <= i < self.order:
            raise UsageError("element index %d out of range" % (i,))
        v, g = divmod(i, self.base.order)
        exps = []
        for _ in range(self.n):
            v, r = divmod(v, self.l)
            exps.append(r)
        return TildeElement(self, exps, self.base.element(g))

    def index(self, x) -> int:
        if isinstance(x, int):
            return x
        if not isinstance(x, TildeElement) or x.group is not self:
            raise UsageError("element does not belong to this tilde group")
        v = 0
        for d in reversed(x.exps):
            v = v * self.l + d
        return v * self.base.order + self.base.index(x.base)

    def conjugacy_classes(self) -> ConjugacyClassTable:
        if self._classes is None:
            cls, reps, sizes = self._k.class_partition(list(self.generator_indices))
            self._classes = ConjugacyClassTable(reps, sizes, cls, self.order)
        return self._classes

    def _conjugacy_scan(self, a_gens, b_mask):
        return self._k.subgroup_conjugacy_scan(list(a_gens), b_mask)

    # -- structural views --------------------------------------------------

    @property
    def h_tilde(self) -> Subgroup:
        """The distinguished lift C_l^n : H used to define chi."""
        if self._h_tilde is None:
            self._h_tilde = tilde_lift_subgroup(self, self.hbase)
        return self._h_tilde

    def lifted_transversal(self) -> tuple[int, ...]:
        """The transversal (0, X_i) of the lift of H, X_i the base coset
        representatives."""
        return tuple(self.action.cosets.reps)

    def base_of(self, idx: int) -> int:
        """Image of the projection (v, g) -> g, a homomorphism onto G."""
        return idx % self.base.order

    def chi_exponent(self, idx: int) -> int:
        """First coordinate of the exponent vector."""
        return (idx // self.base.order) % self.l

    def __repr__(self):
        return "TildeGroup(l=%d, n=%d, base=%r, order=%d)" % (
            self.l, self.n, self.base, self.order)


def tilde_build(base, subgroup, l=3, cap=DEFAULT_ELEMENT_CAP):
    """Build C_l^n : G together with the distinguished lift of H."""
    group = TildeGroup(base, subgroup, l, cap=cap)
    return group, group.h_tilde


def tilde_lift_subgroup(t: TildeGroup, k: Subgroup) -> Subgroup:
    """The full preimage C_l^n : K of a subgroup K of the base group."""
    if k.parent is not t.base:
        raise UsageError("subgroup does not live in the tilde group's base")
    ng = t.base.order
    lpow = t.l**t.n
    members = k.member_set

    def member(idx, _members=members, _ng=ng):
        return (idx % _ng) in _members

    def enumerate_lift():
        elems = k.elements
        return (v * ng + g for v in range(lpow) for g in elems)

    gens = list(k.generator_indices)
    pw = [t.l**i for i in range(t.n)]
    for orbit_rep in _coordinate_orbit_reps(t, k):
        gens.append(pw[orbit_rep] * ng)

    sub = Subgroup.from_predicate(t, member, lpow * k.order, gens,
                                  enumerator=enumerate_lift)
    _spot_check_closed(t, sub)
    return sub


def _coordinate_orbit_reps(t: TildeGroup, k: Subgroup, skip_first=False):
    """Minimal representative of each orbit of K on the n coordinates."""
    n = t.n
    seen = [False] * n
    reps = []
    sigs = [t.action.sigma_of(g) for g in k.generator_indices]
    start = 1 if skip_first else 0
    for i in range(start, n):
        if seen[i]:
            continue
        reps.append(i)
        stack = [i]
        seen[i] = True
        while stack:
            j = stack.pop()
            for sig in sigs:
                jj = sig[j]
                if not seen[jj]:
                    seen[jj] = True
                    stack.append(jj)
    return reps


def _spot_check_closed(t, sub, rounds=60):
    import random

    rng = random.Random(sub.order)
    pool = list(sub.generator_indices) or [t.identity]
    for g in pool:
        for h in pool:
            assert sub.contains(t.mul(g, h))
    for _ in range(rounds):
        a, b = rng.choice(pool), rng.choice(pool)
        c = t.mul(a, b)
        assert sub.contains(c) and sub.contains(t.inv(c))
        pool.append(c)


def _require_distinguished_lift(t: TildeGroup, htilde: Subgroup):
    canonical = t.h_tilde
    if htilde is canonical:
        return
    same = (
        htilde.parent is t
        and htilde.order == canonical.order
        and all(htilde.contains(g) for g in canonical.generator_indices)
        and all(canonical.contains(g) for g in htilde.generator_indices)
    )
    if not same:
        raise UsageError(
            "chi is only a homomorphism on the lift of the subgroup used to "
            "build the tilde group (every h in H must fix the first coset)"
        )


def chi_character(t: TildeGroup, htilde: Subgroup) -> LinearCharacter:
    """The projection onto the first coordinate, (v, h) -> zeta_l^(v_1),
    as a linear character of the lift of H."""
    _require_distinguished_lift(t, htilde)
    chi = LinearCharacter(htilde, t.l, t.chi_exponent, check=True)
    assert any(chi.exponent(g) for g in htilde.generator_indices), \
        "chi must be nontrivial"
    return chi


def chi_kernel(t: TildeGroup, htilde: Subgroup) -> Subgroup:
    """U = ker(chi) = {(v, h) in the lift of H : v_1 = 0}; membership is
    an O(1) predicate, full enumeration happens only on demand."""
    _require_distinguished_lift(t, htilde)
    ng = t.base.order
    l = t.l
    members = t.hbase.member_set

    def member(idx, _ng=ng, _l=l, _members=members):
        return (idx // _ng) % _l == 0 and (idx % _ng) in _members

    def enumerate_kernel():
        elems = t.hbase.elements
        lpow = l**t.n
        return (v * ng + g for v in range(lpow) if v % l == 0 for g in elems)

    gens = list(t.hbase.generator_indices)
    pw = [l**i for i in range(t.n)]
    for orbit_rep in _coordinate_orbit_reps(t, t.hbase, skip_first=True):
        gens.append(pw[orbit_rep] * ng)

    order = l ** (t.n - 1) * t.hbase.order
    sub = Subgroup.from_predicate(t, member, order, gens,
                                  enumerator=enumerate_kernel)
    _spot_check_closed(t, sub)
    assert htilde.order // sub.order == l
    return sub
