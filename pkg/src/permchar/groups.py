"""Finite permutation groups given by generators: enumeration, subgroups,
cosets, conjugacy classes, commutators, abelianization.

Every group speaks a dense integer-index protocol: its elements are
numbered 0..order-1 in a canonical order (lexicographic on image tuples
for permutation groups, the structural encoding for semidirect products),
and ``mul``/``inv`` act on indices. Algorithms work on indices; rich
element objects appear only at the boundaries. This makes iteration
order, class representatives and reported witnesses reproducible
bit-for-bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import CapExceeded, UsageError

DEFAULT_ELEMENT_CAP = 2_000_000

_MUL_TABLE_MAX = 1024  # dense multiplication table below this order
_CLOSURE_CHECK_MAX = 300  # full pairwise closure validation below this size
_ABELIANIZATION_MAX = 100_000

__all__ = [
    "DEFAULT_ELEMENT_CAP",
    "Permutation",
    "FiniteGroup",
    "PermGroup",
    "Subgroup",
    "ConjugacyClassTable",
    "CosetSpace",
    "Abelianization",
    "enumerate_elements",
    "left_cosets",
    "are_conjugate_subgroups",
    "commutator_subgroup",
    "abelianization",
    "small_generating_set",
]


class Permutation:
    """A permutation of {0, ..., d-1} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        d = len(images)
        if sorted(images) != list(range(d)):
            raise UsageError("images %r are not a bijection of 0..%d" % (images, d - 1))
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return Permutation(images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p*q)(i) = p(q(i))
        p, q = self.images, other.images
        return Permutation(tuple(p[q[i]] for i in range(len(p))))

    def inverse(self) -> "Permutation":
        out = [0] * len(self.images)
        for i, j in enumerate(self.images):
            out[j] = i
        return Permutation(out)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def order(self) -> int:
        k = 1
        cur = self
        ident = tuple(range(self.degree))
        while cur.images != ident:
            cur = cur * self
            k += 1
        return k

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(%s)" % " ".join(map(str, c)) for c in cyc)

    def __repr__(self):
        return "Permutation(%r)" % (self.images,)


def enumerate_elements(generators, degree=None, cap=DEFAULT_ELEMENT_CAP):
    """Breadth-first closure of the generators under multiplication,
    returned sorted by image tuple. An empty generator list needs an
    explicit degree and yields the trivial group."""
    generators = list(generators)
    if not generators:
        if degree is None:
            raise UsageError("degree required when the generator list is empty")
        return [Permutation.identity(degree)]
    d = generators[0].degree
    if any(g.degree != d for g in generators):
        raise UsageError("generators have mixed degrees")
    if degree is not None and degree != d:
        raise UsageError("degree %d does not match generators of degree %d" % (degree, d))
    ident = Permutation.identity(d)
    seen = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y.images not in seen:
                    seen[y.images] = y
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceeded(
                            "group enumeration exceeded the element cap %d" % (cap,)
                        )
        frontier = nxt
    return sorted(seen.values())


class FiniteGroup:
    """Base for groups exposing the dense index protocol.

    Subclasses provide: order, identity (index 0 by convention, asserted),
    generator_indices, mul(a, b), inv(a), element(i), index(x).
    """

    order: int
    identity: int = 0
    generator_indices: tuple[int, ...]

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def element(self, i: int):
        raise NotImplementedError

    def index(self, x) -> int:
        raise NotImplementedError

    def conj(self, t: int, a: int) -> int:
        """t a t^-1."""
        return self.mul(self.mul(t, a), self.inv(t))

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        out = self.identity
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def element_order(self, a: int) -> int:
        k = 1
        cur = a
        while cur != self.identity:
            cur = self.mul(cur, a)
            k += 1
        return k

    def conjugacy_classes(self) -> "ConjugacyClassTable":
        table = getattr(self, "_classes", None)
        if table is None:
            table = ConjugacyClassTable.compute(
                range(self.order), self.generator_indices, self.mul, self.inv, self.order
            )
            self._classes = table
        return table

    # hook for kernel-accelerated subgroup-conjugacy scans
    def _conjugacy_scan(self, a_gens, b_mask):
        return None


class PermGroup(FiniteGroup):
    """A finite permutation group enumerated from its generators."""

    def __init__(self, generators, degree=None, cap=DEFAULT_ELEMENT_CAP, name=None):
        self.generators = [
            g if isinstance(g, Permutation) else Permutation(g) for g in generators
        ]
        elements = enumerate_elements(self.generators, degree=degree, cap=cap)
        self.elements = elements
        self.order = len(elements)
        self.degree = elements[0].degree
        self.name = name
        self._pos = {p.images: i for i, p in enumerate(elements)}
        # the identity is the lexicographic minimum of any permutation group
        assert elements[0].images == tuple(range(self.degree))
        self.identity = 0
        self.generator_indices = tuple(self._pos[g.images] for g in self.generators)
        self._invs = [self._pos[p.inverse().images] for p in elements]
        self._table = None
        if self.order <= _MUL_TABLE_MAX:
            self._table = [
                [self._pos[(a * b).images] for b in elements] for a in elements
            ]

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return self._table[a][b]
        return self._pos[(self.elements[a] * self.elements[b]).images]

    def inv(self, a: int) -> int:
        return self._invs[a]

    def element(self, i: int) -> Permutation:
        return self.elements[i]

    def index(self, x) -> int:
        if isinstance(x, int):
            return x
        i = self._pos.get(x.images)
        if i is None:
            raise UsageError("permutation %s is not in the group" % (x,))
        return i

    def __contains__(self, x) -> bool:
        return isinstance(x, Permutation) and x.images in self._pos

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or "PermGroup"
        return "%s(degree=%d, order=%d)" % (label, self.degree, self.order)


class Subgroup:
    """A subgroup of a FiniteGroup, stored as parent element indices.

    Equality is element-set equality. Membership is O(1): a frozenset for
    materialized subgroups, a predicate for subgroups that are cheaper to
    describe than to list (these materialize on demand via ``enumerator``).
    """

    def __init__(self, parent, generator_indices, order, *, elements=None,
                 member_fn=None, enumerator=None):
        self.parent = parent
        self.generator_indices = tuple(generator_indices)
        self.order = order
        self._elements = tuple(elements) if elements is not None else None
        self._member_set = frozenset(self._elements) if elements is not None else None
        self._member_fn = member_fn
        self._enumerator = enumerator
        self._classes = None
        if parent.order % order:
            raise UsageError(
                "Lagrange violated: |subgroup| = %d does not divide |parent| = %d"
                % (order, parent.order)
            )

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_generators(cls, parent, generators) -> "Subgroup":
        gens = [g if isinstance(g, int) else parent.index(g) for g in generators]
        elements = _closure(parent.mul, gens, parent.identity)
        return cls(parent, gens, len(elements), elements=elements)

    @classmethod
    def from_elements(cls, parent, indices, generators=None, check=True) -> "Subgroup":
        elements = tuple(sorted(set(indices)))
        members = frozenset(elements)
        if check:
            if parent.identity not in members:
                raise UsageError("element set does not contain the identity")
            _check_closed(parent, elements, members)
        if generators is None:
            generators = _greedy_generators(parent.mul, elements, parent.identity)
        return cls(parent, generators, len(elements), elements=elements)

    @classmethod
    def from_predicate(cls, parent, member_fn, order, generators, enumerator=None) -> "Subgroup":
        return cls(parent, generators, order,
                   member_fn=member_fn, enumerator=enumerator)

    # -- membership / elements --------------------------------------------

    def contains(self, idx: int) -> bool:
        if self._member_set is not None:
            return idx in self._member_set
        return self._member_fn(idx)

    __contains__ = contains

    @property
    def elements(self) -> tuple[int, ...]:
        if self._elements is None:
            if self._enumerator is not None:
                self._elements = tuple(sorted(self._enumerator()))
            else:
                self._elements = _closure(
                    self.parent.mul, list(self.generator_indices), self.parent.identity
                )
            assert len(self._elements) == self.order
            self._member_set = frozenset(self._elements)
        return self._elements

    @property
    def member_set(self) -> frozenset:
        if self._member_set is None:
            _ = self.elements
        return self._member_set

    @property
    def index_in_parent(self) -> int:
        return self.parent.order // self.order

    # -- group protocol over parent indices -------------------------------

    @property
    def identity(self) -> int:
        return self.parent.identity

    def mul(self, a: int, b: int) -> int:
        return self.parent.mul(a, b)

    def inv(self, a: int) -> int:
        return self.parent.inv(a)

    def conjugacy_classes(self) -> "ConjugacyClassTable":
        if self._classes is None:
            if self.order > 20_000:
                raise CapExceeded(
                    "refusing to compute conjugacy classes of a subgroup of "
                    "order %d (cap 20000)" % (self.order,)
                )
            if not self.generator_indices and self.order > 1:
                raise UsageError(
                    "conjugacy classes of a predicate subgroup need generators"
                )
            self._classes = ConjugacyClassTable.compute(
                self.elements, self.generator_indices, self.mul, self.inv, self.order
            )
        return self._classes

    def conjugated_by(self, t: int) -> "Subgroup":
        """The subgroup t . self . t^-1."""
        parent = self.parent
        elems = sorted(parent.conj(t, x) for x in self.elements)
        gens = [parent.conj(t, g) for g in self.generator_indices]
        return Subgroup(parent, gens, self.order, elements=elems)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.member_set == other.member_set
        )

    def __hash__(self):
        return hash((id(self.parent), self.member_set))

    def __repr__(self):
        return "Subgroup(order=%d, index=%d)" % (self.order, self.index_in_parent)


def _closure(mul, gens, identity) -> tuple[int, ...]:
    seen = {identity}
    seen.update(gens)
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def _check_closed(parent, elements, members):
    mul, inv = parent.mul, parent.inv
    if len(elements) <= _CLOSURE_CHECK_MAX:
        pairs = product(elements, repeat=2)
    else:
        rng = random.Random(len(elements))
        pairs = ((rng.choice(elements), rng.choice(elements)) for _ in range(400))
    for a, b in pairs:
        if mul(a, inv(b)) not in members:
            raise UsageError("element set is not closed under the group operations")


def _greedy_generators(mul, elements, identity):
    if len(elements) > 5000:
        raise UsageError(
            "explicit generators required for subgroups of order > 5000"
        )
    chosen = []
    spanned = {identity}
    for x in elements:
        if x in spanned:
            continue
        chosen.append(x)
        spanned = set(_closure(mul, chosen, identity))
        if len(spanned) == len(elements):
            break
    return chosen


class ConjugacyClassTable:
    """Conjugacy classes as orbit data: representatives (encoding-minimal),
    sizes, and an element-index -> class-number map."""

    def __init__(self, reps, sizes, class_map, order):
        self.reps = tuple(reps)
        self.sizes = tuple(sizes)
        self._class_map = class_map
        self.order = order
        assert sum(self.sizes) == order
        assert self.sizes[0] == 1 and self.class_of(reps[0]) == 0

    @property
    def nclasses(self) -> int:
        return len(self.reps)

    def class_of(self, idx: int) -> int:
        return self._class_map[idx]

    @staticmethod
    def compute(element_indices, gen_indices, mul, inv, order) -> "ConjugacyClassTable":
        gen_invs = [(t, inv(t)) for t in gen_indices]
        class_map = {}
        reps, sizes = [], []
        for s in element_indices:
            if s in class_map:
                continue
            c = len(reps)
            reps.append(s)
            class_map[s] = c
            count = 1
            stack = [s]
            while stack:
                x = stack.pop()
                for t, ti in gen_invs:
                    y = mul(mul(t, x), ti)
                    if y not in class_map:
                        class_map[y] = c
                        count += 1
                        stack.append(y)
            sizes.append(count)
        return ConjugacyClassTable(reps, sizes, class_map, order)


class CosetSpace:
    """Left cosets of a subgroup with X_1 = identity, discovered BFS-first."""

    def __init__(self, group, subgroup, reps):
        self.group = group
        self.subgroup = subgroup
        self.reps = tuple(reps)

    @property
    def n(self) -> int:
        return len(self.reps)

    def coset_of(self, g: int) -> int:
        group, sub = self.group, self.subgroup
        for j, r in enumerate(self.reps):
            if sub.contains(group.mul(group.inv(r), g)):
                return j
        raise AssertionError("element %d lies in no coset" % (g,))


def left_cosets(group, subgroup) -> CosetSpace:
    """BFS coset transversal; the first representative is the identity."""
    if subgroup.parent is not group:
        raise UsageError("subgroup does not live in the given group")
    n = group.order // subgroup.order
    reps = [group.identity]
    frontier = [group.identity]
    while frontier and len(reps) < n:
        nxt = []
        for r in frontier:
            for s in group.generator_indices:
                y = group.mul(s, r)
                if not any(
                    subgroup.contains(group.mul(group.inv(rj), y)) for rj in reps
                ):
                    reps.append(y)
                    nxt.append(y)
                    if len(reps) == n:
                        break
            if len(reps) == n:
                break
        frontier = nxt
    assert len(reps) == n, "coset BFS found %d of %d cosets" % (len(reps), n)
    return CosetSpace(group, subgroup, reps)


@dataclass(frozen=True)
class ConjugacyAnswer:
    conjugate: bool
    witness: int | None


def are_conjugate_subgroups(group, a, b) -> ConjugacyAnswer:
    """Plain scan over the whole group for t with t A t^-1 = B; the witness
    is verified elementwise before being returned."""
    if a.parent is not group or b.parent is not group:
        raise UsageError("both subgroups must live in the given group")
    if a.order != b.order:
        return ConjugacyAnswer(False, None)

    b_mask = bytearray(group.order)
    for x in b.elements:
        b_mask[x] = 1

    a_gens = list(a.generator_indices)
    witness = group._conjugacy_scan(a_gens, b_mask)
    if witness is None:
        witness = -1
        mul, inv = group.mul, group.inv
        for t in range(group.order):
            ti = inv(t)
            if all(b_mask[mul(mul(t, g), ti)] for g in a_gens):
                witness = t
                break
    if witness < 0:
        return ConjugacyAnswer(False, None)
    # conjugates of generators inside B with |A| = |B| force equality;
    # verify elementwise anyway before reporting a witness
    conj = group.conj
    assert frozenset(conj(witness, x) for x in a.elements) == b.member_set
    return ConjugacyAnswer(True, witness)


def commutator_subgroup(h: Subgroup) -> Subgroup:
    """[H, H] as the normal closure in H of the generator commutators."""
    parent = h.parent
    mul, inv = parent.mul, parent.inv
    gens = list(h.generator_indices)
    comm_gens = []
    seen_gens = set()
    for x in gens:
        for y in gens:
            c = mul(mul(x, y), inv(mul(y, x)))
            if c not in seen_gens:
                seen_gens.add(c)
                comm_gens.append(c)
    while True:
        closure = _closure(mul, comm_gens, parent.identity)
        members = set(closure)
        new = []
        for t in gens:
            ti = inv(t)
            for c in comm_gens:
                y = mul(mul(t, c), ti)
                if y not in members and y not in seen_gens:
                    seen_gens.add(y)
                    new.append(y)
        if not new:
            break
        comm_gens.extend(new)
    derived = Subgroup(parent, comm_gens, len(closure), elements=closure)
    # normality in H, by construction; assert on generators
    for t in gens:
        for c in comm_gens:
            assert derived.contains(parent.conj(t, c))
    return derived


@dataclass(frozen=True)
class Abelianization:
    """H/[H,H] as Z_d1 x ... x Z_dk with d1 | d2 | ... and the projection
    sending an element of H to its exponent vector."""

    subgroup: Subgroup
    invariant_factors: tuple[int, ...]
    generators: tuple[int, ...]  # parent indices mapping onto the factor generators
    _coset_of: dict
    _coset_exps: tuple

    def exponents(self, idx: int) -> tuple[int, ...]:
        return self._coset_exps[self._coset_of[idx]]

    @property
    def quotient_order(self) -> int:
        q = 1
        for d in self.invariant_factors:
            q *= d
        return q


def abelianization(h: Subgroup) -> Abelianization:
    if h.order > _ABELIANIZATION_MAX:
        raise CapExceeded("abelianization cap exceeded for order %d" % (h.order,))
    parent = h.parent
    mul = parent.mul
    derived = commutator_subgroup(h)
    d_elems = derived.elements

    # one pass assigns every element of H to its coset of [H,H]
    coset_of = {}
    reps = []
    for x in h.elements:
        if x in coset_of:
            continue
        cid = len(reps)
        reps.append(x)
        for d in d_elems:
            coset_of[mul(x, d)] = cid
    q = len(reps)
    assert q == h.order // derived.order

    qmul = [[coset_of[mul(reps[i], reps[j])] for j in range(q)] for i in range(q)]

    def qorder(i):
        k, cur = 1, i
        while cur != 0:
            cur = qmul[cur][i]
            k += 1
        return k

    orders = [qorder(i) for i in range(q)]

    # basis of the abelian quotient: greedily take the max-order element
    # that extends the span as a direct factor
    basis = []
    spanned = {0}
    while len(spanned) < q:
        found = None
        for x in sorted(range(q), key=lambda i: (-orders[i], i)):
            if x in spanned:
                continue
            powers = [0]
            cur = x
            while cur != 0:
                powers.append(cur)
                cur = qmul[cur][x]
            new_span = {qmul[s][p] for s in spanned for p in powers}
            if len(new_span) == len(spanned) * orders[x]:
                found = (x, new_span)
                break
        assert found is not None, "abelian basis extraction failed"
        basis.append(found[0])
        spanned = found[1]

    # descending orders -> ascending invariant factors d1 | d2 | ...
    basis.reverse()
    factors = tuple(orders[b] for b in basis)

    # exponent vector of every coset
    exp_of_coset = {}
    for exps in product(*(range(d) for d in factors)):
        elem = 0
        for b, e in zip(basis, exps):
            for _ in range(e):
                elem = qmul[elem][b]
        exp_of_coset[elem] = exps
    assert len(exp_of_coset) == q, "projection is not a bijection onto the product"
    coset_exps = tuple(exp_of_coset[c] for c in range(q))

    return Abelianization(
        subgroup=h,
        invariant_factors=factors,
        generators=tuple(reps[b] for b in basis),
        _coset_of=coset_of,
        _coset_exps=coset_exps,
    )


_GREEDY_GENSET_MAX = 20_000


def small_generating_set(target, budget=None) -> list[int]:
    """Greedy generating set: repeatedly add the element whose addition
    maximizes the generated order (first such element in canonical order)."""
    if target.order > _GREEDY_GENSET_MAX:
        raise CapExceeded(
            "greedy generating-set search scans all %d elements; cap is %d"
            % (target.order, _GREEDY_GENSET_MAX)
        )
    if isinstance(target, Subgroup):
        mul = target.parent.mul
        elements = target.elements
        order = target.order
        identity = target.identity
    else:
        mul = target.mul
        elements = range(target.order)
        order = target.order
        identity = target.identity

    chosen: list[int] = []
    spanned = {identity}
    while len(spanned) < order:
        best = None
        best_size = 0
        for x in elements:
            if x in spanned:
                continue
            cl = _closure(mul, chosen + [x], identity)
            if len(cl) > best_size:
                best = (x, set(cl))
                best_size = len(cl)
                if best_size == order:
                    break
        chosen.append(best[0])
        spanned = best[1]
        if budget is not None and len(chosen) > budget:
            raise UsageError(
                "generating-set budget %d insufficient (needs more generators)"
                % (budget,)
            )
    return chosen
