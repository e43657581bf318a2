"""Class functions with exact cyclotomic values: induction, restriction,
inner products, direct sums, and enumeration of linear characters.

Characters are stored as class functions, never as matrices: every
statement we verify is decided by character identities. Values of one
class function share a common cyclotomic order; comparisons across
class functions embed into the lcm of the orders involved.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import product
from math import gcd, lcm

from .cyclotomic import Cyclotomic, rational, root_of_unity, zero
from .errors import UsageError
from .groups import Subgroup, abelianization, left_cosets

__all__ = [
    "ClassFunction",
    "LinearCharacter",
    "trivial_character",
    "linear_characters",
    "permutation_character",
    "induce",
    "restrict",
    "inner_product",
    "frobenius_inner_product",
    "char_equal",
    "direct_sum",
    "character_kernel",
    "transported_character",
]


class ClassFunction:
    """A function on the conjugacy classes of a carrier (group or
    subgroup), with values in one cyclotomic field."""

    def __init__(self, carrier, table, values, is_character=False):
        values = list(values)
        order = lcm(*(v.order for v in values)) if values else 1
        self.carrier = carrier
        self.table = table
        self.values = tuple(v.embed(order) for v in values)
        self.order = order
        self.is_character = is_character
        assert len(self.values) == table.nclasses

    def value_at(self, idx: int) -> Cyclotomic:
        """Value at an element given by its index in the carrier."""
        return self.values[self.table.class_of(idx)]

    def degree(self) -> Fraction:
        return self.values[0].rational_value()

    def at_order(self, order: int) -> "ClassFunction":
        if order == self.order:
            return self
        return ClassFunction(
            self.carrier,
            self.table,
            [v.embed(order) for v in self.values],
            is_character=self.is_character,
        )

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]

    def render(self) -> str:
        return "[" + ", ".join(v.render() for v in self.values) + "]"

    def __repr__(self):
        return "ClassFunction(order=%d, values=%s)" % (self.order, self.render())


class LinearCharacter:
    """A degree-1 character of a subgroup, given by an exponent function
    into Z/order: value(x) = zeta_order^exponent(x)."""

    is_character = True

    def __init__(self, domain: Subgroup, order: int, exp_fn, images=None, check=True):
        self.domain = domain
        self.order = order
        self._exp = exp_fn
        self.images = tuple(images) if images is not None else None
        if check:
            self._validate()

    def _validate(self):
        dom = self.domain
        if self._exp(dom.identity) % self.order != 0:
            raise UsageError("character does not send the identity to 1")
        for a in dom.generator_indices:
            for b in dom.generator_indices:
                lhs = self._exp(dom.mul(a, b)) % self.order
                rhs = (self._exp(a) + self._exp(b)) % self.order
                if lhs != rhs:
                    raise UsageError(
                        "value map is not multiplicative on generator pair"
                    )

    def exponent(self, idx: int) -> int:
        return self._exp(idx) % self.order

    def value(self, idx: int) -> Cyclotomic:
        return root_of_unity(self.order, self._exp(idx))

    def degree(self) -> Fraction:
        return Fraction(1)

    def conjugate(self) -> "LinearCharacter":
        fn = self._exp
        order = self.order
        out = LinearCharacter(self.domain, order, lambda idx: (-fn(idx)) % order,
                              check=False)
        factors = getattr(self, "_factors", None)
        if self.images is not None and factors is not None:
            out.images = tuple((-t) % d for t, d in zip(self.images, factors))
            out._factors = factors
        return out

    def char_order(self) -> int:
        """Exact order of the character in the dual group."""
        out = 1
        for g in self.domain.generator_indices:
            e = self.exponent(g)
            out = lcm(out, self.order // gcd(self.order, e))
        return out

    @property
    def is_trivial(self) -> bool:
        return all(self.exponent(g) == 0 for g in self.domain.generator_indices)

    def equals(self, other: "LinearCharacter") -> bool:
        if self.domain is not other.domain and self.domain != other.domain:
            return False
        m = lcm(self.order, other.order)
        return all(
            self.exponent(g) * (m // self.order)
            == other.exponent(g) * (m // other.order)
            for g in self.domain.generator_indices
        )

    def __repr__(self):
        return "LinearCharacter(order=%d, domain=%r)" % (self.order, self.domain)


def trivial_character(domain: Subgroup) -> LinearCharacter:
    return LinearCharacter(domain, 1, lambda idx: 0, images=(), check=False)


def linear_characters(k: Subgroup, order_filter: int | None = None) -> list[LinearCharacter]:
    """All homomorphisms K -> C* (they factor through K/[K,K]), in the
    canonical order of their image-exponent tuples. With ``order_filter``
    only characters of exactly that order are returned."""
    ab = abelianization(k)
    factors = ab.invariant_factors
    m = lcm(*factors) if factors else 1
    chars = []
    for images in product(*(range(d) for d in factors)):
        weights = tuple(t * (m // d) for t, d in zip(images, factors))

        def exp_fn(idx, _w=weights, _ab=ab, _m=m):
            return sum(a * w for a, w in zip(_ab.exponents(idx), _w)) % _m

        order = 1
        for t, d in zip(images, factors):
            order = lcm(order, d // gcd(d, t))
        if order_filter is not None and order != order_filter:
            continue
        chi = LinearCharacter(k, m, exp_fn, images=images, check=False)
        chi._factors = factors
        chars.append(chi)
    return chars


def character_kernel(chi: LinearCharacter) -> Subgroup:
    """ker(chi) as a predicate-backed subgroup of chi's domain's parent."""
    domain = chi.domain
    d = chi.char_order()
    assert domain.order % d == 0
    order = domain.order // d

    def member(idx, _dom=domain, _chi=chi):
        return _dom.contains(idx) and _chi.exponent(idx) == 0

    def enumerate_kernel():
        return (x for x in domain.elements if chi.exponent(x) == 0)

    return Subgroup.from_predicate(
        domain.parent, member, order, generators=(), enumerator=enumerate_kernel
    )


def transported_character(chi: LinearCharacter, t: int) -> LinearCharacter:
    """The character x -> chi(t^-1 x t) on the conjugated domain t.D.t^-1."""
    parent = chi.domain.parent
    domain = chi.domain.conjugated_by(t)
    ti = parent.inv(t)

    def exp_fn(idx, _p=parent, _ti=ti, _t=t, _chi=chi):
        return _chi.exponent(_p.mul(_p.mul(_ti, idx), _t))

    return LinearCharacter(domain, chi.order, exp_fn, check=False)


# ------------------------------------------------------------- operations

def _phi_degree(phi) -> Fraction:
    return phi.degree() if callable(getattr(phi, "degree", None)) else Fraction(1)


def _value_fn(phi, order):
    """Evaluation of phi at parent element indices, embedded at ``order``."""
    if isinstance(phi, LinearCharacter):
        scale = order // phi.order
        return lambda idx: root_of_unity(order, phi.exponent(idx) * scale)
    return lambda idx: phi.value_at(idx).embed(order)


def _domain_of(phi):
    return phi.domain if isinstance(phi, LinearCharacter) else phi.carrier


def induce(group, k: Subgroup, phi, transversal=None) -> ClassFunction:
    """Ind_K^G(phi) by the transversal formula: the value at g is the sum
    of phi over the conjugates x^-1 g x that land in K, x running over a
    left-coset transversal. Independent of the transversal choice."""
    if k.parent is not group:
        raise UsageError("subgroup does not live in the inducing group")
    dom = _domain_of(phi)
    if dom is not k and dom != k:
        raise UsageError("character is not defined on the inducing subgroup")
    table = group.conjugacy_classes()
    if transversal is None:
        transversal = left_cosets(group, k).reps
    value = _value_fn(phi, phi.order)
    mul, inv = group.mul, group.inv
    values = []
    for rep in table.reps:
        acc = zero(phi.order)
        for x in transversal:
            y = mul(mul(inv(x), rep), x)
            if k.contains(y):
                acc = acc + value(y)
        values.append(acc)
    out = ClassFunction(group, table, values,
                        is_character=getattr(phi, "is_character", False))
    assert out.degree() == len(transversal) * _phi_degree(phi)
    return out


def restrict(phi: ClassFunction, k: Subgroup) -> ClassFunction:
    """Pointwise restriction, re-bucketed onto K's own conjugacy classes."""
    if k.parent is not phi.carrier:
        raise UsageError("subgroup does not live in the class function's group")
    table = k.conjugacy_classes()
    values = [phi.value_at(rep) for rep in table.reps]
    out = ClassFunction(k, table, values, is_character=phi.is_character)
    assert out.values[0] == phi.values[0].embed(out.order)
    return out


def permutation_character(group, k: Subgroup) -> ClassFunction:
    """Character of the action on G/K: the value at g counts fixed cosets.
    Cross-checked against Ind_K^G(1) on every call."""
    if k.parent is not group:
        raise UsageError("subgroup does not live in the given group")
    cosets = left_cosets(group, k)
    table = group.conjugacy_classes()
    mul, inv = group.mul, group.inv
    values = []
    for rep in table.reps:
        count = 0
        for r in cosets.reps:
            if k.contains(mul(inv(r), mul(rep, r))):
                count += 1
        values.append(rational(count))
    out = ClassFunction(group, table, values, is_character=True)
    induced = induce(group, k, trivial_character(k), transversal=cosets.reps)
    assert char_equal(out, induced), "fixed-coset count disagrees with Ind(1)"
    return out


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Cyclotomic:
    """(phi, psi) = (1/|G|) sum over classes of |class| phi conj(psi)."""
    if phi.carrier is not psi.carrier:
        raise UsageError("inner product needs class functions on the same group")
    m = lcm(phi.order, psi.order)
    total = zero(m)
    for size, a, b in zip(phi.table.sizes, phi.values, psi.values):
        total = total + a.embed(m) * b.embed(m).conjugate() * size
    total = total * Fraction(1, phi.table.order)
    if phi.is_character and psi.is_character:
        assert total.is_integer(), "character inner product must be a rational integer"
    return total


def frobenius_inner_product(chi: LinearCharacter, theta: ClassFunction) -> Cyclotomic:
    """(chi, theta|_K)_K by direct summation over the subgroup's elements,
    bucketed by (character exponent, class of the ambient group). The
    second argument is the conjugated one, matching inner_product, so this
    equals inner_product(induce(chi), theta) exactly."""
    k = chi.domain
    if k.parent is not theta.carrier:
        raise UsageError("character domain does not sit inside the class function's group")
    m = lcm(chi.order, theta.order)
    scale = m // chi.order
    class_of = theta.table.class_of
    exp = chi.exponent
    counts = defaultdict(int)
    for x in k.elements:
        counts[(exp(x), class_of(x))] += 1
    total = zero(m)
    for (e, c), count in sorted(counts.items()):
        total = total + root_of_unity(m, e * scale) \
            * theta.values[c].embed(m).conjugate() * count
    return total * Fraction(1, k.order)


def char_equal(phi: ClassFunction, psi: ClassFunction) -> bool:
    """Exact equality as class functions (values compared at a common order)."""
    if phi.carrier is not psi.carrier:
        raise UsageError("cannot compare class functions on different groups")
    m = lcm(phi.order, psi.order)
    return all(a.embed(m) == b.embed(m) for a, b in zip(phi.values, psi.values))


def direct_sum(*phis: ClassFunction) -> ClassFunction:
    """Pointwise sum; degrees add."""
    if not phis:
        raise UsageError("direct_sum needs at least one summand")
    first = phis[0]
    for other in phis[1:]:
        if other.carrier is not first.carrier:
            raise UsageError("direct sum needs class functions on the same group")
    m = lcm(*(p.order for p in phis))
    values = []
    for c in range(first.table.nclasses):
        acc = zero(m)
        for p in phis:
            acc = acc + p.values[c].embed(m)
        values.append(acc)
    return ClassFunction(first.carrier, first.table, values,
                         is_character=all(p.is_character for p in phis))
