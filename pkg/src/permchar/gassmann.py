"""Gassmann triples: subgroups meeting every conjugacy class of the
ambient group in sets of equal size, equivalently subgroups with equal
permutation characters. The two criteria are always both computed; a
disagreement would be an internal-consistency failure, not a result.

Ships a catalog of pinned instances, including GL_3(F_2) with a point
stabilizer and a plane stabilizer: equal permutation characters, yet not
conjugate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import char_equal, permutation_character
from .errors import UsageError
from .groups import PermGroup, Permutation, Subgroup, are_conjugate_subgroups

__all__ = [
    "GassmannReport",
    "class_intersection_counts",
    "is_gassmann_triple",
    "build_gl3_f2",
    "CatalogInstance",
    "catalog",
    "catalog_get",
]


def class_intersection_counts(group, h: Subgroup) -> list[int]:
    """|class_c intersect H| for every conjugacy class c of the group."""
    if h.parent is not group:
        raise UsageError("subgroup does not live in the given group")
    table = group.conjugacy_classes()
    counts = [0] * table.nclasses
    for x in h.elements:
        counts[table.class_of(x)] += 1
    assert sum(counts) == h.order
    return counts


@dataclass
class GassmannReport:
    is_gassmann: bool
    is_trivial: bool
    witness: str | None  # conjugating element, rendered, when trivial
    class_table: list  # per class: [size, |C ∩ H|, |C ∩ H'|]

    def to_json(self) -> dict:
        return {
            "is_gassmann": self.is_gassmann,
            "is_trivial": self.is_trivial,
            "witness": self.witness,
            "class_table": self.class_table,
        }


def is_gassmann_triple(group, h: Subgroup, hprime: Subgroup) -> GassmannReport:
    """Decide whether (G, H, H') is a Gassmann triple, double-computing the
    counting criterion and the permutation-character criterion."""
    counts_h = class_intersection_counts(group, h)
    counts_hp = class_intersection_counts(group, hprime)
    by_counts = counts_h == counts_hp

    by_chars = char_equal(
        permutation_character(group, h), permutation_character(group, hprime)
    )
    if by_counts != by_chars:
        raise RuntimeError(
            "internal consistency failure: counting and character criteria "
            "disagree (counts=%r chars=%r)" % (by_counts, by_chars)
        )

    conj = are_conjugate_subgroups(group, h, hprime)
    if conj.conjugate:
        assert by_counts, "conjugate subgroups must be Gassmann"
    witness = str(group.element(conj.witness)) if conj.conjugate else None

    sizes = group.conjugacy_classes().sizes
    return GassmannReport(
        is_gassmann=by_counts,
        is_trivial=conj.conjugate,
        witness=witness,
        class_table=[[s, a, b] for s, a, b in zip(sizes, counts_h, counts_hp)],
    )


# ----------------------------------------------------------------- GL3(F2)

def _matvec(m, v):
    # m: 9 bits row-major; v: 1..7 with bits (v1, v2, v3), v1 the first coordinate
    b = ((v >> 2) & 1, (v >> 1) & 1, v & 1)
    out = 0
    for r in range(3):
        s = (m[3 * r] * b[0] + m[3 * r + 1] * b[1] + m[3 * r + 2] * b[2]) & 1
        out = (out << 1) | s
    return out


def build_gl3_f2():
    """GL_3(F_2) acting on the seven nonzero vectors of F_2^3 ordered by
    binary value (001, 010, ..., 111), generated by the six elementary
    transvections. Returns (group, point stabilizer, plane stabilizer):
    the stabilizer of vector 001 and the setwise stabilizer of the plane
    of vectors with first coordinate 0."""
    gens = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            m = [1 if r == c else 0 for r in range(3) for c in range(3)]
            m[3 * i + j] = 1
            gens.append(Permutation(tuple(_matvec(m, v) - 1 for v in range(1, 8))))
    group = PermGroup(gens, name="GL3(F2)")
    assert group.order == 168  # (2^3-1)(2^3-2)(2^3-2^2)

    point = 0  # vector 001
    point_stab = Subgroup.from_elements(
        group,
        [i for i in range(group.order) if group.element(i)(point) == point],
    )
    plane = {0, 1, 2}  # vectors 001, 010, 011: first coordinate zero
    plane_stab = Subgroup.from_elements(
        group,
        [
            i
            for i in range(group.order)
            if {group.element(i)(p) for p in plane} == plane
        ],
    )
    assert point_stab.order == 24 and plane_stab.order == 24
    return group, point_stab, plane_stab


# ----------------------------------------------------------------- catalog

class CatalogInstance:
    """A named, reproducible (G, H, H') instance."""

    def __init__(self, name, description, builder):
        self.name = name
        self.description = description
        self._builder = builder
        self._built = None

    def build(self):
        """(group, h, hprime), built once and cached."""
        if self._built is None:
            self._built = self._builder()
        return self._built

    def member_generators(self, member: str):
        """(degree, image tuples) for 'parent', 'h' or 'hprime'."""
        group, h, hprime = self.build()
        if member == "parent":
            return group.degree, [g.images for g in group.generators]
        if member == "h":
            sub = h
        elif member == "hprime":
            sub = hprime
        else:
            raise UsageError("unknown member %r (use parent, h or hprime)" % (member,))
        return group.degree, [group.element(i).images for i in sub.generator_indices]


def _build_s3_c2():
    group = PermGroup(
        [Permutation((1, 0, 2)), Permutation((1, 2, 0))], name="S3"
    )
    h = Subgroup.from_generators(group, [Permutation((1, 0, 2))])
    hprime = Subgroup.from_generators(group, [Permutation((0, 2, 1))])
    return group, h, hprime


_CATALOG = {
    "s3-c2": CatalogInstance(
        "s3-c2",
        "S3 with a non-normal C2 and a conjugate of it: the trivial-triple "
        "base case, index n = 3; small enough for exhaustive verification",
        _build_s3_c2,
    ),
    "gl3f2": CatalogInstance(
        "gl3f2",
        "GL3(F2) on 7 points with point and plane stabilizers: the "
        "classical non-trivial Gassmann triple, index n = 7",
        build_gl3_f2,
    ),
}


def catalog() -> dict[str, CatalogInstance]:
    return dict(_CATALOG)


def catalog_get(name: str) -> CatalogInstance:
    inst = _CATALOG.get(name)
    if inst is None:
        raise UsageError(
            "unknown catalog instance %r (known: %s)"
            % (name, ", ".join(sorted(_CATALOG)))
        )
    return inst
