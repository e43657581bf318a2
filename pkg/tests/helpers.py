"""Shared fixtures-by-hand and independent brute-force oracles.

The oracles here deliberately avoid the library's own algorithms: classes
by conjugating with every element, subgroups by closing every extension,
coset fixed points by direct counting.
"""

from permchar.groups import PermGroup, Permutation, Subgroup


def perm(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def s3():
    return PermGroup([perm(3, (0, 1)), perm(3, (0, 1, 2))], name="S3")


def s4():
    return PermGroup([perm(4, (0, 1)), perm(4, (0, 1, 2, 3))], name="S4")


def a4():
    return PermGroup([perm(4, (0, 1, 2)), perm(4, (0, 1), (2, 3))], name="A4")


def cyclic(n):
    return PermGroup([Permutation([(i + 1) % n for i in range(n)])], name="C%d" % n)


def subgroup_c2(group, a=0, b=1):
    return Subgroup.from_generators(group, [perm(group.degree, (a, b))])


# ------------------------------------------------------------- oracles

def brute_conjugacy_partition(group):
    """Conjugation orbits computed by conjugating with every element."""
    remaining = set(range(group.order))
    classes = []
    while remaining:
        a = min(remaining)
        orbit = {group.conj(t, a) for t in range(group.order)}
        classes.append(frozenset(orbit))
        remaining -= orbit
    return classes


def brute_fixed_cosets(group, cosets, g):
    """Number of cosets x.H with g x H = x H, by direct membership."""
    count = 0
    for r in cosets.reps:
        if cosets.subgroup.contains(group.mul(group.inv(r), group.mul(g, r))):
            count += 1
    return count


def mul_table(carrier):
    """Dense multiplication table (list of lists) for a group or the
    tilde groups used in tests; brute-force routines index into it."""
    n = carrier.order
    return [[carrier.mul(a, b) for b in range(n)] for a in range(n)]


def brute_force_subgroups(carrier):
    """Every subgroup of the carrier as a frozenset of element indices,
    found by closing all single-element extensions of known subgroups."""
    n = carrier.order
    table = mul_table(carrier)
    identity = carrier.identity

    def closure(gens):
        seen = {identity, *gens}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                row = table[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    # one candidate generator per cyclic subgroup keeps the search small
    cyclic_of = {}
    for x in range(n):
        c = closure([x])
        if c not in cyclic_of:
            cyclic_of[c] = x
    candidates = sorted(cyclic_of.values())

    trivial = frozenset({identity})
    found = {trivial: ()}
    worklist = [(trivial, ())]
    while worklist:
        elems, gens = worklist.pop()
        for g in candidates:
            if g in elems:
                continue
            new_gens = gens + (g,)
            new = closure(new_gens)
            if new not in found:
                found[new] = new_gens
                worklist.append((new, new_gens))
    return sorted(found, key=lambda s: (len(s), sorted(s)))
