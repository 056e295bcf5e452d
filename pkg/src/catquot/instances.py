"""Ready-made posets, categories and actions used in tests and demos."""

from __future__ import annotations

from .actions import ActionGroup, generate_action, poset_action
from .fincat import CatFunctor, FiniteCategory, Poset
from .formulas import LabeledLattice


def bowtie_poset() -> Poset:
    """Two maxima over two minima: 0, 1 each above 2, 3."""
    return Poset.from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


def bowtie_action():
    """The bowtie with the simultaneous swap of tops and of bottoms."""
    return poset_action(bowtie_poset(), [(1, 0, 3, 2)])


def boolean_lattice(n: int) -> Poset:
    """Subsets of an n-set as bitmasks, ordered by inclusion."""
    size = 1 << n
    pairs = []
    for a in range(size):
        for b in range(size):
            if a | b == a and a != b:
                pairs.append((a, b))
    return Poset.from_relations(size, pairs)


def _mask_permutation(n: int, ground_perm) -> tuple[int, ...]:
    images = []
    for mask in range(1 << n):
        out = 0
        for p in range(n):
            if mask & (1 << p):
                out |= 1 << ground_perm[p]
        images.append(out)
    return tuple(images)


def symmetric_boolean_action(n: int):
    """The symmetric group permuting the ground set of the subset lattice,
    generated by adjacent transpositions."""
    poset = boolean_lattice(n)
    perms = []
    for k in range(n - 1):
        ground = list(range(n))
        ground[k], ground[k + 1] = ground[k + 1], ground[k]
        perms.append(_mask_permutation(n, ground))
    cat, action = poset_action(poset, perms)
    return poset, cat, action


def ground_permutation(action: ActionGroup, n: int, g: int) -> tuple[int, ...]:
    """Recover the ground-set permutation of a subset-lattice action element
    from its images of the singletons."""
    perm = []
    for p in range(n):
        image = action.obj_image(g, 1 << p)
        perm.append(image.bit_length() - 1)
    return tuple(perm)


def young_family(cat: FiniteCategory, action: ActionGroup, n: int):
    """For the subset lattice under the symmetric group: assign to the
    morphism ``A ⊇ B`` the elements supported inside ``B`` (and to each
    subset its own support group).  Satisfies the coherence condition."""
    supports = []
    for g in range(action.order):
        perm = ground_permutation(action, n, g)
        supports.append(frozenset(p for p in range(n) if perm[p] != p))
    family = {}
    for m in range(cat.n_morphisms):
        inner = cat.target[m]  # identity of A has target A; arrow A -> B targets B
        members = frozenset(
            g for g in range(action.order)
            if supports[g] <= {p for p in range(n) if inner & (1 << p)}
        )
        family[m] = members
    return family


def stacked_antichains(levels: int) -> Poset:
    """The order sum of ``levels`` two-element antichains; elements
    ``2i, 2i+1`` form level ``i`` with level 0 on top."""
    pairs = []
    for i in range(levels - 1):
        for a in (2 * i, 2 * i + 1):
            for b in (2 * i + 2, 2 * i + 3):
                pairs.append((a, b))
    return Poset.from_relations(2 * levels, pairs)


def even_swap_action(levels: int):
    """Stacked antichains with the index-2 subgroup of the levelwise swaps:
    generated by the products of adjacent level swaps."""
    poset = stacked_antichains(levels)
    perms = []
    for i in range(levels - 1):
        perm = list(range(2 * levels))
        for lvl in (i, i + 1):
            perm[2 * lvl], perm[2 * lvl + 1] = perm[2 * lvl + 1], perm[2 * lvl]
        perms.append(tuple(perm))
    return (poset, *poset_action(poset, perms))


def full_swap_involution(levels: int):
    """Stacked antichains with the single involution swapping every level;
    the quotient complex is the corresponding projective space."""
    poset = stacked_antichains(levels)
    perm = []
    for i in range(levels):
        perm.extend([2 * i + 1, 2 * i])
    return (poset, *poset_action(poset, [tuple(perm)]))


def iso_pair_category() -> FiniteCategory:
    """Two isomorphic objects: the smallest category that is not loopfree.
    Carries the swap automorphism, the minimal horizontality failure."""
    # morphisms 2: 0 -> 1 and 3: 1 -> 0, inverse to each other
    return FiniteCategory(2, [(0, 1), (1, 0)], {(3, 2): 0, (2, 3): 1})


def iso_pair_swap() -> CatFunctor:
    return CatFunctor((1, 0), (1, 0, 3, 2))


def partition_lattice_pi3():
    """The three-element partition lattice with braid-arrangement dimension
    labels and the symmetric group permuting the atoms.

    Elements: 0 the finest partition (ambient space, dim 3), atoms 1, 2, 3
    (the partitions 12|3, 13|2, 23|1, each dim 2) and 4 the coarsest
    (dim 1).
    """
    poset = Poset.from_relations(5, [(4, 1), (4, 2), (4, 3), (1, 0), (2, 0), (3, 0)])
    lattice = LabeledLattice(poset, (3, 2, 2, 2, 1))
    swap_12 = (0, 1, 3, 2, 4)  # ground transposition (1 2): swaps 13|2 and 23|1
    swap_23 = (0, 2, 1, 3, 4)  # ground transposition (2 3): swaps 12|3 and 13|2
    cat, action = poset_action(poset, [swap_12, swap_23])
    return lattice, cat, action


def trivial_action(cat: FiniteCategory) -> ActionGroup:
    return generate_action(cat, [])
