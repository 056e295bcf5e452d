"""Seeded random posets, order-preserving actions and labeled lattices.

Generation is fully determined by the supplied ``random.Random``: posets
come from random graded DAGs (with an optional twin element to make
nontrivial symmetry likely) and groups from brute-force automorphism
search followed by closure of a random sample.
"""

from __future__ import annotations

from random import Random

from .actions import ActionError, ActionGroup, poset_action
from .fincat import Poset
from .formulas import LabeledLattice


def random_poset(rng: Random, max_elements: int = 7) -> Poset:
    n = rng.randint(1, max_elements)
    max_levels = min(n, 4)
    n_levels = rng.randint(1, max_levels) if rng.random() < 0.4 else max_levels
    cuts = sorted(rng.sample(range(1, n), n_levels - 1)) if n_levels > 1 else []
    levels = []
    start = 0
    for cut in cuts + [n]:
        levels.append(list(range(start, cut)))
        start = cut
    pairs = []
    # complete stacks carry large symmetry groups, whose subgroups are the
    # instances that actually break the level conditions
    p = 1.0 if rng.random() < 0.35 else rng.uniform(0.3, 0.9)
    for i in range(len(levels) - 1):
        for a in levels[i]:
            for b in levels[i + 1]:
                if rng.random() < p:
                    pairs.append((b, a))  # later levels sit on top
    poset = Poset.from_relations(n, pairs)
    if n + 1 <= max_elements and rng.random() < 0.5:
        poset = _twin_element(rng, poset)
    return poset


def _twin_element(rng: Random, poset: Poset) -> Poset:
    """Duplicate one element with identical strict neighborhoods, making the
    swap of the two copies an automorphism."""
    x = rng.randrange(poset.n)
    n = poset.n + 1
    twin = poset.n
    pairs = []
    for a in range(poset.n):
        for b in poset.strict_down(a):
            pairs.append((a, b))
    for b in poset.strict_down(x):
        pairs.append((twin, b))
    for a in range(poset.n):
        if poset.lt(x, a):
            pairs.append((a, twin))
    return Poset.from_relations(n, pairs)


def poset_automorphisms(poset: Poset) -> list[tuple[int, ...]]:
    """All order-preserving permutations, found by signature-pruned
    backtracking; feasible at fuzzing sizes."""
    n = poset.n
    sig = [
        (len(poset.down[x]), sum(1 for y in range(n) if poset.le(x, y)))
        for x in range(n)
    ]
    autos: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(x):
        if x == n:
            autos.append(tuple(image))
            return
        for y in range(n):
            if used[y] or sig[x] != sig[y]:
                continue
            ok = True
            for prev in range(x):
                if poset.le(x, prev) != poset.le(y, image[prev]) or poset.le(
                    prev, x
                ) != poset.le(image[prev], y):
                    ok = False
                    break
            if ok:
                image[x] = y
                used[y] = True
                extend(x + 1)
                used[y] = False
                image[x] = -1

    extend(0)
    return autos


def random_action(rng: Random, poset: Poset, max_order: int = 8):
    """A random subgroup of the automorphism group, as a generated action;
    retries smaller generator samples until the order bound is met."""
    autos = poset_automorphisms(poset)
    nontrivial = [a for a in autos if a != tuple(range(poset.n))]
    for _ in range(20):
        top = min(2, len(nontrivial))
        k = rng.randint(1, top) if top and rng.random() < 0.85 else 0
        gens = rng.sample(nontrivial, k) if k else []
        try:
            return poset_action(poset, gens, max_order=max_order)
        except ActionError:
            continue  # closure too large, sample again
    return poset_action(poset, [])


def random_instance(rng: Random, max_elements: int = 7, max_order: int = 8):
    poset = random_poset(rng, max_elements)
    cat, action = random_action(rng, poset, max_order)
    return poset, cat, action


def random_labeled_lattice(rng: Random, max_core: int = 5):
    """A bounded poset with strictly order-reversing integer labels and a
    random bound-fixing action."""
    core = random_poset(rng, max_core)
    n = core.n + 2
    bottom, top = core.n, core.n + 1
    pairs = []
    for a in range(core.n):
        for b in core.strict_down(a):
            pairs.append((a, b))
        pairs.append((a, bottom))
        pairs.append((top, a))
    pairs.append((top, bottom))
    poset = Poset.from_relations(n, pairs)
    cat, action = random_action(rng, poset, max_order=8)
    heights = _heights_above_bottom(poset)
    total = max(heights) + 1
    dim = tuple(total - heights[x] for x in range(n))
    return LabeledLattice(poset, dim), cat, action


def _heights_above_bottom(poset: Poset):
    heights = [0] * poset.n
    order = sorted(range(poset.n), key=lambda x: len(poset.down[x]))
    for x in order:
        below = [heights[y] for y in poset.strict_down(x)]
        heights[x] = max(below, default=-1) + 1
    return heights
