"""Finite groups acting on finite categories by automorphisms.

A group is always materialized as its image inside the automorphisms of
the acted-on category: a tuple of functors (identity first) together with
multiplication and inverse tables over element indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fincat import (
    CatFunctor,
    CategoryError,
    FiniteCategory,
    Poset,
    barycentric_subdivision,
    category_from_poset,
    chain_elements,
    functor_compose,
    identity_functor,
    validate_functor,
)


class ActionError(ValueError):
    """Raised when data fails to describe a group action."""


class ActionGroup:
    """A finite group of category automorphisms with its action data.

    ``elements[0]`` must be the identity automorphism.  ``mult[a][b]`` is
    the index of "b, then a" and ``inv[a]`` the index of the inverse, both
    reconstructed from the functors when not supplied.
    """

    def __init__(self, category: FiniteCategory, elements, mult=None, inv=None):
        self.category = category
        self.elements = tuple(elements)
        if not self.elements:
            raise ActionError("a group needs at least the identity element")
        if self.elements[0] != identity_functor(category):
            raise ActionError("element 0 must be the identity automorphism")
        index = {e: i for i, e in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise ActionError("duplicate group elements")
        if mult is None:
            mult = []
            for a in self.elements:
                row = []
                for b in self.elements:
                    c = functor_compose(a, b)
                    if c not in index:
                        raise ActionError("element set is not closed under composition")
                    row.append(index[c])
                mult.append(tuple(row))
            mult = tuple(mult)
        self.mult = mult
        if inv is None:
            inv = tuple(self.mult[a].index(0) for a in range(len(self.elements)))
        self.inv = inv
        self._object_orbits = None
        self._morphism_orbits = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def obj_image(self, g: int, x: int) -> int:
        return self.elements[g].obj_map[x]

    def mor_image(self, g: int, m: int) -> int:
        return self.elements[g].mor_map[m]

    def apply_chain(self, g: int, chain: tuple[int, ...]) -> tuple[int, ...]:
        mor = self.elements[g].mor_map
        return tuple(mor[m] for m in chain)

    def object_orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbit partition of the objects, each orbit sorted, orbits ordered
        by least member."""
        if self._object_orbits is None:
            self._object_orbits = self._orbits(
                self.category.n_objects, self.obj_image
            )
        return self._object_orbits

    def morphism_orbits(self) -> tuple[tuple[int, ...], ...]:
        if self._morphism_orbits is None:
            self._morphism_orbits = self._orbits(
                self.category.n_morphisms, self.mor_image
            )
        return self._morphism_orbits

    def _orbits(self, count, image):
        seen = [False] * count
        orbits = []
        for x in range(count):
            if seen[x]:
                continue
            orbit = sorted({image(g, x) for g in range(self.order)})
            for y in orbit:
                seen[y] = True
            orbits.append(tuple(orbit))
        return tuple(orbits)

    def object_orbit_index(self) -> tuple[int, ...]:
        idx = [0] * self.category.n_objects
        for i, orbit in enumerate(self.object_orbits()):
            for x in orbit:
                idx[x] = i
        return tuple(idx)

    def morphism_orbit_index(self) -> tuple[int, ...]:
        idx = [0] * self.category.n_morphisms
        for i, orbit in enumerate(self.morphism_orbits()):
            for m in orbit:
                idx[m] = i
        return tuple(idx)

    def stabilizer_elements(self, m: int) -> tuple[int, ...]:
        """Element indices fixing the morphism ``m``; for an object pass its
        identity morphism id (they coincide)."""
        return tuple(g for g in range(self.order) if self.mor_image(g, m) == m)

    def __eq__(self, other):
        return (
            isinstance(other, ActionGroup)
            and self.category == other.category
            and self.elements == other.elements
        )

    def __repr__(self):
        return f"ActionGroup(order {self.order} on {self.category!r})"


def generate_action(
    category: FiniteCategory, generators, max_order: int = 10_000
) -> ActionGroup:
    """Close a set of automorphisms under composition.

    Elements are ordered identity-first, then by breadth-first discovery,
    so identical inputs always produce identical tables.
    """
    for i, gen in enumerate(generators):
        report = validate_functor(gen, category, category)
        if not report:
            law, witness = report.violations[0]
            raise ActionError(f"generator {i} is not a functor: {law} {witness}")
        if sorted(gen.obj_map) != list(range(category.n_objects)) or sorted(
            gen.mor_map
        ) != list(range(category.n_morphisms)):
            raise ActionError(f"generator {i} is not bijective")
    gens = list(generators)
    ident = identity_functor(category)
    elements = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        w = queue.pop(0)
        for gen in gens:
            cand = functor_compose(w, gen)
            if cand not in index:
                index[cand] = len(elements)
                elements.append(cand)
                queue.append(cand)
                if len(elements) > max_order:
                    raise ActionError(f"closure exceeded the bound of {max_order} elements")
    return ActionGroup(category, elements)


def functor_from_object_map(category: FiniteCategory, obj_map) -> CatFunctor:
    """Infer the morphism images from an object permutation.

    Only possible when hom-sets have at most one element (e.g. poset
    categories), which makes the morphism image unique.
    """
    obj_map = tuple(obj_map)
    if any(len(ms) > 1 for ms in category._hom.values()):
        raise ActionError("morphism map cannot be inferred: parallel morphisms present")
    mor_map = []
    for m in range(category.n_morphisms):
        x, y = obj_map[category.source[m]], obj_map[category.target[m]]
        image = category.hom(x, y)
        if not image:
            raise ActionError(f"object map does not preserve the relation at morphism {m}")
        mor_map.append(image[0])
    return CatFunctor(obj_map, tuple(mor_map))


def poset_action(poset: Poset, obj_perms, max_order: int = 10_000):
    """Categorify a poset and generate the action given by object
    permutations; returns ``(category, action)``."""
    category = category_from_poset(poset)
    gens = [functor_from_object_map(category, p) for p in obj_perms]
    return category, generate_action(category, gens, max_order=max_order)


def subgroup_action(action: ActionGroup, element_ids) -> ActionGroup:
    """The subgroup generated by the given element indices, acting on the
    same category.  An empty set yields the trivial subgroup."""
    chosen = {0}
    queue = sorted(set(element_ids))
    frontier = list(queue)
    chosen.update(queue)
    while frontier:
        a = frontier.pop(0)
        for b in sorted(chosen):
            for c in (action.mult[a][b], action.mult[b][a], action.inv[a]):
                if c not in chosen:
                    chosen.add(c)
                    frontier.append(c)
    keep = [0] + sorted(chosen - {0})
    return ActionGroup(action.category, [action.elements[g] for g in keep])


def stabilizer(action: ActionGroup, m: int) -> ActionGroup:
    """The stabilizer of a morphism (or object, via its identity id) as a
    subgroup acting on the same category."""
    return subgroup_action(action, action.stabilizer_elements(m))


def is_horizontal(action: ActionGroup):
    """No morphisms between an object and a distinct image of it; returns
    ``(verdict, witness)`` with witness ``(g, x)`` on failure."""
    cat = action.category
    for g in range(1, action.order):
        for x in range(cat.n_objects):
            y = action.obj_image(g, x)
            if y != x and (cat.hom(x, y) or cat.hom(y, x)):
                return False, (g, x)
    return True, None


@dataclass(frozen=True)
class Subcategory:
    """A subcategory with its embedding back into the ambient category:
    ``objects[i]`` / ``morphisms[i]`` are the ambient ids of the new ones."""

    category: FiniteCategory
    objects: tuple[int, ...]
    morphisms: tuple[int, ...]


def subcategory(cat: FiniteCategory, objects, morphisms) -> Subcategory:
    """Reindex a subcategory given by ambient object and morphism ids.

    The morphism set must contain the identities of the chosen objects and
    be closed under composition.
    """
    objects = sorted(set(objects))
    obj_new = {x: i for i, x in enumerate(objects)}
    nonid = sorted(m for m in morphisms if not cat.is_identity(m))
    for m in nonid:
        if cat.source[m] not in obj_new or cat.target[m] not in obj_new:
            raise CategoryError(f"morphism {m} leaves the chosen object set")
    mor_old = tuple(objects) + tuple(nonid)
    mor_new = {m: i for i, m in enumerate(mor_old)}
    arrows = [(obj_new[cat.source[m]], obj_new[cat.target[m]]) for m in nonid]
    comp = {}
    kept = set(mor_old)
    for g in mor_old:
        for f in cat.out_of(cat.target[g]):
            if f in kept:
                h = cat.comp[(f, g)]
                if h not in kept:
                    raise CategoryError(
                        f"morphism set not closed under composition at ({f}, {g})"
                    )
                comp[(mor_new[f], mor_new[g])] = mor_new[h]
    return Subcategory(FiniteCategory(len(objects), arrows, comp), tuple(objects), mor_old)


def full_subcategory(cat: FiniteCategory, objects) -> Subcategory:
    """The subcategory on the given objects with all morphisms between them."""
    objects = sorted(set(objects))
    keep = set(objects)
    morphisms = [
        m
        for m in range(cat.n_morphisms)
        if cat.source[m] in keep and cat.target[m] in keep
    ]
    return subcategory(cat, objects, morphisms)


def fixed_subcategory(cat: FiniteCategory, g: CatFunctor) -> Subcategory:
    """The subcategory of objects and morphisms fixed by the automorphism."""
    objects = [x for x in range(cat.n_objects) if g.obj_map[x] == x]
    morphisms = [m for m in range(cat.n_morphisms) if g.mor_map[m] == m]
    return subcategory(cat, objects, morphisms)


def restrict_action(action: ActionGroup, objects):
    """Restrict to the full subcategory on a setwise stable object set.

    Returns ``(restricted_action, subcategory)``.  Distinct elements that
    restrict to the same automorphism are identified, so the result is the
    image group of the restriction.
    """
    keep = set(objects)
    for g in range(action.order):
        for x in keep:
            if action.obj_image(g, x) not in keep:
                raise ActionError(
                    f"object set is not stable: element {g} moves {x} outside"
                )
    sub = full_subcategory(action.category, objects)
    obj_new = {x: i for i, x in enumerate(sub.objects)}
    mor_new = {m: i for i, m in enumerate(sub.morphisms)}
    restricted = []
    for g in range(action.order):
        fun = CatFunctor(
            tuple(obj_new[action.obj_image(g, x)] for x in sub.objects),
            tuple(mor_new[action.mor_image(g, m)] for m in sub.morphisms),
        )
        if fun not in restricted:
            restricted.append(fun)
    return ActionGroup(sub.category, restricted), sub


def induced_bd_action(poset: Poset, action: ActionGroup, max_order: int = 10_000):
    """Transport a poset action to the barycentric subdivision.

    ``action`` must act on ``category_from_poset(poset)``.  Returns
    ``(bd_category, bd_action, chains)`` where ``chains[i]`` is the chain
    of ``poset`` behind element ``i`` of the subdivision.
    """
    if action.category.n_objects != poset.n:
        raise ActionError("action does not live on the given poset")
    chains = chain_elements(poset)
    chain_index = {frozenset(c): i for i, c in enumerate(chains)}
    bd = barycentric_subdivision(poset)
    bd_cat = category_from_poset(bd)
    perms = []
    for g in range(action.order):
        obj = action.elements[g].obj_map
        perms.append(
            tuple(chain_index[frozenset(obj[x] for x in c)] for c in chains)
        )
    gens = [functor_from_object_map(bd_cat, p) for p in perms]
    return bd_cat, generate_action(bd_cat, gens, max_order=max_order), chains
