"""Quotients of categories by group actions.

The categorical quotient identifies morphisms under the least equivalence
relation that contains every orbit pair and is closed under composition;
its objects are the object orbits.  The naive poset quotient (orbits with
the induced order) is provided for comparison and can genuinely differ.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ActionGroup
from .fincat import (
    CatFunctor,
    FiniteCategory,
    InternalCheckError,
    Poset,
    is_poset_category,
    validate_category,
)


class NotAPosetError(ValueError):
    """The induced orbit order is not antisymmetric; carries a witness."""

    def __init__(self, witness):
        super().__init__(f"orbit order has a cycle through orbits {witness}")
        self.witness = witness


@dataclass(frozen=True)
class QuotientCategory:
    """The quotient category with its class maps and projection functor."""

    category: FiniteCategory
    obj_class: tuple[int, ...]
    mor_class: tuple[int, ...]
    projection: CatFunctor


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def morphism_classes(cat: FiniteCategory, action: ActionGroup) -> tuple[int, ...]:
    """Root-representative table of the morphism equivalence: orbits merged,
    then composites of equivalent composable pairs merged to a fixpoint."""
    uf = _UnionFind(cat.n_morphisms)
    for m in range(cat.n_morphisms):
        for g in range(1, action.order):
            uf.union(m, action.mor_image(g, m))
    pairs = [(f, g, h) for (f, g), h in cat.comp.items() if cat.source[f] == cat.target[g]]
    changed = True
    while changed:
        changed = False
        buckets: dict[tuple[int, int], int] = {}
        for f, g, h in pairs:
            key = (uf.find(f), uf.find(g))
            first = buckets.get(key)
            if first is None:
                buckets[key] = h
            elif uf.union(h, first):
                changed = True
    return tuple(uf.find(m) for m in range(cat.n_morphisms))


def quotient_category(cat: FiniteCategory, action: ActionGroup) -> QuotientCategory:
    """The categorical quotient of ``cat`` by ``action``.

    Ids are assigned by sorted least representative, identities first, so
    the result is reproducible.  The construction re-validates everything
    it builds; a failure there is a bug, never a property of the input.
    """
    roots = morphism_classes(cat, action)
    members: dict[int, list[int]] = {}
    for m, r in enumerate(roots):
        members.setdefault(r, []).append(m)

    orbit_index = action.object_orbit_index()
    orbits = action.object_orbits()
    n_q = len(orbits)
    obj_class = orbit_index

    # Identity classes correspond one-to-one to object orbits: id_a merges
    # with id_{ga} at the seeding stage, and endpoints are class invariants.
    class_of_root: dict[int, int] = {}
    for i, orbit in enumerate(orbits):
        root = roots[orbit[0]]
        if root in class_of_root and class_of_root[root] != i:
            raise InternalCheckError("identity classes collide across object orbits")
        class_of_root[root] = i
    next_id = n_q
    for root in sorted(members):
        if root not in class_of_root:
            class_of_root[root] = next_id
            next_id += 1
    mor_class = tuple(class_of_root[r] for r in roots)

    least = {}
    for root, ms in members.items():
        least[class_of_root[root]] = min(ms)
    arrows = []
    for cls in range(n_q, next_id):
        rep = least[cls]
        arrows.append((obj_class[cat.source[rep]], obj_class[cat.target[rep]]))

    comp = {}
    for f_cls in range(next_id):
        rep_f = least[f_cls]
        src_f = cat.source[rep_f]
        for g_cls in range(next_id):
            rep_g = least[g_cls]
            tgt_needed = cat.target[rep_g]
            f_src_cls = obj_class[src_f]
            if f_src_cls != obj_class[tgt_needed]:
                continue
            moved = None
            for g in range(action.order):
                if action.obj_image(g, src_f) == tgt_needed:
                    moved = action.mor_image(g, rep_f)
                    break
            if moved is None:
                raise InternalCheckError("matching endpoint orbits admit no aligning element")
            comp[(f_cls, g_cls)] = mor_class[cat.compose(moved, rep_g)]

    q_cat = FiniteCategory(n_q, arrows, comp)
    projection = CatFunctor(obj_class, mor_class)

    report = validate_category(q_cat)
    if not report:
        raise InternalCheckError(f"quotient category is invalid: {report.violations[:3]}")
    for (f, g), h in cat.comp.items():
        if cat.source[f] != cat.target[g]:
            continue
        if q_cat.compose(mor_class[f], mor_class[g]) != mor_class[h]:
            raise InternalCheckError(f"projection breaks composition at ({f}, {g})")
    for g in range(action.order):
        fun = action.elements[g]
        if any(obj_class[fun.obj_map[x]] != obj_class[x] for x in range(cat.n_objects)):
            raise InternalCheckError("projection is not constant on object orbits")
        if any(mor_class[fun.mor_map[m]] != mor_class[m] for m in range(cat.n_morphisms)):
            raise InternalCheckError("projection is not constant on morphism classes")
    return QuotientCategory(q_cat, obj_class, mor_class, projection)


def poset_quotient(poset: Poset, action: ActionGroup) -> Poset:
    """Orbits with the transitive closure of the induced relation.

    Raises :class:`NotAPosetError` when the closure is not antisymmetric;
    for order-preserving actions on finite posets this never happens, but
    the failure is surfaced rather than silently repaired.
    """
    if action.category.n_objects != poset.n:
        raise ValueError("action does not live on the given poset")
    orbits = action.object_orbits()
    index = action.object_orbit_index()
    k = len(orbits)
    ge = [[False] * k for _ in range(k)]
    for a in range(poset.n):
        for b in poset.down[a]:
            ge[index[a]][index[b]] = True
    for i in range(k):
        ge[i][i] = True
    for m in range(k):
        for i in range(k):
            if ge[i][m]:
                row_m = ge[m]
                row_i = ge[i]
                for j in range(k):
                    if row_m[j]:
                        row_i[j] = True
    for i in range(k):
        for j in range(i + 1, k):
            if ge[i][j] and ge[j][i]:
                raise NotAPosetError((i, j))
    return Poset(k, [(j, i) for i in range(k) for j in range(k) if ge[i][j]])


def is_quotient_poset(quotient: QuotientCategory) -> bool:
    return is_poset_category(quotient.category)
