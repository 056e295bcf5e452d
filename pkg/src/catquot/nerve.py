"""Nerves of categories and their quotients as semi-simplicial complexes.

A d-simplex of the nerve is a composable chain ``(m_1, ..., m_d)`` of
nonidentity morphisms with ``target(m_i) == source(m_{i+1})``; 0-simplices
are the objects.  Only nondegenerate simplices are materialized: in a
loopfree category a composite of nonidentity morphisms is never an
identity, so every face of a stored simplex is itself stored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ActionGroup
from .fincat import (
    CatFunctor,
    CategoryError,
    FiniteCategory,
    InternalCheckError,
    Poset,
    is_loopfree,
)
from .quotient import QuotientCategory, quotient_category


class DeltaComplex:
    """Simplices per dimension with ordered face tuples.

    ``faces[d][i]`` (for ``d >= 1``) lists the ``d+1`` faces of simplex
    ``i`` as indices into dimension ``d-1``, ordered ``d_0 .. d_d``.
    ``labels[d][i]`` carries the combinatorial name of each simplex (an
    object id at dimension 0, a morphism chain above), used to compare
    complexes and to transport maps.
    """

    def __init__(self, n_vertices: int, faces=(), labels=None):
        self.counts = [n_vertices]
        self.faces: list[tuple[tuple[int, ...], ...]] = [()]
        for d, level in enumerate(faces, start=1):
            level = tuple(tuple(f) for f in level)
            for fs in level:
                if len(fs) != d + 1:
                    raise ValueError(f"a {d}-simplex needs {d + 1} faces, got {len(fs)}")
                for f in fs:
                    if not (0 <= f < self.counts[d - 1]):
                        raise ValueError(f"face index {f} out of range in dimension {d}")
            self.faces.append(level)
            self.counts.append(len(level))
        while len(self.counts) > 1 and self.counts[-1] == 0:
            self.counts.pop()
            self.faces.pop()
        if labels is None:
            labels = [tuple(range(c)) for c in self.counts]
        self.labels = [tuple(lv) for lv in labels[: len(self.counts)]]
        if [len(lv) for lv in self.labels] != self.counts:
            raise ValueError("labels do not match simplex counts")
        self.index = [
            {label: i for i, label in enumerate(lv)} for lv in self.labels
        ]

    @property
    def dimension(self) -> int:
        """Top dimension with simplices; -1 for the empty complex."""
        for d in range(len(self.counts) - 1, -1, -1):
            if self.counts[d]:
                return d
        return -1

    def n_cells(self, d: int) -> int:
        if 0 <= d < len(self.counts):
            return self.counts[d]
        return 0

    def f_vector(self) -> tuple[int, ...]:
        return tuple(self.counts[: self.dimension + 1])

    def face(self, d: int, i: int, k: int) -> int:
        return self.faces[d][i][k]

    def validate(self) -> bool:
        """Check the simplicial identities ``d_i d_j = d_{j-1} d_i`` (i < j)."""
        for d in range(2, len(self.counts)):
            for s in range(self.counts[d]):
                fs = self.faces[d][s]
                for j in range(1, d + 1):
                    for i in range(j):
                        if self.faces[d - 1][fs[j]][i] != self.faces[d - 1][fs[i]][j - 1]:
                            return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, DeltaComplex)
            and self.counts == other.counts
            and self.faces == other.faces
        )

    def __repr__(self):
        return f"DeltaComplex(f={self.f_vector()})"


def _chain_levels(cat: FiniteCategory, max_dim: int):
    """Nondegenerate chains by length, each level sorted lexicographically."""
    levels = [[(m,) for m in cat.nonidentity()]]
    d = 1
    while d < max_dim and levels[-1]:
        nxt = []
        for chain in levels[-1]:
            end = cat.target[chain[-1]]
            for m in cat.out_of(end):
                if not cat.is_identity(m):
                    nxt.append(chain + (m,))
        levels.append(nxt)
        d += 1
    return [sorted(level) for level in levels if level]


def longest_chain_length(cat: FiniteCategory) -> int:
    """Length of the longest composable chain of nonidentity morphisms;
    raises on categories where chains never stop (nonidentity cycles)."""
    order: list[int] = []
    state = {}

    def visit(m):
        if state.get(m) == 1:
            raise CategoryError("category has unbounded chains (a nonidentity cycle)")
        if m in state:
            return
        state[m] = 1
        for nxt in cat.out_of(cat.target[m]):
            if not cat.is_identity(nxt):
                visit(nxt)
        state[m] = 2
        order.append(m)

    cat_nonid = [m for m in cat.nonidentity()]
    for m in cat_nonid:
        visit(m)
    best = {}
    for m in order:
        best[m] = 1 + max(
            (best[nxt] for nxt in cat.out_of(cat.target[m]) if not cat.is_identity(nxt)),
            default=0,
        )
    return max(best.values(), default=0)


def _resolve_max_dim(cat: FiniteCategory, max_dim):
    loopfree, _ = is_loopfree(cat)
    if max_dim is None:
        if not loopfree:
            raise CategoryError(
                "nerve of a non-loopfree category is infinite; pass max_dim <= 1"
            )
        return longest_chain_length(cat)
    if max_dim >= 2 and not loopfree:
        raise CategoryError("nerve above dimension 1 needs a loopfree category")
    return max_dim


def nerve(cat: FiniteCategory, max_dim=None) -> DeltaComplex:
    """The nerve as a complex of nondegenerate chains.

    Faces: ``d_0`` drops the first morphism, ``d_d`` the last, and an inner
    ``d_i`` composes the adjacent pair.  Edge faces are ``(target, source)``.
    """
    max_dim = _resolve_max_dim(cat, max_dim)
    levels = _chain_levels(cat, max_dim) if max_dim >= 1 else []
    labels = [tuple(range(cat.n_objects))] + [tuple(level) for level in levels]
    index = [{lab: i for i, lab in enumerate(lv)} for lv in labels]
    faces = []
    for d, level in enumerate(levels, start=1):
        lower = index[d - 1]
        rows = []
        for chain in level:
            rows.append(tuple(_chain_face(cat, chain, k, lower) for k in range(d + 1)))
        faces.append(tuple(rows))
    return DeltaComplex(cat.n_objects, faces, labels)


def _chain_face(cat, chain, k, lower_index):
    d = len(chain)
    if d == 1:
        return cat.target[chain[0]] if k == 0 else cat.source[chain[0]]
    if k == 0:
        key = chain[1:]
    elif k == d:
        key = chain[:-1]
    else:
        key = chain[: k - 1] + (cat.compose(chain[k], chain[k - 1]),) + chain[k + 1 :]
    return lower_index[key]


def nerve_quotient(cat: FiniteCategory, action: ActionGroup, max_dim=None) -> DeltaComplex:
    """The quotient complex: simplices are orbits of chains, labelled by
    their lexicographically least member."""
    max_dim = _resolve_max_dim(cat, max_dim)
    obj_orbits = action.object_orbits()
    labels = [tuple(orbit[0] for orbit in obj_orbits)]
    rep_of_obj = {}
    for orbit in obj_orbits:
        for x in orbit:
            rep_of_obj[x] = orbit[0]
    levels = _chain_levels(cat, max_dim) if max_dim >= 1 else []
    rep_of_chain = {}
    for level in levels:
        for chain in level:
            if chain in rep_of_chain:
                continue
            images = sorted(action.apply_chain(g, chain) for g in range(action.order))
            for img in images:
                rep_of_chain[img] = images[0]
    for d, level in enumerate(levels, start=1):
        reps = sorted({rep_of_chain[c] for c in level})
        labels.append(tuple(reps))
    index = [{lab: i for i, lab in enumerate(lv)} for lv in labels]
    faces = []
    for d in range(1, len(labels)):
        rows = []
        for chain in labels[d]:
            row = []
            for k in range(d + 1):
                if d == 1:
                    obj = cat.target[chain[0]] if k == 0 else cat.source[chain[0]]
                    row.append(index[0][rep_of_obj[obj]])
                    continue
                if k == 0:
                    key = chain[1:]
                elif k == d:
                    key = chain[:-1]
                else:
                    key = chain[: k - 1] + (cat.compose(chain[k], chain[k - 1]),) + chain[k + 1 :]
                row.append(index[d - 1][rep_of_chain[key]])
            rows.append(tuple(row))
        faces.append(tuple(rows))
    return DeltaComplex(len(labels[0]), faces, labels)


@dataclass(frozen=True)
class SimplicialMap:
    """A per-dimension simplex map between two complexes."""

    domain: DeltaComplex
    codomain: DeltaComplex
    maps: tuple[tuple[int, ...], ...]

    def validate(self) -> bool:
        """Images in range and faces commute."""
        for d in range(len(self.domain.counts)):
            if d >= len(self.maps) or len(self.maps[d]) != self.domain.counts[d]:
                return False
            if any(not (0 <= i < self.codomain.n_cells(d)) for i in self.maps[d]):
                return False
        for d in range(1, len(self.domain.counts)):
            for s in range(self.domain.counts[d]):
                img = self.maps[d][s]
                for k in range(d + 1):
                    if (
                        self.maps[d - 1][self.domain.faces[d][s][k]]
                        != self.codomain.faces[d][img][k]
                    ):
                        return False
        return True

    def injective_at(self, d: int) -> bool:
        if d >= len(self.maps):
            return True
        return len(set(self.maps[d])) == len(self.maps[d])

    def surjective_at(self, d: int) -> bool:
        if d >= len(self.maps):
            return self.codomain.n_cells(d) == 0
        return len(set(self.maps[d])) == self.codomain.n_cells(d)


def induced_simplicial_map(complex_: DeltaComplex, fun: CatFunctor) -> SimplicialMap:
    """Transport an automorphism of the category to a labelled nerve."""
    maps = []
    for d, level in enumerate(complex_.labels):
        if d == 0:
            maps.append(tuple(complex_.index[0][fun.obj_map[x]] for x in level))
        else:
            maps.append(
                tuple(
                    complex_.index[d][tuple(fun.mor_map[m] for m in chain)]
                    for chain in level
                )
            )
    return SimplicialMap(complex_, complex_, tuple(maps))


def fixed_subcomplex(complex_: DeltaComplex, fun: SimplicialMap) -> DeltaComplex:
    """The subcomplex of simplices fixed by a simplicial automorphism.

    For nerve labels a simplex fixed as a chain is fixed entrywise, and
    faces of fixed simplices stay fixed, so this is a genuine subcomplex.
    """
    if fun.domain is not complex_ and fun.domain != complex_:
        raise ValueError("map does not act on the given complex")
    keep = []
    renumber = []
    for d in range(len(complex_.counts)):
        kept = [i for i in range(complex_.counts[d]) if fun.maps[d][i] == i]
        keep.append(kept)
        renumber.append({old: new for new, old in enumerate(kept)})
    faces = []
    for d in range(1, len(complex_.counts)):
        rows = []
        for old in keep[d]:
            row = []
            for k in range(d + 1):
                f = complex_.faces[d][old][k]
                if f not in renumber[d - 1]:
                    raise InternalCheckError("face of a fixed simplex is not fixed")
                row.append(renumber[d - 1][f])
            rows.append(tuple(row))
        faces.append(tuple(rows))
    labels = [tuple(complex_.labels[d][i] for i in keep[d]) for d in range(len(keep))]
    return DeltaComplex(len(keep[0]), faces, labels)


def canonical_lambda(
    cat: FiniteCategory,
    action: ActionGroup,
    quotient: QuotientCategory | None = None,
    max_dim=None,
) -> SimplicialMap:
    """The canonical map from the quotient of the nerve to the nerve of the
    quotient, sending an orbit of a chain to its chain of classes.

    Surjectivity in every dimension is asserted; a failure there would be
    a bug, not a property of the input.
    """
    if quotient is None:
        quotient = quotient_category(cat, action)
    dom = nerve_quotient(cat, action, max_dim=max_dim)
    cod = nerve(quotient.category, max_dim=max_dim)
    mor_class = quotient.mor_class
    obj_class = quotient.obj_class
    maps = [tuple(obj_class[x] for x in dom.labels[0])]
    for d in range(1, len(dom.counts)):
        level = []
        for chain in dom.labels[d]:
            image = tuple(mor_class[m] for m in chain)
            try:
                level.append(cod.index[d][image])
            except KeyError:
                raise InternalCheckError(
                    f"orbit chain {chain} maps to a degenerate chain {image}"
                ) from None
        maps.append(tuple(level))
    lam = SimplicialMap(dom, cod, tuple(maps))
    if not lam.validate():
        raise InternalCheckError("canonical map does not commute with faces")
    for d in range(max(len(dom.counts), len(cod.counts))):
        if not lam.surjective_at(d):
            raise InternalCheckError(f"canonical map fails surjectivity in dimension {d}")
    return lam


@dataclass(frozen=True)
class LambdaReport:
    """Injectivity of the canonical map, dimension by dimension; the map is
    surjective in every dimension by construction."""

    injective: tuple[bool, ...]

    def injective_at(self, d: int) -> bool:
        if d >= len(self.injective):
            return True
        return self.injective[d]

    def injective_up_to(self, t: int) -> bool:
        """Injective on the whole t-skeleton."""
        return all(self.injective_at(d) for d in range(t + 1))

    def is_isomorphism(self) -> bool:
        return all(self.injective)


def lambda_skeleton_report(
    cat: FiniteCategory,
    action: ActionGroup,
    quotient: QuotientCategory | None = None,
    max_dim=None,
) -> LambdaReport:
    lam = canonical_lambda(cat, action, quotient=quotient, max_dim=max_dim)
    dims = len(lam.domain.counts)
    return LambdaReport(tuple(lam.injective_at(d) for d in range(dims)))


def face_poset(complex_: DeltaComplex) -> Poset:
    """All simplices ordered by iterated face containment.

    For the nerve of a loopfree category this is the chain poset, whose
    validity reflects that subdividing such a category yields a poset.
    """
    offsets = []
    total = 0
    for c in complex_.counts:
        offsets.append(total)
        total += c
    pairs = []
    for d in range(1, len(complex_.counts)):
        for s in range(complex_.counts[d]):
            me = offsets[d] + s
            for f in complex_.faces[d][s]:
                pairs.append((offsets[d - 1] + f, me))
    # reflexive-transitive closure is taken by from_relations on the duals
    return Poset.from_relations(total, [(b, a) for a, b in pairs])
