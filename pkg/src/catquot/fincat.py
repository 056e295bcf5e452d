"""Finite categories, posets and functors as explicit integer tables.

Conventions used throughout the package:

* The objects of a category with ``n`` objects are the integers ``0..n-1``.
* Morphism ids are dense.  Ids below ``n_objects`` are reserved for the
  identities, so object ``i`` doubles as the morphism id of ``id_i``.
* ``compose(f, g)`` means "g, then f".  It is defined exactly when
  ``source(f) == target(g)``, and then ``source(f∘g) == source(g)`` and
  ``target(f∘g) == target(f)``.
* Posets are categorified with morphisms running from larger to smaller:
  one morphism ``x -> y`` for every pair ``x >= y``.
"""

from __future__ import annotations

from dataclasses import dataclass


class CategoryError(ValueError):
    """Raised when data cannot be used as a finite category."""


class PosetError(ValueError):
    """Raised when a relation fails to be a partial order."""


class InternalCheckError(RuntimeError):
    """A built-in self-check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a law-by-law validation; ``violations`` holds
    ``(law, witness-ids)`` pairs."""

    ok: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def __bool__(self) -> bool:
        return self.ok


class FiniteCategory:
    """A finite category stored as source/target/composition tables.

    ``arrows`` lists the nonidentity morphisms as ``(source, target)``
    pairs; they receive the ids ``n_objects, n_objects + 1, ...`` in the
    given order.  ``comp`` maps ``(f, g) -> f∘g``; pairs involving an
    identity may be omitted and are filled in from the identity laws.

    The constructor only enforces structural sanity (ids in range); the
    categorical laws are checked by :func:`validate_category`, so that
    deliberately broken tables can be built and reported on.
    """

    def __init__(self, n_objects, arrows=(), comp=None):
        if n_objects < 0:
            raise CategoryError("negative object count")
        arrows = tuple((int(s), int(t)) for s, t in arrows)
        for s, t in arrows:
            if not (0 <= s < n_objects and 0 <= t < n_objects):
                raise CategoryError(f"arrow endpoint out of range: ({s}, {t})")
        self.n_objects = n_objects
        self.source = tuple(range(n_objects)) + tuple(s for s, _ in arrows)
        self.target = tuple(range(n_objects)) + tuple(t for _, t in arrows)
        n_mor = len(self.source)
        table = dict(comp or {})
        for (f, g), h in table.items():
            for m in (f, g, h):
                if not (0 <= m < n_mor):
                    raise CategoryError(f"composition entry out of range: {(f, g, h)}")
        for m in range(n_mor):
            table.setdefault((self.target[m], m), m)
            table.setdefault((m, self.source[m]), m)
        self.comp = table
        self._hom: dict[tuple[int, int], tuple[int, ...]] = {}
        for m in range(n_mor):
            key = (self.source[m], self.target[m])
            self._hom[key] = self._hom.get(key, ()) + (m,)
        self._out = tuple(
            tuple(m for m in range(n_mor) if self.source[m] == x)
            for x in range(n_objects)
        )
        self._in = tuple(
            tuple(m for m in range(n_mor) if self.target[m] == x)
            for x in range(n_objects)
        )

    @property
    def n_morphisms(self) -> int:
        return len(self.source)

    def is_identity(self, m: int) -> bool:
        return m < self.n_objects

    def nonidentity(self):
        return range(self.n_objects, self.n_morphisms)

    def compose(self, f: int, g: int) -> int:
        """Return ``f∘g`` ("g then f"); requires source(f) == target(g)."""
        try:
            return self.comp[(f, g)]
        except KeyError:
            raise CategoryError(f"morphisms {f} and {g} do not compose") from None

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        """All morphisms from ``x`` to ``y``."""
        return self._hom.get((x, y), ())

    def out_of(self, x: int) -> tuple[int, ...]:
        """Morphisms with source ``x`` (identity included)."""
        return self._out[x]

    def into(self, x: int) -> tuple[int, ...]:
        return self._in[x]

    def composable_pairs(self):
        """Yield every pair ``(f, g)`` with ``source(f) == target(g)``."""
        for g in range(self.n_morphisms):
            for f in self._out[self.target[g]]:
                yield f, g

    def __eq__(self, other):
        return (
            isinstance(other, FiniteCategory)
            and self.n_objects == other.n_objects
            and self.source == other.source
            and self.target == other.target
            and self.comp == other.comp
        )

    def __hash__(self):
        return hash((self.n_objects, self.source, self.target))

    def __repr__(self):
        return f"FiniteCategory({self.n_objects} objects, {self.n_morphisms} morphisms)"


def validate_category(cat: FiniteCategory) -> ValidationReport:
    """Check totality, endpoint coherence, identity laws and associativity.

    Every violation is reported with the law's name and the witnessing
    morphism ids; an empty violation list means the category is valid.
    """
    bad: list[tuple[str, tuple[int, ...]]] = []
    n_mor = cat.n_morphisms
    for g in range(n_mor):
        for f in cat.out_of(cat.target[g]):
            if (f, g) not in cat.comp:
                bad.append(("composition-missing", (f, g)))
    for (f, g), h in sorted(cat.comp.items()):
        if cat.source[f] != cat.target[g]:
            bad.append(("composition-spurious", (f, g)))
            continue
        if cat.source[h] != cat.source[g] or cat.target[h] != cat.target[f]:
            bad.append(("composition-endpoints", (f, g, h)))
    for m in range(n_mor):
        left = cat.comp.get((cat.target[m], m))
        if left is not None and left != m:
            bad.append(("left-identity", (m,)))
        right = cat.comp.get((m, cat.source[m]))
        if right is not None and right != m:
            bad.append(("right-identity", (m,)))
    if not bad:
        for g, h in list(cat.composable_pairs()):
            gh = cat.comp[(g, h)]
            for f in cat.out_of(cat.target[g]):
                if cat.comp[(cat.comp[(f, g)], h)] != cat.comp[(f, gh)]:
                    bad.append(("associativity", (f, g, h)))
    return ValidationReport(not bad, tuple(bad))


class Poset:
    """A finite poset on elements ``0..n-1`` stored as the full relation.

    ``le_pairs`` lists pairs ``(a, b)`` meaning ``a <= b``.  Reflexive
    pairs may be omitted; antisymmetry and transitivity are validated and
    a :class:`PosetError` carries a witness when either fails.
    """

    def __init__(self, n: int, le_pairs=()):
        self.n = n
        down = [{x} for x in range(n)]
        for a, b in le_pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(f"element out of range in ({a}, {b})")
            down[b].add(a)
        for x in range(n):
            for y in range(n):
                if x != y and x in down[y] and y in down[x]:
                    raise PosetError(f"antisymmetry fails on ({x}, {y})")
        for z in range(n):
            for y in down[z]:
                if not down[y] <= down[z]:
                    w = min(down[y] - down[z])
                    raise PosetError(f"transitivity fails on ({w}, {y}, {z})")
        self.down = tuple(frozenset(s) for s in down)

    @classmethod
    def from_relations(cls, n: int, gt_pairs) -> "Poset":
        """Build from strict relations ``a > b``, taking the transitive
        closure; rejects cycles."""
        down = [{x} for x in range(n)]
        for a, b in gt_pairs:
            if a == b:
                raise PosetError(f"strict relation {a} > {b} is reflexive")
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(f"element out of range in ({a}, {b})")
            down[a].add(b)
        changed = True
        while changed:
            changed = False
            for x in range(n):
                extra = set()
                for y in down[x]:
                    extra |= down[y]
                if not extra <= down[x]:
                    down[x] |= extra
                    changed = True
        return cls(n, [(y, x) for x in range(n) for y in down[x]])

    def le(self, a: int, b: int) -> bool:
        return a in self.down[b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and a in self.down[b]

    def comparable(self, a: int, b: int) -> bool:
        return self.le(a, b) or self.le(b, a)

    def strict_down(self, x: int) -> frozenset:
        return self.down[x] - {x}

    def covers(self):
        """Yield cover pairs ``(a, b)`` with ``a > b`` and nothing between."""
        for a in range(self.n):
            for b in sorted(self.strict_down(a)):
                if not any(self.lt(b, c) and self.lt(c, a) for c in range(self.n)):
                    yield a, b

    def chains(self):
        """All nonempty chains, each as a tuple sorted from top to bottom,
        listed by (length, tuple) for a reproducible order."""
        out = []

        def grow(chain, last):
            out.append(tuple(chain))
            for nxt in range(self.n):
                if self.lt(nxt, last):
                    chain.append(nxt)
                    grow(chain, nxt)
                    chain.pop()

        for top in range(self.n):
            grow([top], top)
        return sorted(out, key=lambda c: (len(c), c))

    def height(self) -> int:
        """Number of elements in a longest chain (0 for the empty poset)."""
        return max((len(c) for c in self.chains()), default=0)

    def minimal_elements(self):
        return [x for x in range(self.n) if self.down[x] == frozenset({x})]

    def maximal_elements(self):
        return [x for x in range(self.n) if not any(self.lt(x, y) for y in range(self.n))]

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.down == other.down

    def __hash__(self):
        return hash((self.n, self.down))

    def __repr__(self):
        rels = sum(len(s) - 1 for s in self.down)
        return f"Poset({self.n} elements, {rels} strict relations)"


@dataclass(frozen=True)
class CatFunctor:
    """A functor between integer-indexed categories, as two image tables."""

    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def apply_obj(self, x: int) -> int:
        return self.obj_map[x]

    def apply_mor(self, m: int) -> int:
        return self.mor_map[m]


def identity_functor(cat: FiniteCategory) -> CatFunctor:
    return CatFunctor(tuple(range(cat.n_objects)), tuple(range(cat.n_morphisms)))


def functor_compose(f: CatFunctor, g: CatFunctor) -> CatFunctor:
    """The functor "g, then f"."""
    return CatFunctor(
        tuple(f.obj_map[x] for x in g.obj_map),
        tuple(f.mor_map[m] for m in g.mor_map),
    )


def validate_functor(fun: CatFunctor, dom: FiniteCategory, cod: FiniteCategory) -> ValidationReport:
    """Check that the image tables preserve identities, endpoints and
    composition."""
    bad: list[tuple[str, tuple[int, ...]]] = []
    if len(fun.obj_map) != dom.n_objects or len(fun.mor_map) != dom.n_morphisms:
        return ValidationReport(False, (("functor-shape", ()),))
    if any(not (0 <= x < cod.n_objects) for x in fun.obj_map) or any(
        not (0 <= m < cod.n_morphisms) for m in fun.mor_map
    ):
        return ValidationReport(False, (("functor-range", ()),))
    for x in range(dom.n_objects):
        if fun.mor_map[x] != fun.obj_map[x]:
            bad.append(("functor-identity", (x,)))
    for m in range(dom.n_morphisms):
        im = fun.mor_map[m]
        if cod.source[im] != fun.obj_map[dom.source[m]] or cod.target[im] != fun.obj_map[dom.target[m]]:
            bad.append(("functor-endpoints", (m,)))
    if not bad:
        for f, g in dom.composable_pairs():
            if fun.mor_map[dom.comp[(f, g)]] != cod.compose(fun.mor_map[f], fun.mor_map[g]):
                bad.append(("functor-composition", (f, g)))
    return ValidationReport(not bad, tuple(bad))


def category_from_poset(poset: Poset) -> FiniteCategory:
    """The poset as a category: one morphism ``x -> y`` per pair ``x >= y``.

    >>> two_chain = Poset(2, [(1, 0)])   # 1 <= 0, so 0 is the top
    >>> category_from_poset(two_chain).n_morphisms
    3
    """
    arrows = sorted(
        (x, y) for x in range(poset.n) for y in poset.strict_down(x)
    )
    arrow_id = {pair: poset.n + i for i, pair in enumerate(arrows)}
    comp = {}
    for (a, b) in arrows:
        g = arrow_id[(a, b)]
        for (b2, c) in arrows:
            if b2 == b:
                comp[(arrow_id[(b, c)], g)] = arrow_id[(a, c)]
    return FiniteCategory(poset.n, arrows, comp)


def is_loopfree(cat: FiniteCategory):
    """No morphisms both ways between distinct objects, and only the
    identity endomorphism; returns ``(verdict, witness-pair)``."""
    for x in range(cat.n_objects):
        if cat.hom(x, x) != (x,):
            return False, (x, x)
    for x in range(cat.n_objects):
        for y in range(x + 1, cat.n_objects):
            if cat.hom(x, y) and cat.hom(y, x):
                return False, (x, y)
    return True, None


def is_poset_category(cat: FiniteCategory) -> bool:
    """Loopfree with at most one morphism between any two objects."""
    if not is_loopfree(cat)[0]:
        return False
    return all(len(ms) <= 1 for ms in cat._hom.values())


def underlying_order(cat: FiniteCategory) -> Poset:
    """The partial order with ``x >= y`` whenever ``hom(x, y)`` is nonempty.

    Only defined for loopfree categories, where antisymmetry is automatic.
    """
    ok, witness = is_loopfree(cat)
    if not ok:
        raise CategoryError(f"category is not loopfree, witness objects {witness}")
    pairs = [
        (y, x)
        for x in range(cat.n_objects)
        for y in range(cat.n_objects)
        if cat.hom(x, y)
    ]
    return Poset(cat.n_objects, pairs)


def chain_elements(poset: Poset) -> tuple[tuple[int, ...], ...]:
    """The nonempty chains of the poset in their canonical order; these are
    the elements of the barycentric subdivision."""
    return tuple(poset.chains())


def barycentric_subdivision(poset: Poset) -> Poset:
    """The poset of nonempty chains ordered by inclusion."""
    chains = chain_elements(poset)
    sets = [frozenset(c) for c in chains]
    pairs = [
        (i, j)
        for i, si in enumerate(sets)
        for j, sj in enumerate(sets)
        if si <= sj
    ]
    return Poset(len(chains), pairs)
