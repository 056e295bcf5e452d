"""Decision procedures for the combinatorial conditions on group actions.

Each checker returns a :class:`ConditionReport` with a verdict and, on
failure, the lexicographically least witness.  Chains are enumerated over
all morphisms, identities included; an identity entry only constrains the
moving element through its endpoints, which is exactly what makes the
level-t checks downward closed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ActionGroup
from .fincat import CategoryError, FiniteCategory, Poset, is_loopfree
from .nerve import longest_chain_length


class FamilyError(ValueError):
    """A supplied subgroup family violates its precondition."""


class ConditionUnmet(ValueError):
    """An operation refused to run because a required condition fails."""

    def __init__(self, report):
        super().__init__(f"required condition {report.condition} fails, witness {report.witness}")
        self.report = report


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    verdict: bool
    witness: tuple[int, ...] | None = None
    t: int | None = None

    def __bool__(self) -> bool:
        return self.verdict


def check_r(cat: FiniteCategory, action: ActionGroup) -> ConditionReport:
    """Composing with orbit-equivalent continuations lands in one orbit."""
    orbit = action.morphism_orbit_index()
    orbit_members = action.morphism_orbits()
    for x in range(cat.n_morphisms):
        end = cat.target[x]
        outs = cat.out_of(end)
        for ya in outs:
            ref = orbit[cat.compose(ya, x)]
            for yb in orbit_members[orbit[ya]]:
                if cat.source[yb] != end or yb == ya:
                    continue
                if orbit[cat.compose(yb, x)] != ref:
                    return ConditionReport("R", False, (x, ya, yb))
    return ConditionReport("R", True)


def _extension_table(cat: FiniteCategory, action: ActionGroup):
    """Per (pointwise-stabilizer, endpoint) memo of the transport check:
    every orbit mate of an outgoing morphism with the same source must be
    reachable by the stabilizer."""
    orbit = action.morphism_orbit_index()
    orbit_members = action.morphism_orbits()
    memo: dict[tuple[frozenset, int], tuple[bool, tuple[int, int] | None]] = {}

    def check(stab: frozenset, end: int):
        key = (stab, end)
        hit = memo.get(key)
        if hit is not None:
            return hit
        result = (True, None)
        for ma in cat.out_of(end):
            reach = {action.mor_image(g, ma) for g in stab}
            for mb in orbit_members[orbit[ma]]:
                if cat.source[mb] == end and mb not in reach:
                    result = (False, (ma, mb))
                    break
            if not result[0]:
                break
        memo[key] = result
        return result

    return check


def check_all_ct(cat: FiniteCategory, action: ActionGroup, t_max=None):
    """Reports for every level ``t`` in ``[2, t_max]`` in one sweep.

    ``t_max`` defaults to one more than the longest nonidentity chain; by
    the identity-padding argument higher levels repeat lower ones.
    """
    if t_max is None:
        t_max = max(2, longest_chain_length(cat) + 1)
    stab_all = frozenset(range(action.order))
    stab_of = [
        frozenset(action.stabilizer_elements(m)) for m in range(cat.n_morphisms)
    ]
    check = _extension_table(cat, action)
    results: dict[int, ConditionReport] = {}

    def record(t, chain, stab):
        if t in results and not results[t].verdict:
            return
        ok, pair = check(stab, cat.target[chain[-1]])
        if ok:
            results.setdefault(t, ConditionReport(f"C{t}", True, t=t))
        else:
            results[t] = ConditionReport(f"C{t}", False, chain + pair, t=t)

    def grow(chain, stab, depth):
        record(depth + 1, chain, stab)
        if depth + 1 >= t_max:
            return
        for m in cat.out_of(cat.target[chain[-1]]):
            grow(chain + (m,), stab & stab_of[m], depth + 1)

    for m in range(cat.n_morphisms):
        grow((m,), stab_all & stab_of[m], 1)
    for t in range(2, t_max + 1):
        results.setdefault(t, ConditionReport(f"C{t}", True, t=t))
    return {t: results[t] for t in range(2, t_max + 1)}


def check_ct(cat: FiniteCategory, action: ActionGroup, t: int) -> ConditionReport:
    """A single element can fix a (t-1)-chain while transporting one
    orbit-equivalent extension to another."""
    if t < 2:
        raise ValueError("levels start at t = 2")
    return check_all_ct(cat, action, t_max=t)[t]


def check_c(cat: FiniteCategory, action: ActionGroup):
    """Conjunction over all levels; returns ``(report, per_level)`` where
    the report carries the first failing level."""
    per_level = check_all_ct(cat, action)
    for t in sorted(per_level):
        rep = per_level[t]
        if not rep.verdict:
            return ConditionReport("C", False, rep.witness, t=t), per_level
    return ConditionReport("C", True), per_level


def _validate_family(cat: FiniteCategory, action: ActionGroup, family):
    table = []
    for m in range(cat.n_morphisms):
        sub = frozenset(family.get(m, (0,)))
        stab = set(action.stabilizer_elements(m))
        if not sub <= stab:
            raise FamilyError(f"family member at morphism {m} is not inside the stabilizer")
        if 0 not in sub:
            raise FamilyError(f"family member at morphism {m} misses the identity")
        for a in sub:
            for b in sub:
                if action.mult[a][b] not in sub:
                    raise FamilyError(f"family member at morphism {m} is not a subgroup")
        table.append(sub)
    return table


def check_s(
    cat: FiniteCategory,
    action: ActionGroup,
    family,
    containment_only: bool = False,
) -> ConditionReport:
    """A coherent family of subgroups inside the stabilizers.

    (1) the subgroup at a morphism sits inside the one at its source, which
    sits inside the one at every morphism landing there; (2) the source
    subgroup reaches every stabilizer translate.  Morphisms missing from
    ``family`` default to the trivial subgroup.
    """
    name = "strongS" if containment_only else "S"
    table = _validate_family(cat, action, family)
    for m in range(cat.n_morphisms):
        a = cat.source[m]
        if not table[m] <= table[a]:
            return ConditionReport(name, False, (1, m, a))
        for m2 in cat.into(a):
            if not table[a] <= table[m2]:
                return ConditionReport(name, False, (1, m, m2))
    if not containment_only:
        for m in range(cat.n_morphisms):
            a = cat.source[m]
            reach = {action.mor_image(g, m) for g in table[a]}
            for g in action.stabilizer_elements(a):
                moved = action.mor_image(g, m)
                if moved not in reach:
                    return ConditionReport(name, False, (2, m, moved))
    return ConditionReport(name, True)


def stabilizer_family(cat: FiniteCategory, action: ActionGroup):
    """The full-stabilizer family used by the strong condition."""
    return {
        m: frozenset(action.stabilizer_elements(m)) for m in range(cat.n_morphisms)
    }


def check_strong_s(cat: FiniteCategory, action: ActionGroup) -> ConditionReport:
    """The family of full stabilizers; only the containment chain matters,
    transitivity being automatic there."""
    return check_s(cat, action, stabilizer_family(cat, action), containment_only=True)


def check_sr(cat: FiniteCategory, action: ActionGroup) -> ConditionReport:
    """Same source plus orbit-equal targets forces orbit-equal morphisms."""
    ok, witness = is_loopfree(cat)
    if not ok:
        raise CategoryError(f"condition needs a loopfree category, witness {witness}")
    obj_orbit = action.object_orbit_index()
    mor_orbit = action.morphism_orbit_index()
    for x in range(cat.n_morphisms):
        for y in range(x + 1, cat.n_morphisms):
            if cat.source[x] != cat.source[y]:
                continue
            if obj_orbit[cat.target[x]] != obj_orbit[cat.target[y]]:
                continue
            if mor_orbit[x] != mor_orbit[y]:
                return ConditionReport("SR", False, (x, y))
    return ConditionReport("SR", True)


def check_srp(poset: Poset, action: ActionGroup) -> ConditionReport:
    """Stabilizers of upper bounds act transitively on comparable orbit
    mates; the poset reading of the same-source condition."""
    if action.category.n_objects != poset.n:
        raise ValueError("action does not live on the given poset")
    orbits = action.object_orbits()
    orbit_index = action.object_orbit_index()
    for a in range(poset.n):
        stab = action.stabilizer_elements(a)
        for b in sorted(poset.down[a]):
            reach = {action.obj_image(g, b) for g in stab}
            for c in orbits[orbit_index[b]]:
                if poset.le(c, a) and c not in reach:
                    return ConditionReport("SRP", False, (a, b, c))
    return ConditionReport("SRP", True)
