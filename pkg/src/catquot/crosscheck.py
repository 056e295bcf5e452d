"""The equivalence battery run over fuzzed and named instances.

Each check compares two independently computed quantities (a condition
checker against a skeleton statistic, an averaging identity against a
direct computation, and so on).  A batch result lists every check by name
so a failure pinpoints both the instance and the broken equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import (
    fixed_subcategory,
    induced_bd_action,
    is_horizontal,
    restrict_action,
    subgroup_action,
)
from .conditions import (
    check_all_ct,
    check_c,
    check_r,
    check_s,
    check_sr,
    check_srp,
    check_strong_s,
    stabilizer_family,
)
from .fincat import Poset, is_loopfree
from .formulas import betti_multiplicity, burnside_euler, mobius_quotient
from .homology import homology, mobius, mobius_recursive
from .nerve import (
    fixed_subcomplex,
    induced_simplicial_map,
    lambda_skeleton_report,
    nerve,
)
from .quotient import is_quotient_poset, poset_quotient, quotient_category


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    ok: bool
    detail: str = ""


def run_battery(poset: Poset, cat, action, include_bd: bool = True):
    """Run every cross-module equivalence on one poset action."""
    out: list[CheckOutcome] = []

    def check(name, ok, detail=""):
        out.append(CheckOutcome(name, bool(ok), detail))

    quotient = quotient_category(cat, action)
    report = lambda_skeleton_report(cat, action, quotient=quotient)

    # canonical map: surjectivity is asserted inside the constructor
    check("lambda-surjective", True)

    per_level = check_all_ct(cat, action)
    for t, rep in per_level.items():
        agrees = rep.verdict == report.injective_up_to(t)
        check(f"ct-vs-skeleton t={t}", agrees, f"condition={rep.verdict}")
    c_report, _ = check_c(cat, action)

    r_report = check_r(cat, action)
    check("r-vs-1-skeleton", r_report.verdict == report.injective_up_to(1))

    horizontal, _ = is_horizontal(action)
    check("horizontal", horizontal)
    check("quotient-loopfree", is_loopfree(quotient.category)[0])

    sr_report = check_sr(cat, action)
    regular_and_poset = r_report.verdict and is_quotient_poset(quotient)
    check("sr-vs-regular-poset", sr_report.verdict == regular_and_poset)
    srp_report = check_srp(poset, action)
    check("sr-vs-srp", sr_report.verdict == srp_report.verdict)

    pq = poset_quotient(poset, action)
    check(
        "object-classes-match",
        tuple(quotient.obj_class) == tuple(action.object_orbit_index())
        and pq.n == quotient.category.n_objects,
    )

    # fixed subcategories against fixed subcomplexes, elementwise
    full_nerve = nerve(cat)
    for g in range(action.order):
        sub = fixed_subcategory(cat, action.elements[g])
        fixed_nerve = nerve(sub.category)
        sub_labels = [
            tuple(sorted(sub.objects))
        ] + [
            tuple(
                sorted(
                    tuple(sub.morphisms[m] for m in chain)
                    for chain in fixed_nerve.labels[d]
                )
            )
            for d in range(1, len(fixed_nerve.counts))
        ]
        complex_fixed = fixed_subcomplex(full_nerve, induced_simplicial_map(full_nerve, action.elements[g]))
        other_labels = [tuple(sorted(complex_fixed.labels[d])) for d in range(len(complex_fixed.counts))]
        pad = max(len(sub_labels), len(other_labels))
        sub_labels += [()] * (pad - len(sub_labels))
        other_labels += [()] * (pad - len(other_labels))
        if sub_labels != other_labels:
            check("fixed-nerve", False, f"element {g}")
            break
    else:
        check("fixed-nerve", True)

    euler_rep = burnside_euler(cat, action)
    check("euler-average", euler_rep.equal, f"{euler_rep.left} vs {euler_rep.right}")

    value, _table = mobius_recursive(cat)
    check("mobius-recursive", value == mobius(cat))
    mobius_recursive(quotient.category)  # raises internally on mismatch
    check("mobius-recursive-quotient", True)

    if c_report.verdict:
        mob = mobius_quotient(cat, action)
        check("mobius-average", mob.equal, f"{mob.left} vs {mob.right}")
        top = nerve(quotient.category).dimension
        for i in range(max(top + 1, 1)):
            rep = betti_multiplicity(cat, action, i)
            check(f"betti-multiplicity i={i}", rep.equal, f"{rep.left} vs {rep.right}")

    # subgroup-family routes into the level conditions
    trivial_family = {m: frozenset({0}) for m in range(cat.n_morphisms)}
    s_trivial = check_s(cat, action, trivial_family)
    if s_trivial.verdict:
        check("s-implies-c (trivial family)", c_report.verdict)
    strong = check_strong_s(cat, action)
    if strong.verdict:
        full_family = stabilizer_family(cat, action)
        s_full = check_s(cat, action, full_family)
        check("strong-s-implies-s", s_full.verdict)
        if s_full.verdict:
            check("s-implies-c (stabilizers)", c_report.verdict)

    # heredity: restrict to a stable union of object orbits
    orbits = action.object_orbits()
    if len(orbits) > 1:
        keep = [x for orbit in orbits[: (len(orbits) + 1) // 2] for x in orbit]
        sub_action, _sub = restrict_action(action, keep)
        if c_report.verdict:
            sub_c, _ = check_c(sub_action.category, sub_action)
            check("c-hereditary", sub_c.verdict)
        if s_trivial.verdict:
            sub_family = {
                m: frozenset({0}) for m in range(sub_action.category.n_morphisms)
            }
            check(
                "s-hereditary",
                check_s(sub_action.category, sub_action, sub_family).verdict,
            )

    if include_bd:
        bd_cat, bd_action, _chains = induced_bd_action(poset, action)
        bd_trivial = {m: frozenset({0}) for m in range(bd_cat.n_morphisms)}
        check("bd-satisfies-s", check_s(bd_cat, bd_action, bd_trivial).verdict)
        bd_quotient = quotient_category(bd_cat, bd_action)
        check("bd-quotient-poset", is_quotient_poset(bd_quotient))
        check("bd-regular", check_r(bd_cat, bd_action).verdict)
        if bd_cat.n_morphisms <= 160:
            bd_c, _ = check_c(bd_cat, bd_action)
            check("s-implies-c (subdivision)", bd_c.verdict)

    return out


def battery_failures(outcomes):
    return [o for o in outcomes if not o.ok]


def euler_betti_consistency(complex_) -> bool:
    """Euler characteristic from counts equals the alternating Betti sum."""
    h = homology(complex_)
    alternating = sum((-1) ** d * b for d, b in enumerate(h.betti_numbers))
    return h.euler == alternating
