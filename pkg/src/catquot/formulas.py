"""Two-sided evaluation of the averaging, multiplicity and lattice identities.

Every report carries both sides exactly (integers or rationals), an
equality flag and a per-term breakdown, so a discrepancy can be audited
term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import ActionGroup, fixed_subcategory, restrict_action, subgroup_action
from .conditions import ConditionUnmet, check_c
from .fincat import CategoryError, FiniteCategory, Poset, is_loopfree
from .homology import (
    euler_characteristic,
    homology,
    mobius,
    trivial_multiplicity,
)
from .nerve import nerve, nerve_quotient
from .quotient import quotient_category


@dataclass(frozen=True)
class IdentityReport:
    name: str
    left: Fraction | int
    right: Fraction | int
    breakdown: tuple[tuple[str, Fraction | int], ...] = ()

    @property
    def equal(self) -> bool:
        return self.left == self.right


@dataclass(frozen=True)
class LabeledLattice:
    """A bounded poset with an integer dimension label per element.

    Labels must strictly reverse the order (smaller elements carry larger
    labels), matching subspaces shrinking as intersections accumulate.
    """

    poset: Poset
    dim: tuple[int, ...]

    def __post_init__(self):
        p = self.poset
        if len(self.dim) != p.n:
            raise ValueError("one dimension label per element is required")
        mins = p.minimal_elements()
        maxs = p.maximal_elements()
        if len(mins) != 1 or len(maxs) != 1:
            raise ValueError("lattice needs a unique bottom and a unique top")
        for x in range(p.n):
            for y in p.strict_down(x):
                if not self.dim[y] > self.dim[x]:
                    raise ValueError(
                        f"labels must strictly decrease upward, but {y} < {x} has "
                        f"dim {self.dim[y]} <= {self.dim[x]}"
                    )

    @property
    def bottom(self) -> int:
        return self.poset.minimal_elements()[0]

    @property
    def top(self) -> int:
        return self.poset.maximal_elements()[0]


def _require_loopfree(cat: FiniteCategory):
    ok, witness = is_loopfree(cat)
    if not ok:
        raise CategoryError(f"identity needs a loopfree category, witness {witness}")


def _require_condition_c(cat: FiniteCategory, action: ActionGroup):
    report, _ = check_c(cat, action)
    if not report.verdict:
        raise ConditionUnmet(report)


def burnside_euler(cat: FiniteCategory, action: ActionGroup) -> IdentityReport:
    """Euler characteristic of the quotient complex versus the average over
    fixed subcategories.  Holds with no condition on the action."""
    _require_loopfree(cat)
    left = euler_characteristic(nerve_quotient(cat, action))
    terms = []
    total = 0
    for g in range(action.order):
        sub = fixed_subcategory(cat, action.elements[g])
        chi = euler_characteristic(nerve(sub.category))
        terms.append((f"fixed g={g}", chi))
        total += chi
    right = Fraction(total, action.order)
    return IdentityReport("euler", left, right, tuple(terms))


def mobius_quotient(cat: FiniteCategory, action: ActionGroup) -> IdentityReport:
    """Möbius value of the quotient category versus the fixed-subcategory
    average; refuses to run unless every level check passes."""
    _require_loopfree(cat)
    _require_condition_c(cat, action)
    left = mobius(quotient_category(cat, action).category)
    terms = []
    total = 0
    for g in range(action.order):
        sub = fixed_subcategory(cat, action.elements[g])
        mu = mobius(sub.category)
        terms.append((f"fixed g={g}", mu))
        total += mu
    right = Fraction(total, action.order)
    return IdentityReport("mobius", left, right, tuple(terms))


def betti_multiplicity(cat: FiniteCategory, action: ActionGroup, i: int) -> IdentityReport:
    """Betti number of the quotient's nerve versus the multiplicity of the
    trivial character in the induced homology representation."""
    _require_loopfree(cat)
    _require_condition_c(cat, action)
    quotient = quotient_category(cat, action)
    left = homology(nerve(quotient.category)).betti(i)
    right = trivial_multiplicity(cat, action, i)
    return IdentityReport(f"betti i={i}", left, right)


def _interval_quotient_reduced_betti(action: ActionGroup, objects, degree: int) -> int:
    """Reduced Betti number of the nerve of (full subcategory on
    ``objects``) / ``action``; the empty subcategory contributes the
    standard unit in degree -1."""
    if not objects:
        return 1 if degree == -1 else 0
    sub_action, _sub = restrict_action(action, objects)
    quotient = quotient_category(sub_action.category, sub_action)
    return homology(nerve(quotient.category)).reduced_betti(degree)


def gm_quotient(lattice: LabeledLattice, action: ActionGroup, i: int) -> IdentityReport:
    """Lattice-side quotient comparison: reduced homology of the quotient of
    the proper part against the orbit sum of shifted interval terms.

    The sum runs over orbit representatives above the bottom (top
    included); each term is the reduced Betti number, in degree
    ``i - dim(x) - 1``, of the quotient of the open interval below ``x``
    by the stabilizer of ``x``.
    """
    poset = lattice.poset
    if action.category.n_objects != poset.n:
        raise ValueError("action does not live on the given lattice")
    bottom, top = lattice.bottom, lattice.top
    for g in range(action.order):
        if action.obj_image(g, bottom) != bottom or action.obj_image(g, top) != top:
            raise ValueError("action must fix the bottom and top elements")
    proper = [x for x in range(poset.n) if x not in (bottom, top)]
    if proper:
        proper_action, _sub = restrict_action(action, proper)
        _require_condition_c(proper_action.category, proper_action)
    left = _interval_quotient_reduced_betti(action, proper, i)

    terms = []
    right = 0
    for orbit in action.object_orbits():
        x = orbit[0]
        if x == bottom:
            continue
        stab = subgroup_action(action, action.stabilizer_elements(x))
        interval = [y for y in poset.strict_down(x) if y != bottom]
        degree = i - lattice.dim[x] - 1
        term = _interval_quotient_reduced_betti(stab, interval, degree)
        terms.append((f"orbit of {x} (dim {lattice.dim[x]})", term))
        right += term
    return IdentityReport(f"gm i={i}", left, right, tuple(terms))
