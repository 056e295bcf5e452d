"""Acceptance suite: one test per criterion, exact equalities throughout.

Each test prints a single ``ACCEPTANCE <n> <PASS|FAIL>`` line (visible with
``pytest -s`` or ``-rA``) and then asserts.  The shared corpus holds 500
seeded random poset actions plus the named instances and their cyclic
subgroup variants; every instance has already been pushed through the full
cross-check battery.
"""

import pathlib
import subprocess
import sys
from random import Random

import pytest

from catquot import (
    check_c,
    check_ct,
    check_r,
    check_s,
    check_strong_s,
    gm_quotient,
    homology,
    lambda_skeleton_report,
    mobius,
    mobius_quotient,
    nerve,
    nerve_quotient,
    poset_quotient,
    quotient_category,
    restrict_action,
    subgroup_action,
    trivial_multiplicity,
    underlying_order,
)
from catquot.crosscheck import run_battery
from catquot.instances import (
    bowtie_action,
    bowtie_poset,
    even_swap_action,
    full_swap_involution,
    partition_lattice_pi3,
    stacked_antichains,
    symmetric_boolean_action,
    young_family,
)
from catquot.randgen import random_instance, random_labeled_lattice

N_FUZZ = 500
DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def _named_instances():
    named = [
        ("bowtie", bowtie_poset(), *bowtie_action()),
        ("b3", *symmetric_boolean_action(3)),
        ("b2", *symmetric_boolean_action(2)),
        ("stack2", *even_swap_action(2)),
        ("stack3", *even_swap_action(3)),
        ("stack4", *even_swap_action(4)),
        ("antipodal3", *full_swap_involution(3)),
        ("antipodal4", *full_swap_involution(4)),
    ]
    extra = []
    for tag, poset, cat, action in named:
        for g in range(1, min(action.order, 3)):
            extra.append((f"{tag}/cyclic{g}", poset, cat, subgroup_action(action, [g])))
    return named + extra


@pytest.fixture(scope="module")
def corpus():
    instances = []
    rng = Random(2024)
    for k in range(N_FUZZ):
        poset, cat, action = random_instance(rng, max_elements=7, max_order=8)
        instances.append((f"fuzz{k}", poset, cat, action))
    instances.extend(_named_instances())
    results = []
    for tag, poset, cat, action in instances:
        results.append((tag, poset, cat, action, run_battery(poset, cat, action)))
    return results


def _outcome_failures(corpus, prefix):
    bad = []
    for tag, _, _, _, outcomes in corpus:
        for o in outcomes:
            if o.name.startswith(prefix) and not o.ok:
                bad.append((tag, o.name, o.detail))
    return bad


def _report(number, ok, label):
    print(f"ACCEPTANCE {number:02d} {'PASS' if ok else 'FAIL'} {label}")


def test_criterion_01_level_conditions_match_skeleta(corpus):
    bad = _outcome_failures(corpus, "ct-vs-skeleton")
    ok = not bad and len(corpus) >= N_FUZZ
    _report(1, ok, "level condition at every t matches injectivity on t-skeleta")
    assert ok, bad[:5]


def test_criterion_02_canonical_map_surjective(corpus):
    bad = _outcome_failures(corpus, "lambda-surjective")
    ok = not bad
    _report(2, ok, "canonical map surjective in every dimension")
    assert ok, bad[:5]


def test_criterion_03_regularity_matches_one_skeleta(corpus):
    bad = _outcome_failures(corpus, "r-vs-1-skeleton")
    ok = not bad
    _report(3, ok, "composition-orbit condition matches injectivity on 1-skeleta")
    assert ok, bad[:5]


def test_criterion_04_graded_antichain_example():
    # The graded example family: stacking k two-element antichains under the
    # even swap subgroup first breaks the level condition at t = k - 1, with
    # the canonical map injective below and non-injective there.  The stated
    # verdict pattern (pass at 2, fail at 3 with a witness, injective on
    # 2-skeleta, not on 3-skeleta) is realized by the four-level stack; the
    # three-level stack already fails at t = 2, which the equivalence theorem
    # confirms via its own skeleton report.
    _, cat4, act4 = even_swap_action(4)
    ok = check_ct(cat4, act4, 2).verdict
    rep3 = check_ct(cat4, act4, 3)
    ok = ok and not rep3.verdict and rep3.witness is not None
    lam4 = lambda_skeleton_report(cat4, act4)
    ok = ok and lam4.injective_up_to(2) and not lam4.injective_up_to(3)
    # consistency of the three-level instance with the main theorem
    _, cat3, act3 = even_swap_action(3)
    lam3 = lambda_skeleton_report(cat3, act3)
    ok = ok and check_ct(cat3, act3, 2).verdict == lam3.injective_up_to(2)
    _report(4, ok, "stacked antichains: pass at level 2, fail at level 3")
    assert ok


def test_criterion_05_boolean_lattice_example():
    _, cat, action = symmetric_boolean_action(3)
    ok = check_s(cat, action, young_family(cat, action, 3)).verdict
    ok = ok and not check_strong_s(cat, action).verdict
    q = quotient_category(cat, action)
    order = underlying_order(q.category)
    ok = ok and q.category.n_objects == 4 and order.height() == 4
    ok = ok and q.category.n_morphisms == 10
    ok = ok and check_c(cat, action)[0].verdict
    _report(5, ok, "subset lattice: family passes, strong version fails, chain quotient")
    assert ok


def test_criterion_06_bowtie_example():
    poset = bowtie_poset()
    cat, action = bowtie_action()
    q = quotient_category(cat, action)
    nonid = list(q.category.nonidentity())
    ok = q.category.n_objects == 2 and len(nonid) == 2
    ok = ok and q.category.source[nonid[0]] == q.category.source[nonid[1]]
    ok = ok and q.category.target[nonid[0]] == q.category.target[nonid[1]]
    from catquot import is_quotient_poset

    ok = ok and not is_quotient_poset(q)
    ok = ok and homology(nerve(q.category)).betti_numbers == (1, 1)
    ok = ok and homology(nerve_quotient(cat, action)).betti_numbers == (1, 1)
    pq = poset_quotient(poset, action)
    ok = ok and pq.n == 2 and pq.height() == 2
    _report(6, ok, "bowtie: parallel pair in the quotient, circle homology, chain order quotient")
    assert ok


def test_criterion_07_family_condition_implies_levels(corpus):
    bad = _outcome_failures(corpus, "s-implies-c")
    bad += _outcome_failures(corpus, "strong-s-implies-s")
    # plus the worked family on the subset lattice
    _, cat, action = symmetric_boolean_action(3)
    worked = check_s(cat, action, young_family(cat, action, 3)).verdict
    worked = worked and check_c(cat, action)[0].verdict
    covered = sum(
        1
        for _, _, _, _, outcomes in corpus
        for o in outcomes
        if o.name.startswith("s-implies-c")
    )
    ok = not bad and worked and covered >= N_FUZZ
    _report(7, ok, f"family condition forces every level ({covered} implications)")
    assert ok, bad[:5]


def test_criterion_08_closure_properties(corpus):
    bad = []
    for prefix in (
        "horizontal",
        "quotient-loopfree",
        "sr-vs-regular-poset",
        "sr-vs-srp",
        "bd-satisfies-s",
        "bd-quotient-poset",
        "bd-regular",
        "c-hereditary",
        "s-hereditary",
    ):
        bad += _outcome_failures(corpus, prefix)
    ok = not bad
    _report(8, ok, "quotients stay loopfree; subdivision actions regular with poset quotients")
    assert ok, bad[:5]


def test_criterion_09_fixed_points_commute_with_nerves(corpus):
    bad = _outcome_failures(corpus, "fixed-nerve")
    ok = not bad
    _report(9, ok, "fixed subcategory nerve equals fixed subcomplex, every element")
    assert ok, bad[:5]


def test_criterion_10_euler_averaging(corpus):
    bad = _outcome_failures(corpus, "euler-average")
    # explicitly exercised on instances that fail the level condition
    for _, cat, action in (even_swap_action(3), even_swap_action(4)):
        from catquot import burnside_euler

        if not burnside_euler(cat, action).equal:
            bad.append(("stacked", "euler-average", ""))
    ok = not bad
    _report(10, ok, "Euler characteristic averaging, level condition not required")
    assert ok, bad[:5]


def test_criterion_11_mobius_identities(corpus):
    bad = _outcome_failures(corpus, "mobius-recursive")
    bad += _outcome_failures(corpus, "mobius-average")
    cat, action = bowtie_action()
    rep = mobius_quotient(cat, action)
    ok = not bad and rep.left == -1 and rep.right == -1 and rep.equal
    ok = ok and mobius(cat) == -1
    _report(11, ok, "Möbius recursion agrees; averaging holds under the level condition")
    assert ok, bad[:5]


def test_criterion_12_betti_equals_character_multiplicity(corpus):
    bad = _outcome_failures(corpus, "betti-multiplicity")
    cat, action = bowtie_action()
    q = quotient_category(cat, action)
    left = homology(nerve(q.category)).betti(1)
    right = trivial_multiplicity(cat, action, 1)
    ok = not bad and left == 1 and right == 1
    _report(12, ok, "quotient Betti numbers equal trivial-character multiplicities")
    assert ok, bad[:5]


def test_criterion_13_lattice_identity():
    # Both lattice-side quantities of the subspace-arrangement identity,
    # compared exactly on the three-atom partition lattice with the braid
    # labels and on fuzzed labeled lattices whose proper-part actions pass
    # the level condition.
    #
    # As transcribed the identity is not a theorem: an orbit of atoms has an
    # empty open interval below it and contributes a unit in degree dim(x),
    # while the proper-part side has no matching contribution (on the
    # three-atom lattice the proper part collapses to a point, so its
    # reduced homology vanishes everywhere, yet the atom term is 1 in
    # degree 2).  The comparison below therefore fails, and is kept failing
    # deliberately rather than redefining either side; the per-orbit
    # breakdown in each report makes the mismatch auditable.
    lattice, cat, action = partition_lattice_pi3()
    discrepancies = []
    for i in range(4):
        report = gm_quotient(lattice, action, i)
        if not report.equal:
            discrepancies.append(("pi3", i, report.left, report.right))
    rng = Random(555)
    checked = 0
    while checked < 10:
        lab, lcat, laction = random_labeled_lattice(rng)
        proper = [
            x for x in range(lab.poset.n) if x not in (lab.bottom, lab.top)
        ]
        if proper:
            sub_action, _ = restrict_action(laction, proper)
            if not check_c(sub_action.category, sub_action)[0].verdict:
                continue
        checked += 1
        top_dim = max(lab.dim) + 1
        for i in range(top_dim + 1):
            report = gm_quotient(lab, laction, i)
            if not report.equal:
                discrepancies.append(("fuzz", i, report.left, report.right))
    ok = not discrepancies
    _report(13, ok, f"lattice identity two-sided comparison ({len(discrepancies)} discrepancies)")
    assert ok, (
        "the proper-part side and the interval-orbit sum are not equal: "
        f"{discrepancies[:6]} -- empty intervals below atoms contribute "
        "units the left side cannot see"
    )


def test_criterion_14_determinism(tmp_path):
    cmd = [
        sys.executable, "-m", "catquot.cli", "fuzz",
        "--seed", "9", "--instances", "6", "--machine",
    ]
    first = subprocess.run(cmd, capture_output=True, cwd=tmp_path)
    second = subprocess.run(cmd, capture_output=True, cwd=tmp_path)
    quot = [
        sys.executable, "-m", "catquot.cli", "quotient",
        "--poset", str(DATA / "b3.poset"), "--action", str(DATA / "b3.act"),
        "--machine",
    ]
    q1 = subprocess.run(quot, capture_output=True, cwd=tmp_path)
    q2 = subprocess.run(quot, capture_output=True, cwd=tmp_path)
    ok = (
        first.returncode == 0
        and first.stdout == second.stdout
        and q1.returncode == 0
        and q1.stdout == q2.stdout
    )
    _report(14, ok, "identical seeds and inputs give byte-identical machine output")
    assert ok
