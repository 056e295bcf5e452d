from random import Random

import pytest

from catquot import (
    FamilyError,
    Poset,
    category_from_poset,
    check_all_ct,
    check_c,
    check_ct,
    check_r,
    check_s,
    check_sr,
    check_srp,
    check_strong_s,
    induced_bd_action,
    is_quotient_poset,
    poset_action,
    quotient_category,
    restrict_action,
    stabilizer_family,
    subgroup_action,
)
from catquot.instances import trivial_action, young_family
from catquot.randgen import random_instance


def test_r_with_trivial_group(bowtie):
    _, cat, _ = bowtie
    assert check_r(cat, trivial_action(cat)).verdict


def test_r_on_bowtie_holds(bowtie):
    _, cat, action = bowtie
    assert check_r(cat, action).verdict


def test_r_on_bd_actions_holds():
    rng = Random(17)
    for _ in range(10):
        poset, _, action = random_instance(rng, max_elements=5)
        bd_cat, bd_action, _ = induced_bd_action(poset, action)
        assert check_r(bd_cat, bd_action).verdict


def test_ct_on_stacked_antichains(stack3, stack4):
    _, cat3, act3 = stack3
    _, cat4, act4 = stack4
    # three levels: already the two-morphism chains split into two orbits
    assert not check_ct(cat3, act3, 2).verdict
    # four levels: levels 2 holds, level 3 fails with a witness
    assert check_ct(cat4, act4, 2).verdict
    rep = check_ct(cat4, act4, 3)
    assert not rep.verdict and rep.witness is not None


def test_ct_trivial_group_always_holds(b3):
    _, cat, _ = b3
    assert check_ct(cat, trivial_action(cat), 2).verdict


def test_ct_witness_violates_the_condition(stack4):
    _, cat, action = stack4
    rep = check_ct(cat, action, 3)
    *chain, ma, mb = rep.witness
    chain = tuple(chain)
    assert len(chain) == 2
    assert cat.target[chain[-1]] == cat.source[ma] == cat.source[mb]
    orbit = action.morphism_orbit_index()
    assert orbit[ma] == orbit[mb]
    fixing = [
        g
        for g in range(action.order)
        if all(action.mor_image(g, m) == m for m in chain)
    ]
    assert all(action.mor_image(g, ma) != mb for g in fixing)


def test_c_aggregates_first_failure(stack4):
    _, cat, action = stack4
    report, levels = check_c(cat, action)
    assert not report.verdict and report.t == 3
    assert levels[2].verdict and not levels[3].verdict


def test_c_on_b3_and_bowtie(b3, bowtie):
    for _, cat, action in (b3, bowtie):
        report, _ = check_c(cat, action)
        assert report.verdict


def test_s_young_family_passes(b3):
    _, cat, action = b3
    assert check_s(cat, action, young_family(cat, action, 3)).verdict


def test_s_with_full_stabilizers_fails_containment(b3):
    _, cat, action = b3
    report = check_s(cat, action, stabilizer_family(cat, action))
    assert not report.verdict
    assert report.witness[0] == 1


def test_s_trivial_group_trivial_family():
    cat = category_from_poset(Poset(2, [(1, 0)]))
    action = trivial_action(cat)
    assert check_s(cat, action, {m: {0} for m in range(3)}).verdict


def test_s_rejects_non_subgroup_family(b3):
    _, cat, action = b3
    with pytest.raises(FamilyError):
        check_s(cat, action, {0: {0, 1, 2}})  # two transpositions, not closed
    with pytest.raises(FamilyError):
        check_s(cat, action, {8: {0, 3}})  # not inside the stabilizer


def test_strong_s(b3, bowtie):
    _, cat, action = b3
    assert not check_strong_s(cat, action).verdict
    _, cat2, _ = bowtie
    assert check_strong_s(cat2, trivial_action(cat2)).verdict
    # swapped two-element antichain: all stabilizers trivial
    anti = Poset(2)
    cat3, action3 = poset_action(anti, [(1, 0)])
    assert check_strong_s(cat3, action3).verdict


def test_sr_bowtie_fails_with_witness(bowtie):
    _, cat, action = bowtie
    report = check_sr(cat, action)
    assert not report.verdict
    x, y = report.witness
    assert cat.source[x] == cat.source[y]


def test_sr_b3_holds(b3):
    _, cat, action = b3
    assert check_sr(cat, action).verdict


def test_srp_matches_sr_on_posets():
    rng = Random(23)
    for _ in range(40):
        poset, cat, action = random_instance(rng, max_elements=6)
        assert check_sr(cat, action).verdict == check_srp(poset, action).verdict


def test_srp_bowtie_witness(bowtie):
    poset, _, action = bowtie
    report = check_srp(poset, action)
    assert not report.verdict and report.witness == (0, 2, 3)


def test_sr_equivalent_to_regular_plus_poset():
    rng = Random(31)
    for _ in range(40):
        _, cat, action = random_instance(rng, max_elements=6)
        sr = check_sr(cat, action).verdict
        regular = check_r(cat, action).verdict
        poset_q = is_quotient_poset(quotient_category(cat, action))
        assert sr == (regular and poset_q)


def test_s_implies_c_with_young_family(b3):
    _, cat, action = b3
    assert check_s(cat, action, young_family(cat, action, 3)).verdict
    assert check_c(cat, action)[0].verdict


def test_bd_actions_satisfy_s_with_trivial_family():
    rng = Random(37)
    for _ in range(10):
        poset, _, action = random_instance(rng, max_elements=5)
        bd_cat, bd_action, _ = induced_bd_action(poset, action)
        family = {m: {0} for m in range(bd_cat.n_morphisms)}
        assert check_s(bd_cat, bd_action, family).verdict
        assert is_quotient_poset(quotient_category(bd_cat, bd_action))


def test_heredity_of_s_on_principal_lower_set(b3):
    # the subgroup between the inner support group and the stabilizer of
    # {1,2}, acting below {1,2}, keeps the family-based condition
    _, cat, action = b3
    assert check_s(cat, action, young_family(cat, action, 3)).verdict
    stab = subgroup_action(action, action.stabilizer_elements(0b011))
    restricted, sub = restrict_action(stab, [0, 1, 2, 3])
    assert restricted.order == 2
    # same family, read off the restricted morphisms: the support group of
    # the target subset (trivial unless the target is all of {1,2})
    sub_family = {}
    for new_m, old_m in enumerate(sub.morphisms):
        target_mask = sub.category.target[new_m]
        full = sub.objects[target_mask] == 0b011
        sub_family[new_m] = frozenset({0, 1}) if full else frozenset({0})
    assert check_s(restricted.category, restricted, sub_family).verdict


def test_c_hereditary_under_stable_restriction():
    rng = Random(43)
    checked = 0
    for _ in range(40):
        _, cat, action = random_instance(rng, max_elements=6)
        if not check_c(cat, action)[0].verdict:
            continue
        orbits = action.object_orbits()
        if len(orbits) < 2:
            continue
        keep = [x for orbit in orbits[: len(orbits) // 2] for x in orbit]
        sub_action, _ = restrict_action(action, keep)
        assert check_c(sub_action.category, sub_action)[0].verdict
        checked += 1
    assert checked > 5


def test_all_ct_levels_cover_padding(stack3):
    _, cat, action = stack3
    levels = check_all_ct(cat, action)
    assert set(levels) == {2, 3}
    assert not levels[2].verdict
    # identity padding makes failures propagate upward
    assert not levels[3].verdict
