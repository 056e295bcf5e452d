from random import Random

from catquot.crosscheck import battery_failures, euler_betti_consistency, run_battery
from catquot.nerve import nerve_quotient
from catquot.randgen import (
    poset_automorphisms,
    random_instance,
    random_labeled_lattice,
    random_poset,
)


def test_battery_passes_on_named_instances(bowtie, b3, stack3, stack4, antipodal3):
    for poset, cat, action in (bowtie, b3, stack3, stack4, antipodal3):
        assert not battery_failures(run_battery(poset, cat, action))


def test_battery_passes_on_random_instances():
    rng = Random(101)
    for _ in range(40):
        poset, cat, action = random_instance(rng)
        failures = battery_failures(run_battery(poset, cat, action))
        assert not failures, failures


def test_euler_betti_consistency_on_quotients():
    rng = Random(59)
    for _ in range(10):
        _, cat, action = random_instance(rng, max_elements=6)
        assert euler_betti_consistency(nerve_quotient(cat, action))


def test_automorphism_search_finds_the_full_group():
    from catquot.instances import boolean_lattice, stacked_antichains

    assert len(poset_automorphisms(boolean_lattice(2))) == 2
    assert len(poset_automorphisms(stacked_antichains(3))) == 8


def test_random_poset_respects_bounds():
    rng = Random(77)
    for _ in range(50):
        poset = random_poset(rng, max_elements=7)
        assert 1 <= poset.n <= 7


def test_random_actions_respect_group_bound():
    rng = Random(88)
    for _ in range(30):
        _, _, action = random_instance(rng, max_order=8)
        assert action.order <= 8


def test_random_lattices_are_bounded_with_monotone_labels():
    rng = Random(99)
    for _ in range(10):
        lattice, _, action = random_labeled_lattice(rng)
        poset = lattice.poset
        assert len(poset.minimal_elements()) == 1
        assert len(poset.maximal_elements()) == 1
        for x in range(poset.n):
            for y in poset.strict_down(x):
                assert lattice.dim[y] > lattice.dim[x]
