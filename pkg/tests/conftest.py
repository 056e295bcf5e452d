import pytest

from catquot.instances import (
    bowtie_action,
    bowtie_poset,
    even_swap_action,
    full_swap_involution,
    partition_lattice_pi3,
    symmetric_boolean_action,
)


@pytest.fixture(scope="session")
def bowtie():
    cat, action = bowtie_action()
    return bowtie_poset(), cat, action


@pytest.fixture(scope="session")
def b3():
    return symmetric_boolean_action(3)


@pytest.fixture(scope="session")
def stack3():
    return even_swap_action(3)


@pytest.fixture(scope="session")
def stack4():
    return even_swap_action(4)


@pytest.fixture(scope="session")
def antipodal3():
    return full_swap_involution(3)


@pytest.fixture(scope="session")
def pi3():
    return partition_lattice_pi3()
