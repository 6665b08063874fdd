import pytest
from hypothesis import given, settings

from chiralpart.partition import (
    conjugate,
    nu,
    p_core,
    partitions,
    v2,
    v2_dimension,
)
from chiralpart.tower import (
    CoreTower,
    deviation,
    partition_of,
    render,
    row_weights,
    staircase,
    tower_of,
    truncated_core,
)

from conftest import partitions_st

EXAMPLE = (5, 4, 2, 2, 1, 1)


def test_tower_of_example():
    assert tower_of(EXAMPLE).entries == {"": 1, "1": 1, "01": 1, "000": 1}
    assert tower_of((1,)).entries == {"": 1}
    assert tower_of(()).entries == {}


def test_partition_of_examples():
    assert partition_of(tower_of(EXAMPLE)) == EXAMPLE
    assert partition_of(CoreTower()) == ()
    assert partition_of(CoreTower({"": 2})) == (2, 1)


def test_tower_rejects_non_staircase():
    with pytest.raises(ValueError):
        CoreTower.from_partitions({"": (2,)})
    with pytest.raises(ValueError):
        CoreTower({"2": 1})
    assert CoreTower.from_partitions({"": (2, 1), "0": ()}).entries == {"": 2}


def test_row_weights_examples():
    assert row_weights(tower_of(EXAMPLE)) == [1, 1, 1, 1]
    assert row_weights(tower_of((1,))) == [1]
    assert row_weights(tower_of(())) == []


def test_deviation_examples():
    assert deviation(EXAMPLE) == 0
    assert deviation((1,)) == 0
    assert deviation((2, 2)) == 1


def test_truncated_core_examples():
    assert truncated_core(EXAMPLE, 0) == ()
    assert truncated_core(EXAMPLE, 1) == (1,)
    assert truncated_core(EXAMPLE, 10) == EXAMPLE


def test_roundtrip_and_weights():
    for n in range(21):
        for lam in partitions(n):
            tower = tower_of(lam)
            assert partition_of(tower) == lam
            assert sum(w << i for i, w in enumerate(row_weights(tower))) == n
            assert tower.size() == n


def test_deviation_is_dimension_valuation():
    for n in range(1, 19):
        for lam in partitions(n):
            assert deviation(lam) == v2_dimension(lam) >= 0


def test_conjugate_mirror():
    for n in range(17):
        for lam in partitions(n):
            assert tower_of(conjugate(lam)) == tower_of(lam).mirrored()


def test_truncated_core_is_power_of_two_core():
    for n in range(17):
        for lam in partitions(n):
            for i in range(5):
                expected = () if i == 0 else p_core(lam, 2**i)
                assert truncated_core(lam, i) == expected


def test_valuation_of_core_identity():
    for n in range(1, 15):
        for lam in partitions(n):
            tower = tower_of(lam)
            for i in (1, 2, 3):
                core = partition_of(tower.rows_below(i))
                mu = partition_of(tower.rows_from(i))
                c = sum(core)
                assert sum(mu) == n - c
                rhs = v2_dimension(core) + v2_dimension(mu) + nu(n - c) + nu(c) - nu(n)
                assert v2_dimension(lam) == rhs


def test_render():
    assert list(render(tower_of(EXAMPLE))) == [
        "row0: -:1",
        "row1: 1:1",
        "row2: 01:1",
        "row3: 000:1",
    ]


@settings(max_examples=200, deadline=None)
@given(partitions_st(max_n=120))
def test_roundtrip_large(lam):
    tower = tower_of(lam)
    assert partition_of(tower) == lam
    assert all(partition_of(CoreTower({p: m})) == staircase(m) for p, m in tower.entries.items() if not p)
