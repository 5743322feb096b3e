import json

import pytest

import appart

PI = appart.APPartition(12, 1, [(7, 3), (10, 1), (11, 2), (1, 1), (2, 3), (5, 1), (6, 1)])
PI_PRIME = appart.APPartition(12, 2, [(7, 3), (8, 1), (10, 2), (1, 1), (2, 3), (3, 1), (5, 1)])


def test_counts_are_python_ints():
    assert appart.kaplansky(6, 2) == 9
    assert appart.cyclic_multinomial(20, "1^8,2^3,3^2") == 19800
    big = appart.cyclic_multinomial(300, "1^100,2^100")
    assert isinstance(big, int) and big > 2**64
    with pytest.raises(ValueError, match="out of regime"):
        appart.msun_count(12, 2, 2, 3)


def test_enumeration_matches_formula():
    t = appart.PartitionType("1^4,2^1,3^2")
    parts = appart.enumerate_ap_partitions(12, 2, t)
    assert len(parts) == 180 == appart.count_ap_partitions(12, 2, t)
    assert PI_PRIME in parts
    assert all(appart.validate_partition(p) is None for p in parts)
    assert len(appart.enumerate_spaced_subsets(6, 2, 1, 2)) == 9


def test_separation_round_trip():
    assert appart.separate(PI, 2) == PI_PRIME
    assert appart.separate(PI_PRIME, 1) == PI
    assert appart.starting_points(PI_PRIME) == [7]
    assert (7, False, 2) in appart.head_profiles(PI_PRIME)
    assert appart.verify_roundtrip(PI, 2)
    with pytest.raises(ValueError, match="condition violated"):
        appart.separate(PI, 3)


def test_formats():
    assert str(PI_PRIME) == "n=12 m=2 blocks=(1:1)(2:3)(3:1)(5:1)(7:3)(8:1)(10:2)"
    parsed, normalized = appart.parse(appart.to_json(PI))
    assert parsed == PI and not normalized
    with pytest.raises(ValueError):
        appart.parse("n=12 m=1 blocks=(7:3)(1:1)")
    msg = appart.validate_partition(appart.APPartition(4, 1, [(1, 2), (2, 2)]))
    assert msg == "element 2 covered twice, element 4 uncovered"


def test_budget():
    with pytest.raises(appart.BudgetExceeded):
        appart.enumerate_ap_partitions(12, 2, "1^4,2^1,3^2", max_nodes=5)
    partial = appart.enumerate_ap_partitions(12, 2, "1^4,2^1,3^2", max_nodes=200, truncate=True)
    assert len(partial) < 180


def test_verify_sweep():
    ok, report = appart.verify("thm4", n_max=8, m_max=3, m_prime_max=3)
    assert ok
    assert json.loads(report)["cells_failed"] == 0
