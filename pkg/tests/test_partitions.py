import pytest

from framedbetti import MAX_WEIGHT, Partition, enumerate_pairs, enumerate_partitions

from oracles import descending_part_lists, euler_partition_counts


def test_weight_examples():
    assert Partition().weight() == 0
    assert Partition.parse("1^2 3^1").weight() == 5
    assert Partition.parse("2^3").weight() == 6


def test_length_examples():
    assert Partition().length() == 0
    assert Partition.parse("1^2 3^1").length() == 3
    assert Partition.parse("4^1").length() == 1


def test_canonical_form_strips_trailing_zeros():
    assert Partition((2, 0, 1, 0, 0)).mult == (2, 0, 1)
    assert Partition((0, 0)).mult == ()
    assert not Partition((0,))
    assert Partition((2, 0, 1)) == Partition.from_parts([3, 1, 1])


def test_invalid_multiplicities_rejected():
    with pytest.raises(ValueError):
        Partition((-1,))
    with pytest.raises(ValueError):
        Partition.from_parts([0])
    with pytest.raises(ValueError):
        Partition.from_parts([-2])


def test_from_parts_is_order_insensitive():
    assert Partition.from_parts([1, 3, 1]) == Partition.from_parts([3, 1, 1])


def test_accessors():
    p = Partition.parse("1^2 3^1")
    assert p.parts() == [3, 1, 1]
    assert p.count(1) == 2
    assert p.count(2) == 0
    assert p.count(3) == 1
    assert p.count(17) == 0
    assert p.max_part() == 3
    assert list(p.items()) == [(1, 2), (3, 1)]
    assert Partition().max_part() == 0


def test_enumerate_partitions_examples():
    assert enumerate_partitions(0) == [Partition()]
    four = enumerate_partitions(4)
    assert [p.parts() for p in four] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert len(enumerate_partitions(6)) == 11


def test_enumerate_partitions_counts_match_euler_recurrence():
    p = euler_partition_counts(20)
    for n in range(21):
        assert len(enumerate_partitions(n)) == p[n]


def test_enumerate_partitions_matches_brute_force_lists():
    for n in range(11):
        assert [q.parts() for q in enumerate_partitions(n)] == descending_part_lists(n)


def test_enumerated_partitions_are_canonical_and_unique():
    for n in range(13):
        ps = enumerate_partitions(n)
        assert len(set(ps)) == len(ps)
        for q in ps:
            assert q.weight() == n
            assert not q.mult or q.mult[-1] > 0


def test_enumerate_pairs_examples():
    assert enumerate_pairs(0) == [(Partition(), Partition())]
    one = enumerate_pairs(1)
    assert one == [(Partition.parse("1^1"), Partition()),
                   (Partition(), Partition.parse("1^1"))]
    assert len(enumerate_pairs(2)) == 5


def test_enumerate_pairs_counts():
    p = euler_partition_counts(12)
    for n in range(13):
        expected = sum(p[k] * p[n - k] for k in range(n + 1))
        pairs = enumerate_pairs(n)
        assert len(pairs) == expected
        assert len(set(pairs)) == len(pairs)
        assert all(a.weight() + b.weight() == n for a, b in pairs)


def test_weight_bound_enforced():
    with pytest.raises(ValueError):
        enumerate_partitions(MAX_WEIGHT + 1)
    with pytest.raises(ValueError):
        enumerate_pairs(MAX_WEIGHT + 1)
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_parse_part_list_round_trip():
    for text in ["[]", "[3,1,1]", "[4]", "[2,2,1]"]:
        p = Partition.parse(text)
        assert str(p) == text
        assert Partition.parse(str(p)) == p


def test_parse_exponent_round_trip():
    for text in ["", "1^2 3^1", "2^3", "1^1 2^1 5^2"]:
        p = Partition.parse(text)
        assert p.to_exponent_string() == text
        assert Partition.parse(p.to_exponent_string()) == p


def test_parse_forms_agree():
    assert Partition.parse("1^2 3^1") == Partition.parse("[3,1,1]")
    assert Partition.parse("  ") == Partition.parse("[]")
    assert Partition.parse("3") == Partition.parse("[3]")
    assert Partition.parse("1^1 1^1") == Partition.parse("[1,1]")


def test_empty_prints_as_brackets():
    assert str(Partition()) == "[]"
    assert Partition().to_exponent_string() == ""


def test_parse_errors():
    for bad in ["[3,1", "[a]", "1^", "x^2", "0^1", "1^-2", "[0]"]:
        with pytest.raises(ValueError):
            Partition.parse(bad)


def test_hash_and_equality():
    a = Partition.parse("[2,1]")
    b = Partition.parse("1^1 2^1")
    assert a == b
    assert hash(a) == hash(b)
    assert a != Partition.parse("[3]")
    assert len({a, b}) == 1
