from math import gcd

import pytest

from yamabe.groups import (
    FinAbGroup,
    GroupParseError,
    p_rank,
    parse_factors,
    parse_group,
    prime_power,
    tensor,
    tensor_cyclic,
    tor,
    tor_cyclic,
)


def test_canonical_form_splits_composite_orders():
    g = FinAbGroup.from_orders([6, 4, 0])
    assert g.free_rank == 1
    assert g.torsion == (2, 4, 3)
    assert str(g) == "Z x Z/2 x Z/4 x Z/3"
    assert g.order is None


def test_trivial_group():
    assert FinAbGroup.cyclic(1).is_trivial
    assert str(FinAbGroup.trivial()) == "0"
    assert FinAbGroup.trivial().order == 1


def test_prime_power():
    assert prime_power(27) == (3, 3)
    assert prime_power(2) == (2, 1)
    with pytest.raises(ValueError):
        prime_power(12)


@pytest.mark.parametrize(
    "q,q2,tens,tr",
    [(0, 0, 0, 1), (0, 9, 9, 1), (9, 0, 9, 1), (9, 3, 3, 3), (4, 8, 4, 4), (3, 5, 1, 1)],
)
def test_cyclic_table(q, q2, tens, tr):
    assert tensor_cyclic(q, q2) == tens
    assert tor_cyclic(q, q2) == tr


def test_tensor_and_tor_of_groups():
    a = parse_group("Z x Z/9 x Z/3")
    b = parse_group("Z/3")
    assert tensor(a, b) == FinAbGroup.from_orders([3, 3, 3])
    assert tor(a, b) == FinAbGroup.from_orders([3, 3])
    assert tor(parse_group("Z^2"), a).is_trivial


def test_tor_order_is_gcd():
    for a in range(2, 40):
        for b in range(2, 40):
            t = tor(FinAbGroup.cyclic(a), FinAbGroup.cyclic(b))
            assert t.order == gcd(a, b)


def test_p_rank():
    g = parse_group("Z x Z/9 x Z/3 x Z/2")
    assert p_rank(g, 3) == 3
    assert p_rank(g, 2) == 2
    assert p_rank(g, 5) == 1
    with pytest.raises(ValueError):
        p_rank(g, 4)


@pytest.mark.parametrize(
    "text,orders",
    [
        ("Z x Z/9 x Z/3", [0, 9, 3]),
        ("(Z/3)^3", [3, 3, 3]),
        ("Z^2 x Z/2", [0, 0, 2]),
        ("  Z / 4x(Z)^2 ", [4, 0, 0]),
        ("0", []),
    ],
)
def test_parse_factors(text, orders):
    assert parse_factors(text) == orders


@pytest.mark.parametrize(
    "text,pos",
    [("Z/3 x", 5), ("Z/1", 2), ("Q", 0), ("Z/3 Z/3", 4), ("(Z/3)^0", 6), ("", 0)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(GroupParseError) as err:
        parse_factors(text)
    assert err.value.position == pos


def test_str_roundtrip():
    for text in ["Z^2 x (Z/3)^2 x Z/9", "Z/2 x Z/4 x Z/5", "0", "Z"]:
        g = parse_group(text)
        assert parse_group(str(g)) == g


def test_reference_examples():
    from yamabe.groups import direct_sum

    z5 = FinAbGroup.cyclic(5)
    assert tensor(FinAbGroup(1), z5) == z5
    assert tensor(FinAbGroup.cyclic(9), FinAbGroup.cyclic(3)) == FinAbGroup.cyclic(3)
    # frozen from tensor_bruteforce([4, 2], [2])
    assert tensor(FinAbGroup.from_orders([4, 2]), FinAbGroup.cyclic(2)) == FinAbGroup.from_orders([2, 2])
    assert tor(FinAbGroup(1), z5).is_trivial
    assert tor(FinAbGroup.cyclic(27), FinAbGroup.cyclic(9)) == FinAbGroup.cyclic(9)
    # frozen from tor_bruteforce(6, 4)
    assert tor(FinAbGroup.cyclic(6), FinAbGroup.cyclic(4)) == FinAbGroup.cyclic(2)
    assert direct_sum(FinAbGroup(1), FinAbGroup.trivial()) == FinAbGroup(1)
    assert direct_sum(FinAbGroup.from_orders([2, 4]), FinAbGroup.cyclic(2)) == FinAbGroup.from_orders([2, 2, 4])
    assert p_rank(FinAbGroup.from_orders([9, 2]), 3) == 1
    assert p_rank(FinAbGroup.from_orders([0, 3]), 3) == 2
    assert p_rank(FinAbGroup.from_orders([3] * 4), 3) == 4
