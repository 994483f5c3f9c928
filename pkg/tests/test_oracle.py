import random

import pytest

from yamabe.groups import FinAbGroup, UnsupportedQuery, tensor, tor
from yamabe.homology import AbelianGroupSpec, Coeff, cyclic_homology, homology_of_abelian
from yamabe.oracle import (
    ChainComplex,
    complex_homology,
    cyclic_resolution_complex,
    oracle_homology,
    point_complex,
    product_complex,
    tensor_bruteforce,
    tensor_complex,
    tor_bruteforce,
)
from yamabe.smith import IntMatrix

Z = Coeff.INTEGERS
Z2 = Coeff.MOD2


def test_cyclic_resolution():
    assert [str(g) for g in complex_homology(cyclic_resolution_complex(5, Z, 5))] == [
        "Z", "Z/5", "0", "Z/5", "0", "Z/5"
    ]
    c = cyclic_resolution_complex(2, Z2, 6)
    assert all(d.is_zero() for d in c.boundaries)
    assert all(str(g) == "Z/2" for g in complex_homology(c))
    assert complex_homology(cyclic_resolution_complex(9, Z, 7)) == cyclic_homology(3, 2, Z, 7)
    with pytest.raises(UnsupportedQuery):
        cyclic_resolution_complex(3, Z2, 3)


def test_tensor_with_point_is_identity():
    c = cyclic_resolution_complex(4, Z, 5)
    t = tensor_complex(c, point_complex(Z, 5))
    assert t.ranks == c.ranks
    assert t.boundaries == c.boundaries


def test_d_squared_zero_random_products():
    rng = random.Random(1)
    for _ in range(20):
        orders = [rng.choice([0, 2, 3, 4, 9]) for _ in range(rng.randint(1, 3))]
        assert product_complex(orders, Z, 5).d_squared_zero()


def test_degree_three_p_rank():
    h = oracle_homology([5, 5], Z, 3)
    assert h[3] == FinAbGroup.from_orders([5, 5, 5])


def test_zero_complex_is_free():
    r = 3
    c = ChainComplex((r, r, r), (IntMatrix.zeros(0, r), IntMatrix.zeros(r, r), IntMatrix.zeros(r, r)))
    assert [g for g in complex_homology(c)] == [FinAbGroup(r), FinAbGroup(r)]


def test_rejects_non_complex():
    one = IntMatrix.from_rows([[1]])
    c = ChainComplex((1, 1, 1), (IntMatrix.zeros(0, 1), one, one))
    with pytest.raises(ValueError):
        complex_homology(c)


def test_triple_product_matches_engine():
    spec = AbelianGroupSpec.elementary(3, 3)
    assert oracle_homology(spec.orders, Z, 6) == homology_of_abelian(spec, Z, 6)


def test_tor_bruteforce():
    assert tor_bruteforce(6, 4) == FinAbGroup.cyclic(2)
    assert tor_bruteforce(5, 7).is_trivial
    for p in (2, 3):
        powers = [p**k for k in range(1, 6) if p**k <= 243]
        for a in powers:
            for b in powers:
                assert tor_bruteforce(a, b) == FinAbGroup.cyclic(min(a, b))
                assert tor_bruteforce(a, b) == tor(FinAbGroup.cyclic(a), FinAbGroup.cyclic(b))


def test_tensor_bruteforce():
    assert tensor_bruteforce([4, 2], [2]) == FinAbGroup.from_orders([2, 2])
    assert tensor_bruteforce([0, 6], [0, 4]) == tensor(FinAbGroup.from_orders([0, 6]), FinAbGroup.from_orders([0, 4]))
