from math import comb

import pytest

from yamabe.groups import FinAbGroup, UnsupportedQuery
from yamabe.homology import AbelianGroupSpec, Coeff, homology_of_abelian
from yamabe.structure import (
    Provenance,
    Split,
    SplitLabel,
    atoral_split,
    elementary_rank_mod2,
    elementary_rank_Z,
    split_order,
    split_tower,
    toral_classes_exist,
    toral_rank,
)

Z = Coeff.INTEGERS
Z2 = Coeff.MOD2


def test_rank_formulas():
    assert toral_rank(3, 2) == 3
    assert toral_rank(2, 5) == 0
    assert toral_rank(4, 0) == 1
    assert elementary_rank_Z(2, 3) == 3
    assert elementary_rank_Z(1, 2) == 0
    assert elementary_rank_mod2(2, 3) == 4
    assert all(elementary_rank_mod2(1, n) == 1 for n in range(10))
    assert elementary_rank_mod2(3, 2) == 6
    with pytest.raises(ValueError):
        elementary_rank_Z(2, 0)


def test_elementary_rank_matches_engine():
    h = homology_of_abelian(AbelianGroupSpec.elementary(3, 3), Z, 8)
    assert [elementary_rank_Z(3, n) for n in range(1, 9)] == h.p_ranks(3)[1:]


def test_toral_classes_exist():
    assert toral_classes_exist(5, 5)
    assert not toral_classes_exist(2, 3)
    assert toral_classes_exist(3, 0)


def test_rank_one_split():
    basis = atoral_split(AbelianGroupSpec.parse("Z/9"), Z, 5)
    assert [b.toral_count for b in basis] == [1, 1, 0, 0, 0, 0]
    assert basis[3].atoral_count == 1
    assert all(e.label.provenance is Provenance.RANK_ONE_BASE for b in basis for e in b.entries)


@pytest.mark.parametrize("p,coeff", [(3, Z), (5, Z), (2, Z2)])
def test_elementary_toral_counts(p, coeff):
    for r in range(1, 4):
        spec = AbelianGroupSpec.elementary(p, r)
        h = homology_of_abelian(spec, coeff, 7)
        for b in atoral_split(spec, coeff, 7):
            assert b.toral_count == comb(r, b.degree)
            assert b.group == h[b.degree]
            assert b.toral_part() == FinAbGroup.from_orders([p] * comb(r, b.degree)) or b.degree == 0


def test_mod2_rank_two_degree_two():
    b = atoral_split(AbelianGroupSpec.elementary(2, 2), Z2, 2)[2]
    assert (b.group.rank, b.toral_count, b.atoral_count) == (3, 1, 2)


def test_tor_images_are_atoral():
    basis = atoral_split(AbelianGroupSpec.parse("Z/9 x Z/3"), Z, 6)
    for b in basis:
        for e in b.entries:
            if e.label.provenance is Provenance.TOR_IMAGE:
                assert not e.toral


def test_split_order_peels_smallest_last():
    s = split_order(AbelianGroupSpec.parse("Z/3 x Z/27 x Z/9 x Z/3"))
    assert s.orders == (27, 9, 3, 3)
    tower = split_tower(AbelianGroupSpec.parse("Z/3 x Z/9"), Z, 3)
    assert [t[0].orders for t in tower] == [(9,), (9, 3)]


def test_trace_indices_point_into_previous_stage():
    tower = split_tower(AbelianGroupSpec.elementary(3, 3), Z, 6)
    for (_, _, prev), (_, _, cur) in zip(tower, tower[1:]):
        for entries in cur:
            for e in entries:
                assert e.trace.left_index < len(prev[e.trace.left_degree])


def test_label_invariants():
    with pytest.raises(ValueError):
        SplitLabel(Split.TORAL, Provenance.TOR_IMAGE)
    with pytest.raises(ValueError):
        SplitLabel(Split.ATORAL, Provenance.TENSOR_TORAL_TORAL)


@pytest.mark.parametrize(
    "text,coeff",
    [("Z/2 x Z/3", Z), ("Z x Z/3", Z), ("0", Z), ("Z/3", Z2)],
)
def test_rejected_inputs(text, coeff):
    with pytest.raises(UnsupportedQuery):
        atoral_split(AbelianGroupSpec.parse(text), coeff, 3)


def test_entry_serialization():
    b = atoral_split(AbelianGroupSpec.elementary(3, 2), Z, 3)[3]
    d = [e.to_dict() for e in b.entries]
    assert [x["provenance"] for x in d] == ["tensor-with-atoral", "tensor-with-atoral", "tor-image"]
