"""Toral/atoral splitting of ``H_*(B pi)`` for finite abelian p-groups.

Two notions live here and are kept apart on purpose:

* formula-level ranks (``toral_rank`` and friends) for elementary abelian groups;
* the constructive, labelled Kunneth basis built by :func:`atoral_split`.

The splitting peels the cyclic factor of smallest order at every step (for ties
the last-listed one), labels tensor summands from the labels of their two
inputs, and declares every Tor summand atoral.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

from .groups import FinAbGroup, UnsupportedQuery, sum_groups
from .homology import (
    AbelianGroupSpec,
    Coeff,
    GradedGroup,
    KunnethTerm,
    TermKind,
    canonical_order,
    cyclic_homology,
    kunneth,
)


def toral_rank(r: int, n: int) -> int:
    """Rank of the toral subgroup of ``H_n(B(Z/p)^r)``: ``C(r, n)``."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    return comb(r, n)


def elementary_rank_Z(r: int, n: int) -> int:
    """Rank of ``H_n(B(Z/p)^r; Z)`` for ``n >= 1``."""
    if r < 1:
        raise ValueError("rank must be at least 1")
    if n < 1:
        raise ValueError("degree must be at least 1 (H_0 = Z is not elementary abelian)")
    return sum((-1) ** (n - j) * comb(j + r - 1, r - 1) for j in range(1, n + 1))


def elementary_rank_mod2(r: int, n: int) -> int:
    """Rank of ``H_n(B(Z/2)^r; Z/2)``: ``C(n + r - 1, r - 1)``."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    return comb(n + r - 1, r - 1)


def toral_classes_exist(r: int, n: int) -> bool:
    return n <= r


class Split(enum.Enum):
    TORAL = "toral"
    ATORAL = "atoral"


class Provenance(enum.Enum):
    RANK_ONE_BASE = "rank-one-base"
    TENSOR_TORAL_TORAL = "tensor-toral-toral"
    TENSOR_WITH_ATORAL = "tensor-with-atoral"
    TOR_IMAGE = "tor-image"


@dataclass(frozen=True)
class SplitLabel:
    tag: Split
    provenance: Provenance

    def __post_init__(self):
        forced = {
            Provenance.TOR_IMAGE: Split.ATORAL,
            Provenance.TENSOR_WITH_ATORAL: Split.ATORAL,
            Provenance.TENSOR_TORAL_TORAL: Split.TORAL,
        }.get(self.provenance)
        if forced is not None and forced is not self.tag:
            raise ValueError(f"{self.provenance.value} summands are always {forced.value}")


@dataclass(frozen=True)
class SplitEntry:
    """A cyclic summand of ``H_n`` with its label and Kunneth trace.

    ``stage`` counts the cyclic factors folded in so far (1 for the base);
    ``trace`` is None for base entries, otherwise it indexes the entries of the
    previous stage (left) and of the peeled cyclic factor (right).
    """

    summand: FinAbGroup
    label: SplitLabel
    trace: KunnethTerm | None
    stage: int

    @property
    def toral(self) -> bool:
        return self.label.tag is Split.TORAL

    def to_dict(self) -> dict:
        return {
            "summand": str(self.summand),
            "label": self.label.tag.value,
            "provenance": self.label.provenance.value,
            "stage": self.stage,
            "trace": None if self.trace is None else self.trace.to_dict(),
        }


@dataclass(frozen=True)
class SplitBasis:
    degree: int
    entries: tuple[SplitEntry, ...]

    @property
    def group(self) -> FinAbGroup:
        return sum_groups(e.summand for e in self.entries)

    @property
    def toral_count(self) -> int:
        return sum(1 for e in self.entries if e.toral)

    @property
    def atoral_count(self) -> int:
        return len(self.entries) - self.toral_count

    def toral_part(self) -> FinAbGroup:
        return sum_groups(e.summand for e in self.entries if e.toral)

    def atoral_part(self) -> FinAbGroup:
        return sum_groups(e.summand for e in self.entries if not e.toral)


def split_order(spec: AbelianGroupSpec) -> AbelianGroupSpec:
    """Reorder factors so the one peeled at each step has minimal order.

    Largest orders first (stable), so equal orders keep their listed order and
    the last-listed smallest factor ends up last.
    """
    facs = sorted(spec.factors, key=lambda f: -(f[0] ** f[1]))
    return AbelianGroupSpec(spec.free_rank, tuple(facs))


def _check_split_input(spec: AbelianGroupSpec, coeff: Coeff):
    if spec.free_rank:
        raise UnsupportedQuery("the toral/atoral splitting needs a finite group (no Z factors)")
    if not spec.factors:
        raise UnsupportedQuery("the toral/atoral splitting needs a nontrivial group")
    if len(spec.primes()) != 1:
        raise UnsupportedQuery("the toral/atoral splitting needs a p-group (a single prime)")
    if coeff is Coeff.MOD2 and spec.primes()[0] != 2:
        raise UnsupportedQuery("mod-2 coefficients need a 2-group")


def _base_stage(p: int, k: int, coeff: Coeff, max_degree: int) -> tuple[GradedGroup, list[list[SplitEntry]]]:
    h = cyclic_homology(p, k, coeff, max_degree)
    stage = []
    for n, g in enumerate(h):
        tag = Split.TORAL if n <= 1 else Split.ATORAL
        label = SplitLabel(tag, Provenance.RANK_ONE_BASE)
        stage.append([SplitEntry(FinAbGroup.cyclic(q), label, None, 1) for q in g.summands()])
    return h, stage


def split_tower(
    spec: AbelianGroupSpec, coeff: Coeff, max_degree: int
) -> list[tuple[AbelianGroupSpec, GradedGroup, list[list[SplitEntry]]]]:
    """All intermediate splittings, one per folded prefix of :func:`split_order`.

    Entry lists are in canonical summand order, so ``trace.left_index`` of a
    later stage indexes straight into the previous stage's list.
    """
    _check_split_input(spec, coeff)
    ordered = split_order(spec)
    (p, k), rest = ordered.factors[0], ordered.factors[1:]
    h, stage = _base_stage(p, k, coeff, max_degree)
    cyc_stage = {}
    tower = [(AbelianGroupSpec(0, ((p, k),)), h, stage)]
    for i, (p, k) in enumerate(rest, start=2):
        if (p, k) not in cyc_stage:
            cyc_stage[(p, k)] = _base_stage(p, k, coeff, max_degree)
        hc, cstage = cyc_stage[(p, k)]
        h, terms = kunneth(h, hc)
        new_stage = []
        for n, ts in enumerate(terms):
            entries = []
            for t in canonical_order(ts):
                if t.kind is TermKind.TOR:
                    label = SplitLabel(Split.ATORAL, Provenance.TOR_IMAGE)
                else:
                    left = stage[t.left_degree][t.left_index]
                    right = cstage[t.right_degree][t.right_index]
                    if left.toral and right.toral:
                        label = SplitLabel(Split.TORAL, Provenance.TENSOR_TORAL_TORAL)
                    else:
                        label = SplitLabel(Split.ATORAL, Provenance.TENSOR_WITH_ATORAL)
                entries.append(SplitEntry(t.value, label, t, i))
            new_stage.append(entries)
        stage = new_stage
        tower.append((AbelianGroupSpec(0, ordered.factors[:i]), h, stage))
    return tower


def atoral_split(spec: AbelianGroupSpec, coeff: Coeff, max_degree: int) -> list[SplitBasis]:
    """Labelled basis of ``H_n(B pi)`` for ``n = 0..max_degree``.

    >>> basis = atoral_split(AbelianGroupSpec.elementary(3, 3), Coeff.INTEGERS, 4)
    >>> [b.toral_count for b in basis]
    [1, 3, 3, 1, 0]
    """
    _, _, stage = split_tower(spec, coeff, max_degree)[-1]
    return [SplitBasis(n, tuple(entries)) for n, entries in enumerate(stage)]
