"""Homology of classifying spaces of finitely generated abelian groups.

Closed forms for ``B(Z/p^k)`` and the circle are combined with the Kunneth
formula, folding factors left to right (free factors first). The Kunneth term
lists record where every cyclic summand came from; downstream code uses those
traces as basis labels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

from sympy import isprime

from .groups import (
    FinAbGroup,
    UnsupportedQuery,
    _cyclic_key,
    parse_factors,
    prime_power,
    prime_power_factors,
    tensor_cyclic,
    tor_cyclic,
)


class Coeff(enum.Enum):
    INTEGERS = "Z"
    MOD2 = "Z2"

    @classmethod
    def parse(cls, text: str) -> "Coeff":
        t = text.strip().upper().replace("/", "")
        if t in ("Z", "INTEGERS"):
            return cls.INTEGERS
        if t in ("Z2", "MOD2"):
            return cls.MOD2
        raise ValueError(f"unknown coefficient ring {text!r}; use Z or Z2")

    def unit(self) -> FinAbGroup:
        """The coefficient group itself (homology of a point in degree 0)."""
        return FinAbGroup(1) if self is Coeff.INTEGERS else FinAbGroup(0, (2,))


@dataclass(frozen=True)
class GradedGroup:
    """Homology groups in degrees ``0..max_degree``.

    Indexing past ``max_degree`` raises instead of returning zero: a degree that
    was not computed is not a degree where homology vanishes.
    """

    groups: tuple[FinAbGroup, ...]
    coeff: Coeff = Coeff.INTEGERS

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        if not self.groups:
            raise ValueError("a graded group needs at least degree 0")

    @property
    def max_degree(self) -> int:
        return len(self.groups) - 1

    def __getitem__(self, n: int) -> FinAbGroup:
        if not 0 <= n <= self.max_degree:
            raise IndexError(f"degree {n} outside the computed range 0..{self.max_degree}")
        return self.groups[n]

    def __iter__(self):
        return iter(self.groups)

    def __len__(self):
        return len(self.groups)

    def p_ranks(self, p: int) -> list[int]:
        from .groups import p_rank

        return [p_rank(g, p) for g in self.groups]


@dataclass(frozen=True)
class AbelianGroupSpec:
    """``Z^free_rank x prod Z/p^k`` with an explicit, significant factor order."""

    free_rank: int = 0
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be nonnegative")
        facs = tuple((int(p), int(k)) for p, k in self.factors)
        for p, k in facs:
            if k < 1 or not isprime(p):
                raise ValueError(f"bad cyclic factor Z/{p}^{k}")
        object.__setattr__(self, "factors", facs)

    @classmethod
    def from_orders(cls, orders) -> "AbelianGroupSpec":
        """Build from cyclic orders (0 = Z); composite orders split by prime."""
        free, facs = 0, []
        for m in orders:
            if m == 0:
                free += 1
            elif m >= 2:
                facs.extend(prime_power(q) for q in prime_power_factors(m))
            else:
                raise ValueError(f"invalid cyclic order {m}")
        return cls(free, tuple(facs))

    @classmethod
    def parse(cls, text: str) -> "AbelianGroupSpec":
        return cls.from_orders(parse_factors(text))

    @classmethod
    def elementary(cls, p: int, r: int) -> "AbelianGroupSpec":
        return cls(0, ((p, 1),) * r)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(p**k for p, k in self.factors)

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for q in self.orders:
            out *= q
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({p for p, _ in self.factors}))

    @property
    def is_p_group(self) -> bool:
        return self.free_rank == 0 and len(self.primes()) <= 1

    @property
    def is_elementary(self) -> bool:
        return self.is_p_group and all(k == 1 for _, k in self.factors)

    @property
    def rank(self) -> int:
        """Minimal number of cyclic factors of the group."""
        per_prime = [sum(1 for q, _ in self.factors if q == p) for p in self.primes()]
        return self.free_rank + max(per_prime, default=0)

    def sylow(self, p: int) -> "AbelianGroupSpec":
        return AbelianGroupSpec(0, tuple(f for f in self.factors if f[0] == p))

    def group(self) -> FinAbGroup:
        return FinAbGroup(self.free_rank, self.orders)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{q}" for q in self.orders]
        return " x ".join(parts) if parts else "0"


class TermKind(enum.Enum):
    TENSOR = "tensor"
    TOR = "tor"


@dataclass(frozen=True)
class KunnethTerm:
    """One cyclic summand of a Kunneth decomposition.

    ``left_index``/``right_index`` point at cyclic summands (canonical order)
    of the left group in ``left_degree`` and the right group in ``right_degree``.
    """

    kind: TermKind
    left_degree: int
    right_degree: int
    left_index: int
    right_index: int
    value: FinAbGroup

    @property
    def degree(self) -> int:
        shift = 1 if self.kind is TermKind.TOR else 0
        return self.left_degree + self.right_degree + shift

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "left_degree": self.left_degree,
            "right_degree": self.right_degree,
            "left_index": self.left_index,
            "right_index": self.right_index,
            "value": str(self.value),
        }


def point_homology(coeff: Coeff, max_degree: int) -> GradedGroup:
    _check_degree(max_degree)
    return GradedGroup((coeff.unit(),) + (FinAbGroup(),) * max_degree, coeff)


def circle_homology(coeff: Coeff, max_degree: int) -> GradedGroup:
    _check_degree(max_degree)
    groups = [coeff.unit() if n <= 1 else FinAbGroup() for n in range(max_degree + 1)]
    return GradedGroup(groups, coeff)


def cyclic_homology(p: int, k: int, coeff: Coeff, max_degree: int) -> GradedGroup:
    """Homology of ``B(Z/p^k)``.

    Integer coefficients: ``Z`` in degree 0, ``Z/p^k`` in odd degrees, zero in
    positive even degrees. Mod-2 coefficients (p = 2 only): ``Z/2`` everywhere.
    """
    _check_degree(max_degree)
    if not isprime(p) or k < 1:
        raise ValueError(f"Z/{p}^{k} is not a cyclic p-group")
    if coeff is Coeff.MOD2:
        if p != 2:
            raise UnsupportedQuery(
                f"mod-2 homology of B(Z/{p**k}) is trivial in positive degrees; "
                "mod-2 coefficients are only supported for 2-groups"
            )
        return GradedGroup([FinAbGroup(0, (2,))] * (max_degree + 1), coeff)
    q = p**k
    groups = [FinAbGroup(1)]
    groups += [FinAbGroup(0, (q,)) if n % 2 else FinAbGroup() for n in range(1, max_degree + 1)]
    return GradedGroup(groups, coeff)


def kunneth_terms(a: GradedGroup, b: GradedGroup) -> list[list[KunnethTerm]]:
    """Per-degree Kunneth summands: tensor terms first, then Tor terms.

    Within each kind terms run in lexicographic (left degree, left summand,
    right summand) order. Over ``Z/2`` there are no Tor terms.
    """
    if a.max_degree != b.max_degree:
        raise ValueError(
            f"truncation mismatch: max degrees {a.max_degree} and {b.max_degree}"
        )
    if a.coeff is not b.coeff:
        raise ValueError("both factors must use the same coefficients")
    N = a.max_degree
    sa = [g.summands() for g in a.groups]
    sb = [g.summands() for g in b.groups]
    out = []
    for n in range(N + 1):
        terms = []
        for i in range(n + 1):
            j = n - i
            for li, q in enumerate(sa[i]):
                for ri, q2 in enumerate(sb[j]):
                    t = tensor_cyclic(q, q2)
                    if t != 1:
                        terms.append(
                            KunnethTerm(TermKind.TENSOR, i, j, li, ri, FinAbGroup.cyclic(t))
                        )
        if a.coeff is Coeff.INTEGERS:
            for i in range(n):
                j = n - 1 - i
                for li, q in enumerate(sa[i]):
                    for ri, q2 in enumerate(sb[j]):
                        t = tor_cyclic(q, q2)
                        if t != 1:
                            terms.append(
                                KunnethTerm(TermKind.TOR, i, j, li, ri, FinAbGroup.cyclic(t))
                            )
        out.append(terms)
    return out


def canonical_order(terms: list[KunnethTerm]) -> list[KunnethTerm]:
    """Stable sort of cyclic terms into the canonical summand order of their sum."""
    return sorted(terms, key=lambda t: _cyclic_key(t.value.summands()[0]))


def kunneth(
    a: GradedGroup, b: GradedGroup, coeff: Coeff | None = None
) -> tuple[GradedGroup, list[list[KunnethTerm]]]:
    """Homology of a product from the homology of its factors.

    Degree ``n`` is ``sum a_i (x) b_j`` over ``i + j = n`` plus
    ``sum Tor(a_i, b_j)`` over ``i + j = n - 1`` (integer coefficients only).
    """
    if coeff is not None and (a.coeff is not coeff or b.coeff is not coeff):
        raise ValueError("coefficient ring does not match the inputs")
    terms = kunneth_terms(a, b)
    groups = []
    for ts in terms:
        free, tors = 0, []
        for t in ts:
            free += t.value.free_rank
            tors.extend(t.value.torsion)
        groups.append(FinAbGroup(free, tuple(tors)))
    return GradedGroup(groups, a.coeff), terms


def factor_homologies(spec: AbelianGroupSpec, coeff: Coeff, max_degree: int) -> list[GradedGroup]:
    """The per-factor homologies in fold order: circles, then cyclic factors."""
    if coeff is Coeff.MOD2 and any(p != 2 for p, _ in spec.factors):
        raise UnsupportedQuery("mod-2 coefficients need every finite factor to be a 2-group")
    out = [circle_homology(coeff, max_degree) for _ in range(spec.free_rank)]
    out += [cyclic_homology(p, k, coeff, max_degree) for p, k in spec.factors]
    return out


def homology_of_abelian(spec: AbelianGroupSpec, coeff: Coeff, max_degree: int) -> GradedGroup:
    """``H_*(B pi)`` through ``max_degree`` by a left fold of the Kunneth formula.

    >>> h = homology_of_abelian(AbelianGroupSpec.elementary(3, 2), Coeff.INTEGERS, 4)
    >>> [str(g) for g in h]
    ['Z', '(Z/3)^2', 'Z/3', '(Z/3)^3', '(Z/3)^2']
    """
    acc = point_homology(coeff, max_degree)
    for h in factor_homologies(spec, coeff, max_degree):
        acc, _ = kunneth(acc, h)
    return acc


# --- Poincare series --------------------------------------------------------


def _mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def _series_div(num: list[int], den: list[int], n: int) -> list[int]:
    """Power series ``num/den`` through degree n; ``den[0]`` must be +-1."""
    if den[0] not in (1, -1):
        raise ValueError("denominator must have a unit constant term")
    num = num + [0] * (n + 1 - len(num))
    out = []
    for k in range(n + 1):
        s = num[k] - sum(den[j] * out[k - j] for j in range(1, min(k, len(den) - 1) + 1))
        out.append(s * den[0])
    return out


def _check_rank(r: int):
    if r < 1:
        raise ValueError("rank must be at least 1")


def _check_degree(n: int):
    if n < 0:
        raise ValueError("max_degree must be nonnegative")


def poincare_series_recursive(r: int, max_degree: int) -> list[int]:
    """Coefficients of ``P(r, t)`` from ``P(1,t) = 1 + t + t^3 + t^5 + ...`` and
    ``P(r+1) = P(r) P(1) + t (P(r) - 1)(P(1) - 1)``."""
    _check_rank(r)
    _check_degree(max_degree)
    N = max_degree
    p1 = [1] + [1 if n % 2 else 0 for n in range(1, N + 1)]
    p1m = [0] + p1[1:]
    p = p1
    for _ in range(r - 1):
        tensor_part = _mul(p, p1, N)
        pm = [0] + p[1:]
        tor_part = [0] + _mul(pm, p1m, N)[:N]
        p = [x + y for x, y in zip(tensor_part, tor_part)]
    return p


def poincare_series_closed(r: int, max_degree: int) -> list[int]:
    """Coefficients of ``(1 + t (1-t)^r) / ((1-t)^r (1+t))`` by exact series division."""
    _check_rank(r)
    _check_degree(max_degree)
    one_minus_t_r = [(-1) ** j * comb(r, j) for j in range(r + 1)]
    num = [1] + one_minus_t_r  # 1 + t(1-t)^r
    den = _mul(one_minus_t_r, [1, 1], r + 1)
    return _series_div(num, den, max_degree)


def poincare_coefficient(r: int, n: int) -> int:
    """Closed alternating-binomial coefficient of ``t^n`` in ``P(r, t)``."""
    _check_rank(r)
    if n == 0:
        return 1
    return (-1) ** (n + 1) + sum((-1) ** (n - j) * comb(j + r - 1, r - 1) for j in range(n + 1))
