"""Brute-force homology: explicit chain complexes and Smith normal form.

Nothing here uses the Kunneth formula. Products of classifying spaces are
modelled by the total complex of tensor products of periodic resolutions, and
homology is read off from integer diagonalisation (or ranks over Z/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .groups import FinAbGroup, UnsupportedQuery
from .homology import Coeff, GradedGroup
from .smith import IntMatrix, diagonal_entries


@dataclass(frozen=True)
class ChainComplex:
    """Free chain complex ``C_0 <- C_1 <- ... <- C_{max_degree+1}``.

    ``boundaries[n]`` is ``d_n : C_n -> C_{n-1}`` as a ``rank C_{n-1} x rank C_n``
    matrix (``d_0`` has zero rows). The extra top chain group only feeds
    ``d_{max_degree+1}``, so homology is exact through ``max_degree``.
    """

    ranks: tuple[int, ...]
    boundaries: tuple[IntMatrix, ...]
    coeff: Coeff = Coeff.INTEGERS

    def __post_init__(self):
        if len(self.ranks) != len(self.boundaries) or len(self.ranks) < 2:
            raise ValueError("need one boundary map per chain group and at least two groups")
        for n, d in enumerate(self.boundaries):
            expected = (self.ranks[n - 1] if n else 0, self.ranks[n])
            if d.shape != expected:
                raise ValueError(f"d_{n} has shape {d.shape}, expected {expected}")

    @property
    def max_degree(self) -> int:
        return len(self.ranks) - 2

    def d_squared_zero(self) -> bool:
        for n in range(2, len(self.ranks)):
            comp = self.boundaries[n - 1] @ self.boundaries[n]
            if self.coeff is Coeff.MOD2:
                if any(x % 2 for row in comp.entries for x in row):
                    return False
            elif not comp.is_zero():
                return False
        return True


def _check(max_degree: int):
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")


def _rank1_complex(diag_maps: list[int], coeff: Coeff) -> ChainComplex:
    ranks = (1,) * len(diag_maps)
    bounds = [IntMatrix.zeros(0, 1)]
    bounds += [IntMatrix.from_rows([[m]]) for m in diag_maps[1:]]
    return ChainComplex(ranks, tuple(bounds), coeff)


def cyclic_resolution_complex(m: int, coeff: Coeff, max_degree: int) -> ChainComplex:
    """``Z <-0- Z <-m- Z <-0- Z <-m- ...``, the periodic resolution tensored down.

    With Z/2 coefficients every map is reduced mod 2.
    """
    _check(max_degree)
    if m < 2:
        raise ValueError("cyclic order must be at least 2")
    if coeff is Coeff.MOD2 and m % 2:
        raise UnsupportedQuery(f"mod-2 homology of B(Z/{m}) vanishes in positive degrees")
    maps = [0] + [m if n % 2 == 0 else 0 for n in range(1, max_degree + 2)]
    if coeff is Coeff.MOD2:
        maps = [x % 2 for x in maps]
    return _rank1_complex(maps, coeff)


def circle_complex(coeff: Coeff, max_degree: int) -> ChainComplex:
    """Cellular chains of the circle: ``Z <-0- Z``, then zeros."""
    _check(max_degree)
    ranks = [1, 1] + [0] * max_degree
    bounds = [IntMatrix.zeros(0, 1), IntMatrix.zeros(1, 1)]
    bounds += [IntMatrix.zeros(ranks[n - 1], 0) for n in range(2, max_degree + 2)]
    return ChainComplex(tuple(ranks), tuple(bounds), coeff)


def point_complex(coeff: Coeff, max_degree: int) -> ChainComplex:
    _check(max_degree)
    ranks = [1] + [0] * (max_degree + 1)
    bounds = [IntMatrix.zeros(0, 1)] + [IntMatrix.zeros(ranks[n - 1], 0) for n in range(1, max_degree + 2)]
    return ChainComplex(tuple(ranks), tuple(bounds), coeff)


def tensor_complex(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Total complex with ``d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy``.

    Basis of degree n: pairs ``(i, s, j, t)`` with ``i + j = n``, ordered by i,
    then s, then t. Truncated to the smaller ``max_degree``.
    """
    if a.coeff is not b.coeff:
        raise ValueError("complexes use different coefficients")
    top = min(a.max_degree, b.max_degree) + 1
    index = []
    for n in range(top + 1):
        idx = {}
        for i in range(n + 1):
            j = n - i
            for s, t in iproduct(range(a.ranks[i]), range(b.ranks[j])):
                idx[(i, s, j, t)] = len(idx)
        index.append(idx)
    bounds = [IntMatrix.zeros(0, len(index[0]))]
    for n in range(1, top + 1):
        rows = [[0] * len(index[n]) for _ in range(len(index[n - 1]))]
        for (i, s, j, t), col in index[n].items():
            if i > 0:
                da = a.boundaries[i]
                for r in range(a.ranks[i - 1]):
                    c = da[r, s]
                    if c:
                        rows[index[n - 1][(i - 1, r, j, t)]][col] += c
            if j > 0:
                db = b.boundaries[j]
                sign = -1 if i % 2 else 1
                for r in range(b.ranks[j - 1]):
                    c = db[r, t]
                    if c:
                        rows[index[n - 1][(i, s, j - 1, r)]][col] += sign * c
        bounds.append(IntMatrix.from_rows(rows, len(index[n])))
    ranks = tuple(len(ix) for ix in index)
    return ChainComplex(ranks, tuple(bounds), a.coeff)


def _rank_mod2(m: IntMatrix) -> int:
    rows = [sum(1 << j for j, x in enumerate(r) if x % 2) for r in m.entries]
    rank = 0
    while rows:
        pivot = rows.pop()
        if pivot:
            rank += 1
            low = pivot & -pivot
            rows = [r ^ pivot if r & low else r for r in rows]
    return rank


def complex_homology(c: ChainComplex) -> GradedGroup:
    """``H_n = ker d_n / im d_{n+1}`` for ``n = 0..max_degree``."""
    if not c.d_squared_zero():
        raise ValueError("not a chain complex: d o d != 0")
    groups = []
    if c.coeff is Coeff.MOD2:
        ranks = [_rank_mod2(d) for d in c.boundaries]
        for n in range(c.max_degree + 1):
            dim = c.ranks[n] - ranks[n] - ranks[n + 1]
            groups.append(FinAbGroup(0, (2,) * dim))
        return GradedGroup(groups, c.coeff)
    diags = [diagonal_entries(d.entries, d.rows, d.cols) for d in c.boundaries]
    rank = [sum(1 for x in dg if x) for dg in diags]
    for n in range(c.max_degree + 1):
        free = c.ranks[n] - rank[n] - rank[n + 1]
        tors = [abs(x) for x in diags[n + 1] if abs(x) > 1]
        groups.append(FinAbGroup(free, ()) if not tors else _with_torsion(free, tors))
    return GradedGroup(groups, c.coeff)


def _with_torsion(free: int, orders: list[int]) -> FinAbGroup:
    g = FinAbGroup.from_orders(orders)
    return FinAbGroup(free + g.free_rank, g.torsion)


def product_complex(orders, coeff: Coeff, max_degree: int) -> ChainComplex:
    """Tensor product of resolutions, one per cyclic order (0 = circle)."""
    acc = point_complex(coeff, max_degree)
    for m in orders:
        f = circle_complex(coeff, max_degree) if m == 0 else cyclic_resolution_complex(m, coeff, max_degree)
        acc = tensor_complex(acc, f)
    return acc


def oracle_homology(orders, coeff: Coeff, max_degree: int) -> GradedGroup:
    return complex_homology(product_complex(orders, coeff, max_degree))


def tor_bruteforce(a: int, b: int) -> FinAbGroup:
    """``Tor(Z/a, Z/b)`` as the kernel of multiplication by a on Z/b, by enumeration."""
    if a < 2 or b < 2:
        raise ValueError("moduli must be at least 2")
    kernel = [x for x in range(b) if (a * x) % b == 0]
    # a subgroup of a cyclic group is cyclic, so its size is its order
    return FinAbGroup.cyclic(len(kernel))


def cokernel(rows: list[list[int]], ngens: int) -> FinAbGroup:
    """``Z^ngens`` modulo the row span of an integer relation matrix."""
    if not rows:
        return FinAbGroup(ngens)
    diag = diagonal_entries(rows, len(rows), ngens)
    nonzero = [abs(x) for x in diag if x]
    return _with_torsion(ngens - len(nonzero), [x for x in nonzero if x > 1])


def tensor_bruteforce(a_orders, b_orders) -> FinAbGroup:
    """Tensor product of two direct sums of cyclic groups (0 = Z) from a presentation.

    Generators ``g_ij = e_i (x) f_j``, relations ``a_i g_ij`` and ``b_j g_ij``.
    """
    gens = [(i, j) for i in range(len(a_orders)) for j in range(len(b_orders))]
    rows = []
    for col, (i, j) in enumerate(gens):
        for m in (a_orders[i], b_orders[j]):
            if m:
                row = [0] * len(gens)
                row[col] = m
                rows.append(row)
    return cokernel(rows, len(gens))
