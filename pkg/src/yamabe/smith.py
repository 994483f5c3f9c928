"""Integer matrices and Smith normal form over the integers.

Everything here works on plain Python ints, so entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(
                f"entries do not match the declared shape {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols_b)
            for row in self.entries
        )
        return IntMatrix(self.rows, other.cols, out)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))


@dataclass(frozen=True)
class SmithForm:
    """Result of :func:`smith_normal_form`: ``left @ m @ right == diagonal matrix``."""

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    def diagonal_matrix(self) -> IntMatrix:
        rows, cols = self.left.rows, self.right.cols
        d = [[0] * cols for _ in range(rows)]
        for i, x in enumerate(self.diagonal):
            d[i][i] = x
        return IntMatrix.from_rows(d, cols)


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _diagonalize(a: list[list[int]], rows: int, cols: int, u, v, chain: bool) -> list[int]:
    """Reduce ``a`` in place to diagonal form; ``u``/``v`` (or None) record the
    row/column operations. With ``chain`` the diagonal also satisfies d_i | d_{i+1}."""
    t = 0
    diag = []
    while t < min(rows, cols):
        # smallest nonzero pivot in the trailing block
        best = None
        for i in range(t, rows):
            row = a[i]
            for j in range(t, cols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            _swap_rows(a, i, t)
            if u is not None:
                _swap_rows(u, i, t)
        if j != t:
            _swap_cols(a, j, t)
            if v is not None:
                _swap_cols(v, j, t)

        while True:
            piv = a[t][t]
            dirty = False
            prow = a[t]
            for i in range(t + 1, rows):
                x = a[i][t]
                if x:
                    q = x // piv
                    row = a[i]
                    for j in range(t, cols):
                        if prow[j]:
                            row[j] -= q * prow[j]
                    if u is not None:
                        urow, upiv = u[i], u[t]
                        for j in range(len(upiv)):
                            if upiv[j]:
                                urow[j] -= q * upiv[j]
                    if row[t]:
                        dirty = True
            for j in range(t + 1, cols):
                x = prow[j]
                if x:
                    q = x // piv
                    for i in range(t, rows):
                        y = a[i][t]
                        if y:
                            a[i][j] -= q * y
                    if v is not None:
                        for row in v:
                            if row[t]:
                                row[j] -= q * row[t]
                    if prow[j]:
                        dirty = True
            if dirty:
                # a remainder smaller than the pivot survived; move it to (t, t)
                best = (abs(a[t][t]), t, t)
                for i in range(t + 1, rows):
                    if a[i][t] and abs(a[i][t]) < best[0]:
                        best = (abs(a[i][t]), i, t)
                for j in range(t + 1, cols):
                    if prow[j] and abs(prow[j]) < best[0]:
                        best = (abs(prow[j]), t, j)
                _, i, j = best
                if i != t:
                    _swap_rows(a, i, t)
                    if u is not None:
                        _swap_rows(u, i, t)
                if j != t:
                    _swap_cols(a, j, t)
                    if v is not None:
                        _swap_cols(v, j, t)
                continue
            if chain:
                bad = None
                for i in range(t + 1, rows):
                    if any(x % piv for x in a[i][t + 1:]):
                        bad = i
                        break
                if bad is not None:
                    # fold the offending row into the pivot row and reduce again
                    row = a[bad]
                    for j in range(t, cols):
                        prow[j] += row[j]
                    if u is not None:
                        for j in range(len(u[t])):
                            u[t][j] += u[bad][j]
                    continue
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        diag.append(a[t][t])
        t += 1
    diag.extend([0] * (min(rows, cols) - len(diag)))
    return diag


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form with unimodular transforms.

    Returns ``SmithForm(diagonal, left, right)`` with ``left @ m @ right`` equal to
    the rectangular diagonal matrix carrying ``diagonal``, each entry dividing the
    next and zeros trailing.

    >>> smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])).diagonal
    (1, 6)
    """
    a = m.tolist()
    u = IntMatrix.identity(m.rows).tolist()
    v = IntMatrix.identity(m.cols).tolist()
    diag = _diagonalize(a, m.rows, m.cols, u, v, chain=True)
    return SmithForm(
        tuple(diag), IntMatrix.from_rows(u, m.rows), IntMatrix.from_rows(v, m.cols)
    )


def diagonal_entries(rows: Iterable[Sequence[int]], nrows: int, ncols: int) -> list[int]:
    """Diagonal of some integer diagonalization (no divisibility chain, no transforms).

    The multiset of entries still determines the cokernel up to isomorphism, which
    is all homology needs; skipping the transforms keeps the oracle fast.
    """
    a = [list(r) for r in rows]
    return _diagonalize(a, nrows, ncols, None, None, chain=False)


def is_smith_normal_form(diagonal: Sequence[int]) -> bool:
    """Check the divisibility chain (zeros only at the tail)."""
    for x, y in zip(diagonal, diagonal[1:]):
        if x < 0 or y < 0:
            return False
        if x == 0 and y != 0:
            return False
        if x and y % x:
            return False
    return all(x >= 0 for x in diagonal)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    a = m.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
