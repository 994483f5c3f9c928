"""Finitely generated abelian groups in elementary-divisor form.

A group is ``Z^r`` plus a multiset of prime-power cyclic orders. Everything is
exact and immutable; tensor and Tor are computed summand by summand.

>>> g = parse_group("Z x Z/12")
>>> str(g)
'Z x Z/4 x Z/3'
>>> str(tensor(g, parse_group("Z/2")))
'(Z/2)^2'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

from sympy import factorint, isprime


class GroupParseError(ValueError):
    """Malformed group literal; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedQuery(ValueError):
    """A well-formed request that has no meaning for the given group/coefficients."""


@lru_cache(maxsize=None)
def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power >= 2")
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = f.items()
    return int(p), int(k)


def prime_power_factors(m: int) -> list[int]:
    """Split ``m >= 2`` into its prime-power parts, ascending by prime."""
    return [int(p) ** int(k) for p, k in sorted(factorint(m).items())]


def _cyclic_key(q: int) -> tuple[int, int]:
    # Z (q == 0) sorts first, then by prime, then by exponent
    if q == 0:
        return (0, 0)
    return (prime_power(q)[0], q)


@dataclass(frozen=True)
class FinAbGroup:
    """``Z^free_rank`` plus cyclic groups of prime-power order.

    Torsion is canonicalised (sorted by prime, then exponent) on construction,
    so structurally equal groups compare equal.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if int(self.free_rank) != self.free_rank or self.free_rank < 0:
            raise ValueError("free_rank must be a nonnegative integer")
        tors = tuple(int(q) for q in self.torsion)
        for q in tors:
            prime_power(q)
        object.__setattr__(self, "free_rank", int(self.free_rank))
        object.__setattr__(self, "torsion", tuple(sorted(tors, key=_cyclic_key)))

    @classmethod
    def trivial(cls) -> "FinAbGroup":
        return cls()

    @classmethod
    def cyclic(cls, m: int) -> "FinAbGroup":
        """``Z/m``; ``m == 0`` means ``Z`` and ``m == 1`` the trivial group."""
        if m < 0:
            raise ValueError("cyclic order must be nonnegative")
        if m == 0:
            return cls(1)
        if m == 1:
            return cls()
        return cls(0, tuple(prime_power_factors(m)))

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "FinAbGroup":
        out = cls()
        for m in orders:
            out = direct_sum(out, cls.cyclic(m))
        return out

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for q in self.torsion:
            out *= q
        return out

    @property
    def rank(self) -> int:
        """Number of cyclic summands in the elementary-divisor decomposition."""
        return self.free_rank + len(self.torsion)

    def summands(self) -> tuple[int, ...]:
        """Cyclic summand orders in canonical order (0 stands for Z)."""
        return (0,) * self.free_rank + self.torsion

    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({prime_power(q)[0] for q in self.torsion}))

    def p_part(self, p: int) -> "FinAbGroup":
        return FinAbGroup(0, tuple(q for q in self.torsion if q % p == 0))

    def canonical(self) -> "FinAbGroup":
        return FinAbGroup(self.free_rank, self.torsion)

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        i = 0
        while i < len(self.torsion):
            q = self.torsion[i]
            j = i
            while j < len(self.torsion) and self.torsion[j] == q:
                j += 1
            parts.append(f"Z/{q}" if j - i == 1 else f"(Z/{q})^{j - i}")
            i = j
        return " x ".join(parts)


def direct_sum(a: FinAbGroup, b: FinAbGroup) -> FinAbGroup:
    return FinAbGroup(a.free_rank + b.free_rank, a.torsion + b.torsion)


def sum_groups(groups: Iterable[FinAbGroup]) -> FinAbGroup:
    free, tors = 0, []
    for g in groups:
        free += g.free_rank
        tors.extend(g.torsion)
    return FinAbGroup(free, tuple(tors))


def tensor_cyclic(q: int, q2: int) -> int:
    """Order of ``C_q (x) C_q2`` for cyclic summands (0 = Z); 1 means trivial."""
    return gcd(q, q2) if (q or q2) else 0


def tor_cyclic(q: int, q2: int) -> int:
    """Order of ``Tor(C_q, C_q2)``; 1 means trivial, free summands contribute nothing."""
    if q == 0 or q2 == 0:
        return 1
    return gcd(q, q2)


def tensor(a: FinAbGroup, b: FinAbGroup) -> FinAbGroup:
    free = a.free_rank * b.free_rank
    tors = [q for q in a.torsion for _ in range(b.free_rank)]
    tors += [q for q in b.torsion for _ in range(a.free_rank)]
    for q in a.torsion:
        for q2 in b.torsion:
            g = gcd(q, q2)
            if g > 1:
                tors.append(g)
    return FinAbGroup(free, tuple(tors))


def tor(a: FinAbGroup, b: FinAbGroup) -> FinAbGroup:
    tors = [gcd(q, q2) for q in a.torsion for q2 in b.torsion]
    return FinAbGroup(0, tuple(g for g in tors if g > 1))


def p_rank(a: FinAbGroup, p: int) -> int:
    """Dimension of ``a (x) Z/p`` over the field with p elements."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return a.free_rank + sum(1 for q in a.torsion if q % p == 0)


# --- literal grammar -------------------------------------------------------
#
#   group  := "0" | factor ("x" factor)*
#   factor := "Z" ["^" int] | "Z/" int | "(" "Z" ["/" int] ")" "^" int
#
# Whitespace is ignored. Z/m with composite m is split into prime powers.


class _Cursor:
    def __init__(self, text: str):
        self.chars = [(c, i) for i, c in enumerate(text) if not c.isspace()]
        self.i = 0
        self.end = len(text)

    def peek(self) -> str | None:
        return self.chars[self.i][0] if self.i < len(self.chars) else None

    def pos(self) -> int:
        return self.chars[self.i][1] if self.i < len(self.chars) else self.end

    def expect(self, c: str):
        if self.peek() != c:
            found = self.peek()
            raise GroupParseError(
                f"expected {c!r}, found {'end of input' if found is None else repr(found)}",
                self.pos(),
            )
        self.i += 1

    def integer(self) -> int:
        start = self.pos()
        digits = ""
        while self.peek() is not None and self.peek().isdigit():
            digits += self.peek()
            self.i += 1
        if not digits:
            raise GroupParseError("expected an integer", start)
        return int(digits)


def _exponent(cur: _Cursor) -> int:
    pos = cur.pos()
    r = cur.integer()
    if r < 1:
        raise GroupParseError("exponent must be at least 1", pos)
    return r


def _factor(cur: _Cursor) -> list[int]:
    start = cur.pos()
    if cur.peek() == "(":
        cur.i += 1
        cur.expect("Z")
        m = 0
        if cur.peek() == "/":
            cur.i += 1
            mpos = cur.pos()
            m = cur.integer()
            if m < 2:
                raise GroupParseError("cyclic order must be at least 2", mpos)
        cur.expect(")")
        cur.expect("^")
        return [m] * _exponent(cur)
    if cur.peek() != "Z":
        raise GroupParseError("expected a factor 'Z', 'Z/m' or '(Z/m)^r'", start)
    cur.i += 1
    if cur.peek() == "/":
        cur.i += 1
        mpos = cur.pos()
        m = cur.integer()
        if m < 2:
            raise GroupParseError("cyclic order must be at least 2", mpos)
        return [m]
    if cur.peek() == "^":
        cur.i += 1
        return [0] * _exponent(cur)
    return [0]


def parse_factors(text: str) -> list[int]:
    """Parse a group literal into cyclic factor orders, in order (0 = Z).

    >>> parse_factors("Z x (Z/3)^2 x Z/4")
    [0, 3, 3, 4]
    """
    cur = _Cursor(text)
    if cur.peek() is None:
        raise GroupParseError("empty group literal", 0)
    if cur.peek() == "0" and cur.i + 1 == len(cur.chars):
        return []
    out = _factor(cur)
    while cur.peek() is not None:
        cur.expect("x")
        out.extend(_factor(cur))
    return out


def parse_group(text: str) -> FinAbGroup:
    return FinAbGroup.from_orders(parse_factors(text))
