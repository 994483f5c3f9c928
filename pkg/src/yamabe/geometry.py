"""Geometric generators, curvature-status propagation and manifold verdicts.

Generators are small provenance trees (lens spaces, projective spaces,
products, Toda brackets, transfers). Their curvature status is derived by a
fixed rule closure; nothing here constructs metrics. The verdict engine turns
the known existence theorems into a rule cascade with a citation trail.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from math import gcd

from .groups import FinAbGroup, UnsupportedQuery, sum_groups
from .homology import AbelianGroupSpec, Coeff, TermKind, homology_of_abelian
from .structure import SplitEntry, split_tower


# --- generator trees --------------------------------------------------------


class GeneratorTerm:
    """Base class of generator nodes; every node knows its dimension."""

    dim: int

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Circle(GeneratorTerm):
    @property
    def dim(self) -> int:
        return 1

    def __str__(self):
        return "S^1"

    def to_dict(self):
        return {"node": "circle", "dim": 1}


@dataclass(frozen=True)
class Lens(GeneratorTerm):
    """``S^dim / (Z/p^k)`` mapped to ``B(Z/p^k)``; ``dim`` is odd."""

    p: int
    k: int
    dimension: int

    def __post_init__(self):
        if self.dimension < 1 or self.dimension % 2 == 0:
            raise ValueError("lens spaces have odd dimension >= 1")
        if self.p < 2 or self.k < 1:
            raise ValueError("bad lens space group")

    @property
    def dim(self) -> int:
        return self.dimension

    def __str__(self):
        return f"L^{self.dimension}({self.p ** self.k})"

    def to_dict(self):
        return {"node": "lens", "p": self.p, "k": self.k, "dim": self.dimension}


@dataclass(frozen=True)
class RealProj(GeneratorTerm):
    """``RP^dim``; ``target_order > 2`` records composition with ``Z/2 -> Z/target_order``."""

    dimension: int
    target_order: int = 2

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("projective spaces here have dimension >= 1")

    @property
    def dim(self) -> int:
        return self.dimension

    def __str__(self):
        s = f"RP^{self.dimension}"
        return s if self.target_order == 2 else f"{s}->B(Z/{self.target_order})"

    def to_dict(self):
        return {"node": "real_projective", "dim": self.dimension, "target_order": self.target_order}


@dataclass(frozen=True)
class Product(GeneratorTerm):
    """Cartesian product; the empty product is a point."""

    factors: tuple[GeneratorTerm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    def __str__(self):
        if not self.factors:
            return "pt"
        return " x ".join(f"({f})" if isinstance(f, Product) else str(f) for f in self.factors)

    def to_dict(self):
        return {"node": "product", "dim": self.dim, "factors": [f.to_dict() for f in self.factors]}


POINT = Product(())


@dataclass(frozen=True)
class TodaBracket(GeneratorTerm):
    """``<left, order, right>``: glue ``W_0 x right`` and ``left x W_1`` where
    ``W_0``, ``W_1`` bound ``order`` copies of left/right."""

    left: GeneratorTerm
    order: int
    right: GeneratorTerm

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("bracket order must be at least 2")

    @property
    def dim(self) -> int:
        return self.left.dim + self.right.dim + 1

    def __str__(self):
        return f"<{self.left}, {self.order}, {self.right}>"

    def to_dict(self):
        return {
            "node": "toda_bracket",
            "dim": self.dim,
            "order": self.order,
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
        }


@dataclass(frozen=True)
class TransferClass(GeneratorTerm):
    """A finite cover of ``base`` (transfer along the diagonal); same dimension."""

    base: GeneratorTerm

    @property
    def dim(self) -> int:
        return self.base.dim

    def __str__(self):
        return f"tr({self.base})"

    def to_dict(self):
        return {"node": "transfer", "dim": self.dim, "base": self.base.to_dict()}


def product(*terms: GeneratorTerm) -> GeneratorTerm:
    """Flattened product dropping points; a single factor is returned as is."""
    flat = []
    for t in terms:
        if isinstance(t, Product):
            flat.extend(f for f in t.factors if f.dim > 0)
        elif t.dim > 0:
            flat.append(t)
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def generator_from_dict(d: dict) -> GeneratorTerm:
    node = d["node"]
    if node == "circle":
        return Circle()
    if node == "lens":
        return Lens(d["p"], d["k"], d["dim"])
    if node == "real_projective":
        return RealProj(d["dim"], d.get("target_order", 2))
    if node == "product":
        return Product(tuple(generator_from_dict(f) for f in d["factors"]))
    if node == "toda_bracket":
        return TodaBracket(generator_from_dict(d["left"]), d["order"], generator_from_dict(d["right"]))
    if node == "transfer":
        return TransferClass(generator_from_dict(d["base"]))
    raise ValueError(f"unknown generator node {node!r}")


# --- curvature status -------------------------------------------------------


class CurvatureClass(enum.IntEnum):
    """Strongest derivable status; the order is the implication order."""

    UNKNOWN = 0
    NONNEG_YAMABE = 1
    PSC = 2

    @property
    def label(self) -> str:
        return {0: "Unknown", 1: "NonnegYamabe", 2: "PSC"}[self.value]


def curvature_class(g: GeneratorTerm) -> CurvatureClass:
    """Rule closure over the generator tree.

    Lens spaces and projective spaces carry psc except in dimension 1 (flat);
    a product inherits psc from any psc factor and Y >= 0 from any factor of
    positive dimension with Y >= 0; a Toda bracket is psc when both ends are,
    Y >= 0 when both ends are except for a Y >= 0 end against a psc surface;
    a finite cover keeps the status of its base.
    """
    if isinstance(g, Circle):
        return CurvatureClass.NONNEG_YAMABE
    if isinstance(g, (Lens, RealProj)):
        return CurvatureClass.PSC if g.dim >= 2 else CurvatureClass.NONNEG_YAMABE
    if isinstance(g, TransferClass):
        return curvature_class(g.base)
    if isinstance(g, Product):
        factors = [f for f in g.factors if f.dim > 0]
        if not factors:
            raise ValueError("curvature status is undefined in dimension 0")
        return max(curvature_class(f) for f in factors)
    if isinstance(g, TodaBracket):
        ends = (g.left, g.right)
        if any(e.dim == 0 for e in ends):
            return CurvatureClass.UNKNOWN
        sl, sr = curvature_class(g.left), curvature_class(g.right)
        if sl is CurvatureClass.PSC and sr is CurvatureClass.PSC:
            return CurvatureClass.PSC
        if min(sl, sr) >= CurvatureClass.NONNEG_YAMABE:
            # the excluded configuration: a merely Y >= 0 end against a psc surface
            for s0, other in ((sl, g.right), (sr, g.left)):
                if s0 is CurvatureClass.NONNEG_YAMABE and other.dim == 2 and curvature_class(other) is CurvatureClass.PSC:
                    return CurvatureClass.UNKNOWN
            return CurvatureClass.NONNEG_YAMABE
        return CurvatureClass.UNKNOWN
    raise TypeError(f"not a generator term: {g!r}")


def class_order(g: GeneratorTerm) -> int:
    """Order of the homology class a generator represents (0 = infinite)."""
    if isinstance(g, Circle):
        return 0
    if isinstance(g, Lens):
        return g.p**g.k
    if isinstance(g, RealProj):
        return 2
    if isinstance(g, TransferClass):
        return class_order(g.base)
    if isinstance(g, TodaBracket):
        return g.order
    if isinstance(g, Product):
        out = 0
        for f in g.factors:
            out = gcd(out, class_order(f))
        return out
    raise TypeError(f"not a generator term: {g!r}")


def shuffle_toda(g: GeneratorTerm) -> GeneratorTerm:
    """``<M_1 x ... x M_j, m, L>  ->  M_1 x ... x M_{j-1} x <M_j, m, L>``.

    Valid when ``m`` kills the class of ``M_j``. A bracket whose left end is not
    a product is returned unchanged.
    """
    if not isinstance(g, TodaBracket):
        raise ValueError("shuffle_toda applies to Toda brackets only")
    if not isinstance(g.left, Product):
        return g
    factors = [f for f in g.left.factors if f.dim > 0]
    if not factors:
        raise ValueError("left end of the bracket is a point")
    last = factors[-1]
    q = class_order(last)
    if q == 0 or g.order % q:
        raise ValueError(
            f"bracket order {g.order} does not kill the last factor {last} (order {q or 'infinite'})"
        )
    inner = TodaBracket(last, g.order, g.right)
    if len(factors) == 1:
        return inner
    return Product(tuple(factors[:-1]) + (inner,))


# --- generator enumeration --------------------------------------------------


def _cyclic_generator(p: int, k: int, coeff: Coeff, n: int) -> GeneratorTerm:
    if n == 0:
        return POINT
    if coeff is Coeff.INTEGERS:
        if n % 2 == 0:
            raise ValueError(f"H_{n}(B Z/{p ** k}; Z) vanishes")
        return Lens(p, k, n)
    if k == 1:
        return RealProj(n)
    if n % 2 == 0:
        return RealProj(n, 2**k)
    if n == 1:
        return Lens(2, k, 1)
    return TransferClass(Product((RealProj(n - 1, 2**k), Circle())))


@dataclass(frozen=True)
class Generator:
    term: GeneratorTerm
    entry: SplitEntry
    index: int

    @property
    def status(self) -> CurvatureClass | None:
        return None if self.term.dim == 0 else curvature_class(self.term)


def _generator_tower(spec: AbelianGroupSpec, coeff: Coeff, max_degree: int):
    tower = split_tower(spec, coeff, max_degree)
    (p, k), = tower[0][0].factors
    gens = [[_cyclic_generator(p, k, coeff, n) for _ in entries] for n, entries in enumerate(tower[0][2])]
    for fspec, _, stage in tower[1:]:
        p, k = fspec.factors[-1]
        new = []
        for n, entries in enumerate(stage):
            row = []
            for e in entries:
                t = e.trace
                left = gens[t.left_degree][t.left_index]
                right = _cyclic_generator(p, k, coeff, t.right_degree)
                if t.kind is TermKind.TENSOR:
                    row.append(product(left, right))
                else:
                    # the Tor summand has order p^min(s, k); bracket with that order
                    row.append(TodaBracket(left, e.summand.order, right))
            new.append(row)
        gens = new
    return tower[-1][2], gens


def enumerate_generators(spec: AbelianGroupSpec, coeff: Coeff, degree: int) -> list[Generator]:
    """One geometric generator per labelled Kunneth basis entry in ``degree``."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    stage, gens = _generator_tower(spec, coeff, degree)
    return [Generator(t, e, i) for i, (t, e) in enumerate(zip(gens[degree], stage[degree]))]


@dataclass
class SpanReport:
    spec: str
    coeff: str
    degree: int
    generator_count: int
    basis_rank: int
    bijection: bool
    group_matches: bool
    statuses: dict[str, int]
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bijection and self.group_matches and not self.mismatches

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "coeff": self.coeff,
            "degree": self.degree,
            "generator_count": self.generator_count,
            "basis_rank": self.basis_rank,
            "bijection": self.bijection,
            "group_matches": self.group_matches,
            "statuses": dict(self.statuses),
            "mismatches": list(self.mismatches),
        }


def span_check(spec: AbelianGroupSpec, coeff: Coeff, degree: int) -> SpanReport:
    """Check generators against the labelled basis and the homology engine."""
    gens = enumerate_generators(spec, coeff, degree)
    _, _, stage = split_tower(spec, coeff, degree)[-1]
    basis = stage[degree]
    mismatches = []
    seen = Counter(g.index for g in gens)
    for i, e in enumerate(basis):
        if seen[i] != 1:
            mismatches.append(f"basis entry {i} ({e.summand}) hit {seen[i]} times")
    for g in gens:
        if g.term.dim != degree:
            mismatches.append(f"generator {g.term} has dimension {g.term.dim}, expected {degree}")
        if degree > 0:
            order = class_order(g.term)
            if coeff is Coeff.MOD2:
                order = gcd(order, 2)
            if order != g.entry.summand.order:
                mismatches.append(f"generator {g.term} (order {order}) does not match {g.entry.summand}")
    bijection = len(gens) == len(basis) and all(seen[i] == 1 for i in range(len(basis)))
    expected = homology_of_abelian(spec, coeff, degree)[degree]
    group_matches = sum_groups(e.summand for e in basis) == expected
    if not group_matches:
        mismatches.append(f"basis sums to {sum_groups(e.summand for e in basis)}, homology is {expected}")
    statuses: Counter = Counter()
    if degree > 0:
        for g in gens:
            statuses[g.status.label] += 1
    return SpanReport(
        str(spec), coeff.value, degree, len(gens), len(basis), bijection, group_matches,
        {k: statuses.get(k, 0) for k in ("PSC", "NonnegYamabe", "Unknown")}, mismatches,
    )


# --- verdicts ---------------------------------------------------------------

RULES = {
    "Thm 1.1": "Y >= 0: finite pi, abelian Sylow subgroups, spin of odd order or non-spin cover",
    "Thm 1.2": "psc: odd order, elementary abelian Sylow subgroups, dimension above the rank",
    "Thm 2.8": "Sylow reduction via transfer; non-orientable non-spin: only p = 2 matters",
    "Thm 4.1": "Y >= 0: abelian fundamental group, non-spin universal cover, n >= 5",
    "Thm 4.5": "Y >= 0: spin, odd order, abelian Sylow subgroups, n >= 5",
    "Thm 5.8": "psc: atoral class, or n > rank (p odd elementary orientable, p = 2 non-orientable)",
    "Problem 5.9": "open: are toral classes represented by psc manifolds?",
    "Problem 5.10": "open: spin case without the odd-order hypothesis",
    "Problem 5.11": "open: psc for arbitrary (non-elementary) abelian p-groups",
}


class VerdictStatus(enum.IntEnum):
    NOT_COVERED = 0
    OPEN_TORAL = 1
    YAMABE_NONNEG_GUARANTEED = 2
    PSC_GUARANTEED = 3

    @property
    def label(self) -> str:
        return {
            0: "NotCovered",
            1: "OpenToral",
            2: "YamabeNonnegGuaranteed",
            3: "PscGuaranteed",
        }[self.value]


class SpinStatus(enum.Enum):
    SPIN = "spin"
    NONSPIN_COVER = "nonspin-cover"


class ClassLabel(enum.Enum):
    TORAL = "toral"
    ATORAL = "atoral"
    UNSPECIFIED = "unspecified"


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    citations: tuple[str, ...] = ()
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "citations", tuple(self.citations))
        if self.status is not VerdictStatus.NOT_COVERED and not self.citations:
            raise ValueError("a positive verdict needs at least one citation")

    def to_dict(self) -> dict:
        return {"status": self.status.label, "citations": list(self.citations), "notes": self.notes}


@dataclass(frozen=True)
class ManifoldQuery:
    group: AbelianGroupSpec
    dimension: int
    spin: SpinStatus
    orientable: bool = True
    homology_class: ClassLabel = ClassLabel.UNSPECIFIED

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be at least 1")
        if self.spin is SpinStatus.SPIN and not self.orientable:
            raise ValueError("a spin manifold is orientable; spin + non-orientable is inconsistent")
        if not self.orientable and self.group.free_rank == 0 and 2 not in self.group.primes():
            raise ValueError(
                "a non-orientable manifold needs an index-2 subgroup in its fundamental group"
            )


def _merge(*lists) -> tuple[str, ...]:
    out = []
    for lst in lists:
        for c in lst:
            if c not in out:
                out.append(c)
    return tuple(out)


def _nonspin_part(part: AbelianGroupSpec, q: ManifoldQuery) -> Verdict:
    """Verdict for a non-spin-cover manifold whose group is a p-group (or trivial)."""
    base = Verdict(VerdictStatus.YAMABE_NONNEG_GUARANTEED, ("Thm 4.1",))
    p = part.primes()[0]
    psc_rule = (p != 2 and q.orientable and part.is_elementary) or (p == 2 and not q.orientable)
    if not psc_rule:
        note = (
            "psc open for non-elementary abelian p-groups"
            if p != 2
            else "psc rule at p = 2 needs a non-orientable manifold"
        )
        cites = ("Thm 4.1", "Problem 5.11") if p != 2 else ("Thm 4.1",)
        return Verdict(base.status, cites, note)
    if q.homology_class is ClassLabel.ATORAL:
        return Verdict(VerdictStatus.PSC_GUARANTEED, ("Thm 4.1", "Thm 5.8"), "atoral class")
    if q.dimension > part.rank:
        return Verdict(
            VerdictStatus.PSC_GUARANTEED,
            ("Thm 4.1", "Thm 5.8"),
            f"n = {q.dimension} > rank {part.rank}: no toral classes",
        )
    if q.homology_class is ClassLabel.TORAL:
        return Verdict(VerdictStatus.OPEN_TORAL, ("Thm 4.1", "Problem 5.9"), "toral class")
    return Verdict(
        base.status,
        base.citations,
        f"n = {q.dimension} <= rank {part.rank}: class may be toral; psc decided only for atoral classes",
    )


def meet(verdicts: list[Verdict]) -> VerdictStatus:
    return min(v.status for v in verdicts)


def classify_manifold(q: ManifoldQuery) -> Verdict:
    """Theorem-cited verdict on psc / nonnegative Yamabe invariant."""
    g = q.group
    if q.dimension < 5:
        return Verdict(VerdictStatus.NOT_COVERED, (), "dimension below 5: no rule applies")

    if q.spin is SpinStatus.SPIN:
        if g.free_rank == 0 and (g.order or 1) % 2 == 1:
            cites = ("Thm 4.5",) if len(g.primes()) <= 1 else ("Thm 2.8", "Thm 4.5", "Thm 1.1")
            return Verdict(VerdictStatus.YAMABE_NONNEG_GUARANTEED, cites, "spin, odd order")
        if g.free_rank == 0:
            return Verdict(VerdictStatus.NOT_COVERED, (), "spin with even order is open (Problem 5.10)")
        return Verdict(VerdictStatus.NOT_COVERED, (), "spin with infinite fundamental group is not covered")

    if g.free_rank:
        return Verdict(
            VerdictStatus.YAMABE_NONNEG_GUARANTEED,
            ("Thm 4.1",),
            "infinite abelian group: psc rules need a finite p-group",
        )

    primes = (2,) if not q.orientable else g.primes()
    if not primes:
        return Verdict(VerdictStatus.PSC_GUARANTEED, ("Thm 4.1", "Thm 5.8"), "trivial group")
    parts = [_nonspin_part(g.sylow(p), q) for p in primes]
    if len(parts) == 1 and len(g.primes()) <= 1:
        return parts[0]
    status = meet(parts)
    cites = _merge(("Thm 2.8",), *[v.citations for v in parts if v.status is status])
    if status is VerdictStatus.PSC_GUARANTEED and q.orientable:
        cites = _merge(cites, ("Thm 1.2",))
    notes = "; ".join(f"p={p}: {v.status.label}" + (f" ({v.notes})" if v.notes else "") for p, v in zip(primes, parts))
    return Verdict(status, cites, notes)
