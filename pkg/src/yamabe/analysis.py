"""Curvature-integral bounds for products and Toda-bracket manifolds.

The Yamabe invariant of a manifold without psc is minus the infimum of the
``L^{n/2}`` norm of scalar curvature. These functions evaluate the upper
bounds on that norm for the explicit metrics used in the product and
Toda-bracket constructions, and search for parameters driving the bound below
a target. Everything is double precision; the bounds are estimates, not
identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple


def warped_scalar_curvature(f: float, f_prime: float, f_double_prime: float, s_fiber: float, n_fiber: int) -> float:
    """Scalar curvature of ``f(x)^2 g + dx^2`` with ``g`` of scalar curvature ``s_fiber``:

        s_fiber / f^2 - n (n - 1) (f'/f)^2 - 2 n f''/f
    """
    if not f > 0:
        raise ValueError("warping function must be positive")
    if n_fiber < 1:
        raise ValueError("fiber dimension must be positive")
    n = n_fiber
    ratio = f_prime / f
    return s_fiber / (f * f) - n * (n - 1) * ratio * ratio - 2 * n * f_double_prime / f


@dataclass(frozen=True)
class ProductBoundParams:
    """``M^m x N^n`` with metric ``g_eps x t g'``; ``C = max |s_{g'}|``."""

    m: int
    n: int
    C: float
    t: float
    eps: float

    def __post_init__(self):
        if self.m < 0 or self.n < 1:
            raise ValueError("need m >= 0 and n >= 1")
        if self.C < 0 or self.eps < 0:
            raise ValueError("C and eps must be nonnegative")
        if not self.t > 0:
            raise ValueError("scale t must be positive")


def product_bound(p: ProductBoundParams) -> float:
    """``t^m |C t^-2 + eps|^((n+m)/2)``."""
    return p.t**p.m * abs(p.C * p.t**-2 + p.eps) ** ((p.n + p.m) / 2)


@dataclass(frozen=True)
class TodaBoundParams:
    n0: int
    n1: int
    c0: float
    c1: float
    d0: float
    d1: float
    t0: float
    t1: float
    l: float
    eps: float

    def __post_init__(self):
        if self.n0 < 1 or self.n1 < 1:
            raise ValueError("factor dimensions must be positive")
        if not (self.c0 > 0 and self.c1 > 0):
            raise ValueError("volume constants c0, c1 must be positive")
        if self.d0 < 0 or self.d1 < 0:
            raise ValueError("tube constants d0, d1 must be nonnegative")
        if not (0 < self.t0 < 1 and 0 < self.t1 < 1):
            raise ValueError("scale factors t0, t1 must lie in (0, 1)")
        if not self.l > 0:
            raise ValueError("tube length must be positive")
        if self.eps < 0:
            raise ValueError("eps must be nonnegative")

    @property
    def total_dim(self) -> int:
        return self.n0 + self.n1 + 1


class TodaTerms(NamedTuple):
    piece0: float
    piece1: float
    tube0: float
    tube1: float

    @property
    def total(self) -> float:
        # fixed summation order
        return ((self.piece0 + self.piece1) + self.tube0) + self.tube1


def toda_bound_terms(p: TodaBoundParams) -> TodaTerms:
    """The four pieces: two end pieces, then the two warped tubes."""
    N = p.total_dim
    half = N / 2
    piece0 = p.c0 * p.t1 ** (p.n1 - N) * p.eps**half
    piece1 = p.c1 * p.t0 ** (p.n0 - N) * p.eps**half
    tube0 = p.l * abs(p.eps + p.eps / p.t0**2 + p.d0 * math.log(1 / p.t0) ** 2 / p.l**2) ** half
    tube1 = p.l * abs(p.eps + p.eps / p.t1**2 + p.d1 * math.log(1 / p.t1) ** 2 / p.l**2) ** half
    return TodaTerms(piece0, piece1, tube0, tube1)


def toda_bound(p: TodaBoundParams) -> float:
    return toda_bound_terms(p).total


def piece_terms_rewritten(p: TodaBoundParams) -> tuple[float, float]:
    """End pieces as ``c_i eps^(n_j/2) (eps / t_j^2)^((n_i + 1)/2)``."""
    a0 = p.c0 * p.eps ** (p.n1 / 2) * (p.eps / p.t1**2) ** ((p.n0 + 1) / 2)
    a1 = p.c1 * p.eps ** (p.n0 / 2) * (p.eps / p.t0**2) ** ((p.n1 + 1) / 2)
    return a0, a1


def choose_parameters(
    n0: int,
    n1: int,
    c0: float,
    c1: float,
    d0: float,
    d1: float,
    delta: float,
    t: float = 0.1,
    max_steps: int = 4000,
) -> TodaBoundParams:
    """Parameters with ``toda_bound < delta``, found in three stages.

    1. fix the scales ``t0 = t1 = t``;
    2. double the tube length until each tube term at ``eps = 0`` is below delta/8;
    3. halve ``eps`` until both end pieces are below delta/8 and each tube
       below delta/4.

    The result is certified by re-evaluating the bound.
    """
    if not delta > 0:
        raise ValueError("delta must be positive")
    if not 0 < t < 1:
        raise ValueError("t must lie in (0, 1)")
    p = TodaBoundParams(n0, n1, c0, c1, d0, d1, t, t, 1.0, 0.0)

    for _ in range(max_steps):
        terms = toda_bound_terms(p)
        if terms.tube0 < delta / 8 and terms.tube1 < delta / 8:
            break
        p = replace(p, l=p.l * 2)
    else:
        raise RuntimeError("tube length search did not converge")

    p = replace(p, eps=1.0)
    for _ in range(max_steps):
        terms = toda_bound_terms(p)
        if (
            terms.piece0 < delta / 8
            and terms.piece1 < delta / 8
            and terms.tube0 < delta / 4
            and terms.tube1 < delta / 4
        ):
            break
        p = replace(p, eps=p.eps / 2)
    else:
        raise RuntimeError("eps search did not converge")

    if not toda_bound(p) < delta:
        raise RuntimeError(f"certification failed: bound {toda_bound(p)} >= {delta}")
    return p
