"""
Homology of abelian classifying spaces
======================================

Integral and mod-2 homology of B(pi) for a few abelian groups, built by
folding the Kunneth formula over the cyclic factors, and the Poincare series
of an elementary abelian group.
"""

from yamabe.homology import (
    AbelianGroupSpec,
    Coeff,
    homology_of_abelian,
    kunneth,
    cyclic_homology,
    poincare_series_closed,
    poincare_series_recursive,
)

# a single cyclic group: Z in degree 0, Z/9 in odd degrees, nothing else
print([str(g) for g in cyclic_homology(3, 2, Coeff.INTEGERS, 6)])

# two copies of Z/3, with the Kunneth bookkeeping for degree 3
h1 = cyclic_homology(3, 1, Coeff.INTEGERS, 3)
h, terms = kunneth(h1, h1)
print("H_3 =", h[3])
for t in terms[3]:
    print(f"  {t.kind.value:6s} H_{t.left_degree} x H_{t.right_degree} -> {t.value}")

# mixed group with a free factor
spec = AbelianGroupSpec.parse("Z x Z/4 x Z/2")
for n, g in enumerate(homology_of_abelian(spec, Coeff.INTEGERS, 4)):
    print(n, g)

# mod-2 homology of (Z/2)^3: ranks are C(n+2, 2)
print([g.rank for g in homology_of_abelian(AbelianGroupSpec.elementary(2, 3), Coeff.MOD2, 6)])

# Poincare series of (Z/p)^3 two ways
print(poincare_series_recursive(3, 10))
print(poincare_series_closed(3, 10))
