"""
Geometric generators
====================

Each labelled Kunneth summand gets a manifold: lens spaces for cyclic pieces,
products for tensor pieces, Toda brackets for Tor pieces. Curvature status
then follows from a small rule set.
"""

from yamabe.geometry import (
    Circle,
    Lens,
    Product,
    RealProj,
    TodaBracket,
    curvature_class,
    enumerate_generators,
    shuffle_toda,
    span_check,
)
from yamabe.homology import AbelianGroupSpec, Coeff

spec = AbelianGroupSpec.elementary(3, 2)
for n in (3, 5):
    for g in enumerate_generators(spec, Coeff.INTEGERS, n):
        print(n, g.term, g.entry.summand, g.status.label)

# the span check compares generators against the homology engine
print(span_check(AbelianGroupSpec.elementary(5, 3), Coeff.INTEGERS, 7).to_dict())

# mod-2 generators for Z/8 use projective spaces and a transfer
for n in range(1, 5):
    (g,) = enumerate_generators(AbelianGroupSpec.parse("Z/8"), Coeff.MOD2, n)
    print(n, g.term)

# the one configuration the Toda rule cannot handle
torus = Product((Circle(), Circle()))
print(curvature_class(TodaBracket(torus, 3, RealProj(2))).label)

# moving a product factor out of a bracket
g = TodaBracket(Product((Circle(), Lens(3, 1, 3))), 3, Lens(3, 1, 1))
print(g, "=", shuffle_toda(g))
