"""
Toral and atoral classes
========================

Split H_n(B(Z/3)^3) into the part coming from tori and its inductive
complement, then look at where each summand came from.
"""

from collections import Counter

from yamabe.homology import AbelianGroupSpec, Coeff
from yamabe.structure import atoral_split, toral_rank

spec = AbelianGroupSpec.elementary(3, 3)
for b in atoral_split(spec, Coeff.INTEGERS, 6):
    print(f"n={b.degree}  H_n={b.group}  toral={b.toral_count} (C(3,n)={toral_rank(3, b.degree)})  atoral={b.atoral_count}")

# provenance of the degree-4 atoral summands
deg4 = atoral_split(spec, Coeff.INTEGERS, 4)[4]
print(Counter(e.label.provenance.value for e in deg4.entries))

# the 2-group case uses mod-2 coefficients
for b in atoral_split(AbelianGroupSpec.parse("Z/4 x Z/2"), Coeff.MOD2, 4):
    print(b.degree, b.toral_count, b.atoral_count)
