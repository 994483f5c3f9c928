"""
Verdicts for closed manifolds
=============================

Feed a fundamental group, a dimension and spin data to the rule cascade and
read back a status with the theorems it relies on.
"""

from yamabe.geometry import ClassLabel, ManifoldQuery, SpinStatus, classify_manifold
from yamabe.homology import AbelianGroupSpec

queries = [
    ("(Z/3)^2", 5, SpinStatus.NONSPIN_COVER, True, ClassLabel.UNSPECIFIED),
    ("(Z/3)^5", 5, SpinStatus.NONSPIN_COVER, True, ClassLabel.TORAL),
    ("(Z/3)^5", 5, SpinStatus.NONSPIN_COVER, True, ClassLabel.ATORAL),
    ("Z/4 x Z/2", 6, SpinStatus.NONSPIN_COVER, True, ClassLabel.UNSPECIFIED),
    ("Z/4 x Z/2", 6, SpinStatus.NONSPIN_COVER, False, ClassLabel.UNSPECIFIED),
    ("Z/7 x Z/7", 6, SpinStatus.SPIN, True, ClassLabel.UNSPECIFIED),
    ("(Z/3)^2 x (Z/5)^3", 6, SpinStatus.NONSPIN_COVER, True, ClassLabel.UNSPECIFIED),
    ("Z/9", 4, SpinStatus.NONSPIN_COVER, True, ClassLabel.UNSPECIFIED),
]
for text, n, spin, orientable, label in queries:
    v = classify_manifold(ManifoldQuery(AbelianGroupSpec.parse(text), n, spin, orientable, label))
    print(f"{text:18s} n={n} {spin.value:13s} orientable={orientable!s:5s} {label.value:11s} -> "
          f"{v.status.label} {list(v.citations)}")
