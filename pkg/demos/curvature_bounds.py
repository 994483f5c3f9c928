"""
Driving the curvature integral to zero
======================================

Evaluate the four-term bound for the Toda-bracket metric and run the
parameter schedule for shrinking targets.
"""

from yamabe.analysis import TodaBoundParams, choose_parameters, toda_bound, toda_bound_terms

for delta in (1e-1, 1e-3, 1e-6, 1e-9):
    p = choose_parameters(3, 3, 1, 1, 1, 1, delta)
    print(f"delta={delta:.0e}  l={p.l:g}  eps={p.eps:.3e}  bound={toda_bound(p):.3e}")

# the bound grows with eps at fixed t and l
for eps in (1e-8, 1e-6, 1e-4, 1e-2, 1.0):
    p = TodaBoundParams(3, 3, 1, 1, 1, 1, 0.1, 0.1, 16, eps)
    print(f"eps={eps:.0e}", toda_bound_terms(p))
