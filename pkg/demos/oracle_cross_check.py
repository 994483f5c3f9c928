"""
Checking the engine against brute force
=======================================

The oracle builds explicit chain complexes (periodic resolutions tensored
together) and reads homology off Smith normal forms. It never touches the
Kunneth formula, so agreement is a real check.
"""

from yamabe.homology import AbelianGroupSpec, Coeff, homology_of_abelian
from yamabe.oracle import oracle_homology, product_complex, tor_bruteforce
from yamabe.smith import IntMatrix, smith_normal_form

c = product_complex([3, 3], Coeff.INTEGERS, 4)
print("chain ranks", c.ranks, "d^2 = 0:", c.d_squared_zero())

for orders in ([3, 3], [9, 3], [4, 2, 2], [0, 6]):
    ok = oracle_homology(orders, Coeff.INTEGERS, 6) == homology_of_abelian(
        AbelianGroupSpec.from_orders(orders), Coeff.INTEGERS, 6
    )
    print(orders, "agree" if ok else "DISAGREE")

print("Tor(Z/6, Z/4) =", tor_bruteforce(6, 4))

f = smith_normal_form(IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))
print("SNF diagonal", f.diagonal)
