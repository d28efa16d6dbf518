"""
Euler class orders over cyclic groups
=====================================

The Euler class of the character xi^k over C_n generates a cyclic group
of order n / gcd(n, k).  This script computes those orders from honest
cochain complexes (no formula is consulted) and then shows the striking
consequence: the Euler class of the reduced regular representation
vanishes exactly when n has two distinct prime divisors.
"""

import math

from bredonkit import CyclicGroup, euler_order, euler_reduced_regular_vanishes

# orders of single characters, computed vs. the quotient-order formula
print("order of the Euler class of xi^k over C_n")
print()
print(" n  " + "".join("%4s" % ("k=%d" % k) for k in range(1, 8)))
for n in range(2, 16):
    group = CyclicGroup(n)
    cells = []
    for k in range(1, 8):
        if k > n // 2:
            cells.append("   .")
            continue
        order = euler_order(group, k)
        assert order == n // math.gcd(n, k)
        cells.append("%4d" % order)
    print("%2d  %s" % (n, "".join(cells)))

print()

# the regular representation: product of all the character Euler classes
print("does the Euler class of the reduced regular representation vanish?")
print()
for n in (2, 3, 4, 5, 6, 7, 9, 10, 12, 15, 30):
    verdict = euler_reduced_regular_vanishes(CyclicGroup(n))
    mark = "vanishes" if verdict["vanishes"] else "order %s" % verdict["order"]
    extra = ""
    if verdict["witnesses"]:
        pair = ", ".join("xi^%d has order %d" % (w["character"], w["order"])
                         for w in verdict["witnesses"])
        extra = "   (%s: coprime orders force the product to die)" % pair
    print("  C_%-3d %s%s" % (n, mark, extra))

print()
print("prime powers keep a nonzero Euler class; two distinct primes kill it.")
