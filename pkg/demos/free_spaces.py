"""
Cohomology of free complexes and the u / a / kappa operators
============================================================

A free C_p-complex has its graded cohomology concentrated on the quotient,
read off by a single underlying degree.  On top of that table live three
operators: the invertible periodicity class u, the Euler operator a of the
standard character (computed at the chain level by fiber integration), and
the exterior generator kappa.  This script walks a truncated lens space
through all three and shows the truncation threshold for powers of a.
"""

from bredonkit import (CyclicGroup, ecp_skeleton, free_cohomology, irrep,
                       module_action, sphere_of_rep, unit_class)

p = 3
group = CyclicGroup(p)

# the unit sphere of m copies of xi: a free (2m-1)-sphere, quotient a lens space
for m in (2, 3):
    x = sphere_of_rep(irrep(group, 1) * m)
    tab = free_cohomology(x)
    print("S(%d*xi) over C_%d: quotient dimensions %s" % (m, p, list(tab.dims())))

    # powers of the Euler operator truncate exactly at the skeleton
    c = unit_class(x)
    k = 0
    trail = ["1"]
    while True:
        c = module_action(x, "a", c)
        k += 1
        if c.is_zero():
            trail.append("a^%d = 0" % k)
            break
        trail.append("a^%d != 0 at grading %s" % (k, c.grading))
    print("  " + "; ".join(trail))
    print("  threshold: a^k . 1 survives exactly for k <= %d" % (m - 1))
    print()

# the operator identities, on the minimal periodic skeleton (kappa needs
# the one-cell-per-degree model, where cup products are known)
x = ecp_skeleton(p, 2)
one = unit_class(x)

a1 = module_action(x, "a", one)
y1 = module_action(x, "y", one)
u_y1 = module_action(x, "u", y1)
print("a . 1 == u . (y . 1):", a1 == u_y1)

up = module_action(x, "u", one)
down = module_action(x, "u^-1", up)
print("u is invertible: u^-1(u(1)) == 1:", down == one)

k1 = module_action(x, "kappa", one)
print("kappa . 1 lives at grading %s and kappa^2 . 1 is zero: %s"
      % (k1.grading, module_action(x, "kappa", k1).is_zero()))
