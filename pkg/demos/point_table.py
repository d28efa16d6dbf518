"""
The RO(C_p)-graded cohomology of a point, three ways
====================================================

Computes the mod-p cohomology of the two-point sphere over a window of
gradings (m, n) -- meaning degree m + n*xi -- by three independent routes
(explicit sphere models, a two-term Tate-style cochain, and the closed
form) and prints the table with its monomial labels.
"""

from bredonkit import mp_group

p = 3
print("graded point table for C_%d   (rows m, columns n)" % p)
print()

# every entry is computed three times; a disagreement would raise here
header = "m\\n " + "".join("%14d" % n for n in range(-2, 3))
print(header)
for m in range(-4, 5):
    row = ["%3d " % m]
    for n in range(-2, 3):
        results = [mp_group(p, (m, n), method) for method in "abc"]
        assert all((r.dim, r.labels) == (results[0].dim, results[0].labels)
                   for r in results)
        g = results[0]
        row.append("%14s" % (g.labels[0] if g.labels else "."))
    print("".join(row))

print()
print("legend: a^i k^e u^j  are products of the Euler class a of xi,")
print("the exterior generator k, and the periodicity class u; entries")
print("starting with S-1 live in the negative cone (dual, shifted by one).")
print("Dots are zero groups.  The gap row m = 1, n >= 0 is the first")
print("thing any implementation gets wrong; here all three methods agree.")
