"""
Non-existence certificates for equivariant maps
===============================================

A certificate records two computations: the cohomology of the target
representation sphere vanishes in the critical grading, while the k-fold
Euler power of the unit survives on the source.  Together these rule out
any equivariant map.  Certificates serialize to JSON and re-verify from
the serialized copy alone; tampering is detected.
"""

import json

from bredonkit import certify, conf2_problem, recheck, surrogate_problem

# the two-point case is the classical antipodal theorem, no assumptions
problem = conf2_problem(3)
cert = certify(problem)
print("claim:", cert["conclusion"])
print()
print("assumptions:", cert["assumptions"] or "none")
print("witness: a^%d . 1 = %s in %s" % (
    cert["witness_record"]["k"],
    cert["witness_record"]["vector"],
    cert["witness_record"]["home"]))
print()

# odd primes use a surrogate source skeleton and say so on the record
cert3 = certify(surrogate_problem(3, 2))
print("surrogate claim for p = 3, d = 2:")
print(" ", cert3["conclusion"][:72] + "...")
print("  assumption on record:", len(cert3["assumptions"]) == 1)
print()

# round-trip through JSON and re-verify from the stored copy
blob = cert.to_json()
stored = json.loads(blob)
print("serialized bytes:", len(blob))
print("re-verification of the stored copy:", recheck(stored))

# any edit to the stored record is caught by recomputation
stored["witness_record"]["vector"] = [0]
try:
    recheck(stored)
    print("tampered copy slipped through (should not happen)")
except Exception as err:
    print("tampered copy rejected:", type(err).__name__)
