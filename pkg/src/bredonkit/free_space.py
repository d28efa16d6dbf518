"""Cohomology of free C_p complexes as modules over the point ring.

When a complex is free away from its basepoint, its reduced graded
cohomology collapses onto the quotient space: every group in grading
(m, n) is H^s(X/G; F_p) for the single underlying degree s (= m + 2n for
odd p, m + n for p = 2).  This module computes that table once and then
realises the three operators that move classes around it:

  * u  -- the periodicity unit: a pure regrade, same underlying vector;
  * a  -- the Euler operator of the standard character, computed honestly
          on cochains by fiber integration through the quotient of the
          sphere bundle S(eta) x X -> X;
  * kappa -- the exterior degree-1 generator, supported only on the
          built-in periodic skeleta where the quotient ring is known.

Multiplication by the polynomial generator y is not implemented through a
classifying map; it is the composite (a action) o (u-inverse action),
which is the same element of the ring.
"""

import numpy as np

from .cyclic_reps import IrrepLabel, VirtualRep, canonicalize, irrep
from .errors import (InvariantViolation, KappaUnsupported, NotFree, NotPrime,
                     UnsupportedGrading)
from .exact_linalg import GroupPresentation, fp_row_reduce, fp_solve
from .mackey_bredon import (CohomologyClass, MackeyCoefficients,
                            _grading_pair, _is_prime, ro_graded_cohomology)


def _prime_order(group):
    p = group.order
    if not _is_prime(p):
        raise NotPrime("free-space cohomology works over C_p, not C_%d" % p)
    return p


def _require_free(x):
    fid = x.first_fixed_cell(ignore_basepoint=True)
    if fid is not None:
        stab = next(c.stab for c in x.cells if c.id == fid)
        raise NotFree("cell %r has stabilizer of order %d" % (fid, stab))


def _normal_form(u, db_prev, p):
    """Canonical coset representative of u modulo the columns of db_prev."""
    u = np.asarray(u, dtype=np.int64) % p
    if u.size == 0 or db_prev.shape[1] == 0:
        return u
    red, pivots = fp_row_reduce(db_prev.T, p)
    for r, c in enumerate(pivots):
        u = (u - int(u[c]) * red[r]) % p
    return u


class _FiberModel:
    """Cochain model of the bundle (S(eta) x X)/G -> X/G for one character.

    Over every orbit s-cell of X the total space carries p vertex-type
    cells in degree s and, when the fiber circle has an edge (odd p), p
    edge-type cells in degree s+1; the label delta in <v, delta, x> or
    <e, delta, x> records the relative translate.  The pullback, the
    gauge-normalised cokernel and the fiber sum are all matrices mod p,
    so one Euler step is a single linear solve.
    """

    def __init__(self, x, p, edge_word):
        self.p = p
        # edge_word: boundary of the fiber edge as (position, coeff) pairs,
        # or None when the fiber is the free two-point sphere (p = 2).
        self.edge_word = tuple(edge_word) if edge_word is not None else None
        q = x.quotient(drop_basepoint=x.is_based)
        self.q = q
        self.ids = [list(layer) for layer in q.layers]
        index = [{cid: i for i, cid in enumerate(layer)} for layer in self.ids]
        # equivariant boundary words per kept cell: (target index, pos, coeff)
        self.words = {}
        for s in range(1, len(self.ids)):
            for cid in self.ids[s]:
                terms = []
                for tid, word in x.boundary_of(cid):
                    if tid not in index[s - 1]:
                        continue  # collapsed basepoint
                    i = index[s - 1][tid]
                    terms.extend((i, a, c) for a, c in enumerate(word) if c)
                self.words[cid] = tuple(terms)
        self._de = {}

    # -- sizes ------------------------------------------------------------

    def bsize(self, s):
        return len(self.ids[s]) if 0 <= s < len(self.ids) else 0

    def esize(self, s):
        n = self.p * self.bsize(s)
        if self.edge_word is not None:
            n += self.p * self.bsize(s - 1)
        return n

    def qsize(self, s):
        n = (self.p - 1) * self.bsize(s)
        if self.edge_word is not None:
            n += self.p * self.bsize(s - 1)
        return n

    # -- structure matrices (all act on cochain vectors mod p) ------------

    def dbmat(self, s):
        """delta_B: B^s -> B^(s+1), the transposed quotient boundary."""
        m = self.q.boundary(s + 1)
        return np.array(m.data, dtype=np.int64).reshape(self.bsize(s),
                                                        self.bsize(s + 1)).T % self.p

    def demat(self, s):
        """delta_E: E^s -> E^(s+1) for the total-space quotient."""
        if s in self._de:
            return self._de[s]
        p = self.p
        nb0, nb1 = self.bsize(s), self.bsize(s + 1)
        m = np.zeros((self.esize(s + 1), self.esize(s)), dtype=np.int64)
        # vertex-type (s+1)-cells sit over (s+1)-cells of the base
        for j, cid in enumerate(self.ids[s + 1] if s + 1 < len(self.ids) else []):
            for i, a, c in self.words[cid]:
                for d in range(p):
                    m[d * nb1 + j, ((d + a) % p) * nb0 + i] += c
        if self.edge_word is not None:
            roff = p * nb1
            coff = p * nb0
            nbm = self.bsize(s - 1)
            # edge-type (s+1)-cells sit over s-cells of the base
            for j, cid in enumerate(self.ids[s] if s < len(self.ids) else []):
                for d in range(p):
                    row = roff + d * nb0 + j
                    for pos, c in self.edge_word:
                        m[row, ((d - pos) % p) * nb0 + j] += c
                    for i, a, c in self.words.get(cid, ()):
                        m[row, coff + ((d + a) % p) * nbm + i] -= c
        m %= p
        self._de[s] = m
        return m

    def pimat(self, s):
        """Pullback B^s -> E^s: constant across translates, zero on edges."""
        m = np.zeros((self.esize(s), self.bsize(s)), dtype=np.int64)
        for d in range(self.p):
            for i in range(self.bsize(s)):
                m[d * self.bsize(s) + i, i] = 1
        return m

    def lift(self, s):
        """Gauge section Q^s -> E^s (translate 0 of every vertex zeroed)."""
        nb = self.bsize(s)
        m = np.zeros((self.esize(s), self.qsize(s)), dtype=np.int64)
        for d in range(1, self.p):
            for i in range(nb):
                m[d * nb + i, (d - 1) * nb + i] = 1
        if self.edge_word is not None:
            for k in range(self.p * self.bsize(s - 1)):
                m[self.p * nb + k, (self.p - 1) * nb + k] = 1
        return m

    def gauge(self, s):
        """Projection E^s -> Q^s killing the pullback image."""
        nb = self.bsize(s)
        m = np.zeros((self.qsize(s), self.esize(s)), dtype=np.int64)
        for d in range(1, self.p):
            for i in range(nb):
                m[(d - 1) * nb + i, d * nb + i] = 1
                m[(d - 1) * nb + i, i] = -1 % self.p
        if self.edge_word is not None:
            for k in range(self.p * self.bsize(s - 1)):
                m[(self.p - 1) * nb + k, self.p * nb + k] = 1
        return m

    def fiber(self, s):
        """Fiber sum Q^s -> B^(s-1) (edges) or Q^s -> B^s (two-point fiber)."""
        nb = self.bsize(s)
        if self.edge_word is None:
            m = np.zeros((nb, self.qsize(s)), dtype=np.int64)
            for i in range(nb):
                m[i, i] = 1
            return m
        nbm = self.bsize(s - 1)
        m = np.zeros((nbm, self.qsize(s)), dtype=np.int64)
        off = (self.p - 1) * nb
        for d in range(self.p):
            for i in range(nbm):
                m[i, off + d * nbm + i] = 1
        return m

    # -- the Euler step ----------------------------------------------------

    def euler_step(self, s, u):
        """Image of the cocycle u in B^s under the connecting map.

        Solves for a relative cochain q with delta q = 0 whose fiber sum is
        u up to a coboundary, then reads the class of delta of its gauge
        lift back through the pullback.  Output degree is s+2 when the
        fiber has an edge, s+1 for the two-point fiber.
        """
        p = self.p
        qdeg = s + 1 if self.edge_word is not None else s
        out = qdeg + 1
        if self.bsize(s) == 0:
            return np.zeros(self.bsize(out), dtype=np.int64)
        u = np.asarray(u, dtype=np.int64) % p
        if u.shape[0] != self.bsize(s):
            raise ValueError("cochain does not match the quotient in degree %d" % s)
        if np.any((self.dbmat(s) @ u) % p):
            raise ValueError("Euler step needs a cocycle")
        nq = self.qsize(qdeg)
        nw = self.bsize(s - 1)
        dq = (self.gauge(qdeg + 1) @ self.demat(qdeg) @ self.lift(qdeg)) % p
        fib = self.fiber(qdeg)
        top = np.hstack([dq, np.zeros((dq.shape[0], nw), dtype=np.int64)])
        bot = np.hstack([fib, (-self.dbmat(s - 1)) % p if nw else
                         np.zeros((self.bsize(s), 0), dtype=np.int64)])
        rhs = np.concatenate([np.zeros(dq.shape[0], dtype=np.int64), u])
        sol = fp_solve(np.vstack([top, bot]), rhs, p)
        if sol is None:
            raise InvariantViolation("fiber integration system is inconsistent")
        qt = self.lift(qdeg) @ (np.asarray(sol[:nq], dtype=np.int64) % p)
        dqt = (self.demat(qdeg) @ qt) % p
        a = dqt[:self.bsize(out)]
        if not np.array_equal(dqt, (self.pimat(out) @ a) % p):
            raise InvariantViolation("connecting cochain is not a pullback")
        return a


def _edge_word(p, k):
    """Boundary word of the fiber edge of S(eta_k), or None for p = 2."""
    if p == 2:
        return None
    return ((pow(k, -1, p), 1), (0, -1))


def _coerce_rep(group, v):
    if isinstance(v, VirtualRep):
        return v
    if isinstance(v, IrrepLabel):
        return irrep(v.group, v.k)
    return irrep(group, int(v))


def _pair(grading, p):
    if isinstance(grading, VirtualRep):
        grading = canonicalize(grading, p)
    return _grading_pair(grading)


def euler_action_free(x, mackey, c, v):
    """Multiply c by the Euler class of V on a complex free off the basepoint.

    Works one character at a time: each summand of V contributes one fiber
    integration through its own sphere bundle, so the result is exact on
    cochain representatives.  Characters with a fixed direction kill the
    class (the Euler class of a trivial summand is zero).
    """
    p = _prime_order(x.group)
    if mackey is None:
        mackey = MackeyCoefficients(x.group, ("F", p))
    if mackey.p != p:
        raise UnsupportedGrading("free-space actions are computed mod p over C_p")
    _require_free(x)
    v = _coerce_rep(x.group, v)
    if not v.is_actual:
        raise UnsupportedGrading("Euler classes exist for actual representations")
    m, n = _pair(c.grading, p)
    step = x.group.label_dim(1)  # underlying degree of one character
    chars = []
    for k, mult in sorted(v.mult.items()):
        if k != 0:
            chars.extend([k] * mult)
    target = (m + v.multiplicity(0), n + len(chars))
    home = ro_graded_cohomology(x, mackey, target)
    if v.multiplicity(0) > 0 or c.is_zero():
        return CohomologyClass.zero(target, home,
                                    model={"kind": "free-quotient",
                                           "degree": m + v.multiplicity(0) + step * (n + len(chars))})
    s = m + step * n
    vec = np.asarray(c.vector, dtype=np.int64) % p
    for k in chars:
        model = _FiberModel(x, p, _edge_word(p, k))
        if vec.shape[0] != model.bsize(s):
            raise ValueError("class vector does not match the quotient in degree %d" % s)
        vec = model.euler_step(s, vec)
        s += step
        vec = _normal_form(vec, model.dbmat(s - 1), p)
    info = {"kind": "free-quotient", "degree": s}
    if not np.any(vec):
        return CohomologyClass.zero(target, home, model=info)
    return CohomologyClass(target, vec, home, model=info)


_GENERATORS = {
    "u": "u", "u_xi": "u", "u_sigma": "u",
    "u^-1": "u-1", "u-1": "u-1", "u_xi^-1": "u-1", "u_sigma^-1": "u-1",
    "a": "a", "a_xi": "a", "a_sigma": "a",
    "kappa": "kappa", "kappa_xi": "kappa",
    "y": "y", "y_xi": "y",
}


def module_action(x, generator, c):
    """Action of a point-ring generator on a class over a free complex.

    generator is one of "u" (periodicity, grading shift (-2, 1) for odd p
    and (-1, 1) for p = 2, same vector), "u^-1" (its inverse), "a" (the
    chain-level Euler operator of the standard character), "y" (the
    composite a o u^-1), or "kappa" (degree-1 exterior generator,
    supported only on the built-in periodic skeleta).
    """
    p = _prime_order(x.group)
    _require_free(x)
    try:
        name = _GENERATORS[generator]
    except KeyError:
        raise ValueError("unknown generator %r (use u, u^-1, a, y, kappa)"
                         % (generator,))
    mackey = MackeyCoefficients(x.group, ("F", p))
    m, n = _pair(c.grading, p)
    step = x.group.label_dim(1)
    if name == "u" or name == "u-1":
        sgn = 1 if name == "u" else -1
        target = (m - sgn * step, n + sgn)
        home = ro_graded_cohomology(x, mackey, target)
        info = dict(c.model) if c.model else {"kind": "free-quotient"}
        info["degree"] = m + step * n
        if c.is_zero():
            return CohomologyClass.zero(target, home, model=info)
        return CohomologyClass(target, c.vector, home, model=info)
    if name == "a":
        return euler_action_free(x, mackey, c, irrep(x.group, 1))
    if name == "y":
        return module_action(x, "a", module_action(x, "u^-1", c))
    # kappa: only where the quotient ring is known (periodic skeleta)
    if p == 2:
        raise KappaUnsupported("no exterior generator mod 2")
    if x.tags.get("periodic_model") != p:
        raise KappaUnsupported("kappa is supported only on the built-in "
                               "periodic skeleta of C_%d" % p)
    s = m + step * n
    top = x.tags.get("top", -1)
    target = (m - 1, n + 1)
    home = ro_graded_cohomology(x, mackey, target)
    info = {"kind": "free-quotient", "degree": s + 1}
    coeff = (c.vector[0] if c.vector else 0) % p
    if s % 2 == 0 and 0 <= s + 1 <= top and coeff:
        return CohomologyClass(target, (coeff,), home, model=info)
    return CohomologyClass.zero(target, home, model=info)


def unit_class(x):
    """The class of 1 in grading (0, 0): the all-ones vertex cocycle."""
    p = _prime_order(x.group)
    _require_free(x)
    q = x.quotient(drop_basepoint=x.is_based)
    ones = np.ones(q.size(0), dtype=np.int64)
    d1 = np.array(q.boundary(1).data, dtype=np.int64).reshape(q.size(0), -1)
    if np.any(d1.T @ ones % p):
        raise InvariantViolation("quotient edges do not have augmentation-zero "
                                 "boundary; no canonical unit")
    home = q.cohomology(0, ("F", p))
    return CohomologyClass((0, 0), ones, home,
                           model={"kind": "free-quotient", "degree": 0})


class FreeSpaceCohomology:
    """Cohomology table of a free complex: H^s(X/G; F_p) for every s.

    Graded reads collapse through the periodicity unit, so the table plus
    the unit record determines every group: the dimension in grading
    (m, n) depends only on the underlying degree.
    """

    def __init__(self, space):
        self.space = space
        self.group = space.group
        self.p = _prime_order(space.group)
        _require_free(space)
        self.quotient = space.quotient(drop_basepoint=space.is_based)
        ring = ("F", self.p)
        self.groups = tuple(self.quotient.cohomology(s, ring)
                            for s in range(self.quotient.dim + 1))
        self.bases = tuple(tuple(layer) for layer in self.quotient.layers)
        step = space.group.label_dim(1)
        self.unit_record = {
            "generator": "u_sigma" if self.p == 2 else "u_xi",
            "grading_shift": (-step, 1),
            "underlying_degree": "m + n" if step == 1 else "m + 2n",
        }
        self._mackey = MackeyCoefficients(space.group, ring)

    def dim(self, s):
        return self.groups[s].dim if 0 <= s < len(self.groups) else 0

    def group_at(self, s):
        if 0 <= s < len(self.groups):
            return self.groups[s]
        return GroupPresentation.mod_p(self.p, 0)

    def graded(self, m, n):
        """The reduced group in grading (m, n), read off the table."""
        return ro_graded_cohomology(self.space, self._mackey, (m, n))

    def unit_class(self):
        return unit_class(self.space)

    def dims(self):
        return tuple(g.dim for g in self.groups)

    def to_record(self):
        return {
            "group": "C_%d" % self.p,
            "cells_per_dim": list(self.quotient.cells_per_dim()),
            "dims": list(self.dims()),
            "unit": dict(self.unit_record),
        }

    def __repr__(self):
        return "<free C_%d space: quotient dims %s>" % (self.p, list(self.dims()))


def free_cohomology(x):
    """Cohomology table of a complex that is free away from its basepoint."""
    return FreeSpaceCohomology(x)


def skeletal_range_check(x, bound):
    """Verify the Euler powers a^k . 1 are nonzero through the given range.

    One application of a raises the underlying degree by 2 (odd p) or 1
    (p = 2), so the powers checked are those whose degree stays within
    bound; the report also states the largest k that was actually nonzero.
    """
    p = _prime_order(x.group)
    _require_free(x)
    step = x.group.label_dim(1)
    kmax = int(bound) // step
    c = unit_class(x)
    entries = []
    largest = 0
    for k in range(1, kmax + 1):
        c = module_action(x, "a", c)
        nonzero = not c.is_zero()
        entries.append({"k": k, "degree": step * k, "nonzero": nonzero})
        if nonzero:
            largest = k
    return {
        "p": p,
        "bound": int(bound),
        "required_max": kmax,
        "largest_k": largest,
        "entries": entries,
        "ok": all(e["nonzero"] for e in entries),
    }
