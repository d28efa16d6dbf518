"""Exact matrix algebra over Z and F_p.

Integer work (Smith normal form, integral homology, element orders in
cokernels) is pure Python on arbitrary-precision ints.  Mod-p work is a
separate vectorized Gaussian-elimination path on numpy int64 arrays; all
primes used here are tiny, so p**3 stays far below 2**63 and no modular
tricks are needed.

Everything is a pure function on immutable-in-spirit inputs; nothing here
keeps state between calls.
"""

import numpy as np

from .errors import CompositionNotZero


class IntMatrix:
    """Dense integer matrix (list-of-rows storage, arbitrary precision)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[0] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError("entry count must be rows x cols")
            self.data = [[int(x) for x in row] for row in data]

    @classmethod
    def from_rows(cls, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        return cls(rows, cols, rows_list)

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    def copy(self):
        return IntMatrix(self.rows, self.cols, [row[:] for row in self.data])

    def transpose(self):
        t = IntMatrix(self.cols, self.rows)
        for i in range(self.rows):
            row = self.data[i]
            for j in range(self.cols):
                t.data[j][i] = row[j]
        return t

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = IntMatrix(self.rows, other.cols)
        bt = other.transpose().data
        for i in range(self.rows):
            arow = self.data[i]
            orow = out.data[i]
            for j in range(other.cols):
                brow = bt[j]
                orow[j] = sum(arow[k] * brow[k] for k in range(self.cols))
        return out

    def mul_vec(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(row[k] * vec[k] for k in range(self.cols)) for row in self.data]

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def to_fp(self, p):
        """numpy int64 copy with entries reduced into [0, p)."""
        if self.rows == 0 or self.cols == 0:
            return np.zeros((self.rows, self.cols), dtype=np.int64)
        return np.array([[x % p for x in row] for row in self.data], dtype=np.int64)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __repr__(self):
        return "IntMatrix(%d, %d, %r)" % (self.rows, self.cols, self.data)


class SNFDecomposition:
    """left * original * right = diag, with unimodular left/right.

    diag holds the full main diagonal (length min(rows, cols)): the nonzero
    invariant factors first, each dividing the next, then zeros.
    """

    __slots__ = ("left", "right", "diag", "rows", "cols")

    def __init__(self, left, right, diag, rows, cols):
        self.left = left
        self.right = right
        self.diag = tuple(diag)
        self.rows = rows
        self.cols = cols

    @property
    def rank(self):
        return sum(1 for d in self.diag if d != 0)

    @property
    def invariant_factors(self):
        return tuple(d for d in self.diag if d != 0)

    def diagonal_matrix(self):
        m = IntMatrix(self.rows, self.cols)
        for i, d in enumerate(self.diag):
            m.data[i][i] = d
        return m


def _swap_rows(m, i, j):
    m.data[i], m.data[j] = m.data[j], m.data[i]


def _swap_cols(m, i, j):
    for row in m.data:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, q):
    # row_dst += q * row_src
    d, s = m.data[dst], m.data[src]
    for k in range(m.cols):
        d[k] += q * s[k]


def _add_col(m, dst, src, q):
    for row in m.data:
        row[dst] += q * row[src]


def _scale_row(m, i, s):
    m.data[i] = [s * x for x in m.data[i]]


def snf(m):
    """Smith normal form with transforms.

    Deterministic: the pivot is always the nonzero entry of smallest
    absolute value in the remaining submatrix, ties broken by lowest
    (row, col).  Output diagonal is non-negative with a divisibility chain.
    """
    d = m.copy()
    left = IntMatrix.identity(m.rows)
    right = IntMatrix.identity(m.cols)
    t = 0
    limit = min(m.rows, m.cols)
    while t < limit:
        # pick pivot: smallest |value|, then lowest (i, j)
        best = None
        for i in range(t, m.rows):
            row = d.data[i]
            for j in range(t, m.cols):
                v = row[j]
                if v != 0 and (best is None or abs(v) < abs(d.data[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            _swap_rows(d, t, best[0])
            _swap_rows(left, t, best[0])
        if best[1] != t:
            _swap_cols(d, t, best[1])
            _swap_cols(right, t, best[1])
        while True:
            if d.data[t][t] < 0:
                _scale_row(d, t, -1)
                _scale_row(left, t, -1)
            pivot = d.data[t][t]
            # clear column t below; remainders (necessarily smaller) become the new pivot
            dirty = False
            for i in range(t + 1, m.rows):
                v = d.data[i][t]
                if v:
                    q = v // pivot
                    _add_row(d, i, t, -q)
                    _add_row(left, i, t, -q)
                    if d.data[i][t]:
                        _swap_rows(d, t, i)
                        _swap_rows(left, t, i)
                        dirty = True
                        break
            if dirty:
                continue
            # clear row t to the right
            for j in range(t + 1, m.cols):
                v = d.data[t][j]
                if v:
                    q = v // pivot
                    _add_col(d, j, t, -q)
                    _add_col(right, j, t, -q)
                    if d.data[t][j]:
                        _swap_cols(d, t, j)
                        _swap_cols(right, t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # divisibility: pivot must divide every remaining entry
            offender = None
            for i in range(t + 1, m.rows):
                row = d.data[i]
                for j in range(t + 1, m.cols):
                    if row[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(d, t, offender, 1)
            _add_row(left, t, offender, 1)
        t += 1
    diag = [d.data[i][i] for i in range(limit)]
    return SNFDecomposition(left, right, diag, m.rows, m.cols)


class GroupPresentation:
    """A finitely generated abelian group.

    Over Z: free rank plus invariant-factor torsion (each factor > 1,
    forming a divisibility chain).  Over F_p: a dimension.  Generator
    labels are carried for display and ignored by equality.
    """

    __slots__ = ("ring", "rank", "torsion", "p", "dim", "labels")

    def __init__(self, ring, rank=0, torsion=(), p=None, dim=None, labels=()):
        self.ring = ring
        self.labels = tuple(labels)
        if ring == "Z":
            torsion = tuple(int(t) for t in torsion)
            if any(t <= 1 for t in torsion):
                raise ValueError("torsion factors must exceed 1")
            for a, b in zip(torsion, torsion[1:]):
                if b % a:
                    raise ValueError("torsion must form a divisibility chain")
            self.rank = int(rank)
            self.torsion = torsion
            self.p = None
            self.dim = None
        elif ring == "Fp":
            self.rank = None
            self.torsion = None
            self.p = int(p)
            self.dim = int(dim)
        else:
            raise ValueError("ring must be 'Z' or 'Fp'")

    @classmethod
    def integral(cls, rank, torsion=(), labels=()):
        return cls("Z", rank=rank, torsion=torsion, labels=labels)

    @classmethod
    def mod_p(cls, p, dim, labels=()):
        return cls("Fp", p=p, dim=dim, labels=labels)

    def is_zero(self):
        if self.ring == "Z":
            return self.rank == 0 and not self.torsion
        return self.dim == 0

    def __eq__(self, other):
        if not isinstance(other, GroupPresentation):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self.ring == "Z":
            return self.rank == other.rank and self.torsion == other.torsion
        return self.p == other.p and self.dim == other.dim

    def __hash__(self):
        if self.ring == "Z":
            return hash(("Z", self.rank, self.torsion))
        return hash(("Fp", self.p, self.dim))

    def describe(self):
        if self.ring == "Z":
            parts = []
            if self.rank == 1:
                parts.append("Z")
            elif self.rank > 1:
                parts.append("Z^%d" % self.rank)
            parts.extend("Z/%d" % t for t in self.torsion)
            return " + ".join(parts) if parts else "0"
        if self.dim == 0:
            return "0"
        if self.dim == 1:
            return "F_%d" % self.p
        return "F_%d^%d" % (self.p, self.dim)

    def __repr__(self):
        return "<GroupPresentation %s>" % self.describe()


def _check_coeff(coeff):
    if coeff == "Z":
        return coeff
    if isinstance(coeff, tuple) and len(coeff) == 2 and coeff[0] == "F":
        return coeff
    raise ValueError("coeff must be 'Z' or ('F', p)")


def kernel_basis(m):
    """Integral basis of ker(m) as columns of an IntMatrix (saturated lattice)."""
    dec = snf(m)
    r = dec.rank
    cols = [dec.right.column(j) for j in range(r, m.cols)]
    k = IntMatrix(m.cols, len(cols))
    for j, col in enumerate(cols):
        for i in range(m.cols):
            k.data[i][j] = col[i]
    return k


def solve_integral(a, b):
    """One integer solution x of a.x = b, or None."""
    dec = snf(a)
    w = dec.left.mul_vec(b)
    y = [0] * a.cols
    for i in range(a.rows):
        if i < len(dec.diag) and dec.diag[i] != 0:
            if w[i] % dec.diag[i]:
                return None
            y[i] = w[i] // dec.diag[i]
        elif w[i] != 0:
            return None
    return dec.right.mul_vec(y)


def order_in_cokernel(v, a):
    """Order of the class of v in Z^rows / column-span(a); None if infinite."""
    from math import gcd, lcm
    dec = snf(a)
    w = dec.left.mul_vec(v)
    order = 1
    for i in range(a.rows):
        d = dec.diag[i] if i < len(dec.diag) else 0
        if d == 0:
            if w[i] != 0:
                return None
        elif w[i] % d:
            order = lcm(order, d // gcd(d, w[i]))
    return order


def homology_at(d_in, d_out, coeff):
    """ker(d_out) / im(d_in) at the middle module of  . --d_in--> C --d_out--> .

    d_in has as many rows as C has generators; d_out as many columns.
    """
    coeff = _check_coeff(coeff)
    if d_in.rows != d_out.cols:
        raise ValueError("middle module size mismatch")
    if coeff == "Z":
        comp = d_out.mul(d_in)
        if not comp.is_zero():
            raise CompositionNotZero("d_out . d_in != 0 over Z")
        kb = kernel_basis(d_out)
        k = kb.cols
        if k == 0:
            return GroupPresentation.integral(0)
        # rewrite each image column in kernel coordinates (always possible:
        # the SNF kernel basis spans the saturated kernel lattice)
        rel = IntMatrix(k, d_in.cols)
        for j in range(d_in.cols):
            x = solve_integral(kb, d_in.column(j))
            if x is None:
                raise CompositionNotZero("image column escapes the kernel lattice")
            for i in range(k):
                rel.data[i][j] = x[i]
        dec = snf(rel)
        tor = tuple(d for d in dec.invariant_factors if d > 1)
        return GroupPresentation.integral(k - dec.rank, tor)
    p = coeff[1]
    a_out = d_out.to_fp(p)
    a_in = d_in.to_fp(p)
    if a_out.shape[0] and a_in.shape[1]:
        if np.any((a_out @ a_in) % p):
            raise CompositionNotZero("d_out . d_in != 0 mod %d" % p)
    dim = d_out.cols - fp_rank(a_out, p) - fp_rank(a_in, p)
    return GroupPresentation.mod_p(p, dim)


# ---------------------------------------------------------------------------
# mod-p path (numpy int64)

def fp_row_reduce(m, p):
    """Reduced row echelon form mod p.  Returns (array, pivot column list)."""
    a = np.array(m, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("need a 2-D array")
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def fp_rank(m, p):
    a = np.asarray(m)
    if a.size == 0:
        return 0
    return len(fp_row_reduce(a, p)[1])


def fp_solve(m, b, p):
    """One solution x of m.x = b mod p, or None."""
    a = np.asarray(m, dtype=np.int64) % p
    rhs = (np.asarray(b, dtype=np.int64) % p).reshape(-1, 1)
    if a.shape[0] != rhs.shape[0]:
        raise ValueError("shape mismatch")
    if a.shape[1] == 0:
        return None if np.any(rhs) else np.zeros(0, dtype=np.int64)
    aug, pivots = fp_row_reduce(np.hstack([a, rhs]), p)
    if a.shape[1] in pivots:
        return None
    x = np.zeros(a.shape[1], dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = aug[r, -1]
    return x


def fp_nullspace(m, p):
    """Matrix whose columns are a basis of ker(m) mod p."""
    a = np.asarray(m, dtype=np.int64) % p
    rows, cols = a.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    red, pivots = fp_row_reduce(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, c in enumerate(pivots):
            basis[c, k] = (-red[r, fc]) % p
    return basis


def fp_in_span(m, v, p):
    """Is v in the column span of m mod p?"""
    return fp_solve(m, v, p) is not None
