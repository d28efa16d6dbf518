"""Finite G-CW complexes for cyclic groups.

A complex stores one representative cell per orbit.  Boundary data lives in
group-ring words: the boundary entry of cell c at target t is a length
n/h_t integer vector, index i holding the coefficient of g^i (mod the
target's stabilizer).  Constructors cover unit spheres of representations
(iterated joins of circles, sign pairs and point pairs), one-point
compactifications, minimal two-cone-point sphere models, free periodic
models (lens-type skeleta), smashes, joins and quotients, plus a
line-oriented text format for ingestion of hand-built complexes.
"""

from math import gcd

from .errors import (
    EmptyRepresentation,
    InvariantViolation,
    MissingBasepoint,
    NotPrime,
    ParseError,
    StabilizerMismatch,
)
from .exact_linalg import IntMatrix
from .cyclic_reps import CyclicGroup, trivial_rep


class Cell:
    __slots__ = ("id", "dim", "stab")

    def __init__(self, cell_id, dim, stab):
        self.id = str(cell_id)
        self.dim = int(dim)
        self.stab = int(stab)

    def __repr__(self):
        return "Cell(%r, dim=%d, stab=%d)" % (self.id, self.dim, self.stab)

    def __eq__(self, other):
        return (isinstance(other, Cell) and self.id == other.id
                and self.dim == other.dim and self.stab == other.stab)

    def __hash__(self):
        return hash((self.id, self.dim, self.stab))


class GCWComplex:
    """Finite G-CW complex, one cell per orbit, immutable after validation."""

    def __init__(self, group, cells, boundary, basepoint=None, tags=None):
        self.group = group
        self.cells = list(cells)
        self.basepoint = basepoint
        self.tags = dict(tags) if tags else {}
        self.by_id = {}
        for c in self.cells:
            if c.id in self.by_id:
                raise InvariantViolation("duplicate cell id %r" % c.id)
            self.by_id[c.id] = c
        # normalize: entries sorted by target id, all-zero words dropped
        self.boundary = {}
        for cid, entries in boundary.items():
            if cid not in self.by_id:
                raise InvariantViolation("boundary for unknown cell %r" % cid)
            keep = []
            for tid, word in sorted(entries):
                word = tuple(int(x) for x in word)
                if any(word):
                    keep.append((tid, word))
            if keep:
                self.boundary[cid] = tuple(keep)
        self._validate()

    # -- structure ---------------------------------------------------------

    def _validate(self):
        n = self.group.order
        for c in self.cells:
            if c.stab < 1 or n % c.stab:
                raise StabilizerMismatch(
                    "cell %r: stab %d is not a subgroup order of C_%d"
                    % (c.id, c.stab, n))
            if c.dim < 0:
                raise InvariantViolation("cell %r: negative dimension" % c.id)
        for cid, entries in self.boundary.items():
            c = self.by_id[cid]
            if c.dim == 0:
                raise InvariantViolation("0-cell %r has boundary" % cid)
            for tid, word in entries:
                if tid not in self.by_id:
                    raise InvariantViolation(
                        "cell %r: boundary target %r does not exist" % (cid, tid))
                t = self.by_id[tid]
                if t.dim != c.dim - 1:
                    raise InvariantViolation(
                        "cell %r: boundary does not drop dimension by 1 at %r"
                        % (cid, tid))
                if t.stab % c.stab:
                    raise StabilizerMismatch(
                        "cell %r: stabilizer shrinks along boundary to %r"
                        % (cid, tid))
                if len(word) != n // t.stab:
                    raise StabilizerMismatch(
                        "cell %r: word length %d != %d at target %r"
                        % (cid, len(word), n // t.stab, tid))
        if self.basepoint is not None:
            bp = self.by_id.get(self.basepoint)
            if bp is None:
                raise InvariantViolation("basepoint %r does not exist" % self.basepoint)
            if bp.dim != 0 or bp.stab != self.group.order:
                raise InvariantViolation("basepoint %r must be a fixed 0-cell"
                                         % self.basepoint)

    @property
    def dim(self):
        return max((c.dim for c in self.cells), default=-1)

    @property
    def is_based(self):
        return self.basepoint is not None

    def cells_of_dim(self, k, reduced=False):
        """Orbit cells of dimension k in lexicographic id order."""
        out = [c for c in self.cells if c.dim == k]
        if reduced and self.basepoint is not None:
            out = [c for c in out if c.id != self.basepoint]
        out.sort(key=lambda c: c.id)
        return out

    def orbit_size(self, cid):
        return self.group.order // self.by_id[cid].stab

    def boundary_of(self, cid):
        return self.boundary.get(cid, ())

    def first_fixed_cell(self, ignore_basepoint=True):
        """Id of a non-free cell (stab > 1), skipping the basepoint; or None."""
        for c in sorted(self.cells, key=lambda c: c.id):
            if ignore_basepoint and c.id == self.basepoint:
                continue
            if c.stab > 1:
                return c.id
        return None

    def is_free(self, ignore_basepoint=True):
        return self.first_fixed_cell(ignore_basepoint) is None

    def cell_count(self):
        """Underlying (non-equivariant) cell count per dimension."""
        out = [0] * (self.dim + 1)
        for c in self.cells:
            out[c.dim] += self.group.order // c.stab
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, GCWComplex) and self.group == other.group
                and sorted(self.cells, key=lambda c: c.id)
                == sorted(other.cells, key=lambda c: c.id)
                and self.boundary == other.boundary
                and self.basepoint == other.basepoint)

    def __repr__(self):
        return "<GCWComplex over %r: %d orbit cells, dim %d%s>" % (
            self.group, len(self.cells), self.dim,
            ", based" if self.is_based else "")

    # -- underlying complexes ----------------------------------------------

    def quotient(self, drop_basepoint=False):
        """Orbit CW complex X/G: one cell per orbit, boundary by augmentation."""
        def keep(c):
            return not (drop_basepoint and c.id == self.basepoint)
        layers = [[c.id for c in self.cells_of_dim(k) if keep(c)]
                  for k in range(self.dim + 1)]
        mats = []
        for k in range(1, self.dim + 1):
            index = {cid: i for i, cid in enumerate(layers[k - 1])}
            m = IntMatrix(len(layers[k - 1]), len(layers[k]))
            for j, cid in enumerate(layers[k]):
                for tid, word in self.boundary_of(cid):
                    if tid in index:
                        m.data[index[tid]][j] += sum(word)
            mats.append(m)
        return PlainComplex(layers, mats)

    def expand(self):
        """Underlying non-equivariant CW complex (every translate a cell)."""
        n = self.group.order
        layers = []
        for k in range(self.dim + 1):
            layer = []
            for c in self.cells_of_dim(k):
                layer.extend("%s@%d" % (c.id, i) for i in range(n // c.stab))
            layers.append(layer)
        mats = []
        for k in range(1, self.dim + 1):
            index = {cid: i for i, cid in enumerate(layers[k - 1])}
            m = IntMatrix(len(layers[k - 1]), len(layers[k]))
            col = 0
            for c in self.cells_of_dim(k):
                for i in range(n // c.stab):
                    for tid, word in self.boundary_of(c.id):
                        sz = n // self.by_id[tid].stab
                        for a, coeff in enumerate(word):
                            if coeff:
                                row = index["%s@%d" % (tid, (i + a) % sz)]
                                m.data[row][col] += coeff
                    col += 1
            mats.append(m)
        return PlainComplex(layers, mats)

    def verify_dd(self):
        """Check that the equivariant boundary squares to zero (exact, over Z).

        Composes group-ring words orbitwise: for d(c) = sum w_t . t the
        double boundary collects the convolution of w_t with each word of
        d(t), reduced modulo the target orbit size.
        """
        n = self.group.order
        for c in self.cells:
            if c.dim < 2:
                continue
            acc = {}
            for tid, w in self.boundary_of(c.id):
                for uid, w2 in self.boundary_of(tid):
                    sz = n // self.by_id[uid].stab
                    out = acc.setdefault(uid, [0] * sz)
                    for a, ca in enumerate(w):
                        if ca:
                            for b, cb in enumerate(w2):
                                if cb:
                                    out[(a + b) % sz] += ca * cb
            for uid, out in acc.items():
                if any(out):
                    raise InvariantViolation(
                        "boundary of boundary of cell %r is nonzero at %r"
                        % (c.id, uid))
        return True


class PlainComplex:
    """Non-equivariant chain data: cell ids per dimension, integer boundaries."""

    def __init__(self, layers, boundaries):
        self.layers = [list(l) for l in layers]
        self._bd = list(boundaries)

    @property
    def dim(self):
        return len(self.layers) - 1

    def cells_per_dim(self):
        return tuple(len(l) for l in self.layers)

    def size(self, k):
        if 0 <= k <= self.dim:
            return len(self.layers[k])
        return 0

    def boundary(self, k):
        """d_k : C_k -> C_(k-1); zero-shaped matrix outside the support."""
        if 1 <= k <= self.dim:
            return self._bd[k - 1]
        return IntMatrix.zeros(self.size(k - 1), self.size(k))

    def homology(self, k, coeff):
        from .exact_linalg import homology_at
        return homology_at(self.boundary(k + 1), self.boundary(k), coeff)

    def cohomology(self, k, coeff):
        from .exact_linalg import homology_at
        return homology_at(self.boundary(k).transpose(),
                           self.boundary(k + 1).transpose(), coeff)


# ---------------------------------------------------------------------------
# orbit bookkeeping for pairs

def _normalize_pair(n, hx, hy, a, b):
    """Rewrite (g^a x, g^b y) as g^e . (x, g^dr y) with dr an orbit representative.

    Orbit representatives for the pair type (h_x, h_y) are dr in
    0 .. gcd(n/h_x, n/h_y) - 1.  Returns (dr, e) with e taken mod the pair
    orbit size n/gcd(h_x, h_y).
    """
    ox, oy = n // hx, n // hy
    d = gcd(ox, oy)
    delta = (b - a) % oy
    dr = delta % d
    rhs = (delta - dr) % oy
    if oy == d:
        t = 0
    else:
        t = (rhs // d) * pow(ox // d, -1, oy // d) % (oy // d)
    e = (a + ox * t) % (n // gcd(hx, hy))
    return dr, e


def _pair_orbit_count(n, hx, hy):
    return gcd(n // hx, n // hy)


class _WordBuilder:
    """Accumulates group-ring words per (cell id, word length)."""

    def __init__(self):
        self.entries = {}

    def add(self, tid, length, pos, coeff):
        w = self.entries.setdefault(tid, [0] * length)
        w[pos % length] += coeff

    def packed(self):
        return [(tid, tuple(w)) for tid, w in self.entries.items() if any(w)]


def join(x, y):
    """The join X * Y with the (left, right, cone-coordinate) convention.

    Cells: the cells of X (prefix "a:"), of Y (prefix "b:"), and one product
    orbit cell j:<x>:<dr>:<y> of dimension |x|+|y|+1 per pair orbit.  The
    boundary of a product cell is  (dX x) * y + (-1)^(|x|+1) x * (dY y),
    with the 0-cell boundary read in the augmented sense (the empty joinand
    contributes the opposite factor).
    """
    if x.group != y.group:
        raise ValueError("join of complexes over different groups")
    n = x.group.order
    cells = []
    boundary = {}
    for c in x.cells:
        cells.append(Cell("a:" + c.id, c.dim, c.stab))
    for c in y.cells:
        cells.append(Cell("b:" + c.id, c.dim, c.stab))
    for cid, entries in x.boundary.items():
        boundary["a:" + cid] = [("a:" + tid, word) for tid, word in entries]
    for cid, entries in y.boundary.items():
        boundary["b:" + cid] = [("b:" + tid, word) for tid, word in entries]
    for cx in x.cells:
        for cy in y.cells:
            hx, hy = cx.stab, cy.stab
            hp = gcd(hx, hy)
            for dr in range(_pair_orbit_count(n, hx, hy)):
                pid = "j:%s:%d:%s" % (cx.id, dr, cy.id)
                cells.append(Cell(pid, cx.dim + cy.dim + 1, hp))
                wb = _WordBuilder()
                # left boundary term (dX x) * g^dr y
                if cx.dim == 0:
                    wb.add("b:" + cy.id, n // hy, dr, 1)
                else:
                    for tid, word in x.boundary_of(cx.id):
                        ht = x.by_id[tid].stab
                        for i, coeff in enumerate(word):
                            if coeff:
                                ndr, e = _normalize_pair(n, ht, hy, i, dr)
                                wb.add("j:%s:%d:%s" % (tid, ndr, cy.id),
                                       n // gcd(ht, hy), e, coeff)
                # right boundary term, sign (-1)^(|x|+1)
                s = -1 if cx.dim % 2 == 0 else 1
                if cy.dim == 0:
                    wb.add("a:" + cx.id, n // hx, 0, s)
                else:
                    for tid, word in y.boundary_of(cy.id):
                        ht = y.by_id[tid].stab
                        for i, coeff in enumerate(word):
                            if coeff:
                                ndr, e = _normalize_pair(n, hx, ht, 0, dr + i)
                                wb.add("j:%s:%d:%s" % (cx.id, ndr, tid),
                                       n // gcd(hx, ht), e, s * coeff)
                boundary[pid] = wb.packed()
    return GCWComplex(x.group, cells, boundary)


def smash(x, y):
    """The smash product of two based complexes.

    Cells: s:<x>:<dr>:<y> for non-basepoint cells of both factors, of
    dimension |x|+|y|, plus a single fixed basepoint "*".  Boundary terms
    that touch either basepoint collapse: to "*" in dimension zero,
    silently in higher dimensions.
    """
    if x.group != y.group:
        raise ValueError("smash of complexes over different groups")
    if not x.is_based or not y.is_based:
        raise MissingBasepoint("smash needs based complexes")
    n = x.group.order
    cells = [Cell("*", 0, n)]
    boundary = {}

    def collapsed(c):
        return c.id == x.basepoint or c.id == y.basepoint

    for cx in x.cells:
        if cx.id == x.basepoint:
            continue
        for cy in y.cells:
            if cy.id == y.basepoint:
                continue
            hx, hy = cx.stab, cy.stab
            hp = gcd(hx, hy)
            for dr in range(_pair_orbit_count(n, hx, hy)):
                pid = "s:%s:%d:%s" % (cx.id, dr, cy.id)
                dim = cx.dim + cy.dim
                cells.append(Cell(pid, dim, hp))
                if dim == 0:
                    continue
                wb = _WordBuilder()
                for tid, word in x.boundary_of(cx.id):
                    ht = x.by_id[tid].stab
                    base = tid == x.basepoint
                    for i, coeff in enumerate(word):
                        if not coeff:
                            continue
                        if base:
                            if cy.dim == 0:
                                wb.add("*", 1, 0, coeff)
                            continue
                        ndr, e = _normalize_pair(n, ht, hy, i, dr)
                        wb.add("s:%s:%d:%s" % (tid, ndr, cy.id),
                               n // gcd(ht, hy), e, coeff)
                s = 1 if cx.dim % 2 == 0 else -1
                for tid, word in y.boundary_of(cy.id):
                    ht = y.by_id[tid].stab
                    base = tid == y.basepoint
                    for i, coeff in enumerate(word):
                        if not coeff:
                            continue
                        if base:
                            if cx.dim == 0:
                                wb.add("*", 1, 0, s * coeff)
                            continue
                        ndr, e = _normalize_pair(n, hx, ht, 0, dr + i)
                        wb.add("s:%s:%d:%s" % (cx.id, ndr, tid),
                               n // gcd(hx, ht), e, s * coeff)
                boundary[pid] = wb.packed()
    return GCWComplex(x.group, cells, boundary, basepoint="*")


# ---------------------------------------------------------------------------
# constructors

def free_points(group, count):
    """count disjoint free orbits of points."""
    cells = [Cell("p%d" % i, 0, 1) for i in range(count)]
    return GCWComplex(group, cells, {})


def based_zero_sphere(group):
    """S^0: two fixed points, based at b."""
    return GCWComplex(group, [Cell("a", 0, group.order), Cell("b", 0, group.order)],
                      {}, basepoint="b", tags={"cone_a": "a"})


def _single_character_sphere(group, k):
    """Unit sphere of one irreducible: point pair, sign pair, or circle."""
    n = group.order
    if k == 0:
        return GCWComplex(group, [Cell("ta", 0, n), Cell("tb", 0, n)], {})
    if 2 * k == n:
        return GCWComplex(group, [Cell("s0", 0, n // 2)], {})
    h = gcd(n, k)
    o = n // h
    c = pow((k // h), -1, o)  # g^c rotates one vertex step on the circle
    word = [0] * o
    word[c % o] += 1
    word[0] -= 1
    return GCWComplex(group, [Cell("v0", 0, h), Cell("e0", 1, h)],
                      {"e0": [("v0", tuple(word))]})


def sphere_of_rep(v):
    """Unit sphere S(V): iterated join of one piece per irreducible summand.

    Nontrivial characters come first (ascending label), trivial summands
    last; the fold is right-associated, so
    sphere_of_rep(xi + xi) == join(sphere_of_rep(xi), sphere_of_rep(xi)).
    """
    if v.is_zero:
        raise EmptyRepresentation("S(0) is empty")
    if not v.is_actual:
        raise EmptyRepresentation("unit sphere needs an actual representation")
    labels = v.summands() + [0] * v.multiplicity(0)
    pieces = [_single_character_sphere(v.group, k) for k in labels]
    x = pieces[-1]
    for p in reversed(pieces[:-1]):
        x = join(p, x)
    return x


def rep_sphere(v):
    """One-point compactification S^V, built as S(V + 1) with a basepoint.

    The two cone points of the added trivial summand become the basepoint b
    and the distinguished fixed point a (tagged "cone_a").
    """
    if v.is_zero:
        return GCWComplex(v.group,
                          [Cell("ta", 0, v.group.order), Cell("tb", 0, v.group.order)],
                          {}, basepoint="tb", tags={"cone_a": "ta"})
    if not v.is_actual:
        raise EmptyRepresentation("compactification needs an actual representation")
    count = len(v.summands()) + v.multiplicity(0) + 1
    x = sphere_of_rep(v + trivial_rep(v.group))
    nest = "b:" * (count - 1)
    tags = {"cone_a": nest + "ta"}
    return GCWComplex(x.group, x.cells, x.boundary,
                      basepoint=nest + "tb", tags=tags)


def plus_point(x):
    """X_+: adjoin a disjoint fixed basepoint named "+"."""
    cells = list(x.cells) + [Cell("+", 0, x.group.order)]
    return GCWComplex(x.group, cells, x.boundary, basepoint="+", tags=x.tags)


def minimal_rep_sphere(p, q):
    """Minimal model of the q-fold rotation (sign, for p = 2) sphere over C_p.

    Two fixed cone points a (tagged) and b (basepoint) plus one free orbit
    cell per dimension 1 .. q*(2 for odd p, 1 for p = 2); boundaries
    alternate a - b, then g - 1, then the norm.
    """
    group = _prime_group(p)
    top = 2 * q if p != 2 else q
    cells = [Cell("a", 0, p), Cell("b", 0, p)]
    boundary = {}
    for j in range(1, top + 1):
        cells.append(Cell(_wid(j), j, 1))
        if j == 1:
            boundary[_wid(1)] = [("a", (1,)), ("b", (-1,))]
        elif j % 2 == 0:
            word = [0] * p
            word[1] += 1
            word[0] -= 1
            boundary[_wid(j)] = [(_wid(j - 1), tuple(word))]
        else:
            boundary[_wid(j)] = [(_wid(j - 1), (1,) * p)]
    return GCWComplex(group, cells, boundary, basepoint="b",
                      tags={"cone_a": "a", "minimal_sphere": (p, q)})


def _wid(j):
    return "w%02d" % j


def _eid(j):
    return "e%02d" % j


def _prime_group(p):
    q = int(p)
    if q < 2 or any(q % r == 0 for r in range(2, int(q ** 0.5) + 1)):
        raise NotPrime("%r is not prime" % p)
    return CyclicGroup(q)


def periodic_free_model(p, top_dim):
    """Free C_p complex with one orbit cell per dimension 0 .. top_dim.

    Boundaries alternate g - 1 (odd dimensions) and the norm (even), so the
    quotient is the standard one-cell-per-dimension lens-type complex with
    boundary maps alternating 0 and p.
    """
    group = _prime_group(p)
    if top_dim < 0:
        raise ValueError("top_dim must be >= 0")
    cells = [Cell(_eid(j), j, 1) for j in range(top_dim + 1)]
    boundary = {}
    for j in range(1, top_dim + 1):
        if j % 2 == 1:
            word = [0] * p
            word[1] += 1
            word[0] -= 1
        else:
            word = [1] * p
        boundary[_eid(j)] = [(_eid(j - 1), tuple(word))]
    return GCWComplex(group, cells, boundary,
                      tags={"periodic_model": p, "top": top_dim})


def ecp_skeleton(p, m):
    """The (2m-1)-dimensional free sphere skeleton S((m)xi) (antipodal S^(2m-1)
    built from 2m sign coordinates when p = 2), in minimal periodic form."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return periodic_free_model(p, 2 * m - 1)


def conf2_model(d):
    """Free C_2 model of the ordered two-point configuration space of R^d.

    The space deformation retracts equivariantly onto the antipodal sphere
    S^(d-1) = S(d sign characters); two cells per dimension 0 .. d-1.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    return periodic_free_model(2, d - 1)


def join_one_skeleton(pieces):
    """Cells of dimensions 0 and 1 of the iterated join of the given complexes.

    Enough to read H_0 of the join; avoids building the full product lattice.
    Piece cells are prefixed p<i>:, product 1-cells connect 0-cells of
    distinct pieces.
    """
    group = pieces[0].group
    n = group.order
    cells = []
    boundary = {}
    for i, x in enumerate(pieces):
        if x.group != group:
            raise ValueError("join of complexes over different groups")
        pref = "p%d:" % i
        for c in x.cells:
            if c.dim == 0:
                cells.append(Cell(pref + c.id, 0, c.stab))
            elif c.dim == 1:
                cells.append(Cell(pref + c.id, 1, c.stab))
                boundary[pref + c.id] = [(pref + tid, word)
                                         for tid, word in x.boundary_of(c.id)]
    for i, x in enumerate(pieces):
        for j_, y in enumerate(pieces):
            if j_ <= i:
                continue
            for cx in x.cells:
                if cx.dim:
                    continue
                for cy in y.cells:
                    if cy.dim:
                        continue
                    hx, hy = cx.stab, cy.stab
                    hp = gcd(hx, hy)
                    for dr in range(_pair_orbit_count(n, hx, hy)):
                        pid = "j:p%d:%s:%d:p%d:%s" % (i, cx.id, dr, j_, cy.id)
                        cells.append(Cell(pid, 1, hp))
                        wb = _WordBuilder()
                        wb.add("p%d:%s" % (j_, cy.id), n // hy, dr, 1)
                        wb.add("p%d:%s" % (i, cx.id), n // hx, 0, -1)
                        boundary[pid] = wb.packed()
    return GCWComplex(group, cells, boundary)


# ---------------------------------------------------------------------------
# text format

def save_gcw(x):
    """Serialize to the line-oriented text format (exact round-trip)."""
    lines = ["group cyclic %d" % x.group.order]
    for c in sorted(x.cells, key=lambda c: (c.dim, c.id)):
        lines.append("cell %s dim %d stab %d" % (c.id, c.dim, c.stab))
    if x.basepoint is not None:
        lines.append("basepoint %s" % x.basepoint)
    for c in sorted(x.cells, key=lambda c: (c.dim, c.id)):
        entries = x.boundary_of(c.id)
        if entries:
            parts = ["%s [%s]" % (tid, ",".join(str(v) for v in word))
                     for tid, word in entries]
            lines.append("bd %s : %s" % (c.id, " ; ".join(parts)))
    return "\n".join(lines) + "\n"


def load_gcw(source):
    """Parse the text format; validates all structural invariants and d.d = 0.

    source: a string or a readable stream.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = str(source)
    group = None
    cells = []
    boundary = {}
    basepoint = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if group is None:
            if len(tok) != 3 or tok[0] != "group" or tok[1] != "cyclic":
                raise ParseError("line %d: expected 'group cyclic <n>'" % lineno)
            try:
                group = CyclicGroup(int(tok[2]))
            except ValueError:
                raise ParseError("line %d: bad group order %r" % (lineno, tok[2]))
            continue
        if tok[0] == "cell":
            if (len(tok) != 6 or tok[2] != "dim" or tok[4] != "stab"):
                raise ParseError("line %d: expected 'cell <id> dim <d> stab <h>'"
                                 % lineno)
            try:
                cells.append(Cell(tok[1], int(tok[3]), int(tok[5])))
            except ValueError:
                raise ParseError("line %d: bad integer field" % lineno)
        elif tok[0] == "basepoint":
            if len(tok) != 2:
                raise ParseError("line %d: expected 'basepoint <id>'" % lineno)
            basepoint = tok[1]
        elif tok[0] == "bd":
            if len(tok) < 3 or tok[2] != ":":
                raise ParseError("line %d: expected 'bd <id> : ...'" % lineno)
            cid = tok[1]
            if cid in boundary:
                raise ParseError("line %d: duplicate boundary for %r" % (lineno, cid))
            rest = line.split(None, 3)[3] if len(tok) > 3 else ""
            entries = []
            for part in rest.split(";"):
                part = part.strip()
                if not part:
                    raise ParseError("line %d: empty boundary entry" % lineno)
                if "[" not in part or not part.endswith("]"):
                    raise ParseError("line %d: expected '<target> [c0,c1,...]'"
                                     % lineno)
                tid, vec = part.split("[", 1)
                tid = tid.strip()
                if not tid or len(tid.split()) != 1:
                    raise ParseError("line %d: bad target id in %r" % (lineno, part))
                body = vec[:-1].strip()
                try:
                    word = tuple(int(s.strip()) for s in body.split(",")) if body else ()
                except ValueError:
                    raise ParseError("line %d: bad coefficient in %r" % (lineno, part))
                entries.append((tid, word))
            boundary[cid] = entries
        else:
            raise ParseError("line %d: unknown directive %r" % (lineno, tok[0]))
    if group is None:
        raise ParseError("line 1: missing 'group cyclic <n>' header")
    x = GCWComplex(group, cells, boundary, basepoint=basepoint)
    x.verify_dd()
    return x
