"""The graded cohomology of the two-point sphere over C_p, three ways.

Method A computes honest Bredon (co)homology of minimal sphere models,
method B runs the two-ring Cech cochain (Borel and geometric rings mapping
into the Tate ring), and method C evaluates the closed-form basis:

  odd p, positive cone:  a^i k^e u^j   at  (-(2j+e), i+j+e),  i, j >= 0
  odd p, negative cone:  S-1 k^e a-j u-k  at  (2k-e-1, e-j-k), j >= 0, k >= 2
  p = 2:                 a^i u^j at (-j, i+j);  a-j u-k at (k, -j-k), k >= 2

Also here: Euler class orders over Z (from the sphere chain complex) and
the vanishing of the Euler class of the reduced regular representation for
orders with two distinct prime divisors.
"""

import math

from .errors import NotPrime, TrivialCharacter
from .exact_linalg import GroupPresentation, order_in_cokernel
from .cyclic_reps import CyclicGroup, IrrepLabel, RestrictedGrading, irrep, trivial_rep
from .gcw_complex import GCWComplex, based_zero_sphere, join_one_skeleton, \
    rep_sphere, sphere_of_rep
from .mackey_bredon import BredonComplex, fixed_point_mackey, ro_graded_cohomology


def _check_prime(p):
    p = int(p)
    if p < 2 or any(p % r == 0 for r in range(2, int(p ** 0.5) + 1)):
        raise NotPrime("%r is not prime" % p)
    return p


def _grading(g):
    if isinstance(g, RestrictedGrading):
        return g.m, g.n
    m, n = g
    return int(m), int(n)


def positive_label(p, m, n):
    """Exponents (i, e, j) of the positive-cone monomial at (m, n), or None."""
    if n < 0 or m > 0:
        return None
    if p == 2:
        j = -m
        i = n - j
        return (i, 0, j) if i >= 0 else None
    e = (-m) % 2
    j = (-m - e) // 2
    i = n - j - e
    return (i, e, j) if i >= 0 else None


def negative_label(p, m, n):
    """Exponents (e, j, k) of the negative-cone class at (m, n), or None."""
    if n > -1 or m < 2:
        return None
    if p == 2:
        k = m
        j = -n - k
        return (0, j, k) if (k >= 2 and j >= 0) else None
    e = (m + 1) % 2
    k = (m + 1 + e) // 2
    j = e - k - n
    return (e, j, k) if (k >= 2 and j >= 0) else None


def render_label(p, cone, exponents):
    if cone == "positive":
        i, e, j = exponents
        if p == 2:
            return "a^%d u^%d" % (i, j)
        return "a^%d k^%d u^%d" % (i, e, j)
    e, j, k = exponents
    if p == 2:
        return "a-%d u-%d" % (j, k)
    return "S-1 k^%d a-%d u-%d" % (e, j, k)


def _label_at(p, m, n):
    pos = positive_label(p, m, n)
    if pos is not None:
        return render_label(p, "positive", pos)
    neg = negative_label(p, m, n)
    if neg is not None:
        return render_label(p, "negative", neg)
    return None


def _mp_closed_form(p, m, n):
    label = _label_at(p, m, n)
    return GroupPresentation.mod_p(p, 1 if label else 0,
                                   labels=(label,) if label else ())


def _mp_sphere_models(p, m, n):
    """Honest chain computation on minimal sphere models via reduction rules."""
    g = based_zero_sphere(_group(p))
    mk = fixed_point_mackey(("F", p), g.group)
    out = ro_graded_cohomology(g, mk, (m, n))
    if out.dim == 1:
        label = _label_at(p, m, n)
        return GroupPresentation.mod_p(p, 1, labels=(label,) if label else ())
    return out


_GROUPS = {}


def _group(p):
    if p not in _GROUPS:
        _GROUPS[p] = CyclicGroup(p)
    return _GROUPS[p]


def _tate_monomial(p, m, n):
    """Exponents (i, e, j) of the unique Tate-ring monomial at (m, n)."""
    if p == 2:
        j = -m
        return n - j, 0, j
    e = (-m) % 2
    j = (-m - e) // 2
    return n - j - e, e, j


def _mp_tate(p, m, n):
    """Kernel/cokernel of (Borel + geometric -> Tate) at this grading."""
    labels = []
    dim = 0
    # kernel in grading (m, n): both rings hold the Tate monomial, f - g = 0
    # on the diagonal; the map has rank 1 whenever either ring contributes
    i, e, j = _tate_monomial(p, m, n)
    cols = (1 if i >= 0 else 0) + (1 if j >= 0 else 0)
    ker = cols - (1 if cols else 0)
    if ker:
        dim += ker
        labels.append(render_label(p, "positive", (i, e, j)))
    # cokernel one grading below contributes through the connecting map
    i2, e2, j2 = _tate_monomial(p, m - 1, n)
    if i2 < 0 and j2 < 0:
        dim += 1
        labels.append(render_label(p, "negative", (e2, -i2 - 1, -j2 + 1)))
    return GroupPresentation.mod_p(p, dim, labels=tuple(labels))


def mp_group(p, g, method="c"):
    """Dimension and labeled basis of the point cohomology at grading m + n.xi.

    method: "a" sphere-model chains, "b" Cech cochain, "c" closed form.
    """
    p = _check_prime(p)
    m, n = _grading(g)
    tag = str(method).lower()
    if tag == "a":
        return _mp_sphere_models(p, m, n)
    if tag == "b":
        return _mp_tate(p, m, n)
    if tag == "c":
        return _mp_closed_form(p, m, n)
    raise ValueError("method must be one of 'a', 'b', 'c'")


def _cone_class_order(x, cone_id):
    """Order of the cone-point class in reduced degree-0 Bredon homology."""
    b = BredonComplex(x, fixed_point_mackey("Z", x.group), reduced=True)
    basis = b.basis(0)
    v = [1 if cid == cone_id else 0 for cid in basis]
    return order_in_cokernel(v, b.boundary_matrix(1))


def euler_order(group, eta):
    """Order of the Euler class of a character in integral Bredon cohomology.

    Computed from the chain complex of the character's compactified sphere:
    the class corresponds to the non-basepoint cone point in reduced
    degree-0 homology.  Equals |G| / (kernel size of the character).
    """
    if isinstance(eta, IrrepLabel):
        k = eta.k
    elif hasattr(eta, "mult"):
        items = sorted(eta.mult.items())
        if len(items) != 1 or items[0][1] != 1:
            raise ValueError("euler_order needs a single character, got %r" % (eta,))
        k = items[0][0]
    else:
        k = int(eta)
    if k % group.order == 0:
        raise TrivialCharacter("the trivial character has no Euler class order")
    x = rep_sphere(irrep(group, k))
    order = _cone_class_order(x, x.tags["cone_a"])
    return order if order is not None else math.inf


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def euler_reduced_regular_vanishes(group):
    """Whether the Euler class of the reduced regular representation is zero.

    Decided by direct computation on the 1-skeleton of the sphere join
    (enough to read reduced degree-0 homology).  For orders with two
    distinct prime divisors the witnesses list the two sub-characters
    whose Euler class orders are coprime.
    """
    n = group.order
    pieces = [sphere_of_rep(irrep(group, k)) for k in group.nontrivial_labels()]
    pieces.append(sphere_of_rep(trivial_rep(group)))
    sk = join_one_skeleton(pieces)
    last = len(pieces) - 1
    x = GCWComplex(group, sk.cells, sk.boundary, basepoint="p%d:tb" % last)
    order = _cone_class_order(x, "p%d:ta" % last)
    primes = _prime_divisors(n)
    witnesses = []
    if len(primes) >= 2:
        witnesses = [{"character": n // ell, "order": ell} for ell in primes]
    return {
        "vanishes": order == 1,
        "order": order if order is not None else None,
        "witnesses": witnesses,
    }
