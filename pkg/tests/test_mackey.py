"""Tests for Bredon (co)homology with constant coefficients and the graded
reduction rules."""

import pytest

from bredonkit.cyclic_reps import CyclicGroup, VirtualRep, irrep, trivial_rep
from bredonkit.errors import NoBasepoint, UnsupportedGrading
from bredonkit.exact_linalg import GroupPresentation
from bredonkit.gcw_complex import (
    based_zero_sphere,
    minimal_rep_sphere,
    plus_point,
    rep_sphere,
    smash,
    sphere_of_rep,
)
from bredonkit.mackey_bredon import (
    BredonComplex,
    CohomologyClass,
    bredon_cohomology,
    bredon_homology,
    euler_action,
    fixed_point_mackey,
    is_zero_sphere,
    ro_graded_cohomology,
)

Z = GroupPresentation.integral
F = GroupPresentation.mod_p


def test_constant_functor_maps():
    g = CyclicGroup(6)
    m = fixed_point_mackey("Z", g)
    assert m.value(2) == Z(1)
    assert m.restriction(1, 6) == 1
    assert m.transfer(1, 6) == 6
    assert m.transfer(2, 6) == 3
    # double-coset identity for nested cyclic subgroups
    assert m.transfer(2, 6) * m.restriction(2, 6) == 3
    with pytest.raises(ValueError):
        m.transfer(4, 6)
    mp = fixed_point_mackey(("F", 5), CyclicGroup(5))
    assert mp.value(5) == F(5, 1)
    assert mp.transfer(1, 5) == 5  # reduces to 0 in the mod-p matrices


def test_rotation_square_sphere_over_c6():
    # S^(xi^2) over C_6: top reduced cohomology is Z, bottom reduced homology Z/3
    g = CyclicGroup(6)
    m = fixed_point_mackey("Z", g)
    x = rep_sphere(irrep(g, 2))
    assert bredon_cohomology(x, m, 2, reduced=True) == Z(1)
    assert bredon_cohomology(x, m, 1, reduced=True) == Z(0)
    assert bredon_cohomology(x, m, 0, reduced=True) == Z(0)
    assert bredon_homology(x, m, 0, reduced=True) == Z(0, (3,))
    assert bredon_homology(x, m, 1, reduced=True) == Z(0)
    assert bredon_homology(x, m, 2, reduced=True) == Z(1)


def test_two_point_sphere_reduced():
    for n in (2, 3, 6):
        g = CyclicGroup(n)
        x = based_zero_sphere(g)
        assert is_zero_sphere(x)
        m = fixed_point_mackey("Z", g)
        assert bredon_cohomology(x, m, 0, reduced=True) == Z(1)
        assert bredon_cohomology(x, m, 1, reduced=True) == Z(0)
        assert bredon_homology(x, m, 0, reduced=True) == Z(1)


def test_free_circle_plus_basepoint_mod_3():
    g = CyclicGroup(3)
    m = fixed_point_mackey(("F", 3), g)
    x = plus_point(sphere_of_rep(irrep(g, 1)))
    assert bredon_cohomology(x, m, 0, reduced=True) == F(3, 1)
    assert bredon_cohomology(x, m, 1, reduced=True) == F(3, 1)
    assert bredon_cohomology(x, m, 2, reduced=True) == F(3, 0)


def test_reduced_needs_basepoint():
    g = CyclicGroup(3)
    m = fixed_point_mackey("Z", g)
    with pytest.raises(NoBasepoint):
        bredon_cohomology(sphere_of_rep(irrep(g, 1)), m, 0, reduced=True)


def test_negative_degree_is_zero():
    g = CyclicGroup(3)
    m = fixed_point_mackey("Z", g)
    x = based_zero_sphere(g)
    assert bredon_cohomology(x, m, -1, reduced=True) == Z(0)
    assert bredon_homology(x, m, -2, reduced=True) == Z(0)


def test_bredon_differentials_square_to_zero():
    g = CyclicGroup(6)
    x = rep_sphere(VirtualRep(g, {1: 1, 3: 1}))
    for ring in ("Z", ("F", 3)):
        m = fixed_point_mackey(ring, g)
        for reduced in (False, True):
            assert BredonComplex(x, m, reduced=reduced).verify_dd()


def test_graded_point_positive_cone():
    g = CyclicGroup(3)
    m = fixed_point_mackey(("F", 3), g)
    s0 = based_zero_sphere(g)
    # the Euler class generator in grading xi
    assert ro_graded_cohomology(s0, m, VirtualRep(g, {1: 1})) == F(3, 1)
    assert ro_graded_cohomology(s0, m, (0, 1)) == F(3, 1)
    assert ro_graded_cohomology(s0, m, (0, 0)) == F(3, 1)
    assert ro_graded_cohomology(s0, m, (-2, 1)) == F(3, 1)
    assert ro_graded_cohomology(s0, m, (-1, 0)) == F(3, 0)


def test_graded_point_negative_cone():
    g = CyclicGroup(3)
    m = fixed_point_mackey(("F", 3), g)
    s0 = based_zero_sphere(g)
    # first nonzero class of the negative cone sits in grading 2 - xi
    assert ro_graded_cohomology(s0, m, (2, -1)) == F(3, 1)
    assert ro_graded_cohomology(s0, m, VirtualRep(g, {0: 1, 1: -2})) == F(3, 0)
    assert ro_graded_cohomology(s0, m, (3, -2)) == F(3, 1)
    assert ro_graded_cohomology(s0, m, (1, -1)) == F(3, 0)


def test_graded_free_sphere_quotient_periodicity():
    g = CyclicGroup(3)
    m = fixed_point_mackey(("F", 3), g)
    x = sphere_of_rep(VirtualRep(g, {1: 3}))  # free, quotient is a lens space
    assert ro_graded_cohomology(x, m, VirtualRep(g, {0: 1, 1: 1})) == F(3, 1)
    assert ro_graded_cohomology(x, m, (0, 3)) == F(3, 0)  # above the quotient dim
    assert ro_graded_cohomology(x, m, (0, 2)) == F(3, 1)


def test_graded_refusals():
    g = CyclicGroup(5)
    m = fixed_point_mackey("Z", g)
    s0 = based_zero_sphere(g)
    with pytest.raises(UnsupportedGrading):
        ro_graded_cohomology(s0, m, VirtualRep(g, {1: 1, 2: -1}))
    x = rep_sphere(irrep(CyclicGroup(6), 2))
    m6 = fixed_point_mackey("Z", CyclicGroup(6))
    with pytest.raises(UnsupportedGrading):
        # positive direction on a non-free complex with fixed cells
        ro_graded_cohomology(x, m6, (0, 1))


def test_graded_integer_slice_matches_bredon():
    g = CyclicGroup(6)
    m = fixed_point_mackey("Z", g)
    x = rep_sphere(irrep(g, 2))
    for k in range(3):
        assert ro_graded_cohomology(x, m, (k, 0)) == bredon_cohomology(
            x, m, k, reduced=True)


def test_trivial_suspension_shifts_degree():
    g = CyclicGroup(3)
    m = fixed_point_mackey(("F", 3), g)
    x = plus_point(sphere_of_rep(irrep(g, 1)))
    sx = smash(rep_sphere(trivial_rep(g)), x)
    for k in range(4):
        assert bredon_cohomology(sx, m, k + 1, reduced=True) == \
            bredon_cohomology(x, m, k, reduced=True)


def test_suspension_consistency_across_rules():
    # H~^(m + n.xi)(X) == H~^(m + (n+1).xi)(S^xi smash X) on overlaps
    g = CyclicGroup(3)
    sxi = minimal_rep_sphere(3, 1)
    spaces = [based_zero_sphere(g), plus_point(sphere_of_rep(irrep(g, 1)))]
    for ring in (("F", 3), "Z"):
        m = fixed_point_mackey(ring, g)
        for x in spaces:
            sx = smash(sxi, x)
            for mm in range(-6, 7):
                for nn in range(-3, 1):
                    can_lift = nn + 1 <= 0 or (ring != "Z" and sx.is_free())
                    if not can_lift:
                        continue
                    a = ro_graded_cohomology(x, m, (mm, nn))
                    b = ro_graded_cohomology(sx, m, (mm, nn + 1))
                    assert a == b, (ring, mm, nn)


def test_euler_action_trivial_summand_kills():
    g = CyclicGroup(3)
    m = fixed_point_mackey(("F", 3), g)
    s0 = based_zero_sphere(g)
    one = CohomologyClass((0, 0), (1,), ro_graded_cohomology(s0, m, (0, 0)))
    out = euler_action(s0, m, one, VirtualRep(g, {0: 1, 1: 1}))
    assert out.is_zero() and out.grading == (1, 1)


def test_euler_action_point_cone():
    g = CyclicGroup(3)
    m = fixed_point_mackey(("F", 3), g)
    s0 = based_zero_sphere(g)
    one = CohomologyClass((0, 0), (1,), ro_graded_cohomology(s0, m, (0, 0)))
    a1 = euler_action(s0, m, one, irrep(g, 1))
    assert not a1.is_zero() and a1.grading == (0, 1)
    a2 = euler_action(s0, m, a1, irrep(g, 1))
    assert not a2.is_zero() and a2.grading == (0, 2)
    below = CohomologyClass((2, -1), (1,), ro_graded_cohomology(s0, m, (2, -1)))
    with pytest.raises(UnsupportedGrading):
        euler_action(s0, m, below, irrep(g, 1))


def test_class_records_serialize():
    g = CyclicGroup(3)
    m = fixed_point_mackey(("F", 3), g)
    s0 = based_zero_sphere(g)
    c = CohomologyClass((0, 1), (2,), ro_graded_cohomology(s0, m, (0, 1)),
                        model={"kind": "point-cone"})
    rec = c.to_record()
    assert rec["grading"] == [0, 1] and rec["vector"] == [2]
    assert rec["home"] == "F_3"
