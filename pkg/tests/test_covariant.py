import random

from fractions import Fraction

import pytest

from invforge.acceptance import is_power_of_quadratic
from invforge.covariant import (
    CovariantExpr,
    in_range,
    membership,
    mu,
    octavic_preset,
    phi,
    set_S,
    u_cov,
)
from invforge.poly import Poly, VarRegistry
from invforge.transvect import BinaryForm, transvectant


def xreg(extra=()):
    return VarRegistry(list(extra) + ["x0", "x1"])


def form(poly, degree=None):
    return BinaryForm(poly, degree=degree)


def quartic(reg, c):
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    p = Poly.zero(reg)
    for t, coeff in enumerate(c):
        p = p + coeff * x0 ** (4 - t) * x1**t
    return form(p, degree=4)


# -- index window -------------------------------------------------------------


def test_in_range_window():
    assert in_range(4, 0, 1)
    assert in_range(4, 1, 3)
    assert not in_range(4, 1, 4 + 1)
    assert not in_range(4, 3, 0)  # 2i > d
    assert not in_range(4, 0, 5)
    assert in_range(8, 2, 0)
    assert in_range(8, 2, 8)  # 2d - 4i = 8
    assert not in_range(8, 2, 9)
    assert in_range(8, 3, 4)
    assert not in_range(8, 3, 5)  # 2d - 4i = 4


# -- the iterated transvectants ----------------------------------------------


def test_u_cov_examples():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    out = u_cov(4, 1, 1, form((x0 * x1) ** 2))
    assert out.is_zero()

    out = u_cov(4, 1, 1, form(x0**3 * x1))
    assert out.poly == Fraction(-1, 32) * x0**6
    assert out.degree == 6


def test_u_cov_inner_zero_matches_plain_transvectant():
    # i = 0 makes the inner step a plain square
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    F = form(x0**3 * x1 + 2 * x1**4)
    for j in (1, 3):
        expected = transvectant(form(F.poly**2), F, j)
        assert u_cov(4, 0, j, F) == expected, j


def test_u_cov_degree_bookkeeping():
    reg = VarRegistry(["f0", "f1", "f2", "f3", "f4", "x0", "x1"])
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    F = Poly.zero(reg)
    for t in range(5):
        F = F + Poly.variable(reg, f"f{t}") * x0 ** (4 - t) * x1**t
    F = form(F, degree=4)
    for i in range(3):
        for j in range(13):
            out = u_cov(4, i, j, F)
            want = max(3 * 4 - 4 * i - 2 * j, 0)
            assert out.degree == want, (i, j)
            if in_range(4, i, j) and not out.is_zero():
                assert out.poly.is_homogeneous_in(["x0", "x1"], want)


def test_u_cov_outside_window_is_zero():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    F = form(x0**4 + x1**4)
    assert u_cov(4, 3, 0, F).is_zero()
    assert u_cov(4, 0, 9, F).is_zero()


def test_u_cov_input_guards():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    with pytest.raises(ValueError):
        u_cov(3, 0, 1, form(x0**3))
    with pytest.raises(ValueError):
        u_cov(4, 0, 1, form(x0**3))


# -- the coefficients ---------------------------------------------------------


def test_mu_values():
    assert mu(2, 0, 0) == 1
    assert mu(1, 1, 0) == Fraction(-1, 2)
    assert mu(4, 1, 4) == Fraction(-1, 1155)
    assert mu(4, 0, 6) == Fraction(-3, 715)
    assert mu(4, 0, 8) == Fraction(7, 1287)
    assert mu(4, 1, 6) == Fraction(5, 12936)


def test_mu_guards():
    with pytest.raises(ValueError):
        mu(4, 0, 3)
    with pytest.raises(ValueError):
        mu(2, 3, 0)


# -- the pair combinations ----------------------------------------------------


def test_phi_identical_pair_vanishes():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    F = form(x0**4 + x0 * x1**3)
    assert phi(4, 0, 2, 0, 2, F).is_zero()


def test_phi_index_constraints():
    reg = xreg()
    x0 = Poly.variable(reg, "x0")
    x1 = Poly.variable(reg, "x1")
    F = form(x0**4 + x1**4)
    with pytest.raises(ValueError):
        phi(4, 0, 2, 1, 1, F)  # odd order
    with pytest.raises(ValueError):
        phi(4, 0, 2, 1, 2, F)  # weights differ
    with pytest.raises(ValueError):
        phi(4, 0, 2, 3, 0, F)  # second pair out of range


def test_phi_kills_power_of_quadratic():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    F = form((x0 * x1) ** 4)
    assert phi(8, 0, 6, 1, 4, F).is_zero()
    assert phi(8, 0, 8, 1, 6, F).is_zero()


def test_phi_separates_generic_octavic():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    F = form(x0**8 + x0**5 * x1**3)
    assert not phi(8, 0, 6, 1, 4, F).is_zero()


# -- expression objects and the finite set ------------------------------------


def test_expr_names_and_orders():
    u = CovariantExpr("U", 4, (1, 1))
    assert u.name() == "U(1,1)"
    assert u.order == 3 * 4 - 4 - 2
    p = CovariantExpr("Phi", 8, (0, 6, 1, 4))
    assert p.name() == "Phi(0,6,1,4)"
    assert p.order == 3 * 8 - 0 - 12


def test_expr_equality_and_hash():
    a = CovariantExpr("U", 4, (1, 1))
    b = CovariantExpr("U", 4, (1, 1))
    c = CovariantExpr("U", 4, (0, 1))
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert len({a, b, c}) == 2


def test_expr_evaluate_matches_functions():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    F = form(x0**4 + 3 * x0 * x1**3)
    assert CovariantExpr("U", 4, (1, 1)).evaluate(F) == u_cov(4, 1, 1, F)
    assert CovariantExpr("Phi", 4, (0, 2, 1, 0)).evaluate(F) == phi(4, 0, 2, 1, 0, F)


def test_set_s_quartic_canonical_list():
    names = [expr.name() for expr in set_S(4)]
    assert names == [
        "U(0,1)",
        "U(1,1)",
        "U(0,3)",
        "U(1,3)",
        "Phi(0,2,1,0)",
        "Phi(0,4,1,2)",
        "Phi(1,2,2,0)",
    ]


def test_set_s_octavic_census():
    exprs = set_S(8)
    us = [e for e in exprs if e.kind == "U"]
    phis = [e for e in exprs if e.kind == "Phi"]
    assert len(us) == 14
    assert len(phis) == 12
    # all U entries take an odd outer index, all Phi weights are even and
    # ascending within the list
    assert all(e.indices[1] % 2 for e in us)
    weights = [2 * e.indices[0] + e.indices[1] for e in phis]
    assert weights == sorted(weights)
    assert all(w % 2 == 0 for w in weights)


def test_set_s_guards():
    with pytest.raises(ValueError):
        set_S(5)
    with pytest.raises(ValueError):
        set_S(2)


def test_set_s_vanishes_on_symbolic_quadratic_power():
    # (L1 L2)^2 with symbolic line coefficients kills every member at d=4
    reg = VarRegistry(["a0", "a1", "b0", "b1", "x0", "x1"])
    a0, a1, b0, b1, x0, x1 = (
        Poly.variable(reg, n) for n in ("a0", "a1", "b0", "b1", "x0", "x1")
    )
    Q = (a0 * x0 + a1 * x1) * (b0 * x0 + b1 * x1)
    F = form(Q**2, degree=4)
    cache = {}
    for expr in set_S(4):
        assert expr.evaluate(F, cache).is_zero(), expr.name()


def test_octavic_preset_members():
    names = [e.name() for e in octavic_preset()]
    assert names == [
        "U(0,3)",
        "U(0,5)",
        "U(0,7)",
        "Phi(0,6,1,4)",
        "Phi(0,8,1,6)",
        "U(3,3)",
    ]
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    F = form(x0**5 * x1**3)
    cache = {}
    for expr in octavic_preset():
        assert not expr.evaluate(F, cache).is_zero(), expr.name()


# -- the decision procedure ---------------------------------------------------


def test_membership_examples():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    assert membership(form((x0**2 + x1**2) ** 2)) == (True, None)
    assert membership(form(x0**4 + x1**4)) == (False, "U(1,1)")
    assert membership(form((x0 * x1) ** 4)) == (True, None)
    ok, witness = membership(form(x0**8 + x1**8))
    assert not ok and witness


def test_membership_trivial_cases():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    assert membership(form(x0 * x1)) == (True, None)
    assert membership(BinaryForm(Poly.zero(reg), degree=4)) == (True, None)


def test_membership_guards():
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    with pytest.raises(ValueError):
        membership(form(x0**3))
    with pytest.raises(ValueError):
        membership(form(x0 + x1))


def test_membership_rejects_random_quartics():
    # random integer quartics are almost never powers of quadratics; check
    # the detector and the membership test agree on a seeded sample
    rng = random.Random(404)
    reg = xreg()
    found = 0
    while found < 5:
        coeffs = [rng.randint(-9, 9) for _ in range(5)]
        if is_power_of_quadratic(coeffs):
            continue
        found += 1
        ok, witness = membership(quartic(reg, coeffs))
        assert not ok, coeffs
        assert witness


def test_membership_accepts_scaled_quadratic_powers():
    rng = random.Random(405)
    reg = xreg()
    x0, x1 = Poly.variable(reg, "x0"), Poly.variable(reg, "x1")
    for _ in range(5):
        a, b, c = (rng.randint(-5, 5) for _ in range(3))
        Q = a * x0**2 + b * x0 * x1 + c * x1**2
        if Q.is_zero():
            continue
        s = rng.choice([1, 2, -3, Fraction(1, 2)])
        assert membership(form(s * Q**2, degree=4)) == (True, None)
