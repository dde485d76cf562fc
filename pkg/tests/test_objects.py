"""Standard objects: cyclic duals J, coinduced duals F, the ambient algebra
H, and the canonical maps between them."""
from __future__ import annotations

import math

import pytest

from supercomod.bialgebra import mono_tau, mono_u, mono_xi
from supercomod.comodule import steenrod_action
from supercomod.functorcomb import count_hom
from supercomod.objects import (
    build_F,
    build_Fn,
    build_H,
    build_H_tensor,
    build_J,
    build_Jn,
    build_PhiF,
    canonical_l,
    canonical_r,
    canonical_u,
    cap_morphism,
    mu_quotient,
    parse_object_id,
    theta_J,
    theta_psi_H,
    u_suspension_iso,
    verschiebung,
    verschiebung_twisted,
    xi0_multiplication,
)


def images(f):
    out = {}
    for d in f.source.degrees():
        for lab in f.source.basis(d):
            img = f.image_of(lab)
            if img:
                out[lab] = img
    return out


# ---------------------------------------------------------------------------
# J objects


def test_J01_basis():
    J = build_J(3, 0, 1)
    assert {d: J.basis(d) for d in J.degrees()} == {(1, 0): ["t0"], (0, 1): ["x0"]}
    assert J.validate() == []


def test_J03_basis():
    J = build_J(3, 0, 3)
    assert {d: J.basis(d) for d in J.degrees()} == {
        (1, 0): ["t1"],
        (0, 1): ["x1"],
        (1, 2): ["t0*x0^2"],
        (0, 3): ["x0^3"],
    }
    assert J.validate() == []


def test_J04_poincare():
    J = build_J(3, 0, 4)
    assert J.poincare() == {(2, 0): 1, (1, 1): 2, (0, 2): 1, (1, 3): 1, (0, 4): 1}
    assert J.basis((1, 1)) == ["t0*x1", "t1*x0"]
    assert J.validate() == []


def test_J11_is_suspended_J01():
    J = build_J(3, 1, 1)
    assert {d: J.basis(d) for d in J.degrees()} == {
        (2, 0): ["t0*u"],
        (1, 1): ["u*x0"],
    }


@pytest.mark.parametrize("n", range(0, 10))
def test_J0n_dims_count_pairs(n):
    J = build_J(3, 0, n)
    for d in J.degrees():
        s, t = d
        assert J.dim(d) == count_hom(3, n, s, t)
    assert sum(J.poincare().values()) == sum(
        count_hom(3, n, s, t) for s in range(n + 1) for t in range(n + 1)
    )


def test_Jn_small():
    J2 = build_Jn(3, 2)
    assert {d: J2.basis(d) for d in J2.degrees()} == {1: ["t0"], 2: ["u^2"]}
    J3 = build_Jn(3, 3)
    assert {d: J3.basis(d) for d in J3.degrees()} == {2: ["t0*u"], 3: ["u^3"]}
    assert J2.validate() == []
    assert J3.validate() == []


def test_theta_J01():
    T = theta_J(3, 0, 1)
    assert T.poincare() == {1: 1, 2: 1}
    assert T.validate() == []


def test_J_p5():
    J = build_J(5, 0, 2)
    assert {d: J.basis(d) for d in J.degrees()} == {
        (1, 1): ["t0*x0"],
        (0, 2): ["x0^2"],
    }
    assert J.validate() == []


# ---------------------------------------------------------------------------
# F objects (duals of single right components)


def test_F10_poincare():
    F = build_F(3, 1, 0, 30)
    assert F.poincare() == {(1, 0): 1, (0, 1): 1, (0, 3): 1, (0, 9): 1}
    assert F.validate() == []


def test_F01_poincare():
    F = build_F(3, 0, 1, 30)
    assert F.poincare() == {(0, 1): 1, (0, 3): 1, (0, 9): 1}
    assert F.validate() == []


def test_F20_poincare():
    F = build_F(3, 2, 0, 24)
    assert F.poincare() == {
        (2, 0): 1,
        (1, 1): 1,
        (1, 3): 1,
        (1, 9): 1,
        (0, 4): 1,
        (0, 10): 1,
        (0, 12): 1,
    }
    assert F.validate() == []


def test_F11_dim():
    F = build_F(3, 1, 1, 40)
    assert sum(F.poincare().values()) == 12
    assert F.validate() == []


@pytest.mark.parametrize("n,dim", [(1, 4), (2, 9), (3, 16), (4, 24), (5, 31), (6, 37)])
def test_Fn_dims(n, dim):
    F = build_Fn(3, n, 40)
    assert sum(F.poincare().values()) == dim
    assert F.validate() == []


def test_F_p5():
    F = build_F(5, 1, 0, 30)
    assert F.poincare() == {(1, 0): 1, (0, 1): 1, (0, 5): 1}
    assert F.validate() == []


# ---------------------------------------------------------------------------
# the ambient object H


def test_H_coaction_of_y():
    H = build_H(3, 30)
    terms = {(lab, str(b)): c for c, lab, b in H.coaction["y"]}
    assert terms == {("y", "u"): 1, ("x", "t0"): 1, ("x^3", "t1"): 1, ("x^9", "t2"): 1}
    assert H.validate() == []


def test_H_coaction_of_x():
    H = build_H(3, 30)
    terms = {(lab, str(b)): c for c, lab, b in H.coaction["x"]}
    assert terms == {("y", "w"): 1, ("x", "x0"): 1, ("x^3", "x1"): 1, ("x^9", "x2"): 1}


def test_H_power_coefficients():
    # psi(x^2) = psi(x)^2; the polynomial part carries multinomial weights
    H = build_H(3, 30)
    terms = {(lab, str(b)): c for c, lab, b in H.coaction["x^2"]}
    assert terms[("x^2", "x0^2")] == 1
    assert terms[("x^4", "x0*x1")] == 2
    assert terms[("y*x", "w*x0")] == 2


def test_H_p2():
    H = build_H(2, 20)
    terms = {(lab, str(b)): c for c, lab, b in H.coaction["x"]}
    assert terms == {
        ("x", "x0"): 1,
        ("x^2", "x1"): 1,
        ("x^4", "x2"): 1,
        ("x^8", "x3"): 1,
        ("x^16", "x4"): 1,
    }
    assert H.validate() == []


def test_H_p5():
    H = build_H(5, 24)
    terms = {(lab, str(b)) for _, lab, b in H.coaction["y"]}
    assert terms == {("y", "u"), ("x", "t0"), ("x^5", "t1")}
    assert H.validate() == []


def test_theta_psi_H_dims():
    T = theta_psi_H(3, 30)
    assert all(T.dim(d) == 1 for d in T.degrees())
    assert sorted(T.degrees()) == list(range(32))
    assert T.validate() == []


def test_H_tensor_square_validates():
    T = build_H_tensor(3, 2, 16)
    assert T.validate() == []
    # rank of the degree-2 component of H (x) H: 1|x, x|1, y|y
    assert T.dim((0, 1)) == 2
    assert T.dim((2, 0)) == 1


# ---------------------------------------------------------------------------
# operations on Theta Psi H: closed forms


def op_entry(M, lam, src_deg):
    block = steenrod_action(M, lam)[src_deg]
    return block.a.tolist()


def test_bockstein_of_y():
    T = theta_psi_H(3, 30)
    assert op_entry(T, mono_tau(0), 1) == [[1]]  # beta(y) = x
    assert op_entry(T, mono_tau(0), 2) == [[0]]  # beta(x) = 0


def test_power_operations_closed_form():
    T = theta_psi_H(3, 40)
    # P^i(x^m) = binomial(m, i) x^{m + 2i} at p = 3, x^m in degree 2m
    for m in range(1, 12):
        for i in range(1, 6):
            if 2 * (m + 2 * i) > 40:
                continue
            c = math.comb(m, i) % 3
            assert op_entry(T, mono_xi(1, i), 2 * m) == [[c]], (m, i)


def test_top_power_is_frobenius():
    T = theta_psi_H(3, 40)
    for m in (1, 2, 3, 4):
        assert op_entry(T, mono_xi(1, m), 2 * m) == [[1]]


def test_milnor_primitive_q1():
    T = theta_psi_H(3, 30)
    block = steenrod_action(T, mono_tau(1))
    assert block[1].a.tolist() == [[1]]  # Q_1(y) = x^3
    assert block[2].a.tolist() == [[0]]  # Q_1(x) = 0


def test_squares_p2():
    # Sq^i(x^m) = C(m,i) x^{m+i}; the x0-padding in the coaction terms
    # must be absorbed the same way u-padding is at odd primes.
    H = build_H(2, 20)
    for i in (1, 2, 3):
        for m in range(1, 6):
            assert op_entry(H, mono_xi(1, i), m) == [[math.comb(m, i) % 2]]
    assert op_entry(H, mono_xi(1, 2), 1) == [[0]]  # below the excess


# ---------------------------------------------------------------------------
# canonical morphisms


def test_verschiebung_one():
    V = verschiebung(3, 1)
    assert V.source.name == "J(0,3)" and V.target.name == "J(0,1)"
    assert images(V) == {"t1": [(1, "t0")], "x1": [(1, "x0")]}
    assert V.check() == []


def test_verschiebung_needs_positive_index():
    with pytest.raises(ValueError):
        verschiebung(3, 0)


def test_twisted_verschiebung_one():
    V = verschiebung_twisted(3, 1)
    assert V.source.name == "J(0,4)" and V.target.name == "J(1,1)"
    assert images(V) == {"t0*t1": [(1, "t0*u")], "t0*x1": [(1, "u*x0")]}
    assert V.check() == []


def test_cap_by_t0():
    f = cap_morphism(3, "t0")
    assert f.source.name == "J(0,1)" and f.target.name == "J(1,0)"
    assert images(f) == {"t0": [(1, "u")]}
    assert f.check() == []


def test_xi0_multiplication_injective():
    f = xi0_multiplication(3, 3)
    assert images(f) == {
        "s|t0*x0": [(1, "t0*x0^2")],
        "s|x0^2": [(1, "x0^3")],
    }
    assert f.check() == []
    for d in f.source.degrees():
        assert f.block(d).rank() == f.source.dim(d)


def test_u_suspension_iso():
    f = u_suspension_iso(3, 1)
    assert images(f) == {"s|t0": [(1, "t0*u")], "s|x0": [(1, "u*x0")]}
    assert f.check() == []
    for d in f.source.degrees():
        assert f.source.dim(d) == f.target.dim(d) == f.block(d).rank()


def test_mu_quotient_images():
    f = mu_quotient(3, 2, 0, 1, 24)
    assert f.source.name == "F2"
    img = images(f)
    assert img["u^2"] == [(1, "x0")]
    assert img["x1"] == [(1, "x1")]
    assert "t0*u" not in img and "t0*t1" not in img
    assert f.check() == []

    g = mu_quotient(3, 2, 2, 0, 24)
    img2 = images(g)
    assert img2["u^2"] == [(1, "u^2")]
    assert img2["t0*u"] == [(1, "t0*u")]
    assert img2["t0*t1"] == [(1, "t0*t1")]
    assert g.check() == []


def test_canonical_l_normalization():
    f = canonical_l(3, 2, 0, 24)
    img = images(f)
    assert img == {"u^2": [(1, "s|1")]}
    assert f.check() == []


def test_canonical_r_normalization():
    f = canonical_r(3, 0, 1, 24)
    assert images(f) == {"x0": [(1, "s|1")]}
    assert f.check() == []


def test_canonical_u_on_F20():
    f = canonical_u(3, 2, 0, 24)
    img = images(f)
    assert img == {
        "u^2": [(1, "s|u")],
        "t0*u": [(1, "s|t0")],
        "t1*u": [(1, "s|t1")],
        "t2*u": [(1, "s|t2")],
    }
    assert f.check() == []
    with pytest.raises(ValueError):
        canonical_u(3, 0, 1, 24)


def test_phi_F_low_weights():
    F0, inc0 = build_PhiF(3, 0, 20)
    assert F0.poincare() == {(0, 0): 1}
    F1, inc1 = build_PhiF(3, 1, 20)
    assert F1.poincare() == {(1, 0): 1, (0, 1): 1, (0, 3): 1, (0, 9): 1}
    assert inc1.source is F1


# ---------------------------------------------------------------------------
# object ids


@pytest.mark.parametrize(
    "text,name",
    [
        ("J:0,3", "J(0,3)"),
        ("F:1,0", "F(1,0)"),
        ("Fn:2", "F2"),
        ("Jn:3", "J3"),
        ("H", "H"),
        ("H^2", "H^(x)2"),
        ("PhiF:1", "PhiF(1)"),
    ],
)
def test_parse_object_id(text, name):
    M = parse_object_id(text, 3, 16)
    assert M.name == name


@pytest.mark.parametrize("bad", ["nope", "J:0", "F:", "H^", "Fn:x", ""])
def test_parse_object_id_rejects(bad):
    with pytest.raises(ValueError):
        parse_object_id(bad, 3, 16)
