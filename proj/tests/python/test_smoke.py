from fractions import Fraction

import pytest

import fanolines as fl


def test_grassmannian_degree():
    s1 = fl.SchubertClass.sigma([1])
    assert (s1**8).integrate() == Fraction(14)


def test_littlewood_richardson():
    prod = fl.lr_coefficients([1], [1])
    assert prod == {(2,): 1, (1, 1): 1}
    s = fl.SchubertClass.sigma
    # the raw expansion also has s[2,1,1], which dies in the 2 x 4 box of G(2,6)
    assert s([2, 1]) * s([1]) == s([3, 1]) + s([2, 2])
    with pytest.raises(ValueError):
        s([2, 1, 1])


def test_class_of_F():
    s = fl.SchubertClass.sigma
    f = fl.class_of_F()
    assert f == s([2]) * s([2]) * 27 - s([1]) * s([3]) * 9 - s([4]) * 18
    assert (f * s([1]) ** 4).integrate() == Fraction(108)


def test_intersection_table():
    H, c2 = fl.FClass.H_F(), fl.FClass.c2()
    assert (H**4).integrate() == 108
    assert (H**2 * c2).integrate() == 45
    assert (c2**2).integrate() == 27
    assert str(H**2 - c2) == fl.FClass.parse("H_F^2 - c2").__str__()


def test_exactness_of_scalars():
    H = fl.FClass.H_F()
    third = (H * Fraction(1, 3)) ** 4
    assert third.integrate() == Fraction(108, 81) == Fraction(4, 3)
    with pytest.raises(TypeError):
        H * 0.5
    with pytest.raises((ValueError, RuntimeError)):
        fl.FClass.parse("H_F +* c2")


def test_conic_fibration_classes():
    H = fl.FClass.H_F()
    assert str(fl.p_push(fl.q_pull(H**2))) == "21*H_X"
    assert fl.p_push(fl.IClass.l_power(2)).is_zero()
    assert str(fl.class_W()) == "75*H_X"
    assert str(fl.lambda_class()) == "9*H_X"
    assert str(fl.omega_p()) == "q*H_F + l"
    assert str(fl.p_push(fl.omega_p() * fl.q_pull(fl.class_S()))) == "180*H_X^2"


def test_triple_line_locus():
    assert str(fl.class_V()) == "21*c2"
    assert (fl.class_V() * fl.class_S()).integrate() == 1890
    genera = fl.curve_genera()
    assert genera["g_strict_transform"] == 4726
    assert genera["g_image"] == 8506
    assert genera["nodes"] == 3780


def test_residuation():
    r = fl.residuation_classes()
    assert str(r["R"]) == "4*q*H_F + l"
    assert str(r["Rprime"]) == "4*q*H_F + 16*l"
    assert r["N"] == fl.q_pull(fl.class_V())
    assert r["note"]
    assert str(r["V_image"]) == "126*H_X"
    assert fl.degree_psi() == 24 and fl.degree_phi() == 16


def test_admissible_covers_pairings():
    assert fl.pairing_R() == (96, -10)
    assert fl.pairing_Rprime() == (456, -52)
    assert fl.solve_ansatz(96, -10) == (4, 8, -1)
    assert fl.ansatz_to_I(4, 8, -1) == fl.residuation_classes()["R"]


def test_local_certificates():
    mc = fl.minors_certificate()
    assert mc["minor_count"] == 66
    assert mc["nonzero_minors"] == 51
    assert mc["certified"]
    assert all(p <= 20 for p in mc["powers"])
    assert fl.w_degree() == (225, 75)


def test_check_runner():
    cat = fl.check_catalog()
    assert len(cat) == 57
    ids = [c["id"] for c in cat]
    assert ids == sorted(ids)
    results = fl.run_checks(only=["L2.1-HF4", "sch-sigma1-pow8"])
    assert [r["id"] for r in results] == ["L2.1-HF4", "sch-sigma1-pow8"]
    assert all(r["status"] == "pass" for r in results)
    assert results[0]["computed"] == "108"
