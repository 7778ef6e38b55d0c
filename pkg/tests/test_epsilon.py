import random
from fractions import Fraction

import pytest

from resform.errors import (
    CatalogMiss,
    EvenCharacteristic,
    FieldMismatch,
    OddCharacteristic,
    ZeroCoefficient,
)
from resform.epsilon import (
    EpsilonValue,
    arithmetic_side,
    calibrate,
    dimtot_from_mu,
    eps_convolve,
    eps_ordquad_char2,
    eps_quad_odd,
    eps_wildquad_char2,
    geometric_side,
    verify_identity,
)
from resform.gfield import CycloInt, gf_create, legendre
from resform.mpoly import parse_poly


def test_tau_square_absorption():
    f3 = gf_create(3, 1)
    f5 = gf_create(5, 1)
    assert EpsilonValue(f3, 1, 2, 0) == EpsilonValue(f3, -1, 0, 1)
    assert EpsilonValue(f5, 1, 2, 0) == EpsilonValue(f5, 1, 0, 1)
    # negative exponents normalize the same way
    assert EpsilonValue(f3, 1, -1, 0) == EpsilonValue(f3, -1, 1, -1)


def test_group_laws_random():
    rng = random.Random(41)
    for p in (3, 5, 7):
        field = gf_create(p, 1)
        one = EpsilonValue(field, 1)
        vals = [
            EpsilonValue(field, rng.choice((1, -1)), rng.randrange(-3, 4),
                         Fraction(rng.randrange(-4, 5), rng.choice((1, 2))))
            for _ in range(6)
        ]
        for e in vals:
            assert e * e.inverse() == one
            assert e ** 3 == e * e * e
            assert e ** 0 == one
        for a in vals:
            for b in vals:
                assert a * b == b * a
                for c in vals:
                    assert (a * b) * c == a * (b * c)


def test_char2_refuses_tau():
    f2 = gf_create(2, 1)
    with pytest.raises(EvenCharacteristic):
        EpsilonValue(f2, 1, 1, 0)
    assert EpsilonValue(f2, -1, 0, Fraction(1, 2)).to_json()["q_exp"] == "1/2"


def test_field_mismatch_refuses_product():
    e3 = EpsilonValue(gf_create(3, 1), 1)
    e5 = EpsilonValue(gf_create(5, 1), 1)
    with pytest.raises(FieldMismatch):
        e3 * e5


def test_witness_values():
    f3 = gf_create(3, 1)
    assert EpsilonValue(f3, 1, 0, 1).witness() == CycloInt.from_int(3, 3)
    assert EpsilonValue(f3, -1, 1, 0).witness() == CycloInt(3, (1, 2))
    assert EpsilonValue(f3, 1, 0, -1).witness() is None
    assert EpsilonValue(f3, 1, 0, Fraction(1, 2)).witness() is None
    assert EpsilonValue(gf_create(2, 1), 1, 0, 1).witness() is None


def test_twist_rules():
    f7 = gf_create(7, 1)
    e = EpsilonValue(f7, 1, 1, 0)
    for c in range(1, 7):
        assert e.twist(c * c) == e
        assert e.twist(c).sign == legendre(f7(c))
    flat = EpsilonValue(f7, 1, 0, 2)
    assert flat.twist(3) == flat
    with pytest.raises(ZeroCoefficient):
        e.twist(7)
    with pytest.raises(ZeroCoefficient):
        EpsilonValue(gf_create(2, 1), 1).twist(2)


def test_catalog_quadratic_odd():
    f3 = gf_create(3, 1)
    f5 = gf_create(5, 1)
    f7 = gf_create(7, 1)
    assert eps_quad_odd(1, f3) == EpsilonValue(f3, 1, 1, 0)
    assert eps_quad_odd(1, f5) == EpsilonValue(f5, -1, 1, 0)
    assert eps_quad_odd(2, f7) == EpsilonValue(f7, 1, 1, 0)
    with pytest.raises(ZeroCoefficient):
        eps_quad_odd(0, f3)
    with pytest.raises(ZeroCoefficient):
        eps_quad_odd(1, f3, twist=3)
    with pytest.raises(EvenCharacteristic):
        eps_quad_odd(1, gf_create(2, 1))


def test_catalog_char2_entries():
    f2 = gf_create(2, 1)
    f4 = gf_create(2, 2)
    w = f4.gen()
    assert eps_ordquad_char2(f2(1), f2) == EpsilonValue(f2, 1, 0, Fraction(-1))
    assert eps_ordquad_char2(f2(0), f2) == EpsilonValue(f2, -1, 0, Fraction(-1))
    # over F_4 the trace of 1 vanishes and the trace of the generator is 1
    assert eps_ordquad_char2(f4(1), f4).sign == -1
    assert eps_ordquad_char2(w, f4).sign == 1
    assert eps_wildquad_char2(f2) == EpsilonValue(f2, 1, 0, 1)
    with pytest.raises(OddCharacteristic):
        eps_ordquad_char2(1, gf_create(3, 1))
    with pytest.raises(OddCharacteristic):
        eps_wildquad_char2(gf_create(3, 1))
    with pytest.raises(ZeroCoefficient):
        eps_wildquad_char2(f2, twist=2)


def test_convolution_inverts_mixed_powers():
    f3 = gf_create(3, 1)
    e1 = EpsilonValue(f3, -1, 1, 0)
    e2 = EpsilonValue(f3, 1, 0, 1)
    assert eps_convolve(e1, 1, e2, 2) == (e1 ** 2 * e2).inverse()


def test_calibration_picks_exponent_one():
    assert calibrate() == 1


def test_quadratic_identity_held_out_primes():
    """The t^2 identity over primes that played no part in calibration."""
    for p in (7, 11, 13):
        field = gf_create(p, 1)
        f = parse_poly("t^2", field, ["t"])
        ar, d = arithmetic_side(f)
        assert d == 1
        assert geometric_side(f) == ar
        rep = verify_identity(f)
        assert rep["verdict"] == "PASS"
        assert rep["psi_twists_checked"] == p - 1


def test_verify_sum_of_two_squares():
    f3 = gf_create(3, 1)
    rep = verify_identity(parse_poly("x^2+y^2", f3, ["x", "y"]))
    assert rep["verdict"] == "PASS"
    assert rep["dimtot"] == -1
    assert rep["arithmetic"] == {
        "sign": -1, "tau_exp": 0, "q_exp": "-1", "witness": None,
    }
    assert rep["psi_twists_checked"] == 2


def test_verify_char2_cases():
    f2 = gf_create(2, 1)
    rep = verify_identity(parse_poly("u^2+u^3", f2, ["u"]))
    assert rep["verdict"] == "PASS"
    assert rep["arithmetic"] == {
        "sign": 1, "tau_exp": 0, "q_exp": "1", "witness": None,
    }
    rep = verify_identity(parse_poly("x^2+x*y+y^2", f2, ["x", "y"]))
    assert rep["verdict"] == "PASS"
    assert rep["arithmetic"]["sign"] == -1
    assert rep["arithmetic"]["q_exp"] == "-1"


def test_verify_mixed_char2_convolution():
    f2 = gf_create(2, 1)
    f = parse_poly("x^2+x*y+y^2+u^2+u^3", f2, ["x", "y", "u"])
    ar, d = arithmetic_side(f)
    assert (ar.sign, ar.tau_exp, ar.q_exp) == (1, 0, Fraction(3))
    assert d == 2
    rep = verify_identity(f)
    assert rep["verdict"] == "PASS"


def test_catalog_miss_reports_geometric_only():
    f7 = gf_create(7, 1)
    f = parse_poly("x^3+y^3", f7, ["x", "y"])
    with pytest.raises(CatalogMiss):
        arithmetic_side(f)
    rep = verify_identity(f)
    assert rep["verdict"] == "GEOMETRIC_ONLY"
    assert rep["psi_twists_checked"] == 0
    assert rep["arithmetic"] is None
    assert rep["geometric"]["tau_exp"] == 0


def test_blocks_reject_bad_shapes():
    f7 = gf_create(7, 1)
    with pytest.raises(CatalogMiss):
        arithmetic_side(parse_poly("x^2+1", f7, ["x"]))
    with pytest.raises(CatalogMiss):
        arithmetic_side(parse_poly("x^2", f7, ["x", "y"]))


def test_verify_rejects_foreign_field():
    f3 = gf_create(3, 1)
    f5 = gf_create(5, 1)
    with pytest.raises(FieldMismatch):
        verify_identity(parse_poly("t^2", f3, ["t"]), field=f5)


def test_conventions_differ_on_twisted_quadratic():
    """The literal convention drops a legendre(2) factor whenever n*mu is odd."""
    f5 = gf_create(5, 1)
    f = parse_poly("t^2", f5, ["t"])
    cal = geometric_side(f, "calibrated")
    lit = geometric_side(f, "literal")
    assert cal.sign * lit.sign == legendre(f5(2))
    assert verify_identity(f, options={"convention": "literal"})["verdict"] == "FAIL"
    with pytest.raises(ValueError):
        geometric_side(f, "folklore")


def test_dimtot_sign_convention():
    assert dimtot_from_mu(1, 2) == 2
    assert dimtot_from_mu(2, 3) == -3
    assert dimtot_from_mu(3, 4) == 4
