import random

import pytest

from resform.errors import NonUnit, RamifiedClass
from resform.gfield import gf_create, trace_bit
from resform.wittring import (
    ArfClass,
    arf_from_unit,
    gr_create,
    square_class_normalize,
    teichmuller,
)


def test_ring_arithmetic_mod8():
    ring = gr_create(gf_create(2, 1))
    assert ring(3) + ring(7) == ring(2)
    assert ring(3) * ring(5) == ring(7)
    assert ring(5).inverse() * ring(5) == ring(1)
    assert (-ring(1)) == ring(7)
    with pytest.raises(NonUnit):
        ring(2).inverse()


def test_units_and_reduction():
    field = gf_create(2, 2)
    ring = gr_create(field)
    units = [x for x in ring.elements() if x.is_unit()]
    assert len(units) == 48  # |GR| - |2GR| = 64 - 16
    for x in units[:10]:
        assert x.reduce() == x.reduce()
        assert not x.reduce().is_zero()


def test_teichmuller_is_multiplicative_cube_root():
    for m in (1, 2, 3):
        field = gf_create(2, m)
        ring = gr_create(field)
        for a in field.elements():
            t = teichmuller(ring, a)
            assert t.reduce() == a
            assert t ** (2 ** m) == t
        rng = random.Random(m)
        elems = list(field.elements())
        for _ in range(8):
            a, b = rng.choice(elems), rng.choice(elems)
            assert teichmuller(ring, a * b) == teichmuller(ring, a) * teichmuller(ring, b)


def test_square_class_frozen_digits():
    ring = gr_create(gf_create(2, 1))
    digits = {}
    for u in (1, 3, 5, 7):
        cls = square_class_normalize(ring(u))
        digits[u] = (cls.a_part.coeffs[0], cls.b_part.coeffs[0])
    assert digits[1] == (0, 0)
    assert digits[5] == (0, 1)
    assert digits[7] == (1, 1)
    assert digits[3] == (1, 0)


def test_square_class_kills_squares():
    rng = random.Random(5)
    for m in (1, 2, 3):
        ring = gr_create(gf_create(2, m))
        units = [x for x in ring.elements() if x.is_unit()]
        for _ in range(12):
            u = rng.choice(units)
            s = rng.choice(units)
            assert square_class_normalize(u * s * s) == square_class_normalize(u)


def test_square_class_rejects_non_units():
    ring = gr_create(gf_create(2, 1))
    with pytest.raises(NonUnit):
        square_class_normalize(ring(2))


def test_arf_from_unit_readings():
    ring = gr_create(gf_create(2, 1))
    assert arf_from_unit(ring(1), 0) == 0
    assert arf_from_unit(ring(5), 0) == 1
    assert arf_from_unit(ring(7), 1) == 0
    assert arf_from_unit(ring(5), 2) == 1
    with pytest.raises(RamifiedClass):
        arf_from_unit(ring(3), 0)
    with pytest.raises(RamifiedClass):
        arf_from_unit(ring(7), 0)


def test_arf_class_equality_modulo_artin_schreier():
    field = gf_create(2, 2)
    w = field.gen()
    # w and w + 1 = w^2 differ by a square minus itself, hence one class
    assert ArfClass(field, w) == ArfClass(field, w * w)
    assert ArfClass(field, field(0)) == 0
    assert ArfClass(field, w).trace_bit == trace_bit(w) == 1


def test_sign_parity_moves_between_classes():
    ring = gr_create(gf_create(2, 1))
    # the reading exists exactly when (-1)^N u lands on an unramified class
    assert arf_from_unit(ring(7), 1) == 0
    assert arf_from_unit(ring(5), 0) == 1
    with pytest.raises(RamifiedClass):
        arf_from_unit(ring(5), 1)
    with pytest.raises(RamifiedClass):
        arf_from_unit(ring(7), 0)
