import random

import pytest

from resform.errors import PolySyntaxError, UnknownVariable
from resform.gfield import gf_create
from resform.mpoly import (
    MultiPoly,
    ZZ,
    divided_difference,
    hessian,
    parse_poly,
    partials,
)


def _random_poly(rng, ring, n, max_deg=4, n_terms=5):
    terms = {}
    for _ in range(n_terms):
        e = tuple(rng.randrange(0, max_deg) for _ in range(n))
        terms[e] = ring(rng.randrange(1, 7))
    return MultiPoly(ring, n, terms)


def test_parse_and_render_round_trip():
    f7 = gf_create(7, 1)
    f = parse_poly("x^3 + 2*x*y - y + 5", f7, ["x", "y"])
    assert f.terms[(3, 0)] == f7(1)
    assert f.terms[(1, 1)] == f7(2)
    assert f.terms[(0, 1)] == f7(-1)
    assert f.terms[(0, 0)] == f7(5)
    again = parse_poly(f.render(["x", "y"]), f7, ["x", "y"])
    assert again == f


def test_parse_errors():
    f7 = gf_create(7, 1)
    with pytest.raises(UnknownVariable):
        parse_poly("x + z", f7, ["x", "y"])
    with pytest.raises(PolySyntaxError):
        parse_poly("x ++* y", f7, ["x", "y"])


def test_ring_axioms_on_samples():
    rng = random.Random(11)
    f5 = gf_create(5, 1)
    for _ in range(15):
        a = _random_poly(rng, f5, 2)
        b = _random_poly(rng, f5, 2)
        c = _random_poly(rng, f5, 2)
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a
        assert a * b == b * a


def test_evaluate_matches_substitute():
    f7 = gf_create(7, 1)
    f = parse_poly("x^2*y + 3*y^2 + x", f7, ["x", "y"])
    vals = [f7(2), f7(5)]
    consts = [MultiPoly.const(f7, 2, v) for v in vals]
    assert f.substitute(consts).terms.get((0, 0), f7.zero) == f.evaluate(vals)


def test_integer_polynomials():
    x = MultiPoly.var(ZZ, 2, 0)
    y = MultiPoly.var(ZZ, 2, 1)
    f = (x + y) ** 3
    assert f.terms[(2, 1)] == 3
    assert f.evaluate([2, 1]) == 27
    assert (2 * x).terms[(1, 0)] == 2


def test_partials_and_hessian():
    f7 = gf_create(7, 1)
    f = parse_poly("x^3 + x*y^2", f7, ["x", "y"])
    gx, gy = partials(f)
    assert gx == parse_poly("3*x^2 + y^2", f7, ["x", "y"])
    assert gy == parse_poly("2*x*y", f7, ["x", "y"])
    H = hessian(f)
    assert H[0][1] == H[1][0] == parse_poly("2*y", f7, ["x", "y"])


def test_divided_difference_telescopes():
    """Sum of dd_j(g) * (x_j - y_j) recovers g(x) - g(y)."""
    rng = random.Random(23)
    f7 = gf_create(7, 1)
    for n in (1, 2, 3):
        g = _random_poly(rng, f7, n)
        gx = g.embed(2 * n, 0)
        gy = g.embed(2 * n, n)
        acc = MultiPoly.zero(f7, 2 * n)
        for j in range(n):
            xj = MultiPoly.var(f7, 2 * n, j)
            yj = MultiPoly.var(f7, 2 * n, n + j)
            acc = acc + divided_difference(g, j) * (xj - yj)
        assert acc == gx - gy


def test_divided_difference_reverse_convention():
    f7 = gf_create(7, 1)
    g = parse_poly("x^2*y", f7, ["x", "y"])
    fwd = divided_difference(g, 0)
    rev = divided_difference(g, 0, reverse=True)
    swap = list(range(4))
    swap = [2, 3, 0, 1]
    reswapped = MultiPoly(f7, 4, {tuple(e[i] for i in swap): c
                                  for e, c in rev.terms.items()})
    assert reswapped == fwd


def test_embed_offsets():
    f7 = gf_create(7, 1)
    f = parse_poly("x^2 + 1", f7, ["x"])
    g = f.embed(3, 1)
    assert g.terms == {(0, 2, 0): f7(1), (0, 0, 0): f7(1)}
