"""Binary forms and diagonal Fermat hypersurface data.

Resultants via Sylvester matrices, the divided discriminant (the resultant
of the partials with the forced power of d removed, so it stays honest in
small characteristic), closed forms for diagonal Fermat forms, and the
characteristic-2 comparison between the Arf invariant of a binary form and
the sign of Frobenius on its zero locus.
"""

from __future__ import annotations

from .errors import NonIntegral, OddCharacteristic, SingularForm
from .gfield import Field
from .linalg import det_bareiss, det_ring
from .mpoly import MultiPoly
from .residue import arf_invariant
from .unipoly import ddf, degree, monic_p, trim


class BinaryForm:
    """Homogeneous binary form, coefficients listed from T0^d down to T1^d."""

    __slots__ = ("ring", "d", "coeffs")

    def __init__(self, ring, d: int, coeffs):
        coeffs = list(coeffs)
        if d < 1 or len(coeffs) != d + 1:
            raise ValueError(f"degree-{d} form needs {d + 1} coefficients")
        if ring is not None:
            coeffs = [ring(c) for c in coeffs]
        if all(_is_zero(c) for c in coeffs):
            raise ValueError("the zero form has no degree")
        self.ring = ring
        self.d = d
        self.coeffs = coeffs

    def as_poly(self) -> MultiPoly:
        d = self.d
        terms = {(d - i, i): c for i, c in enumerate(self.coeffs) if not _is_zero(c)}
        return MultiPoly(self.ring, 2, terms)

    def __repr__(self):
        return f"BinaryForm(d={self.d}, {self.coeffs!r})"


def _is_zero(c) -> bool:
    return c == 0 if isinstance(c, int) else c.is_zero()


def sylvester_resultant(g, h, m: int, n: int):
    """Resultant of g and h with declared degree bounds m and n.

    Coefficient lists are little-endian and may be integers, field
    elements, or integer polynomials; shorter lists are padded.
    """
    g, h = list(g), list(h)
    if len(g) > m + 1 or len(h) > n + 1:
        raise ValueError("coefficient list exceeds its declared bound")
    probe = next((x for x in g + h if not isinstance(x, int)), None)
    if probe is None:
        zero = 0
    elif isinstance(probe, MultiPoly):
        zero = MultiPoly.zero(probe.ring, probe.n_vars)
        g = [MultiPoly.const(probe.ring, probe.n_vars, x) if isinstance(x, int) else x for x in g]
        h = [MultiPoly.const(probe.ring, probe.n_vars, x) if isinstance(x, int) else x for x in h]
    else:
        field = probe.field
        zero = field(0)
        g = [field(x) if isinstance(x, int) else x for x in g]
        h = [field(x) if isinstance(x, int) else x for x in h]
    g = g + [zero] * (m + 1 - len(g))
    h = h + [zero] * (n + 1 - len(h))
    if m + n == 0:
        return zero + 1
    gh = list(reversed(g))
    hh = list(reversed(h))
    rows = [[zero] * i + gh + [zero] * (n - 1 - i) for i in range(n)]
    rows += [[zero] * i + hh + [zero] * (m - 1 - i) for i in range(m)]
    if probe is not None and not isinstance(probe, MultiPoly):
        return det_ring(probe.field, rows)
    return det_bareiss(rows)


def a_exponent(n: int, d: int) -> int:
    """The exponent ((d-1)^(n+2) - (-1)^(n+2)) / d; always an integer."""
    if n < -1:
        raise ValueError("n must be at least -1")
    num = (d - 1) ** (n + 2) - (-1) ** (n + 2)
    if num % d:
        raise NonIntegral(f"a({n}, {d}) is not integral")
    return num // d


def _partials_dehomog(coeffs, d):
    """Little-endian F(x,1) derivative pair for highest-first coefficients."""
    g = [(j + 1) * coeffs[d - 1 - j] for j in range(d)]
    h = [(d - j) * coeffs[d - j] for j in range(d)]
    return g, h


_GENERIC_DISC: dict = {}


def generic_divided_disc(d: int) -> MultiPoly:
    """Divided discriminant of the generic degree-d form, over Z[c_0..c_d].

    The Sylvester resultant of the two partials is divisible by d^(d-2);
    the exact quotient is primitive, which we assert rather than assume.
    """
    cached = _GENERIC_DISC.get(d)
    if cached is not None:
        return cached
    from .linalg import poly_exact_div
    from .mpoly import ZZ

    cs = [MultiPoly.var(ZZ, d + 1, i) for i in range(d + 1)]
    g, h = _partials_dehomog(cs, d)
    res = sylvester_resultant(g, h, d - 1, d - 1)
    disc = poly_exact_div(res, MultiPoly.const(ZZ, d + 1, d ** max(d - 2, 0)))
    content = 0
    for c in disc.terms.values():
        content = _gcd(content, c)
    assert content == 1, f"divided discriminant for d={d} is imprimitive"
    _GENERIC_DISC[d] = disc
    return disc


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def divided_disc_binary(F: BinaryForm):
    """Divided discriminant of a binary form, in its coefficient ring.

    Integer forms and forms over fields where d is a unit take the direct
    resultant route; otherwise the generic polynomial is specialized, which
    is what keeps characteristic p | d cases meaningful.
    """
    d = F.d
    ring = F.ring
    power = d ** max(d - 2, 0)
    if ring is None or isinstance(F.coeffs[0], int):
        g, h = _partials_dehomog(F.coeffs, d)
        res = sylvester_resultant(g, h, d - 1, d - 1)
        q, r = divmod(res, power)
        if r:
            raise NonIntegral("resultant is not divisible by the forced power of d")
        return q
    if not ring(power).is_zero():
        g, h = _partials_dehomog(F.coeffs, d)
        return sylvester_resultant(g, h, d - 1, d - 1) / ring(power)
    disc = generic_divided_disc(d)
    acc = ring(0)
    for e, c in disc.terms.items():
        t = ring(c)
        for i, k in enumerate(e):
            if k:
                t = t * F.coeffs[i] ** k
        acc = acc + t
    return acc


def fermat_formulas(d: int, n: int, a_list) -> dict:
    """Closed forms for the diagonal form a_0*T_0^d + ... + a_{n+1}*T_{n+1}^d.

    Returns integer values: the divided discriminant of the form, the
    discriminant of the residue pairing for dt, and the Milnor number.
    """
    nu = n + 2
    a_list = [int(a) for a in a_list]
    if len(a_list) != nu:
        raise ValueError(f"need {nu} coefficients for n={n}")
    if any(a == 0 for a in a_list):
        raise ValueError("coefficients must be units")
    prod_a = 1
    for a in a_list:
        prod_a *= a
    mu = (d - 1) ** nu
    half = (d - 2) * mu * nu
    if half % 2:
        raise NonIntegral("sign exponent is not integral")
    disc_d = d ** (nu * (d - 1) ** (nu - 1) - a_exponent(n, d)) * prod_a ** ((d - 1) ** (nu - 1))
    disc_b = (-1) ** (half // 2) * d ** (mu * nu) * prod_a ** mu
    return {"d": d, "n": n, "mu": mu, "disc_d": disc_d, "disc_B_value": disc_b}


def frobenius_sign_binary(F: BinaryForm) -> int:
    """(-1)^(d - c) with c the number of irreducible factors over F_q.

    Only distinct-degree splitting is needed because nonsingular forms are
    squarefree; a vanished leading coefficient contributes the factor T1.
    """
    field = F.ring
    if not isinstance(field, Field):
        raise ValueError("frobenius sign needs a form over a finite field")
    d = F.d
    if d % 2 == 0:
        raise ValueError("degree must be odd")
    if divided_disc_binary(F).is_zero():
        raise SingularForm("form has a repeated root")
    le = trim(list(reversed(F.coeffs)))
    c = 1 if len(le) < d + 1 else 0
    f = monic_p(le)
    for block_deg, prod in ddf(field, f):
        c += degree(prod) // block_deg
    return (-1) ** ((d - c) % 2)


def verify_homog_char2(F: BinaryForm) -> dict:
    """Check Arf triviality against the Frobenius sign for odd-degree F.

    The comparison is epsilon(q, d) * frobenius sign == +1 exactly when
    the Arf class of the affine cone vanishes.
    """
    field = F.ring
    if not isinstance(field, Field) or field.p != 2:
        raise OddCharacteristic("this check lives in characteristic 2")
    d = F.d
    if d % 2 == 0 or d < 3:
        raise ValueError("degree must be odd and at least 3")
    if divided_disc_binary(F).is_zero():
        raise SingularForm("form has a repeated root")
    sgn = frobenius_sign_binary(F)
    eps = (-1) ** ((d * d - 1) // 8) if field.m % 2 else 1
    arf = arf_invariant(F.as_poly())
    ok = arf.is_trivial() == (eps * sgn == 1)
    return {
        "d": d,
        "field": field.to_json(),
        "frobenius_sign": sgn,
        "epsilon_sign": eps,
        "product": eps * sgn,
        "arf": arf.to_json(),
        "verdict": "PASS" if ok else "FAIL",
    }
