"""Linear algebra over the coefficient rings.

Small rings (at most 1024 elements) get dense numpy lookup tables so row
reduction runs as vectorized gathers on integer codes.  Larger rings fall
back to plain element arithmetic; the matrices there are tiny in practice.

Row reduction only ever uses unit pivots.  Over a field that loses nothing.
Over the truncated Witt ring a column whose remaining entries are nonzero
but all divisible by 2 cannot be cleared that way; we report the column and
let the caller decide what that means (for Milnor algebras it means the
quotient is not free, for determinants it means the result is not a unit).
"""

from __future__ import annotations

import numpy as np

from .errors import NonUnit
from .mpoly import MultiPoly

_TABLE_LIMIT = 1024

_CODED_CACHE: dict = {}


def _ring_base(ring):
    """(digit base, digit count, reduction rows for x^m..x^{2m-2})."""
    if hasattr(ring, "p"):
        return ring.p, ring.m, ring._xpow
    return 8, ring.field.m, ring._xpow


class CodedOps:
    """Lookup tables for one ring, indexed by integer element codes."""

    __slots__ = ("ring", "size", "base", "ADD", "MUL", "NEG", "INV", "UNIT")

    def __init__(self, ring):
        b, m, xpow = _ring_base(ring)
        n = b ** m
        self.ring = ring
        self.size = n
        self.base = b
        powv = b ** np.arange(m, dtype=np.int64)
        codes = np.arange(n, dtype=np.int64)
        C = (codes[:, None] // powv[None, :]) % b

        self.ADD = (((C[:, None, :] + C[None, :, :]) % b) @ powv).astype(np.int32)
        self.NEG = (((b - C) % b) @ powv).astype(np.int32)

        red = np.zeros((2 * m - 1, m), dtype=np.int64)
        for s in range(m):
            red[s, s] = 1
        for s in range(m, 2 * m - 1):
            red[s, :] = xpow[s - m]
        conv = np.zeros((n, n, 2 * m - 1), dtype=np.int64)
        for a in range(m):
            for c in range(m):
                conv[:, :, a + c] += C[:, None, a] * C[None, :, c]
        self.MUL = (((conv.reshape(n * n, 2 * m - 1) @ red) % b) @ powv).reshape(
            n, n
        ).astype(np.int32)

        if hasattr(ring, "p"):
            self.UNIT = codes != 0
            self.INV = np.where(self.UNIT, self._pow_vec(codes, n - 2), 0).astype(
                np.int32
            )
        else:
            self.UNIT = (C % 2).any(axis=1)
            q = 2 ** m
            w = self._pow_vec(codes, q - 2)
            two = 2  # code of the constant 2 in base 8
            for _ in range(2):
                w = self.MUL[w, self.ADD[two, self.NEG[self.MUL[codes, w]]]]
            self.INV = np.where(self.UNIT, w, 0).astype(np.int32)

    def _pow_vec(self, base, e):
        res = np.ones(self.size, dtype=np.int64)
        cur = base.copy()
        while e:
            if e & 1:
                res = self.MUL[res, cur]
            cur = self.MUL[cur, cur]
            e >>= 1
        return res

    def encode_matrix(self, rows):
        enc = self.ring.encode
        return np.array([[enc(x) for x in row] for row in rows], dtype=np.int32)

    def decode_row(self, row):
        dec = self.ring.decode
        return [dec(int(c)) for c in row]

    def rref(self, A):
        """Reduce in place logically; returns (matrix, pivot cols, stuck col).

        Columns without a unit entry are skipped; over a local ring their
        non-unit residue ends up in the leftover rows, and a nonzero
        leftover row is what certifies a non-free quotient.
        """
        A = A.astype(np.int32, copy=True)
        nrows, ncols = A.shape
        pivots = []
        prow = 0
        for col in range(ncols):
            if prow == nrows:
                break
            sub = A[prow:, col]
            units = np.nonzero(self.UNIT[sub])[0]
            if units.size == 0:
                continue
            r = prow + int(units[0])
            if r != prow:
                A[[prow, r]] = A[[r, prow]]
            A[prow] = self.MUL[A[prow], self.INV[A[prow, col]]]
            factors = self.NEG[A[:, col]]
            factors[prow] = 0
            A = self.ADD[A, self.MUL[factors[:, None], A[prow][None, :]]]
            pivots.append(col)
            prow += 1
        stuck = None
        if prow < nrows:
            leftover = np.nonzero((A[prow:] != 0).any(axis=0))[0]
            if leftover.size:
                stuck = int(leftover[0])
        return A, pivots, stuck

    def det(self, A):
        """Determinant code, or None when only non-unit pivots remain."""
        A = A.astype(np.int32, copy=True)
        n = A.shape[0]
        detc = self.ring.encode(self.ring(1))
        flip = False
        for k in range(n):
            sub = A[k:, k]
            units = np.nonzero(self.UNIT[sub])[0]
            if units.size == 0:
                if (sub != 0).any():
                    return None
                return 0
            r = k + int(units[0])
            if r != k:
                A[[k, r]] = A[[r, k]]
                flip = not flip
            piv = int(A[k, k])
            detc = int(self.MUL[detc, piv])
            if k + 1 < n:
                fac = self.MUL[A[k + 1:, k], self.INV[piv]]
                A[k + 1:] = self.ADD[A[k + 1:], self.MUL[self.NEG[fac][:, None], A[k][None, :]]]
        if flip:
            detc = int(self.NEG[detc])
        return detc


def coded(ring):
    """Table set for the ring, or None when tables are unavailable."""
    if ring in _CODED_CACHE:
        return _CODED_CACHE[ring]
    if hasattr(ring, "_xpow") and (hasattr(ring, "p") or hasattr(ring, "field")):
        b, m, _ = _ring_base(ring)
        ops = CodedOps(ring) if b ** m <= _TABLE_LIMIT else None
    else:
        ops = None
    _CODED_CACHE[ring] = ops
    return ops


def _is_unit(x) -> bool:
    if hasattr(x, "is_unit"):
        return x.is_unit()
    return not x.is_zero()


def _rref_obj(ring, rows):
    A = [list(row) for row in rows]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    pivots = []
    prow = 0
    for col in range(ncols):
        if prow == nrows:
            break
        sel = None
        for r in range(prow, nrows):
            if _is_unit(A[r][col]):
                sel = r
                break
        if sel is None:
            continue
        A[prow], A[sel] = A[sel], A[prow]
        inv = A[prow][col].inverse()
        A[prow] = [inv * x for x in A[prow]]
        for r in range(nrows):
            if r == prow or A[r][col].is_zero():
                continue
            c = A[r][col]
            A[r] = [x - c * y for x, y in zip(A[r], A[prow])]
        pivots.append(col)
        prow += 1
    stuck = None
    for col in range(ncols):
        if any(not A[r][col].is_zero() for r in range(prow, nrows)):
            stuck = col
            break
    return A, pivots, stuck


def rref_ring(ring, rows):
    """Unit-pivot reduced row echelon form.

    Returns (rows as elements, pivot column list, stuck column or None).
    """
    if not rows:
        return [], [], None
    ops = coded(ring)
    if ops is None:
        return _rref_obj(ring, rows)
    A, pivots, stuck = ops.rref(ops.encode_matrix(rows))
    return [ops.decode_row(r) for r in A], pivots, stuck


def det_ring(ring, mat):
    """Determinant by elimination.  Over the Witt ring a non-unit
    determinant cannot be pinned down with unit pivots, so raise."""
    n = len(mat)
    if n == 0:
        return ring(1)
    ops = coded(ring)
    if ops is not None:
        code = ops.det(ops.encode_matrix(mat))
        if code is None:
            raise NonUnit("determinant is divisible by 2")
        return ring.decode(int(code))
    A = [list(row) for row in mat]
    det = ring(1)
    for k in range(n):
        sel = None
        dirty = False
        for r in range(k, n):
            if _is_unit(A[r][k]):
                sel = r
                break
            if not A[r][k].is_zero():
                dirty = True
        if sel is None:
            if dirty:
                raise NonUnit("determinant is divisible by 2")
            return ring(0)
        if sel != k:
            A[k], A[sel] = A[sel], A[k]
            det = -det
        det = det * A[k][k]
        inv = A[k][k].inverse()
        for r in range(k + 1, n):
            if A[r][k].is_zero():
                continue
            c = A[r][k] * inv
            A[r] = [x - c * y for x, y in zip(A[r], A[k])]
    return det


def solve_ring(ring, mat, rhs):
    """Solve mat * x = rhs; None when the matrix is not invertible."""
    n = len(mat)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    rows, pivots, stuck = rref_ring(ring, aug)
    if stuck is not None or len(pivots) != n or any(p >= n for p in pivots):
        return None
    return [rows[i][n] for i in range(n)]


def _exact_div(a, b):
    if isinstance(a, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("non-exact integer division in elimination")
        return q
    return poly_exact_div(a, b)


def poly_exact_div(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Exact division of integer multivariate polynomials."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    d_terms = den.sorted_terms()
    de, dc = d_terms[0]
    out = {}
    cur = dict(num.terms)
    while cur:
        ne, nc = max(cur.items(), key=lambda t: (sum(t[0]), t[0]))
        qe = tuple(a - b for a, b in zip(ne, de))
        if any(k < 0 for k in qe) or nc % dc:
            raise ArithmeticError("non-exact polynomial division")
        qc = nc // dc
        out[qe] = out.get(qe, 0) + qc
        for te, tc in den.terms.items():
            ke = tuple(a + b for a, b in zip(qe, te))
            v = cur.get(ke, 0) - qc * tc
            if v:
                cur[ke] = v
            else:
                cur.pop(ke, None)
    return MultiPoly(num.ring, num.n_vars, out)


def det_bareiss(mat):
    """Fraction-free determinant for integer or integer-polynomial entries."""
    n = len(mat)
    if n == 0:
        return 1
    M = [list(row) for row in mat]

    def _zero(x):
        return x == 0 if isinstance(x, int) else x.is_zero()

    sign = 1
    denom = 1 if isinstance(M[0][0], int) else MultiPoly.const(
        M[0][0].ring, M[0][0].n_vars, 1
    )
    one = denom
    for k in range(n - 1):
        if _zero(M[k][k]):
            sel = next((r for r in range(k + 1, n) if not _zero(M[r][k])), None)
            if sel is None:
                return 0 if isinstance(one, int) else MultiPoly.zero(
                    one.ring, one.n_vars
                )
            M[k], M[sel] = M[sel], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = _exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], denom)
            M[i][k] = 0 if isinstance(one, int) else one.scale(0)
        denom = M[k][k]
    d = M[n - 1][n - 1]
    return -d if sign < 0 else d
