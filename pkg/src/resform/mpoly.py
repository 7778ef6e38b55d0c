"""Sparse multivariate polynomials over a field, a Galois ring, or Z.

Terms are kept in a dict keyed by exponent tuples.  Monomial order is
graded lexicographic with x_0 > x_1 > ... throughout the package.
"""

from __future__ import annotations

from .errors import PolySyntaxError, RingMismatch, UnknownVariable


class IntRing:
    """Coefficient adapter so Z fits the same interface as the fields."""

    zero = 0
    one = 1

    def __call__(self, value):
        if isinstance(value, int):
            return value
        raise TypeError("integer ring takes ints")

    def __eq__(self, other):
        return isinstance(other, IntRing)

    def __hash__(self):
        return hash("IntRing")

    def __repr__(self):
        return "Z"


ZZ = IntRing()


def _czero(c) -> bool:
    if isinstance(c, int):
        return c == 0
    return c.is_zero()


def grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("ring", "n_vars", "terms")

    def __init__(self, ring, n_vars: int, terms=None):
        self.ring = ring
        self.n_vars = n_vars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if not _czero(c):
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, ring, n_vars: int) -> "MultiPoly":
        return cls(ring, n_vars, {})

    @classmethod
    def const(cls, ring, n_vars: int, value) -> "MultiPoly":
        return cls(ring, n_vars, {(0,) * n_vars: ring(value)})

    @classmethod
    def var(cls, ring, n_vars: int, i: int) -> "MultiPoly":
        exps = [0] * n_vars
        exps[i] = 1
        return cls(ring, n_vars, {tuple(exps): ring(1)})

    def _compat(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring != self.ring or other.n_vars != self.n_vars:
                raise RingMismatch("polynomials over different rings or variable counts")
            return other
        try:
            return MultiPoly.const(self.ring, self.n_vars, self.ring(other))
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        o = self._compat(other)
        if o is NotImplemented:
            return o
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return MultiPoly(self.ring, self.n_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, self.n_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._compat(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            o = self._compat(other)
            terms: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in o.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    c = c1 * c2
                    terms[e] = terms[e] + c if e in terms else c
            return MultiPoly(self.ring, self.n_vars, terms)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "MultiPoly":
        c = self.ring(c)
        return MultiPoly(self.ring, self.n_vars, {e: c * t for e, t in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = MultiPoly.const(self.ring, self.n_vars, self.ring(1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (
                self.ring == other.ring
                and self.n_vars == other.n_vars
                and self.terms == other.terms
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.n_vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def low_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=0)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.zero)

    def derivative(self, i: int) -> "MultiPoly":
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            ne = list(e)
            ne[i] = k - 1
            nc = c * self.ring(k) if not isinstance(c, int) else c * k
            ne = tuple(ne)
            terms[ne] = terms[ne] + nc if ne in terms else nc
        return MultiPoly(self.ring, self.n_vars, terms)

    def evaluate(self, values):
        """Evaluate at a point; values must be ring elements (or ints for Z)."""
        if len(values) != self.n_vars:
            raise ValueError("wrong number of values")
        acc = self.ring.zero
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                for _ in range(k):
                    t = t * v
            acc = acc + t
        return acc

    def substitute(self, polys) -> "MultiPoly":
        """Plug polynomials in for the variables."""
        if len(polys) != self.n_vars:
            raise ValueError("wrong number of substitutions")
        n = polys[0].n_vars if polys else self.n_vars
        acc = MultiPoly.zero(self.ring, n)
        for e, c in self.terms.items():
            t = MultiPoly.const(self.ring, n, c)
            for q, k in zip(polys, e):
                if k:
                    t = t * q ** k
            acc = acc + t
        return acc

    def embed(self, n_total: int, offset: int = 0) -> "MultiPoly":
        """View in a larger variable list, shifting indices by offset."""
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * n_total
            for i, k in enumerate(e):
                ne[offset + i] = k
            terms[tuple(ne)] = c
        return MultiPoly(self.ring, n_total, terms)

    def map_coeffs(self, fn, new_ring) -> "MultiPoly":
        return MultiPoly(new_ring, self.n_vars, {e: fn(c) for e, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def render(self, var_names=None) -> str:
        if var_names is None:
            var_names = [f"x{i}" for i in range(self.n_vars)]
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(var_names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            cs = repr(c) if not isinstance(c, int) else str(c)
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors:
                head = f"({cs})" if ("+" in cs or " " in cs) else cs
                parts.append(head + "*" + "*".join(factors))
            else:
                parts.append(f"({cs})" if ("+" in cs or " " in cs) else cs)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return self.render()


def partials(f: MultiPoly):
    return [f.derivative(i) for i in range(f.n_vars)]


def hessian(f: MultiPoly):
    grads = partials(f)
    return [[g.derivative(j) for j in range(f.n_vars)] for g in grads]


def divided_difference(g: MultiPoly, j: int, reverse: bool = False) -> MultiPoly:
    """The j-th divided difference of g, a polynomial in doubled variables.

    Variables 0..n-1 stay x_0..x_{n-1}; indices n..2n-1 hold y_0..y_{n-1}.
    In the standard convention variables before j are already moved to y;
    reverse=True moves the variables after j instead.  Either family
    telescopes to g(y) - g(x).
    """
    n = g.n_vars
    if not 0 <= j < n:
        raise ValueError("variable index out of range")
    out = MultiPoly.zero(g.ring, 2 * n)
    for e, c in g.terms.items():
        k = e[j]
        if k == 0:
            continue
        base = [0] * (2 * n)
        for i, ki in enumerate(e):
            if i == j:
                continue
            before = i < j
            at_y = before if not reverse else not before
            base[n + i if at_y else i] = ki
        for s in range(k):
            ne = list(base)
            ne[j] = k - 1 - s
            ne[n + j] = s
            ne = tuple(ne)
            cur = out.terms.get(ne)
            out.terms[ne] = cur + c if cur is not None else c
    return MultiPoly(g.ring, 2 * n, out.terms)


_TOKEN_OPS = set("+-*^()")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif text.startswith("**", i):
            tokens.append(("op", "^"))
            i += 2
        elif ch in _TOKEN_OPS:
            tokens.append(("op", ch))
            i += 1
        else:
            raise PolySyntaxError(f"unexpected character {ch!r} at position {i}")
    return tokens


class _Parser:
    def __init__(self, tokens, ring, var_names, constants):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring
        self.var_names = list(var_names)
        self.constants = constants or {}

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                node = node + rhs if val == "+" else node - rhs
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                node = node * self.factor()
            else:
                return node

    def factor(self):
        kind, val = self.peek()
        neg = False
        while kind == "op" and val in "+-":
            self.take()
            if val == "-":
                neg = not neg
            kind, val = self.peek()
        node = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise PolySyntaxError("exponent must be an integer literal")
            node = node ** val
        return -node if neg else node

    def atom(self):
        kind, val = self.take()
        n = len(self.var_names)
        if kind == "int":
            return MultiPoly.const(self.ring, n, self.ring(val))
        if kind == "name":
            if val in self.var_names:
                return MultiPoly.var(self.ring, n, self.var_names.index(val))
            if val in self.constants:
                return MultiPoly.const(self.ring, n, self.ring(self.constants[val]))
            raise UnknownVariable(f"unknown name {val!r}")
        if kind == "op" and val == "(":
            node = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                raise PolySyntaxError("expected closing parenthesis")
            return node
        raise PolySyntaxError(f"unexpected token {val!r}")


def parse_poly(text: str, ring, var_names, constants=None) -> MultiPoly:
    """Parse an expression with +, -, *, ^, parentheses, ints, and names."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolySyntaxError("empty expression")
    parser = _Parser(tokens, ring, var_names, constants)
    poly = parser.expr()
    if parser.pos != len(tokens):
        raise PolySyntaxError(f"trailing input near token {parser.pos}")
    return poly
