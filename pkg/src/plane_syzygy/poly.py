"""Sparse homogeneous-friendly polynomials in x, y, z over the rationals.

Coefficients are ``gmpy2.mpq`` values, always reduced, so every operation is
exact.  Monomials are exponent triples ``(a, b, c)`` meaning ``x^a y^b z^c``.
The fixed term order is graded reverse lexicographic with ``x > y > z``.
"""

from fractions import Fraction

from gmpy2 import mpq

VARS = ("x", "y", "z")

_ZERO = mpq(0)
_ONE = mpq(1)


def grevlex_key(mono):
    """Sort key: a larger key means a larger monomial in grevlex, x > y > z."""
    a, b, c = mono
    return (a + b + c, -c, -b)


def _coerce(c):
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    return mpq(c)


class Poly:
    """An immutable polynomial in x, y, z with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _coerce(c)
                if c:
                    clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: ``terms`` already holds nonzero mpq values
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, mono, c=1):
        return cls({tuple(mono): c})

    @classmethod
    def var(cls, name):
        i = VARS.index(name)
        e = [0, 0, 0]
        e[i] = 1
        return cls({tuple(e): 1})

    # -- basic queries -------------------------------------------------

    @property
    def terms(self):
        """Read-only view of the monomial -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    @property
    def degree(self):
        """Total degree, or ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self):
        return len({sum(m) for m in self._terms}) <= 1

    def is_constant(self):
        return all(m == (0, 0, 0) for m in self._terms)

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), _ZERO)

    def sorted_terms(self):
        """Terms in descending grevlex order."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_monomial(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=grevlex_key)

    def leading_coefficient(self):
        return self._terms[self.leading_monomial()]

    def monic(self):
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        return Poly._raw({m: c / lc for m, c in self._terms.items()})

    def homogeneous_parts(self):
        parts = {}
        for m, c in self._terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {k: Poly._raw(v) for k, v in sorted(parts.items())}

    # -- arithmetic ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        try:
            other = _coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not other:
            return not self._terms
        return self._terms == {(0, 0, 0): other}

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, _ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = _coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
            if not c:
                return Poly._raw({})
            return Poly._raw({m: v * c for m, v in self._terms.items()})
        out = {}
        for (a1, b1, c1), u in self._terms.items():
            for (a2, b2, c2), v in other._terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                w = out.get(key, _ZERO) + u * v
                if w:
                    out[key] = w
                else:
                    del out[key]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("division only by a nonzero constant; use exact_div")
            other = other.coefficient((0, 0, 0))
        c = _coerce(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return Poly._raw({m: v / c for m, v in self._terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, mono, c=1):
        """Multiply by ``c * x^a y^b z^c`` without a full product."""
        c = _coerce(c)
        a, b, e = mono
        return Poly._raw({(m[0] + a, m[1] + b, m[2] + e): v * c for m, v in self._terms.items()})

    def diff(self, var):
        i = VARS.index(var) if isinstance(var, str) else int(var)
        out = {}
        for m, c in self._terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = c * m[i]
        return Poly._raw(out)

    def evaluate(self, point):
        """Exact value at a rational point ``(x, y, z)``."""
        px, py, pz = (_coerce(v) for v in point)
        total = _ZERO
        for (a, b, c), v in self._terms.items():
            total += v * px**a * py**b * pz**c
        return total

    def substitute(self, images):
        """Compose with a linear (or any) substitution ``(X, Y, Z)`` of Polys."""
        X, Y, Z = images
        out = Poly()
        cache = {}

        def power(i, base, e):
            key = (i, e)
            if key not in cache:
                cache[key] = base**e
            return cache[key]

        for (a, b, c), v in self._terms.items():
            out = out + power(0, X, a) * power(1, Y, b) * power(2, Z, c) * v
        return out

    def divmod(self, divisor):
        """Division by a single polynomial w.r.t. grevlex: ``(q, r)``."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm = divisor.leading_monomial()
        lc = divisor._terms[lm]
        rest = [(m, c) for m, c in divisor._terms.items() if m != lm]
        p = dict(self._terms)
        q = {}
        r = {}
        while p:
            m = max(p, key=grevlex_key)
            c = p.pop(m)
            if m[0] >= lm[0] and m[1] >= lm[1] and m[2] >= lm[2]:
                s = (m[0] - lm[0], m[1] - lm[1], m[2] - lm[2])
                k = c / lc
                q[s] = k
                for mm, cc in rest:
                    key = (mm[0] + s[0], mm[1] + s[1], mm[2] + s[2])
                    v = p.get(key, _ZERO) - k * cc
                    if v:
                        p[key] = v
                    else:
                        p.pop(key, None)
            else:
                r[m] = c
        return Poly._raw(q), Poly._raw(r)

    def exact_div(self, divisor):
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError("division leaves a nonzero remainder")
        return q

    # -- printing ------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly('{format_poly(self)}')"


def _as_poly(other):
    if isinstance(other, Poly):
        return other
    try:
        return Poly.const(_coerce(other))
    except (TypeError, ValueError):
        return NotImplemented


def _format_monomial(mono):
    parts = []
    for name, e in zip(VARS, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts)


def _format_coefficient(c, has_monomial):
    if c.denominator == 1:
        n = int(c.numerator)
        if has_monomial and n == 1:
            return ""
        return str(n)
    return f"({c.numerator}/{c.denominator})"


def format_poly(p):
    """Canonical text: descending grevlex, explicit ``^``, juxtaposed variables."""
    if p.is_zero():
        return "0"
    pieces = []
    for i, (mono, c) in enumerate(p.sorted_terms()):
        mon = _format_monomial(mono)
        sign = "-" if c < 0 else "+"
        body = _format_coefficient(abs(c), bool(mon)) + mon
        if i == 0:
            pieces.append(("-" if sign == "-" else "") + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


# -- parsing -------------------------------------------------------------


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based character offset."""

    def __init__(self, message, position, text=""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def annotated(self):
        """The message with the input and a caret under the offending spot."""
        return f"{self}\n  {self.text}\n  {' ' * self.position}^"


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                raise PolySyntaxError("non-integer literal", i, text)
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch in VARS:
            tokens.append(("var", ch, i))
            i += 1
        elif ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
        elif ch == ".":
            raise PolySyntaxError("non-integer literal", i, text)
        else:
            raise PolySyntaxError(f"unexpected character {ch!r}", i, text)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return PolySyntaxError(message, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty input")
        p = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                p = p * self.unary()
            elif kind == "/":
                tok = self.take()
                q = self.unary()
                if not q.is_constant() or q.is_zero():
                    raise self.error("division only by a nonzero integer constant", tok)
                p = p / q
            elif kind in ("int", "var", "("):
                p = p * self.power()
            else:
                return p

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise self.error("non-integer exponent", tok)
            self.take()
            return base ** tok[1]
        return base

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            return Poly.const(tok[1])
        if kind == "var":
            self.take()
            return Poly.var(tok[1])
        if kind == "(":
            self.take()
            p = self.expr()
            if self.peek()[0] != ")":
                raise self.error("expected ')'")
            self.take()
            return p
        if kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok[1]!r}")


def parse_poly(text):
    """Parse and expand polynomial text such as ``"(x^2+y^2)^2-4xy^2z"``.

    Variables are x, y, z; juxtaposition multiplies; ``^`` binds tightest and
    takes a non-negative integer literal; ``/`` divides by a nonzero integer.
    """
    if text is None or not str(text).strip():
        raise PolySyntaxError("empty input", 0, text or "")
    return _Parser(str(text)).parse()


def partial_derivative(p, var):
    return p.diff(var)


def det3(row2, row3):
    """Determinant of the 3x3 matrix with rows (x, y, z), ``row2``, ``row3``."""
    a1, b1, c1 = row2
    a2, b2, c2 = row3
    return X * (b1 * c2 - c1 * b2) - Y * (a1 * c2 - c1 * a2) + Z * (a1 * b2 - b1 * a2)


def monomials_of_degree(k):
    """All exponent triples of total degree ``k``, descending grevlex."""
    if k < 0:
        return []
    out = [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]
    out.sort(key=grevlex_key, reverse=True)
    return out


X = Poly.var("x")
Y = Poly.var("y")
Z = Poly.var("z")
