"""Sparse multivariate polynomials over exact fields.

A :class:`PolyRing` fixes the variable names, their weights (and optional
bigrading) and the coefficient field. A :class:`Polynomial` is an immutable
map from exponent tuples to nonzero coefficients; two polynomials are equal
exactly when their term maps agree.

>>> R = PolyRing(["x", "y"], QQ)
>>> p = R("(x + y)*(x - y)")
>>> print(p)
x^2 - y^2
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from operator import add as _add

from .errors import ParseError, RingMismatchError, UnknownVariableError
from .fields import QQ, Field
from .orders import GREVLEX, TermOrder


@dataclass(frozen=True)
class VariableSet:
    names: tuple
    weights: tuple = None
    bigrade: tuple = None

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"bad variable name {name!r}")
        weights = tuple(self.weights) if self.weights is not None else (1,) * len(names)
        if len(weights) != len(names) or any(w < 1 for w in weights):
            raise ValueError("weights must be positive, one per variable")
        object.__setattr__(self, "weights", weights)
        if self.bigrade is not None:
            bigrade = tuple(tuple(d) for d in self.bigrade)
            if len(bigrade) != len(names) or any(len(d) != 2 for d in bigrade):
                raise ValueError("bigrade needs one pair per variable")
            object.__setattr__(self, "bigrade", bigrade)

    def __len__(self):
        return len(self.names)


class PolyRing:
    """Polynomial ring ``field[names]`` with weights and a printing order."""

    def __init__(self, variables, field: Field = QQ, order: TermOrder = GREVLEX):
        if not isinstance(variables, VariableSet):
            variables = VariableSet(tuple(variables))
        self.variables = variables
        self.names = variables.names
        self.nvars = len(self.names)
        self.field = field
        self.order = order
        self.index = {name: i for i, name in enumerate(self.names)}
        self.zero_exp = (0,) * self.nvars
        self._rank = order.rank_function(self.names)

    # ring identity is structural so equal rings built twice interoperate
    def _key(self):
        return (self.variables, self.field, self.order)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"PolyRing({list(self.names)}, {self.field.label})"

    def __call__(self, value=0) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring == self:
                return value
            return value.to_ring(self)
        if isinstance(value, str):
            return parse_poly(value, self)
        return self.constant(value)

    def constant(self, c) -> "Polynomial":
        K = self.field
        if isinstance(c, int):
            c = K.from_int(c)
        elif isinstance(c, Fraction):
            c = K.from_rational(c)
        if K.is_zero(c):
            return Polynomial(self, {})
        return Polynomial(self, {self.zero_exp: c})

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.constant(1)

    def var(self, name: str) -> "Polynomial":
        try:
            i = self.index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    @property
    def gens(self):
        return tuple(self.var(n) for n in self.names)

    def monomial(self, exp, coeff=None) -> "Polynomial":
        K = self.field
        coeff = K.one if coeff is None else coeff
        if K.is_zero(coeff):
            return self.zero
        return Polynomial(self, {tuple(exp): coeff})

    def with_variables(self, names, weights=None, bigrade=None) -> "PolyRing":
        return PolyRing(VariableSet(tuple(names), weights, bigrade), self.field, self.order)

    def extend(self, names, front=False) -> "PolyRing":
        """A ring with extra (unit-weight) variables appended or prepended."""
        names = tuple(names)
        v = self.variables
        extra_w = (1,) * len(names)
        if front:
            new_names, weights = names + v.names, extra_w + v.weights
        else:
            new_names, weights = v.names + names, v.weights + extra_w
        return PolyRing(VariableSet(new_names, weights), self.field, self.order)

    def drop(self, names) -> "PolyRing":
        keep = [i for i, n in enumerate(self.names) if n not in set(names)]
        v = self.variables
        bigrade = None if v.bigrade is None else tuple(v.bigrade[i] for i in keep)
        return PolyRing(
            VariableSet(tuple(v.names[i] for i in keep), tuple(v.weights[i] for i in keep), bigrade),
            self.field,
            self.order,
        )

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.variables, field, self.order)

    def with_order(self, order: TermOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def fresh_name(self, stem: str) -> str:
        if stem not in self.index:
            return stem
        k = 1
        while f"{stem}{k}" in self.index:
            k += 1
        return f"{stem}{k}"


class Polynomial:
    """Immutable sparse polynomial; use the ring to construct one."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._hash = None

    # ----------------------------------------------------------- inspection
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self.ring.zero_exp in self._terms)

    def constant_coeff(self):
        return self._terms.get(self.ring.zero_exp, self.ring.field.zero)

    def coeff(self, exp):
        return self._terms.get(tuple(exp), self.ring.field.zero)

    def sorted_terms(self, order: TermOrder = None):
        rank = self.ring._rank if order is None else order.rank_function(self.ring.names)
        return sorted(self._terms.items(), key=lambda t: rank(t[0]))

    def leading_term(self, order: TermOrder = None):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        rank = self.ring._rank if order is None else order.rank_function(self.ring.names)
        m = min(self._terms, key=rank)
        return m, self._terms[m]

    def variables_used(self):
        used = set()
        for e in self._terms:
            used.update(i for i, k in enumerate(e) if k)
        return {self.ring.names[i] for i in used}

    def total_degree(self):
        if not self._terms:
            return -math.inf
        return max(sum(e) for e in self._terms)

    def degree(self, name: str):
        i = self.ring.index[name]
        if not self._terms:
            return -math.inf
        return max(e[i] for e in self._terms)

    def weighted_degree(self, weights=None):
        """Common weighted degree of all terms.

        Returns ``None`` for an inhomogeneous polynomial and ``-inf`` for
        zero.
        """
        w = self.ring.variables.weights if weights is None else tuple(weights)
        if not self._terms:
            return -math.inf
        degs = {sum(a * b for a, b in zip(e, w)) for e in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def bidegree(self):
        """Common (base, fiber) degree under the ring's bigrading, or None."""
        bg = self.ring.variables.bigrade
        if bg is None:
            raise ValueError("ring has no bigrading")
        if not self._terms:
            return -math.inf
        degs = {
            (sum(k * d[0] for k, d in zip(e, bg)), sum(k * d[1] for k, d in zip(e, bg)))
            for e in self._terms
        }
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self, weights=None):
        return self.weighted_degree(weights) is not None

    # ----------------------------------------------------------- arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{other.ring} vs {self.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.ring.field
        terms = dict(self._terms)
        for m, c in other._terms.items():
            old = terms.get(m)
            if old is None:
                terms[m] = c
            else:
                s = K.add(old, c)
                if K.is_zero(s):
                    del terms[m]
                else:
                    terms[m] = s
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.ring.field
        mul, addf, is_zero = K.mul, K.add, K.is_zero
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(map(_add, m1, m2))
                c = mul(c1, c2)
                old = terms.get(m)
                terms[m] = c if old is None else addf(old, c)
        return Polynomial(self.ring, {m: c for m, c in terms.items() if not is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        K = self.ring.field
        if isinstance(c, int):
            c = K.from_int(c)
        if K.is_zero(c):
            return self.ring.zero
        return Polynomial(self.ring, {m: K.mul(c, a) for m, a in self._terms.items()})

    def mul_monomial(self, exp, coeff=None):
        K = self.ring.field
        terms = {tuple(map(_add, m, exp)): (c if coeff is None else K.mul(c, coeff)) for m, c in self._terms.items()}
        return Polynomial(self.ring, terms)

    def monic(self, order: TermOrder = None):
        if not self._terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # ------------------------------------------------------------- calculus
    def diff(self, name: str) -> "Polynomial":
        i = self.ring.index[name]
        K = self.ring.field
        terms = {}
        for m, c in self._terms.items():
            k = m[i]
            if k:
                d = K.mul(K.from_int(k), c)
                if not K.is_zero(d):
                    terms[m[:i] + (k - 1,) + m[i + 1 :]] = d
        return Polynomial(self.ring, terms)

    def gradient(self):
        return [self.diff(n) for n in self.ring.names]

    # ----------------------------------------------------- substitution etc
    def evaluate(self, point):
        ring = self.ring
        if len(point) != ring.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {ring.nvars} variables")
        K = ring.field
        pt = [K.from_int(a) if isinstance(a, int) else a for a in point]
        powers = [dict() for _ in pt]
        total = K.zero
        for m, c in self._terms.items():
            term = c
            for i, k in enumerate(m):
                if k:
                    cache = powers[i]
                    pw = cache.get(k)
                    if pw is None:
                        pw = cache[k] = K.power(pt[i], k)
                    term = K.mul(term, pw)
            total = K.add(total, term)
        return total

    def subs(self, assignment, ring: PolyRing = None) -> "Polynomial":
        """Ring homomorphism sending variables to polynomials.

        ``assignment`` maps variable names to polynomials (or ints) in the
        target ring, which defaults to the image ring or ``self.ring``.
        Unassigned variables go to the same-named variable of the target.
        """
        if ring is None:
            ring = next((v.ring for v in assignment.values() if isinstance(v, Polynomial)), self.ring)
        images = []
        for name in self.ring.names:
            img = assignment.get(name)
            if img is None:
                if name in ring.index:
                    img = ring.var(name)
            elif isinstance(img, Polynomial):
                if img.ring != ring:
                    raise RingMismatchError(f"image of {name} lives in {img.ring}, expected {ring}")
            else:
                img = ring.constant(img)
            images.append(img)
        if ring.field != self.ring.field:
            raise RingMismatchError("substitution cannot change the coefficient field")
        powers = [dict() for _ in images]
        result = {}
        K = ring.field
        for m, c in self._terms.items():
            term = ring.monomial(ring.zero_exp, c)
            for i, k in enumerate(m):
                if not k:
                    continue
                if images[i] is None:
                    raise RingMismatchError(f"no image for variable {self.ring.names[i]!r} in {ring}")
                cache = powers[i]
                pw = cache.get(k)
                if pw is None:
                    pw = cache[k] = images[i] ** k
                term = term * pw
            for tm, tc in term._terms.items():
                old = result.get(tm)
                result[tm] = tc if old is None else K.add(old, tc)
        return Polynomial(ring, {m: c for m, c in result.items() if not K.is_zero(c)})

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Embed into a ring containing all variables this polynomial uses."""
        if ring.field != self.ring.field:
            raise RingMismatchError("cannot move between coefficient fields")
        idx = []
        for i, name in enumerate(self.ring.names):
            idx.append(ring.index.get(name))
        terms = {}
        for m, c in self._terms.items():
            e = [0] * ring.nvars
            for i, k in enumerate(m):
                if k:
                    j = idx[i]
                    if j is None:
                        raise RingMismatchError(f"variable {self.ring.names[i]!r} missing from {ring}")
                    e[j] = k
            terms[tuple(e)] = c
        return Polynomial(ring, terms)

    def map_coefficients(self, ring: PolyRing, fn) -> "Polynomial":
        """Same monomials, coefficients sent through ``fn`` into ``ring``.

        ``ring`` must have the same variables; used to change fields.
        """
        if ring.names != self.ring.names:
            raise RingMismatchError("map_coefficients keeps the variables")
        K = ring.field
        terms = {}
        for m, c in self._terms.items():
            d = fn(c)
            if not K.is_zero(d):
                terms[m] = d
        return Polynomial(ring, terms)

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial(self.ring, {m: c for m, c in self._terms.items() if sum(m) == degree})

    def truncate(self, max_degree: int) -> "Polynomial":
        return Polynomial(self.ring, {m: c for m, c in self._terms.items() if sum(m) <= max_degree})

    # ------------------------------------------------------------- printing
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def format_poly(p: Polynomial, order: TermOrder = None) -> str:
    if p.is_zero:
        return "0"
    K = p.ring.field
    names = p.ring.names
    pieces = []
    for m, c in p.sorted_terms(order):
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, m) if k)
        negative = K.is_negative(c)
        mag = K.neg(c) if negative else c
        if not mono:
            body = K.format(mag)
        elif mag == K.one:
            body = mono
        else:
            body = f"{K.format(mag)}*{mono}"
        pieces.append((negative, body))
    first_neg, first = pieces[0]
    out = ("-" if first_neg else "") + first
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out


# ---------------------------------------------------------------- parsing
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            q = self.unary()
            if tok[1] == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero:
                    raise self.error("division only by nonzero constants", tok)
                p = p.scale(self.ring.field.inv(q.constant_coeff()))
        return p

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise self.error("exponent must be a nonnegative integer literal", tok)
            return base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        ring = self.ring
        if kind == "num":
            return ring.constant(val)
        if kind == "name":
            if val in ring.index:
                return ring.var(val)
            symbol = getattr(ring.field, "symbol", None)
            if symbol == val:
                return ring.constant(0) + ring.monomial(ring.zero_exp, ring.field.generator())
            raise UnknownVariableError(f"unknown variable {val!r}", self.text, tok[2])
        if tok[:2] == ("op", "("):
            p = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error("expected ')'", close)
            return p
        raise self.error(f"unexpected token {val!r}" if val is not None else "unexpected end of input", tok)


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse an ASCII expression (``+ - * / ^ ( )``, integers, variables)."""
    return _Parser(text, ring).parse()


def ring_of(names, field: Field = QQ, weights=None, bigrade=None) -> PolyRing:
    if isinstance(names, str):
        names = [n for n in re.split(r"[\s,]+", names) if n]
    return PolyRing(VariableSet(tuple(names), weights, bigrade), field)


def determinant(matrix):
    """Determinant of a small square matrix of polynomials (cofactor expansion)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else matrix[0][0].ring.zero


def exact_quotient(p: Polynomial, q: Polynomial):
    """``p / q`` if ``q`` divides ``p`` exactly, else None."""
    if q.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    ring = p.ring
    K = ring.field
    rank = ring._rank
    lm_q, lc_q = q.leading_term()
    inv = K.inv(lc_q)
    rest = dict(p._terms)
    quotient = {}
    while rest:
        m = min(rest, key=rank)
        if any(a < b for a, b in zip(m, lm_q)):
            return None
        shift = tuple(a - b for a, b in zip(m, lm_q))
        c = K.mul(rest[m], inv)
        quotient[shift] = c
        for mq, cq in q._terms.items():
            mm = tuple(map(_add, mq, shift))
            v = K.sub(rest.get(mm, K.zero), K.mul(c, cq))
            if K.is_zero(v):
                rest.pop(mm, None)
            else:
                rest[mm] = v
    return Polynomial(ring, quotient)


def divide_out(p: Polynomial, q: Polynomial):
    """Strip the largest power of ``q`` dividing ``p``; returns (rest, power)."""
    k = 0
    if p.is_zero or q.is_constant():
        return p, 0
    while True:
        d = exact_quotient(p, q)
        if d is None:
            return p, k
        p, k = d, k + 1
