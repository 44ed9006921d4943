"""Exact coefficient fields.

Three kinds are provided: the rationals, prime fields, and simple algebraic
extensions ``base[w]/(m(w))`` of either. Field elements are plain Python
values (``Fraction``, ``int`` or tuples of base elements) and all arithmetic
goes through the field object, so polynomials never need to know which kind
of field they live over.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Interface shared by all coefficient fields."""

    characteristic = 0
    zero: object
    one: object

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def power(self, a, n: int):
        if n < 0:
            return self.power(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def from_rational(self, q: Fraction):
        return self.div(self.from_int(q.numerator), self.from_int(q.denominator))

    def format(self, a) -> str:
        raise NotImplementedError

    def is_negative(self, a) -> bool:
        """Whether the printed form of ``a`` starts with a minus sign."""
        return False

    def sqrt_minus_one(self):
        """An element ``i`` with ``i*i == -1``, or None if the field has none."""
        return None

    # used by printers and report serializers
    @property
    def label(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.label


class RationalField(Field):
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    def is_negative(self, a):
        return a < 0

    @property
    def label(self):
        return "qq"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("qq")


class PrimeField(Field):
    """Integers modulo a prime ``p``; elements are ints in ``range(p)``."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"modulus {p} is not prime")
        if p >= 2**63:
            raise FieldError(f"modulus {p} does not fit in a machine word")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a == 0

    def from_rational(self, q):
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def symmetric(self, a: int) -> int:
        return a - self.p if a > self.p // 2 else a

    def format(self, a):
        return str(self.symmetric(a))

    def is_negative(self, a):
        return a > self.p // 2

    def sqrt_minus_one(self):
        p = self.p
        if p == 2:
            return 1
        if p % 4 != 1:
            return None
        # a quadratic non-residue g gives i = g^((p-1)/4)
        for g in range(2, p):
            if pow(g, (p - 1) // 2, p) == p - 1:
                return pow(g, (p - 1) // 4, p)
        return None

    def elements(self):
        return range(self.p)

    @property
    def label(self):
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


class QuotientExtension(Field):
    """``base[w] / (m(w))`` for a monic irreducible ``m`` of degree >= 2.

    Elements are tuples ``(a_0, ..., a_{d-1})`` meaning ``sum a_k w^k``.
    Irreducibility of ``m`` is trusted, not checked.
    """

    def __init__(self, base: Field, minpoly, symbol: str = "i"):
        coeffs = [base.from_int(c) if isinstance(c, int) else c for c in minpoly]
        if len(coeffs) < 3:
            raise FieldError("minimal polynomial must have degree >= 2")
        if coeffs[-1] != base.one:
            raise FieldError("minimal polynomial must be monic")
        self.base = base
        self.minpoly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.symbol = symbol
        self.characteristic = base.characteristic
        self.zero = tuple([base.zero] * self.degree)
        self.one = (base.one,) + tuple([base.zero] * (self.degree - 1))

    def from_int(self, n):
        return (self.base.from_int(n),) + self.zero[1:]

    def from_rational(self, q):
        return (self.base.from_rational(q),) + self.zero[1:]

    def generator(self):
        return (self.base.zero, self.base.one) + self.zero[2:]

    def add(self, a, b):
        add = self.base.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sub = self.base.sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        neg = self.base.neg
        return tuple(neg(x) for x in a)

    def mul(self, a, b):
        K = self.base
        d = self.degree
        prod = [K.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if K.is_zero(x):
                continue
            for j, y in enumerate(b):
                if not K.is_zero(y):
                    prod[i + j] = K.add(prod[i + j], K.mul(x, y))
        m = self.minpoly
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if K.is_zero(c):
                continue
            for j in range(d):
                prod[k - d + j] = K.sub(prod[k - d + j], K.mul(c, m[j]))
        return tuple(prod[:d])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        K = self.base
        # extended Euclid on univariate polynomials over the base field
        from .univariate import poly_xgcd, poly_trim

        g, s, _ = poly_xgcd(K, poly_trim(K, list(a)), list(self.minpoly))
        if len(g) != 1:
            raise FieldError("minimal polynomial is reducible")
        c = K.inv(g[0])
        s = [K.mul(c, x) for x in s] + [K.zero] * self.degree
        return tuple(s[: self.degree])

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def format(self, a):
        parts = []
        for k, c in enumerate(a):
            if self.base.is_zero(c):
                continue
            coeff = self.base.format(c)
            if k == 0:
                parts.append(coeff)
            else:
                mono = self.symbol if k == 1 else f"{self.symbol}^{k}"
                if c == self.base.one:
                    parts.append(mono)
                else:
                    parts.append(f"{coeff}*{mono}")
        if not parts:
            return "0"
        text = " + ".join(parts).replace("+ -", "- ")
        return text if len(parts) == 1 else f"({text})"

    def is_negative(self, a):
        if any(not self.base.is_zero(c) for c in a[1:]):
            return False
        return self.base.is_negative(a[0])

    def sqrt_minus_one(self):
        i = self.base.sqrt_minus_one()
        if i is not None:
            return (i,) + self.zero[1:]
        if self.degree == 2 and self.minpoly == (self.base.one, self.base.zero, self.base.one):
            return self.generator()
        return None

    @property
    def label(self):
        if self.degree == 2 and self.minpoly == (self.base.one, self.base.zero, self.base.one):
            return f"{self.base.label}-i"
        return f"{self.base.label}[{self.symbol}]"

    def __eq__(self, other):
        return (
            isinstance(other, QuotientExtension)
            and other.base == self.base
            and other.minpoly == self.minpoly
        )

    def __hash__(self):
        return hash(("ext", self.base, self.minpoly))


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def gaussian_rationals() -> QuotientExtension:
    """The field Q(i), with ``i`` printed as ``i``."""
    return QuotientExtension(QQ, [1, 0, 1], symbol="i")


def field_from_label(label: str) -> Field:
    """Parse the CLI field syntax: ``qq``, ``qq-i`` or ``fp:P``."""
    label = label.strip().lower()
    if label == "qq":
        return QQ
    if label == "qq-i":
        return gaussian_rationals()
    if label.startswith("fp:"):
        try:
            p = int(label[3:])
        except ValueError:
            raise FieldError(f"bad prime in field label {label!r}") from None
        return PrimeField(p)
    raise FieldError(f"unknown field {label!r}")
