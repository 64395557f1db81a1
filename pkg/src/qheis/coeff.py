"""Exact scalar arithmetic: integer polynomials in q, the fraction field
Q(q), and the q-analog combinatorics built on top of it.

Everything here is immutable and exact.  A coefficient is always a
``RationalFunction``; a concrete rational value of q is handled by storing
constant polynomials, so one scalar type serves the symbolic and the
specialized modes alike.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union


class CoefficientError(ArithmeticError):
    """Division by zero, evaluation at a pole, or a bad q-binomial index."""


class IntPoly:
    """Polynomial in q with integer coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree ``None``
    (the "minus infinity" marker).  Trailing zero coefficients are never
    stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return _P_ZERO

    @staticmethod
    def one() -> "IntPoly":
        return _P_ONE

    @staticmethod
    def q() -> "IntPoly":
        return _P_Q

    @staticmethod
    def monomial(k: int, c: int = 1) -> "IntPoly":
        if k < 0:
            raise ValueError("monomial exponent must be >= 0")
        return IntPoly((0,) * k + (c,))

    @staticmethod
    def const(c: int) -> "IntPoly":
        return IntPoly((c,))

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise CoefficientError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def trailing_index(self) -> int:
        """Index of the lowest nonzero coefficient (q-adic valuation)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise CoefficientError("zero polynomial has no trailing index")

    def content(self) -> int:
        """gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content.  Sign of the polynomial is preserved."""
        c = self.content()
        if c <= 1:
            return self
        return IntPoly(x // c for x in self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                return _P_ZERO
            if other == 1:
                return self
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _P_ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("IntPoly power must be >= 0")
        result = _P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q^k (k >= 0)."""
        if self.is_zero() or k == 0:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def unshift(self, k: int) -> "IntPoly":
        """Divide by q^k; requires the k lowest coefficients to vanish."""
        if k == 0 or self.is_zero():
            return self
        if any(self.coeffs[:k]):
            raise CoefficientError("polynomial not divisible by q^%d" % k)
        return IntPoly(self.coeffs[k:])

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def div_exact(self, other: "IntPoly") -> "IntPoly":
        """Exact polynomial division; raises if not exact over Z[q]."""
        if other.is_zero():
            raise CoefficientError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.leading
        quot = [0] * max(len(rem) - db, 0)
        while len(rem) > db and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < db:
                break
            c, r = divmod(rem[-1], lb)
            if r:
                raise CoefficientError("inexact polynomial division")
            d = len(rem) - 1 - db
            quot[d] = c
            for j, cb in enumerate(other.coeffs):
                rem[d + j] -= c * cb
        if any(rem):
            raise CoefficientError("inexact polynomial division")
        return IntPoly(quot)

    @staticmethod
    def _pseudo_rem(a: "IntPoly", b: "IntPoly") -> "IntPoly":
        """Pseudo-remainder of a by b (deg a >= deg b >= 0)."""
        db = b.degree
        lb = b.leading
        r = a
        while not r.is_zero() and r.degree >= db:
            d = r.degree - db
            c = r.leading
            r = r * lb - (b.shift(d) * c)
        return r

    @staticmethod
    def gcd(a: "IntPoly", b: "IntPoly") -> "IntPoly":
        """Primitive gcd with positive leading coefficient."""
        if a.is_zero() and b.is_zero():
            return _P_ZERO
        if a.is_zero():
            a, b = b, a
        if b.is_zero():
            g = a.primitive()
            return -g if g.leading < 0 else g
        # common q-power factors come out in O(1)
        t = min(a.trailing_index, b.trailing_index)
        a = a.unshift(t).primitive()
        b = b.unshift(t).primitive()
        if a.degree < b.degree:
            a, b = b, a
        while not b.is_zero():
            r = IntPoly._pseudo_rem(a, b)
            a, b = b, r.primitive()
        if a.leading < 0:
            a = -a
        return a.shift(t)

    # -- comparison / display ------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def render(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                head = "" if abs(c) == 1 else "%d*" % abs(c)
                body = "%s%s" % (head, var if i == 1 else "%s^%d" % (var, i))
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "IntPoly(%s)" % self.render()


_P_ZERO = IntPoly()
_P_ONE = IntPoly((1,))
_P_Q = IntPoly((0, 1))


def _normalize(num: IntPoly, den: IntPoly):
    """Canonical form: reduced fraction of integer polynomials.

    Convention: the primitive parts of num and den are coprime, the integer
    contents of num and den are coprime, and den has a positive leading
    coefficient.  Zero is 0/1.  Equality is then componentwise.
    """
    if den.is_zero():
        raise CoefficientError("denominator is zero")
    if num.is_zero():
        return _P_ZERO, _P_ONE
    cn = num.content()
    cd = den.content()
    pn = num.primitive()
    pd = den.primitive()
    g = IntPoly.gcd(pn, pd)
    if g.coeffs != (1,):
        pn = pn.div_exact(g)
        pd = pd.div_exact(g)
    if pd.leading < 0:
        pn = -pn
        pd = -pd
    s = Fraction(cn, cd)
    return pn * s.numerator, pd * s.denominator


class RationalFunction:
    """Element of Q(q) as a reduced fraction of integer polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly = _P_ONE, *, _raw: bool = False):
        if _raw:
            self.num = num
            self.den = den
        else:
            self.num, self.den = _normalize(num, den)

    # -- constructors --------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "RationalFunction":
        return RationalFunction(IntPoly.const(n), _P_ONE, _raw=True)

    @staticmethod
    def from_fraction(fr: Fraction) -> "RationalFunction":
        return RationalFunction(
            IntPoly.const(fr.numerator), IntPoly.const(fr.denominator), _raw=True
        )

    @staticmethod
    def coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, int):
            return RationalFunction.from_int(x)
        if isinstance(x, Fraction):
            return RationalFunction.from_fraction(x)
        raise TypeError("cannot coerce %r to RationalFunction" % (x,))

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.coeffs == (1,) and self.den.coeffs == (1,)

    def is_constant(self) -> bool:
        return (self.num.degree or 0) == 0 and (self.den.degree or 0) == 0

    # -- field operations --------------------------------------------------

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            if self.den.coeffs == (1,):
                return RationalFunction(self.num + other.num, _P_ONE, _raw=True)
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _raw=True)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if self.den.coeffs == (1,) and other.den.coeffs == (1,):
            return RationalFunction(self.num * other.num, _P_ONE, _raw=True)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RationalFunction":
        """Multiplicative inverse; error on zero."""
        if self.is_zero():
            raise CoefficientError("inverse of zero in Q(q)")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> "RationalFunction":
        return self * RationalFunction.coerce(other).inv()

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) * self.inv()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inv() ** (-n)
        result = RF_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- specialization ------------------------------------------------

    def specialize(self, q0) -> Fraction:
        """Evaluation homomorphism at q = q0 (an exact rational)."""
        q0 = Fraction(q0)
        d = self.den.evaluate(q0)
        if d == 0:
            raise CoefficientError(
                "denominator (%s) vanishes at q = %s" % (self.den.render(), q0)
            )
        return self.num.evaluate(q0) / d

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RationalFunction.from_int(other)
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def render(self) -> str:
        if self.den.coeffs == (1,):
            return self.num.render()
        num = self.num.render()
        den = self.den.render()
        if len(self.num.coeffs) - self.num.coeffs.count(0) > 1:
            num = "(%s)" % num
        if len(self.den.coeffs) - self.den.coeffs.count(0) > 1:
            den = "(%s)" % den
        return "%s/%s" % (num, den)

    def __repr__(self):
        return "RF(%s)" % self.render()


RF_ZERO = RationalFunction.from_int(0)
RF_ONE = RationalFunction.from_int(1)
RF_Q = RationalFunction(_P_Q, _P_ONE, _raw=True)


def q_power(k: int) -> RationalFunction:
    """q^k as a rational function; k may be negative."""
    if k >= 0:
        return RationalFunction(IntPoly.monomial(k), _P_ONE, _raw=True)
    return RationalFunction(_P_ONE, IntPoly.monomial(-k), _raw=True)


@dataclass(frozen=True)
class QValue:
    """The deformation parameter: either symbolic or an exact rational.

    ``value is None`` means symbolic.  Rational 0, 1 and -1 are flagged
    degenerate: the generic-q structure theory excludes them (0 and 1 by
    hypothesis, -1 as a root of unity).
    """

    value: Optional[Fraction] = None

    @staticmethod
    def rational(p, r=1) -> "QValue":
        return QValue(Fraction(p, r))

    @staticmethod
    def parse(text: str) -> "QValue":
        text = text.strip()
        if text == "symbolic":
            return QValue()
        try:
            return QValue(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError("q must be 'symbolic' or a rational p/r: %r" % text) from exc

    @property
    def is_symbolic(self) -> bool:
        return self.value is None

    @property
    def is_degenerate(self) -> bool:
        """True for q in {0, 1, -1}; such q break the generic-q theory."""
        return self.value is not None and self.value in (0, 1, -1)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_one(self) -> bool:
        return self.value == 1

    def scalar(self) -> RationalFunction:
        """The value of q as an element of the coefficient field."""
        if self.value is None:
            return RF_Q
        return RationalFunction.from_fraction(self.value)

    def power(self, k: int) -> RationalFunction:
        """q^k as a scalar; negative k requires q != 0."""
        if self.value is None:
            return q_power(k)
        if k >= 0:
            return RationalFunction.from_fraction(self.value**k)
        if self.value == 0:
            raise CoefficientError("negative power of q at q = 0")
        return RationalFunction.from_fraction(self.value**k)

    def render(self) -> str:
        return "symbolic" if self.value is None else str(self.value)

    def __str__(self):
        return self.render()


SYMBOLIC_Q = QValue()


# ---------------------------------------------------------------------------
# q-analog combinatorics
# ---------------------------------------------------------------------------


def binom2(n: int) -> int:
    """Binomial coefficient C(n, 2); 0 for n < 2."""
    return math.comb(n, 2) if n >= 2 else 0


def q_int(n: int, z: RationalFunction) -> RationalFunction:
    """{n}_z = 1 + z + ... + z^(n-1); the empty sum 0 for n <= 0."""
    total = RF_ZERO
    power = RF_ONE
    for _ in range(n):
        total = total + power
        power = power * z
    return total


def q_factorial(n: int, z: RationalFunction) -> RationalFunction:
    """{n}_z! = {1}_z {2}_z ... {n}_z; the empty product 1 for n <= 0."""
    total = RF_ONE
    for l in range(1, n + 1):
        total = total * q_int(l, z)
    return total


@lru_cache(maxsize=None)
def _gauss_binomial_poly(n: int, i: int) -> IntPoly:
    """The Gaussian binomial (n choose i)_q as a polynomial in q."""
    total = RF_ONE
    for l in range(1, i + 1):
        total = total * q_int(n - i + l, RF_Q) / q_int(l, RF_Q)
    if total.den.coeffs != (1,):
        raise AssertionError("Gaussian binomial did not reduce to a polynomial")
    return total.num


def q_binomial(n: int, i: int, z: RationalFunction) -> RationalFunction:
    """Gaussian binomial (n choose i)_z; requires 0 <= i <= n.

    Evaluated as a polynomial in z, so it is defined for every z (the
    factorial quotient would divide by zero at roots of unity).
    """
    if i < 0 or i > n:
        raise CoefficientError("q_binomial needs 0 <= i <= n, got i=%d n=%d" % (i, n))
    poly = _gauss_binomial_poly(n, i)
    acc = RF_ZERO
    for c in reversed(poly.coeffs):
        acc = acc * z + RationalFunction.from_int(c)
    return acc


def gauss_polynomial(n: int, x, z: RationalFunction):
    """Gauss polynomial G_n(x; z) = sum (-1)^(n-i) z^C(n-i,2) (n i)_z x^i.

    ``x`` may be any algebra element supporting ``**`` (with x**0 the
    identity), ``+``, and ``scale`` by a RationalFunction.
    """
    if n < 0:
        raise ValueError("gauss_polynomial needs n >= 0")
    total = None
    for i in range(n + 1):
        c = q_binomial(n, i, z) * z ** binom2(n - i)
        if (n - i) % 2:
            c = -c
        term = (x**i).scale(c)
        total = term if total is None else total + term
    return total


@lru_cache(maxsize=None)
def _q_int_symbolic(n: int) -> RationalFunction:
    return q_int(n, RF_Q)


def q_int_at(n: int, q: QValue) -> RationalFunction:
    """{n}_q for the given q (cached in the symbolic case)."""
    if q.is_symbolic:
        return _q_int_symbolic(n)
    return q_int(n, q.scalar())
