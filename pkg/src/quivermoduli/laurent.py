"""Exact Laurent polynomials and rational functions in one variable.

Coefficients are arbitrary-precision integers; rational functions are kept
in a canonical form (common factor removed, denominator with lowest exponent
zero and positive leading coefficient) so that equality is decidable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InputError, NonPolynomialError

__all__ = [
    "LaurentPoly",
    "RationalFunc",
    "quantum_integer",
    "quantum_factorial",
    "cyclotomic",
]


def _as_coeff_dict(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly({0: value})
    return NotImplemented


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, a in coeffs.items():
                if not isinstance(e, int) or not isinstance(a, int):
                    raise InputError("exponents and coefficients must be integers")
                if a != 0:
                    c[e] = a
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def var(cls, power=1):
        return cls({power: 1})

    @classmethod
    def monomial(cls, exp, coeff):
        return cls({exp: coeff})

    # -- structure ---------------------------------------------------------

    def items(self):
        return self._c.items()

    def coeff(self, e):
        return self._c.get(e, 0)

    def is_zero(self):
        return not self._c

    def degree(self):
        if not self._c:
            raise InputError("degree of the zero polynomial is undefined")
        return max(self._c)

    def low(self):
        if not self._c:
            raise InputError("low exponent of the zero polynomial is undefined")
        return min(self._c)

    def leading_coeff(self):
        return self._c[self.degree()]

    def content(self):
        from math import gcd
        g = 0
        for a in self._c.values():
            g = gcd(g, a)
        return g

    def __eq__(self, other):
        other = _as_coeff_dict(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _as_coeff_dict(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, a in other._c.items():
            b = c.get(e, 0) + a
            if b:
                c[e] = b
            else:
                c.pop(e, None)
        out = LaurentPoly()
        object.__setattr__(out, "_c", c)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly()
        object.__setattr__(out, "_c", {e: -a for e, a in self._c.items()})
        return out

    def __sub__(self, other):
        other = _as_coeff_dict(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_coeff_dict(other) - self

    def __mul__(self, other):
        other = _as_coeff_dict(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._c or not other._c:
            return LaurentPoly()
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c = {}
        for e1, a1 in a.items():
            for e2, a2 in b.items():
                e = e1 + e2
                v = c.get(e, 0) + a1 * a2
                if v:
                    c[e] = v
                else:
                    del c[e]
        out = LaurentPoly()
        object.__setattr__(out, "_c", c)
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._c) == 1:
                ((e, a),) = self._c.items()
                if a in (1, -1):
                    return LaurentPoly({e * n: -1 if (a == -1 and n % 2) else 1})
            raise InputError("negative powers only for unit monomials; use RationalFunc")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def shift(self, k):
        """Multiply by the variable to the k-th power."""
        out = LaurentPoly()
        object.__setattr__(out, "_c", {e + k: a for e, a in self._c.items()})
        return out

    # -- polynomial views --------------------------------------------------

    def shifted_coeffs(self):
        """(ascending coefficient list, low exponent) with constant term nonzero."""
        if not self._c:
            return [], 0
        lo = self.low()
        hi = self.degree()
        coeffs = [self._c.get(e, 0) for e in range(lo, hi + 1)]
        return coeffs, lo

    @classmethod
    def from_coeff_list(cls, coeffs, low=0):
        return cls({low + i: a for i, a in enumerate(coeffs) if a})

    def divexact(self, other):
        """Exact division; returns None when the quotient does not exist."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        num, nlo = self.shifted_coeffs()
        den, dlo = other.shifted_coeffs()
        if len(num) < len(den):
            return None
        num = [Fraction(a) for a in num]
        dn = len(den)
        lead = Fraction(den[-1])
        quot = [Fraction(0)] * (len(num) - dn + 1)
        for i in range(len(num) - dn, -1, -1):
            c = num[i + dn - 1] / lead
            quot[i] = c
            if c:
                for j in range(dn):
                    num[i + j] -= c * den[j]
        if any(num[: dn - 1]) or any(num[dn - 1:]):
            return None
        if any(c.denominator != 1 for c in quot):
            return None
        return LaurentPoly({nlo - dlo + i: int(c) for i, c in enumerate(quot) if c})

    def evaluate(self, v0):
        """Exact value at a rational point (nonzero when negative exponents occur)."""
        v0 = Fraction(v0)
        if v0 == 0 and self._c and self.low() < 0:
            raise InputError("cannot evaluate negative exponents at 0")
        return sum((Fraction(a) * v0 ** e for e, a in self._c.items()), Fraction(0))

    def is_palindromic(self):
        """Invariant under inverting the variable."""
        return all(self.coeff(-e) == a for e, a in self._c.items())

    def even_exponents_only(self):
        return all(e % 2 == 0 for e in self._c)

    def halve_exponents(self):
        """Substitute x^2 -> x; requires all exponents even."""
        if not self.even_exponents_only():
            raise InputError("polynomial has odd exponents")
        return LaurentPoly({e // 2: a for e, a in self._c.items()})

    # -- serialization -----------------------------------------------------

    def to_json(self, variable="v"):
        terms = [{"exp": e, "coeff": str(a)} for e, a in sorted(self._c.items())]
        return {"variable": variable, "terms": terms}

    @classmethod
    def from_json(cls, data):
        try:
            return cls({int(t["exp"]): int(t["coeff"]) for t in data["terms"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad polynomial JSON: {exc}") from None

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self, variable="v"):
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items(), reverse=True):
            if e == 0:
                term = str(abs(a))
            else:
                mag = "" if abs(a) == 1 else f"{abs(a)}*"
                term = f"{mag}{variable}^{e}" if e != 1 else f"{mag}{variable}"
            parts.append(("- " if a < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _poly_gcd(a, b):
    """Gcd of two integer polynomials given as ascending coefficient lists."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]

    def norm(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def rem(p, q):
        p = p[:]
        lead = q[-1]
        while len(p) >= len(q):
            c = p[-1] / lead
            off = len(p) - len(q)
            for i in range(len(q)):
                p[off + i] -= c * q[i]
            p = norm(p)
            if not p:
                break
        return p

    from math import gcd as igcd, lcm

    def renorm(p):
        # clear denominators and divide by integer content
        scale = lcm(*[x.denominator for x in p]) if p else 1
        ints = [int(x * scale) for x in p]
        g = 0
        for x in ints:
            g = igcd(g, x)
        return [Fraction(x, g) for x in ints] if g else p

    a, b = norm(a), norm(b)
    while b:
        a, b = b, rem(a, b)
        if b:
            b = renorm(b)
    if not a:
        return [0]
    scale = lcm(*[x.denominator for x in a])
    ints = [int(x * scale) for x in a]
    g = 0
    for x in ints:
        g = igcd(g, x)
    ints = [x // g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd of the polynomial parts; ignores powers of the variable."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    ca, _ = a.shifted_coeffs()
    cb, _ = b.shifted_coeffs()
    return LaurentPoly.from_coeff_list(_poly_gcd(ca, cb))


class RationalFunc:
    """Quotient of Laurent polynomials in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if isinstance(num, int):
            num = LaurentPoly({0: num})
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, int):
            den = LaurentPoly({0: den})
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            num, den = self._canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunc is immutable")

    @staticmethod
    def _canonicalize(num, den):
        if num.is_zero():
            return LaurentPoly.zero(), LaurentPoly.one()
        ncoeffs, nlo = num.shifted_coeffs()
        dcoeffs, dlo = den.shifted_coeffs()
        g = _poly_gcd(ncoeffs, dcoeffs)
        gp = LaurentPoly.from_coeff_list(g)
        n1 = LaurentPoly.from_coeff_list(ncoeffs).divexact(gp)
        d1 = LaurentPoly.from_coeff_list(dcoeffs).divexact(gp)
        from math import gcd as igcd
        c = igcd(n1.content(), d1.content())
        if c > 1:
            n1 = n1.divexact(LaurentPoly({0: c}))
            d1 = d1.divexact(LaurentPoly({0: c}))
        if d1.leading_coeff() < 0:
            n1, d1 = -n1, -d1
        return n1.shift(nlo - dlo), d1

    @classmethod
    def zero(cls):
        return cls(LaurentPoly.zero(), LaurentPoly.one(), _canonical=True)

    @classmethod
    def one(cls):
        return cls(LaurentPoly.one(), LaurentPoly.one(), _canonical=True)

    @classmethod
    def from_poly(cls, p):
        return cls(p, LaurentPoly.one(), _canonical=True)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFunc(other)
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFunc(other)
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return RationalFunc(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFunc(other)
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RationalFunc(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFunc(other)
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunc(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFunc(other)
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalFunc.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            if n > 1:
                base = base * base
            n >>= 1
        return out

    def to_polynomial(self):
        """The numerator when the canonical denominator is 1; error otherwise."""
        if self.den == LaurentPoly.one():
            return self.num
        raise NonPolynomialError(
            f"not a polynomial: canonical denominator is {self.den}",
            remainder=self.den)

    def evaluate(self, v0):
        v0 = Fraction(v0)
        dval = self.den.evaluate(v0)
        if dval == 0:
            raise ZeroDivisionError(f"pole at {v0}")
        return self.num.evaluate(v0) / dval

    def to_json(self, variable="v"):
        return {"num": self.num.to_json(variable), "den": self.den.to_json(variable)}

    def __repr__(self):
        if self.den == LaurentPoly.one():
            return f"RationalFunc({self.num})"
        return f"RationalFunc(({self.num}) / ({self.den}))"


# -- quantum numbers -------------------------------------------------------

def quantum_integer(n):
    """[n] = v^{n-1} + v^{n-3} + ... + v^{1-n}."""
    if n < 0:
        raise InputError("quantum integer of a negative number")
    return LaurentPoly({n - 1 - 2 * t: 1 for t in range(n)})


def quantum_factorial(n):
    """[n]! = [1] [2] ... [n]."""
    if n < 0:
        raise InputError("quantum factorial of a negative number")
    out = LaurentPoly.one()
    for k in range(2, n + 1):
        out = out * quantum_integer(k)
    return out


@lru_cache(maxsize=None)
def cyclotomic(n):
    """The n-th cyclotomic polynomial (in the working variable)."""
    if n < 1:
        raise InputError("cyclotomic index must be positive")
    p = LaurentPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            p = p.divexact(cyclotomic(d))
    return p
