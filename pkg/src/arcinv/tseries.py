"""Exact univariate arithmetic in the arc parameter t.

Arc coordinates are stored as rational functions p(t)/q(t) with q(0) != 0.
Such a quotient is a well defined formal power series at t = 0, and the
class of these functions is closed under every operation needed here: field
arithmetic, the order at t = 0, and the ramification substitution t -> t^n.
Nothing is ever truncated, so all downstream order computations are exact.

``TPoly`` is a sparse univariate polynomial over ``fractions.Fraction``.
``TRational`` is a quotient of two ``TPoly`` kept in canonical form:
gcd(num, den) = 1, den monic, den(0) != 0.  Canonical form makes structural
equality coincide with mathematical equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class TPoly:
    """Sparse polynomial in t with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for power, coeff in terms.items():
                if not isinstance(power, int) or power < 0:
                    raise ValueError(f"invalid exponent {power!r} for a power of t")
                value = Fraction(coeff)
                if value:
                    clean[power] = value
        self._terms = clean

    @classmethod
    def zero(cls) -> TPoly:
        return cls()

    @classmethod
    def one(cls) -> TPoly:
        return cls({0: 1})

    @classmethod
    def constant(cls, value: Scalar) -> TPoly:
        return cls({0: value})

    @classmethod
    def t(cls, power: int = 1) -> TPoly:
        return cls({power: 1})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar]) -> TPoly:
        """Build from a dense coefficient list, constant term first."""
        return cls({i: c for i, c in enumerate(coeffs)})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return max(self._terms) if self._terms else -1

    def order(self) -> int | float:
        """Vanishing order at t = 0; infinity for the zero polynomial."""
        return min(self._terms) if self._terms else math.inf

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._terms[self.degree]

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> TPoly:
        return TPoly({p: -c for p, c in self._terms.items()})

    def __add__(self, other: TPoly) -> TPoly:
        if not isinstance(other, TPoly):
            return NotImplemented
        terms = dict(self._terms)
        for p, c in other._terms.items():
            terms[p] = terms.get(p, Fraction(0)) + c
        return TPoly(terms)

    def __sub__(self, other: TPoly) -> TPoly:
        return self + (-other)

    def __mul__(self, other: TPoly | Scalar) -> TPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for p, c in self._terms.items():
            for q, d in other._terms.items():
                key = p + q
                terms[key] = terms.get(key, Fraction(0)) + c * d
        return TPoly(terms)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> TPoly:
        factor = Fraction(factor)
        if not factor:
            return TPoly()
        return TPoly({p: c * factor for p, c in self._terms.items()})

    def monic(self) -> TPoly:
        if self.is_zero:
            return self
        return self.scale(1 / self.leading_coefficient)

    def stretch(self, n: int) -> TPoly:
        """The substitution t -> t^n."""
        if n < 1:
            raise ValueError("ramification index must be a positive integer")
        return TPoly({p * n: c for p, c in self._terms.items()})

    def evaluate(self, point: Scalar) -> Fraction:
        point = Fraction(point)
        return sum((c * point**p for p, c in self._terms.items()), Fraction(0))

    def divrem(self, divisor: TPoly) -> tuple[TPoly, TPoly]:
        """Euclidean division: self = q * divisor + r with deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient: dict[int, Fraction] = {}
        rem = dict(self._terms)
        dd = divisor.degree
        lead = divisor.leading_coefficient
        while rem and max(rem) >= dd:
            top = max(rem)
            coeff = rem[top] / lead
            quotient[top - dd] = coeff
            for p, c in divisor._terms.items():
                key = p + top - dd
                value = rem.get(key, Fraction(0)) - coeff * c
                if value:
                    rem[key] = value
                else:
                    rem.pop(key, None)
        return TPoly(quotient), TPoly(rem)

    def exact_div(self, divisor: TPoly) -> TPoly:
        quotient, rem = self.divrem(divisor)
        if not rem.is_zero:
            raise ArithmeticError("division expected to be exact left a remainder")
        return quotient

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for p, c in self.items():
            if p == 0:
                parts.append(str(c))
            else:
                t_pow = "t" if p == 1 else f"t^{p}"
                if c == 1:
                    parts.append(t_pow)
                elif c == -1:
                    parts.append(f"-{t_pow}")
                else:
                    parts.append(f"{c}*{t_pow}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TPoly({dict(self.items())!r})"


def _integer_profile(p: TPoly) -> dict[int, int]:
    """Scale to integer coefficients and strip content; gcd-equivalent to p."""
    lcm = 1
    for _, c in p._terms.items():
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    scaled = {e: int(c * lcm) for e, c in p._terms.items()}
    content = math.gcd(*scaled.values())
    return {e: v // content for e, v in scaled.items()}


def _primitive_part(terms: dict[int, int]) -> dict[int, int]:
    content = math.gcd(*terms.values())
    return {e: v // content for e, v in terms.items()}


def _pseudo_rem(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Remainder of lc(b)^k * a modulo b, coefficients staying integral."""
    db = max(b)
    lead = b[db]
    rem = dict(a)
    while rem and max(rem) >= db:
        top = max(rem)
        top_coeff = rem.pop(top)
        for e in list(rem):
            rem[e] *= lead
        for e, c in b.items():
            if e == db:
                continue
            key = e + top - db
            value = rem.get(key, 0) - top_coeff * c
            if value:
                rem[key] = value
            else:
                rem.pop(key, None)
    return rem


def t_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Monic greatest common divisor.

    Runs a primitive pseudo-remainder sequence over the integers, which keeps
    the coefficient sizes under control where plain fraction Euclid would
    swell; powers of t common to both inputs are split off first.
    """
    if a.is_zero:
        return TPoly.zero() if b.is_zero else b.monic()
    if b.is_zero:
        return a.monic()
    shift = min(int(a.order()), int(b.order()))
    u = _integer_profile(a)
    v = _integer_profile(b)
    u = {e - int(a.order()): c for e, c in u.items()}
    v = {e - int(b.order()): c for e, c in v.items()}
    if len(u) == 1 or len(v) == 1:
        return TPoly.t(shift)
    if max(u) < max(v):
        u, v = v, u
    while v:
        if max(v) == 0:
            return TPoly.t(shift)
        u, v = v, _pseudo_rem(u, v)
        if v:
            v = _primitive_part(v)
    tail = TPoly({e + shift: c for e, c in u.items()})
    return tail.monic()


class TRational:
    """Quotient of univariate polynomials in t, regular at t = 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: TPoly | Scalar, den: TPoly | Scalar | None = None):
        if not isinstance(num, TPoly):
            num = TPoly.constant(num)
        if den is None:
            den = TPoly.one()
        elif not isinstance(den, TPoly):
            den = TPoly.constant(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = TPoly.zero(), TPoly.one()
        else:
            if den.degree > 0:
                common = t_gcd(num, den)
                if common.degree > 0:
                    num = num.exact_div(common)
                    den = den.exact_div(common)
            lead = den.leading_coefficient
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        if den.constant_term == 0:
            raise ValueError(
                "denominator vanishes at t = 0; the quotient is not a power series"
            )
        self.num = num
        self.den = den

    @classmethod
    def zero(cls) -> TRational:
        return cls(TPoly.zero())

    @classmethod
    def one(cls) -> TRational:
        return cls(TPoly.one())

    @classmethod
    def constant(cls, value: Scalar) -> TRational:
        return cls(TPoly.constant(value))

    @classmethod
    def t(cls, power: int = 1) -> TRational:
        return cls(TPoly.t(power))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def t_order(self) -> int | float:
        """Vanishing order at t = 0; infinity for the zero function."""
        return self.num.order()

    def value_at_zero(self) -> Fraction:
        return self.num.constant_term / self.den.constant_term

    def ramify(self, n: int) -> TRational:
        """The substitution t -> t^n, multiplying all orders by n."""
        return TRational(self.num.stretch(n), self.den.stretch(n))

    def _coerce(self, other: TRational | TPoly | Scalar) -> TRational | None:
        if isinstance(other, TRational):
            return other
        if isinstance(other, (TPoly, int, Fraction)):
            return TRational(other)
        return None

    def __add__(self, other: TRational | TPoly | Scalar) -> TRational:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return TRational(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)

    __radd__ = __add__

    def __neg__(self) -> TRational:
        return TRational(-self.num, self.den)

    def __sub__(self, other: TRational | TPoly | Scalar) -> TRational:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: TRational | TPoly | Scalar) -> TRational:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: TRational | TPoly | Scalar) -> TRational:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return TRational(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def __truediv__(self, other: TRational | TPoly | Scalar) -> TRational:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return TRational(self.num * rhs.den, self.den * rhs.num)

    def __pow__(self, exponent: int) -> TRational:
        if exponent < 0:
            raise ValueError("negative powers are not used; divide explicitly")
        result = TRational.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TRational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (TPoly, int, Fraction)):
            return self == TRational(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den == TPoly.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"TRational({self.num!r}, {self.den!r})"
