"""Dense polynomials with exact rational coefficients.

A :class:`Polynomial` is a tuple of ``Fraction`` coefficients in ascending
degree order tagged with a variable name, e.g. ``(1, 0, -3/2)`` in ``x`` is
``1 - 3/2 x^2``. Trailing zeros are stripped on construction, so the zero
polynomial is the empty tuple and equality is a plain structural comparison.

:class:`BivariatePolynomial` stores a polynomial in ``x`` whose coefficients
are polynomials in ``y``. ``x`` is always the outer variable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .exact import RationalLike, as_rational, factorial

__all__ = [
    "BivariatePolynomial",
    "LiteralError",
    "Polynomial",
    "VariableMismatchError",
    "binomial_poly",
    "evaluate",
    "evaluate2",
    "from_binomial_basis",
    "parse_poly_literal",
    "poly_add",
    "poly_mul",
    "poly_shift",
    "stirling2",
    "substitute_affine",
    "to_binomial_basis",
]


class VariableMismatchError(ValueError):
    """Raised when combining polynomials in different variables."""


class LiteralError(ValueError):
    """Raised for a malformed polynomial text literal."""


class Polynomial:
    """Immutable univariate polynomial over the rationals."""

    __slots__ = ("_coeffs", "_var")

    def __init__(self, coeffs: Iterable[RationalLike] = (), var: str = "x"):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._var = var

    @classmethod
    def constant(cls, value: RationalLike, var: str = "x") -> Polynomial:
        return cls((value,), var)

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1, var: str = "x") -> Polynomial:
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls([0] * degree + [coeff], var)

    @classmethod
    def variable(cls, var: str = "x") -> Polynomial:
        return cls((0, 1), var)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def var(self) -> str:
        return self._var

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial.

        ``None`` is deliberate: comparing it with an int raises instead of
        silently treating the zero polynomial as degree -1.
        """
        if not self._coeffs:
            return None
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    # arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other._var != self._var:
                raise VariableMismatchError(
                    f"cannot combine polynomials in {self._var!r} and {other._var!r}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial((other,), self._var)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out, self._var)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs], self._var)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial((), self._var)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out, self._var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a natural number")
        result = Polynomial((1,), self._var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: RationalLike) -> Polynomial:
        factor = as_rational(factor)
        return Polynomial([c * factor for c in self._coeffs], self._var)

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a scalar or a polynomial."""
        if isinstance(value, (Polynomial, BivariatePolynomial)):
            result = value * 0
        else:
            value = as_rational(value)
            result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    def shift(self, c: RationalLike) -> Polynomial:
        """Return ``q`` with ``q(x) = p(x + c)`` (Taylor shift by Horner)."""
        c = as_rational(c)
        if c == 0:
            return self
        return self.compose_affine(Polynomial((c, 1), self._var))

    def compose_affine(self, b: Polynomial) -> Polynomial:
        """Return ``p(b(t))`` for ``b`` of degree at most one in ``t``."""
        if not isinstance(b, Polynomial):
            raise TypeError("substitution target must be a Polynomial")
        if b.degree is not None and b.degree > 1:
            raise ValueError(f"only affine substitution is supported, got degree {b.degree}")
        result = Polynomial((), b._var)
        for c in reversed(self._coeffs):
            result = result * b + c
        return result

    # comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._var == other._var and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._coeffs == Polynomial((other,))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._var, self._coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({self.to_literal()!r}, var={self._var!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                power = self._var if k == 1 else f"{self._var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_literal(self) -> str:
        """Comma-separated ascending coefficients; inverse of :func:`parse_poly_literal`."""
        return ",".join(str(c) for c in self._coeffs)


_TOKEN = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def parse_poly_literal(text: str, var: str = "x") -> Polynomial:
    """Parse ``"1,-3/2"`` style literals. Whitespace is ignored; ``""`` is zero."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        return Polynomial((), var)
    coeffs = []
    for pos, token in enumerate(compact.split(",")):
        if not token:
            raise LiteralError(f"empty coefficient at position {pos}")
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise LiteralError(f"malformed coefficient {token!r} at position {pos}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise LiteralError(f"zero denominator in {token!r} at position {pos}")
        coeffs.append(Fraction(int(num), int(den) if den is not None else 1))
    return Polynomial(coeffs, var)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_shift(p: Polynomial, c: RationalLike) -> Polynomial:
    return p.shift(c)


def substitute_affine(p: Polynomial, b: Polynomial) -> Polynomial:
    """Compose ``p`` with an affine ``b``; the result lives in ``b``'s variable."""
    return p.compose_affine(b)


def evaluate(p: Polynomial, a: RationalLike) -> Fraction:
    return p(a)


def evaluate2(F: BivariatePolynomial, a: RationalLike, b: RationalLike) -> Fraction:
    return F.evaluate(a, b)


@lru_cache(maxsize=None)
def _binomial_poly_coeffs(k: int) -> tuple[Fraction, ...]:
    # falling factorial x(x-1)...(x-k+1), then divide by k!
    falling = Polynomial((1,))
    for j in range(k):
        falling = falling * Polynomial((-j, 1))
    inv = Fraction(1, factorial(k))
    return tuple(c * inv for c in falling.coeffs)


def binomial_poly(k: int, var: str = "x") -> Polynomial:
    """The generalized binomial ``C(var, k)`` as a degree-``k`` polynomial."""
    if not isinstance(k, int) or k < 0:
        raise ValueError("k must be a natural number")
    return Polynomial(_binomial_poly_coeffs(k), var)


@lru_cache(maxsize=None)
def stirling2(j: int, k: int) -> int:
    """Stirling numbers of the second kind, by the standard recurrence."""
    if j == k:
        return 1
    if k == 0 or k > j:
        return 0
    return k * stirling2(j - 1, k) + stirling2(j - 1, k - 1)


def to_binomial_basis(p: Polynomial) -> list[Fraction]:
    """Coefficients ``c`` with ``p = sum_k c[k] * C(x, k)``.

    Uses ``x^j = sum_k S(j, k) k! C(x, k)`` with Stirling numbers of the
    second kind, so it does not go through any difference computation.
    The zero polynomial maps to ``[]``.
    """
    d = p.degree
    if d is None:
        return []
    out = [Fraction(0)] * (d + 1)
    for j, pj in enumerate(p.coeffs):
        if pj == 0:
            continue
        for k in range(j + 1):
            out[k] += pj * stirling2(j, k) * factorial(k)
    return out


def from_binomial_basis(coeffs: Sequence[RationalLike], var: str = "x") -> Polynomial:
    result = Polynomial((), var)
    for k, c in enumerate(coeffs):
        c = as_rational(c)
        if c:
            result = result + binomial_poly(k, var).scale(c)
    return result


_Coefficient = Union[Polynomial, int, Fraction]


class BivariatePolynomial:
    """Polynomial in ``x`` whose coefficients are polynomials in ``y``."""

    __slots__ = ("_coeffs",)

    outer = "x"
    inner = "y"

    def __init__(self, coeffs: Iterable[_Coefficient] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Polynomial):
                if c.var != self.inner:
                    raise VariableMismatchError(
                        f"bivariate coefficients must be polynomials in {self.inner!r}"
                    )
                cs.append(c)
            else:
                cs.append(Polynomial((c,), self.inner))
        while cs and cs[-1].is_zero():
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def from_x(cls, p: Polynomial) -> BivariatePolynomial:
        """Lift a polynomial in ``x`` with constant coefficients."""
        if p.var != cls.outer:
            raise VariableMismatchError(f"expected a polynomial in {cls.outer!r}")
        return cls(Polynomial((c,), cls.inner) for c in p.coeffs)

    @classmethod
    def from_y(cls, q: Polynomial) -> BivariatePolynomial:
        if q.var != cls.inner:
            raise VariableMismatchError(f"expected a polynomial in {cls.inner!r}")
        return cls((q,))

    @classmethod
    def compose_sum(cls, p: Polynomial) -> BivariatePolynomial:
        """Substitute ``x := x + y`` into a polynomial in ``x``."""
        if p.var != cls.outer:
            raise VariableMismatchError(f"expected a polynomial in {cls.outer!r}")
        x_plus_y = cls((Polynomial.variable(cls.inner), 1))
        result = cls()
        for c in reversed(p.coeffs):
            result = result * x_plus_y + c
        return result

    @property
    def coeffs(self) -> tuple[Polynomial, ...]:
        return self._coeffs

    @property
    def degree_x(self) -> int | None:
        if not self._coeffs:
            return None
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, Polynomial):
            if other.var == self.inner:
                return BivariatePolynomial.from_y(other)
            return BivariatePolynomial.from_x(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return BivariatePolynomial((other,))
        return NotImplemented

    def __add__(self, other) -> BivariatePolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> BivariatePolynomial:
        return BivariatePolynomial(-c for c in self._coeffs)

    def __sub__(self, other) -> BivariatePolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> BivariatePolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> BivariatePolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return BivariatePolynomial()
        out = [Polynomial((), self.inner)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def at_x(self, a: RationalLike) -> Polynomial:
        """Specialize ``x := a``, leaving a polynomial in ``y``."""
        a = as_rational(a)
        result = Polynomial((), self.inner)
        for c in reversed(self._coeffs):
            result = result.scale(a) + c
        return result

    def substitute_x(self, b: Polynomial) -> Polynomial:
        """Substitute ``x := b(y)`` for affine ``b``; the result is a polynomial in ``y``."""
        if b.var != self.inner:
            raise VariableMismatchError(f"substitution must be a polynomial in {self.inner!r}")
        if b.degree is not None and b.degree > 1:
            raise ValueError(f"only affine substitution is supported, got degree {b.degree}")
        result = Polynomial((), self.inner)
        for c in reversed(self._coeffs):
            result = result * b + c
        return result

    def evaluate(self, a: RationalLike, b: RationalLike) -> Fraction:
        return self.at_x(a)(b)

    def __eq__(self, other) -> bool:
        if isinstance(other, BivariatePolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        inner = ", ".join(repr(c.to_literal()) for c in self._coeffs)
        return f"BivariatePolynomial([{inner}])"
