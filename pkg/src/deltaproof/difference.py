"""Forward difference operator with unit step.

Three ways of computing the n-th difference are provided and are expected
to agree: repeated application of ``delta``, the alternating binomial sum
over shifted copies, and (for geometric terms ``c * r**tau``) the closed
form ``c * (r - 1)**n * r**tau``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import RationalLike, as_rational, binom_int
from .polynomial import Polynomial, VariableMismatchError, from_binomial_basis

__all__ = [
    "DifferenceTable",
    "GeometricTerm",
    "delta",
    "delta_geometric",
    "delta_n_newton_gregory",
    "delta_n_repeated",
    "difference_table",
    "newton_gregory_geometric",
    "newton_series",
]


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"difference order must be a natural number, got {n!r}")


def delta(p: Polynomial) -> Polynomial:
    """``p(x + 1) - p(x)``."""
    return p.shift(1) - p


def delta_n_repeated(p: Polynomial, n: int) -> Polynomial:
    _check_order(n)
    for _ in range(n):
        if p.is_zero():
            break
        p = delta(p)
    return p


def delta_n_newton_gregory(p: Polynomial, n: int) -> Polynomial:
    """n-th difference as ``sum_k (-1)**(n+k) * C(n, k) * p(x + k)``.

    Each shift is computed from ``p`` directly, not from the previous one.
    """
    _check_order(n)
    total = Polynomial((), p.var)
    for k in range(n + 1):
        weight = binom_int(n, k) * (-1) ** (n + k)
        total = total + p.shift(k).scale(weight)
    return total


@dataclass(frozen=True)
class GeometricTerm:
    """Formal term ``coefficient(x) * ratio(x) ** tau``.

    ``tau`` is never materialized; the pair is manipulated in closed form.
    A zero coefficient normalizes to the canonical zero term ``(0, 1)``.
    """

    coefficient: Polynomial
    ratio: Polynomial

    def __post_init__(self):
        c, r = self.coefficient, self.ratio
        if not isinstance(c, Polynomial):
            var = r.var if isinstance(r, Polynomial) else "x"
            c = Polynomial.constant(c, var)
        if not isinstance(r, Polynomial):
            r = Polynomial.constant(r, c.var)
        if c.var != r.var:
            raise VariableMismatchError("coefficient and ratio must share a variable")
        if c.is_zero():
            r = Polynomial.constant(1, c.var)
        object.__setattr__(self, "coefficient", c)
        object.__setattr__(self, "ratio", r)

    @property
    def var(self) -> str:
        return self.coefficient.var

    def is_zero(self) -> bool:
        return self.coefficient.is_zero()

    def value(self, a: RationalLike, tau: int) -> Fraction:
        """Numeric value at ``x = a`` and natural exponent ``tau``."""
        _check_order(tau)
        r0 = self.ratio(a)
        if r0 == 0:
            raise ValueError("pointwise values are undefined for a zero ratio")
        return self.coefficient(a) * r0**tau


def delta_geometric(g: GeometricTerm, n: int) -> GeometricTerm:
    """Closed form: the n-th difference of ``c * r**tau`` is ``c * (r-1)**n * r**tau``."""
    _check_order(n)
    return GeometricTerm(g.coefficient * (g.ratio - 1) ** n, g.ratio)


def newton_gregory_geometric(g: GeometricTerm, n: int) -> GeometricTerm:
    """Alternating binomial sum over ``c * r**(tau+k)`` with ``r**tau`` factored out."""
    _check_order(n)
    total = Polynomial((), g.var)
    power = Polynomial.constant(1, g.var)
    for k in range(n + 1):
        total = total + power.scale(binom_int(n, k) * (-1) ** (n + k))
        power = power * g.ratio
    return GeometricTerm(g.coefficient * total, g.ratio)


@dataclass(frozen=True)
class DifferenceTable:
    """Triangle of forward differences; ``rows[0]`` holds the samples."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.rows)

    def row(self, j: int) -> tuple[Fraction, ...]:
        return self.rows[j]

    @property
    def diagonal(self) -> list[Fraction]:
        """Leading entry of each row, i.e. the differences at the first sample."""
        return [row[0] for row in self.rows]

    def format(self) -> str:
        width = max(len(str(v)) for row in self.rows for v in row)
        lines = []
        for j, row in enumerate(self.rows):
            lines.append(" " * (j * (width + 1) // 2) + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


def difference_table(values: Sequence[RationalLike]) -> DifferenceTable:
    if len(values) == 0:
        raise ValueError("difference table needs at least one value")
    row = tuple(as_rational(v) for v in values)
    rows = [row]
    while len(row) > 1:
        row = tuple(b - a for a, b in zip(row, row[1:]))
        rows.append(row)
    return DifferenceTable(tuple(rows))


def newton_series(p: Polynomial) -> Polynomial:
    """Rebuild ``p`` as ``sum_k (Delta^k p)(0) * C(x, k)`` from a difference table."""
    d = p.degree or 0
    table = difference_table([p(t) for t in range(d + 1)])
    return from_binomial_basis(table.diagonal, p.var)
