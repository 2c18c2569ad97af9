"""Mechanical replays of the two finite-difference verifications.

Each verifier returns a :class:`VerificationReport` and never raises on a
failed check; the failing step is flagged instead.

All verifiers accept ``fault=<step id>`` as a test hook. The named step has
its computed left-hand side perturbed by one before comparison, which must
make it fail. A bare id such as ``"root-of-F"`` matches every ``i``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .difference import (
    GeometricTerm,
    delta_geometric,
    delta_n_newton_gregory,
    delta_n_repeated,
    newton_gregory_geometric,
)
from .exact import binom_int
from .polynomial import BivariatePolynomial, Polynomial, binomial_poly
from .report import Step, VerificationReport

__all__ = [
    "BINOMIAL",
    "CHU_VANDERMONDE",
    "IDENTITIES",
    "binomial_sum_side",
    "convolution_side",
    "numeric_grid_check",
    "proportionality_constant",
    "shifted_binomial_side",
    "verify_binomial_direct",
    "verify_binomial_via_differences",
    "verify_chu_vandermonde_direct",
    "verify_chu_vandermonde_proof",
]

BINOMIAL = "binomial"
CHU_VANDERMONDE = "chu-vandermonde"
IDENTITIES = (BINOMIAL, CHU_VANDERMONDE)

# x-values at which the symbolic Newton-Gregory coefficient is compared with
# differences of the actual numeric sequence (-a)**tau
_SAMPLE_POINTS = (Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 3))
_SAMPLE_TAUS = (0, 1, 2)

X = Polynomial.variable("x")
Y = Polynomial.variable("y")


class _Recorder:
    def __init__(self, report: VerificationReport, fault: str | None):
        self.report = report
        self.fault = fault

    def corrupted(self, step_id: str) -> bool:
        if self.fault is None:
            return False
        return self.fault == step_id or self.fault == step_id.split(":", 1)[0]

    def record(self, step_id: str, description: str, passed: bool) -> bool:
        self.report.steps.append(Step(step_id, description, bool(passed)))
        return passed

    def equal(self, step_id: str, description: str, *pairs) -> bool:
        """Record a step that passes when every ``(lhs, rhs)`` pair is equal."""
        bump = 1 if self.corrupted(step_id) else 0
        passed = all(lhs + bump == rhs for lhs, rhs in pairs)
        return self.record(step_id, description, passed)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be a natural number, got {n!r}")


def binomial_sum_side(n: int) -> Polynomial:
    """``sum_k C(n, k) x**k``."""
    _check_n(n)
    total = Polynomial((), "x")
    for k in range(n + 1):
        total = total + Polynomial.monomial(k, binom_int(n, k))
    return total


def _repeated_power(base: Polynomial, n: int) -> Polynomial:
    result = Polynomial.constant(1, base.var)
    for _ in range(n):
        result = result * base
    return result


def verify_binomial_direct(n: int, *, fault: str | None = None) -> VerificationReport:
    _check_n(n)
    report = VerificationReport(BINOMIAL, n)
    rec = _Recorder(report, fault)
    lhs = binomial_sum_side(n)
    rhs = _repeated_power(1 + X, n)
    rec.equal("expand", f"sum_k C({n},k) x^k equals (1+x)^{n} coefficientwise", (lhs, rhs))
    return report


def verify_binomial_via_differences(n: int, *, fault: str | None = None) -> VerificationReport:
    """Difference route with ``f(tau) = (-x)**tau``.

    Steps: the alternating sum form of the n-th difference, its closed form
    ``(-x-1)**n``, their agreement, and the rescaling by ``(-1)**n`` that
    turns both into the two sides of the binomial theorem.
    """
    _check_n(n)
    report = VerificationReport(BINOMIAL, n)
    rec = _Recorder(report, fault)
    g = GeometricTerm(Polynomial.constant(1), -X)
    summed = newton_gregory_geometric(g, n).coefficient
    closed = delta_geometric(g, n).coefficient

    # the formal coefficient must reproduce differences of the real sequence
    pairs = []
    for a in _SAMPLE_POINTS:
        for tau in _SAMPLE_TAUS:
            direct = sum(
                (-1) ** (n + k) * binom_int(n, k) * (-a) ** (tau + k) for k in range(n + 1)
            )
            pairs.append(((-a) ** tau * summed(a), direct))
    rec.equal(
        "newton-gregory-sum",
        f"alternating sum for Delta^{n} (-x)^tau matches numeric sequence differences",
        *pairs,
    )
    rec.equal(
        "closed-form",
        f"closed form Delta^{n} (-x)^tau = (-x-1)^{n} (-x)^tau",
        (closed, _repeated_power(-X - 1, n)),
    )
    rec.equal("sums-agree", "alternating sum equals closed form", (summed, closed))
    sign = (-1) ** n
    rec.equal(
        "division-bridge",
        f"dividing by (-1)^{n} (-x)^tau gives sum_k C({n},k) x^k and (1+x)^{n}",
        (summed, binomial_sum_side(n).scale(sign)),
        (closed, _repeated_power(1 + X, n).scale(sign)),
    )
    return report


@lru_cache(maxsize=None)
def convolution_side(n: int) -> BivariatePolynomial:
    """``F(x, y) = sum_k C(x, k) C(y, n-k)``."""
    _check_n(n)
    total = BivariatePolynomial()
    for k in range(n + 1):
        total = total + BivariatePolynomial.from_x(binomial_poly(k, "x")) * binomial_poly(n - k, "y")
    return total


@lru_cache(maxsize=None)
def shifted_binomial_side(n: int) -> BivariatePolynomial:
    """``G(x, y) = C(x + y, n)`` via the substitution ``x := x + y``."""
    _check_n(n)
    return BivariatePolynomial.compose_sum(binomial_poly(n, "x"))


def verify_chu_vandermonde_direct(n: int, *, fault: str | None = None) -> VerificationReport:
    _check_n(n)
    report = VerificationReport(CHU_VANDERMONDE, n)
    rec = _Recorder(report, fault)
    rec.equal(
        "expand",
        f"sum_k C(x,k) C(y,{n}-k) equals C(x+y,{n}) as polynomials in x over Q[y]",
        (convolution_side(n), shifted_binomial_side(n)),
    )
    return report


def proportionality_constant(p: Polynomial, q: Polynomial) -> Fraction | None:
    """The rational ``t`` with ``p == t * q``, or ``None`` if there is none."""
    if q.is_zero():
        return None
    t = Fraction(0) if p.is_zero() else p.leading_coefficient / q.leading_coefficient
    return t if p == q.scale(t) else None


def verify_chu_vandermonde_proof(n: int, *, fault: str | None = None) -> VerificationReport:
    """Replay the root argument for ``sum_k C(x,k) C(y,n-k) = C(x+y,n)``.

    For every ``1 <= i <= n`` the steps check that the n-th difference of
    ``C(y-i, n-i)`` vanishes (summation and repeated-difference routes),
    that ``x = i-y-1`` is a root of both sides, and the multiplied-through
    form of the identity linking the two. Then the constant is fixed at
    ``x = 0`` and full equality is asserted.
    """
    _check_n(n)
    report = VerificationReport(CHU_VANDERMONDE, n)
    rec = _Recorder(report, fault)
    F = convolution_side(n)
    G = shifted_binomial_side(n)
    zero_y = Polynomial((), "y")

    if n == 0:
        rec.equal("base-case", "n = 0: both sides are the constant 1", (F, G), (F, BivariatePolynomial((1,))))

    for i in range(1, n + 1):
        f = binomial_poly(n - i, "y").shift(-i)  # C(y-i, n-i)
        rec.equal(
            f"vanishing-sum:i={i}",
            f"sum_k (-1)^({n}+k) C({n},k) C(y+k-{i},{n - i}) = 0",
            (delta_n_newton_gregory(f, n), zero_y),
        )
        rec.equal(
            f"vanishing-difference:i={i}",
            f"C(y-{i},{n - i}) has degree {n - i} < {n}, so Delta^{n} of it is 0",
            (delta_n_repeated(f, n), zero_y),
            (f.degree, n - i),
        )
        root = i - 1 - Y
        F_at_root = F.substitute_x(root)
        rec.equal(f"root-of-F:i={i}", f"F({i}-y-1, y) = 0", (F_at_root, zero_y))
        alt_sum = zero_y
        for k in range(n + 1):
            alt_sum = alt_sum + f.shift(k).scale((-1) ** k * binom_int(n, k))
        rec.equal(
            f"scaled-bridge:i={i}",
            f"C({n},{i}) F({i}-y-1, y) = C(y,{i}) sum_k (-1)^k C({n},k) C(y+k-{i},{n - i})",
            (F_at_root.scale(binom_int(n, i)), binomial_poly(i, "y") * alt_sum),
        )
        rec.equal(f"root-of-G:i={i}", f"C(x+y,{n}) vanishes at x = {i}-y-1", (G.substitute_x(root), zero_y))

    F0 = F.at_x(0)
    G0 = G.at_x(0)
    if rec.corrupted("theta"):
        F0 = F0 + 1
    theta = proportionality_constant(F0, G0)
    report.theta = theta
    rec.record(
        "theta",
        f"at x = 0 both sides reduce to C(y,{n}); constant of proportionality is {theta}",
        theta == 1 and F0 == binomial_poly(n, "y") and G0 == binomial_poly(n, "y"),
    )
    if theta is None:
        rec.record("proportional", "F = theta * C(x+y,n): no constant was determined", False)
    else:
        rec.equal("proportional", f"F(x, y) = {theta} * C(x+y,{n})", (F, G * theta))
    return report


@lru_cache(maxsize=64)
def _binomial_values(k: int, lo: int, hi: int) -> dict[int, Fraction]:
    p = binomial_poly(k)
    return {t: p(t) for t in range(lo, hi + 1)}


def numeric_grid_check(identity: str, n: int, bound: int, *, fault: str | None = None) -> VerificationReport:
    """Compare both sides pointwise on the integer grid ``[-bound, bound]`` (squared for two variables)."""
    _check_n(n)
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; expected one of {IDENTITIES}")
    if not isinstance(bound, int) or bound < 1:
        raise ValueError("grid bound must be >= 1")
    report = VerificationReport(identity, n)
    rec = _Recorder(report, fault)
    bump = 1 if rec.corrupted("grid") else 0
    points = range(-bound, bound + 1)
    mismatches = []
    checked = 0
    if identity == BINOMIAL:
        for x in points:
            lhs = sum(binom_int(n, k) * x**k for k in range(n + 1)) + bump
            checked += 1
            if lhs != (1 + x) ** n:
                mismatches.append((x,))
    else:
        tables = [_binomial_values(k, -2 * bound, 2 * bound) for k in range(n + 1)]
        for x in points:
            for y in points:
                lhs = sum(tables[k][x] * tables[n - k][y] for k in range(n + 1)) + bump
                checked += 1
                if lhs != tables[n][x + y]:
                    mismatches.append((x, y))
    if mismatches:
        desc = f"{len(mismatches)} of {checked} grid points disagree, first at {mismatches[0]}"
    else:
        desc = f"both sides agree exactly at all {checked} integer grid points with |coord| <= {bound}"
    rec.record("grid", desc, not mismatches)
    return report
