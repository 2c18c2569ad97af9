"""Exact finite-difference calculus and replayable binomial identity proofs."""

__version__ = "0.1.0"

from .difference import (  # noqa: E402
    DifferenceTable,
    GeometricTerm,
    delta,
    delta_geometric,
    delta_n_newton_gregory,
    delta_n_repeated,
    difference_table,
    newton_gregory_geometric,
    newton_series,
)
from .exact import binom_int, factorial  # noqa: E402
from .polynomial import (  # noqa: E402
    BivariatePolynomial,
    Polynomial,
    binomial_poly,
    from_binomial_basis,
    parse_poly_literal,
    to_binomial_basis,
)
from .report import Step, VerificationReport  # noqa: E402
from .verify import (  # noqa: E402
    numeric_grid_check,
    verify_binomial_direct,
    verify_binomial_via_differences,
    verify_chu_vandermonde_direct,
    verify_chu_vandermonde_proof,
)
