"""Python access to the LIS distribution toolkit.

Exact rationals are returned as :class:`fractions.Fraction`; rational
polynomials as lists of coefficients in ascending powers.
"""

from fractions import Fraction

from . import _lis
from ._lis import (
    DomainError,
    Error,
    NoConvergence,
    ResourceLimit,
    SingularSystem,
    TruncationWarning,
    airy,
    bessel_j,
    cdf_expansion,
    coeff,
    e2_hard,
    expected_value,
    jasz_p4,
    johansson_sandwich,
    lis_length,
    moment_table,
    monte_carlo,
    pdf_expansion,
    poisson_gf,
    stirling_S,
    t_nu,
    tw_cdf,
    u,
    variance,
)

__all__ = [
    "DomainError",
    "Error",
    "NoConvergence",
    "ResourceLimit",
    "SingularSystem",
    "TruncationWarning",
    "airy",
    "bessel_j",
    "cdf_expansion",
    "coeff",
    "e2_hard",
    "exact_cdf",
    "expected_value",
    "jasz_p4",
    "johansson_sandwich",
    "lis_length",
    "minor_fform",
    "moment_table",
    "monte_carlo",
    "olver_tables",
    "pdf_expansion",
    "poisson_gf",
    "st_u",
    "stirling_S",
    "t_nu",
    "tw_cdf",
    "u",
    "variance",
]


def _frac(pair):
    return Fraction(int(pair[0]), int(pair[1]))


def _poly(coeffs):
    return [_frac(c) for c in coeffs]


def exact_cdf(n):
    """[P(L_n <= l) for l = 0..n] as fractions."""
    counts, denom = _lis.exact_counts(n)
    d = int(denom)
    return [Fraction(int(c), d) for c in counts]


def olver_tables(kmax):
    """Olver's A_k, B_k (k = 0..kmax) as coefficient lists in tau."""
    A, B = _lis.olver_tables(kmax)
    return [_poly(p) for p in A], [_poly(p) for p in B]


def st_u(j, k):
    """Linear F-form coefficients p_1..p_n of u_jk, each a coefficient list in s."""
    return [_poly(p) for p in _lis.st_u(j, k)]


def minor_fform(rows, cols):
    """(verdict, coefficients) for the minor det(u_{rows[a], cols[b]})."""
    verdict, form = _lis.minor_fform(list(rows), list(cols))
    return verdict, [_poly(p) for p in form]
