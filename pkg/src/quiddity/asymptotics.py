"""Asymptotic constants via real-root isolation, plus empirical ratio checks.

This module is the only one that computes in floating point; every exact
quantity it consumes arrives as integers from the formula layer.  Roots are
isolated by a sign scan followed by bisection: no derivative assumptions,
and the scan step is exposed because it is what guarantees the least
positive root is not skipped (the target polynomials have well-separated
positive roots, far wider than the default step).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

DEFAULT_TOL = 1e-13
DEFAULT_SCAN_STEP = 1e-3
DEFAULT_SCAN_LIMIT = 4.0

# discriminant of F_P(z, y) = z y^3 + (1 - z^2) y^2 - y + z as a cubic in y:
# 4 z^7 - 12 z^5 - 8 z^4 + 12 z^3 - 20 z^2 + 1  (coefficient of z^k at index k)
RES_Y_FP = (1, 0, -20, 12, -8, -12, 0, 4)

# resultant of F_P and its y-derivative as quadratics in z, divided by y:
# y^7 - 2 y^6 - 4 y^4 + 4 y^3 + 4 y - 2
RES_Z_FP = (-2, 4, 0, 4, -4, 0, -2, 1)


def poly_eval(coeffs: Sequence[float], x: float) -> float:
    out = 0.0
    for c in reversed(coeffs):
        out = out * x + c
    return out


def least_positive_root(
    coeffs: Sequence[int],
    tol: float = DEFAULT_TOL,
    scan_step: float = DEFAULT_SCAN_STEP,
    scan_limit: float = DEFAULT_SCAN_LIMIT,
) -> float:
    """Smallest positive real root, by sign scan then bisection to tol."""
    prev_x = scan_step * 1e-6  # stay strictly positive: 0 may be a root
    prev = poly_eval(coeffs, prev_x)
    x = scan_step
    while x <= scan_limit:
        cur = poly_eval(coeffs, x)
        if cur == 0.0:
            return x
        if (prev < 0) != (cur < 0):
            lo, hi = prev_x, x
            flo = prev
            while hi - lo > tol:
                mid = (lo + hi) / 2
                fmid = poly_eval(coeffs, mid)
                if fmid == 0.0:
                    return mid
                if (flo < 0) != (fmid < 0):
                    hi = mid
                else:
                    lo, flo = mid, fmid
            return (lo + hi) / 2
        prev_x, prev = x, cur
        x += scan_step
    raise ArithmeticError(
        f"no sign change of {coeffs} found on (0, {scan_limit}] with step {scan_step}"
    )


def f_p(z: float, y: float) -> float:
    return z * y**3 + (1 - z * z) * y * y - y + z


def f_p_dy(z: float, y: float) -> float:
    return 3 * z * y * y + 2 * (1 - z * z) * y - 1


@dataclass(frozen=True)
class AsymptoticConstants:
    rho: float
    nu: float
    gamma_P: float
    gamma_Q: float
    error_bound: float


def constants(tol: float = DEFAULT_TOL) -> AsymptoticConstants:
    """The growth constants of the quiddity counting sequences.

    rho and nu are the least positive roots of the two resultant
    polynomials; the gammas come from the algebraic expressions at (rho, nu).
    Consistency of the root pair is asserted through the residuals
    F_P(rho, nu) and dF_P/dy(rho, nu), both of which must vanish.
    """
    rho = least_positive_root(RES_Y_FP, tol)
    nu = least_positive_root(RES_Z_FP, tol)
    if abs(f_p(rho, nu)) > 1e-10 or abs(f_p_dy(rho, nu)) > 1e-10:
        raise ArithmeticError(
            f"inconsistent root pair: F_P={f_p(rho, nu):.3e}, "
            f"dF_P/dy={f_p_dy(rho, nu):.3e}"
        )
    gamma_p = 0.5 * math.sqrt(
        (nu**3 - 2 * rho * nu**2 + 1) / (rho * (3 * rho * nu - rho**2 + 1))
    )
    gamma_q = nu * (nu**3 + 2) / (nu**3 - 1) ** 2 * gamma_p
    # same quantity via the derivative of g(y) = y^2 / (1 - y^3)
    g_prime = (2 * nu + nu**4) / (1 - nu**3) ** 2
    assert abs(g_prime * gamma_p - gamma_q) < 1e-10
    return AsymptoticConstants(rho, nu, gamma_p, gamma_q, max(tol, 1e-12))


def r_ell(ell: int) -> tuple[int, ...]:
    """R_ell(y) = y^(2 ell) - (ell - 2) y^(ell + 1) - 2 y^ell - 2 y + 1."""
    coeffs = [0] * (2 * ell + 1)
    coeffs[0] = 1
    coeffs[1] += -2
    coeffs[ell] += -2
    coeffs[ell + 1] += -(ell - 2)
    coeffs[2 * ell] += 1
    return tuple(coeffs)


def f_ell(ell: int, z: float, y: float) -> float:
    return y ** (ell + 1) - z * y**ell + y * y - y + z


@dataclass(frozen=True)
class PeriodicConstants:
    """Constants for the ell-periodic dissection counts.

    gamma is conditional: it is the square-root-singularity (Darboux-method)
    constant under the hypothesis that rho is the unique dominant
    singularity, known to hold at least for ell <= 16 but unproven in
    general.
    """

    ell: int
    nu: float
    rho: float
    gamma: float
    conditional: bool = True


def periodic_constants(ell: int, tol: float = DEFAULT_TOL) -> PeriodicConstants:
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    nu = least_positive_root(r_ell(ell), tol)
    rho = nu * (nu**ell + nu - 1) / (nu**ell - 1)
    gamma = (
        (1 - nu**ell)
        / math.sqrt(2 * rho)
        / math.sqrt(
            2
            + 2 * ell * nu ** (ell - 1)
            + (ell - 2) * (ell + 1) * nu**ell
            - 2 * ell * nu ** (2 * ell - 1)
        )
    )
    # cross-check against the raw Darboux expression with the partials of F_ell
    dz = 1 - nu**ell
    dyy = ell * (ell + 1) * nu ** (ell - 1) - rho * ell * (ell - 1) * nu ** (ell - 2) + 2
    gamma_alt = math.sqrt(rho * dz / (2 * dyy)) / rho
    if abs(gamma - gamma_alt) > 1e-10:
        raise ArithmeticError(
            f"gamma cross-check failed for ell={ell}: {gamma} vs {gamma_alt}"
        )
    if abs(f_ell(ell, rho, nu)) > 1e-9 or abs(poly_eval(r_ell(ell), nu)) > 1e-9:
        raise ArithmeticError(f"root residuals too large for ell={ell}")
    return PeriodicConstants(ell, nu, rho, gamma)


def empirical_ratio(seq: Callable[[int], int], rho: float, n: int) -> float:
    """seq(n) * sqrt(pi) * n^(3/2) * rho^n, computed in log space.

    If seq(n) ~ gamma rho^(-n) / (sqrt(pi) n^(3/2)), this converges to gamma.
    """
    if n < 10:
        raise ValueError("empirical_ratio needs n >= 10")
    value = seq(n)
    log_val = (
        math.log(value)
        + 0.5 * math.log(math.pi)
        + 1.5 * math.log(n)
        + n * math.log(rho)
    )
    return math.exp(log_val)
