"""The S_{r,s,m} polynomial family on the simplex and its asymptotics.

    S_{r,s,m}(x) = sum_{||k|| <= m} P_{rk,rm}(x) P_{sk,sm}(x)

plus the Gaussian local-limit density phi_{r,s}, the exact simplex
integral of S via the Dirichlet normalization constant, the central
binomial lattice identity in exact arithmetic, and the Gamma-ratio
residual used in the large-m expansion of the integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Sequence

import numpy as np

from .simplex import (
    LATTICE_CAP,
    SimplexPoint,
    lattice_array,
    log_factorial_table,
)
from .specfun import log_gamma, _stirling_tail

__all__ = [
    "SPolyParams",
    "s_eval",
    "s_eval_grid",
    "phi_eval",
    "det_covariance",
    "central_binomial_identity",
    "central_binomial_lhs",
    "central_binomial_rhs",
    "s_integral_exact",
    "s_integral_closed_form",
    "asymptotic_constant",
    "gamma_ratio_residual",
    "weighted_integral_experiment",
    "simplex_midpoint_grid",
    "TEST_FUNCTIONS",
]

_SINGULAR_TOL = 1e-14


@dataclass(frozen=True)
class SPolyParams:
    r: int
    s: int
    m: int
    d: int

    def __post_init__(self):
        if min(self.r, self.s, self.m, self.d) < 1:
            raise ValueError("r, s, m, d must all be >= 1")


def _log_pmf_matrix(lat: np.ndarray, scale: int, m: int, xs: np.ndarray) -> np.ndarray:
    """ln P_{scale*k, scale*m} at each point (row of xs, (P, d+1)) and each
    lattice row; returns (P, N)."""
    lf = log_factorial_table(scale * m)
    n_pts = xs.shape[0]
    out = np.full((n_pts, lat.shape[0]), lf[scale * m])
    kd = scale * lat  # (N, d+1)
    for i in range(lat.shape[1]):
        ki = kd[:, i]
        out -= lf[ki][None, :]
        xi = xs[:, i][:, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            term = ki[None, :] * np.log(xi)
        # 0 * log 0 = 0; positive k at a zero coordinate kills the term
        term = np.where(ki[None, :] == 0, 0.0, term)
        out += np.where((xi == 0.0) & (ki[None, :] > 0), -np.inf, term)
    return out


def s_eval_grid(p: SPolyParams, xs: np.ndarray, cap: int = LATTICE_CAP) -> np.ndarray:
    """S_{r,s,m} at each row of xs (points given as all d+1 coordinates)."""
    xs = np.asarray(xs, dtype=float)
    if xs.ndim != 2 or xs.shape[1] != p.d + 1:
        raise ValueError("xs must be (P, d+1)")
    lat = lattice_array(p.d, p.m, cap)
    out = np.empty(xs.shape[0])
    # chunk over points to bound the (P, N) temporaries
    chunk = max(1, int(4e7 // max(lat.shape[0], 1)))
    for lo in range(0, xs.shape[0], chunk):
        sub = xs[lo : lo + chunk]
        logs = _log_pmf_matrix(lat, p.r, p.m, sub) + _log_pmf_matrix(lat, p.s, p.m, sub)
        out[lo : lo + chunk] = np.exp(logs).sum(axis=1)
    return out


def s_eval(p: SPolyParams, x: SimplexPoint, cap: int = LATTICE_CAP) -> float:
    """S_{r,s,m}(x) in [0, 1]."""
    if x.d != p.d:
        raise ValueError("point dimension does not match params")
    return float(s_eval_grid(p, np.array([x.full]), cap)[0])


def det_covariance(r: int, s: int, x: SimplexPoint, route: str = "product") -> float:
    """det of rs(r+s)(diag(x) - x x^T).

    route="product" uses the closed form (rs(r+s))^d * prod_{i=1}^{d+1} x_i;
    route="dense" assembles the matrix and takes a dense determinant.  The
    two must agree to 1e-12 relative on interior points.
    """
    xf = np.array(x.full)
    if xf.min() <= _SINGULAR_TOL:
        raise ValueError("covariance is singular: a coordinate is (near) zero")
    scale = r * s * (r + s)
    if route == "product":
        return float(scale**x.d * np.prod(xf))
    if route == "dense":
        xd = xf[:-1]
        sigma = scale * (np.diag(xd) - np.outer(xd, xd))
        return float(np.linalg.det(sigma))
    raise ValueError(f"unknown route {route!r}")


def phi_eval(r: int, s: int, x: SimplexPoint) -> float:
    """Gaussian local-limit density gcd(r,s)^d / ((2*pi)^{d/2} sqrt(det Sigma))."""
    det = det_covariance(r, s, x, route="product")
    return math.gcd(r, s) ** x.d / ((2.0 * math.pi) ** (x.d / 2.0) * math.sqrt(det))


def central_binomial_lhs(d: int, m: int) -> int:
    """sum over ||k|| <= m of prod_{i=1}^{d+1} C(2 k_i, k_i), exact.

    With k_{d+1} = m - ||k|| the sum runs over all compositions of m into
    d+1 parts, i.e. the coefficient of z^m in (sum_j C(2j,j) z^j)^{d+1};
    computed by exact integer polynomial convolution.
    """
    if d < 1 or m < 0:
        raise ValueError("need d >= 1 and m >= 0")
    c = [math.comb(2 * j, j) for j in range(m + 1)]
    acc = list(c)
    for _ in range(d):
        nxt = [0] * (m + 1)
        for i, ai in enumerate(acc):
            for j in range(m + 1 - i):
                nxt[i + j] += ai * c[j]
        acc = nxt
    return acc[m]


def central_binomial_rhs(d: int, m: int) -> Fraction:
    """C(m + (d-1)/2, m) * 4^m as an exact rational."""
    if d < 1 or m < 0:
        raise ValueError("need d >= 1 and m >= 0")
    out = Fraction(4) ** m
    for j in range(1, m + 1):
        out *= Fraction(d - 1 + 2 * j, 2 * j)
    return out


def central_binomial_identity(d: int, m: int) -> dict:
    """Exact-equality report for the lattice central-binomial identity."""
    lhs = central_binomial_lhs(d, m)
    rhs = central_binomial_rhs(d, m)
    return {"d": d, "m": m, "lhs": lhs, "rhs": rhs, "equal": Fraction(lhs) == rhs}


def s_integral_exact(p: SPolyParams, cap: int = LATTICE_CAP) -> float:
    """Integral of S_{r,s,m} over the simplex via the Dirichlet reduction.

    Each lattice term integrates in closed form:
        C_{rm,rk} C_{sm,sk} * prod_i Gamma((r+s)k_i + 1) / Gamma((r+s)m + d + 1)
    so the result is exact in formula (floating-point evaluated).
    """
    r, s, m, d = p.r, p.s, p.m, p.d
    lat = lattice_array(d, m, cap)
    t = r + s
    lf = np.asarray(log_factorial_table(t * m + d))
    logs = np.full(lat.shape[0], lf[r * m] + lf[s * m] - lf[t * m + d])
    for i in range(d + 1):
        ki = lat[:, i]
        logs += lf[t * ki] - lf[r * ki] - lf[s * ki]
    return float(np.exp(logs).sum())


def s_integral_closed_form(d: int, m: int) -> float:
    """Closed form of the r = s = 1 integral:
    2^{-d} sqrt(pi) Gamma(m+1) / (Gamma(d/2+1/2) Gamma(m+d/2+1))."""
    if d < 1 or m < 1:
        raise ValueError("need d, m >= 1")
    return math.exp(
        -d * math.log(2.0)
        + 0.5 * math.log(math.pi)
        + log_gamma(m + 1.0)
        - log_gamma(d / 2.0 + 0.5)
        - log_gamma(m + d / 2.0 + 1.0)
    )


def asymptotic_constant(d: int) -> float:
    """Large-m limit of m^{d/2} * integral of S_{1,1,m}: 2^{-d} sqrt(pi) / Gamma(d/2+1/2)."""
    if d < 1:
        raise ValueError("need d >= 1")
    return 2.0**-d * math.sqrt(math.pi) / math.exp(log_gamma(d / 2.0 + 0.5))


def gamma_ratio_residual(m: int) -> float:
    """m^2 * |Gamma(m+1)/(m^{1/2} Gamma(m+1/2)) - 1 - 1/(8m)|.

    For m >= 12 the log ratio is assembled from the Stirling expansion
    directly (the leading m log m terms cancel analytically); naive
    subtraction of ~m log m sized log-gammas would lose the m^{-2} tail.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if m < 12:
        log_ratio = log_gamma(m + 1.0) - 0.5 * math.log(m) - log_gamma(m + 0.5)
    else:
        a = math.log1p(1.0 / m)
        b = math.log1p(0.5 / m)
        log_ratio = (
            (m + 0.5) * a
            - m * b
            - 0.5
            + _stirling_tail(m + 1.0)
            - _stirling_tail(m + 0.5)
        )
    ratio = math.exp(log_ratio)
    return m * m * abs(ratio - 1.0 - 1.0 / (8.0 * m))


def simplex_midpoint_grid(d: int, resolution: int) -> np.ndarray:
    """Midpoint-rule nodes (all d+1 coordinates) on the uniform barycentric
    grid, keeping nodes at least 1/(2*resolution) from the boundary; the
    cell weight is resolution^{-d} per node."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    lat = lattice_array(d, resolution - 1)[:, :-1]
    xs = (lat + 0.5) / resolution
    keep = xs.sum(axis=1) <= 1.0 - 0.5 / resolution
    xs = xs[keep]
    return np.hstack([xs, (1.0 - xs.sum(axis=1))[:, None]])


TEST_FUNCTIONS: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "one": lambda xs: np.ones(xs.shape[0]),
    "zero": lambda xs: np.zeros(xs.shape[0]),
    "x1": lambda xs: xs[:, 0],
    "x2": lambda xs: xs[:, 1],
    "x1x2": lambda xs: xs[:, 0] * xs[:, 1],
    "half": lambda xs: (xs[:, :-1].sum(axis=1) <= 0.5).astype(float),
}


def weighted_integral_experiment(
    p: SPolyParams,
    h: str,
    resolution: int,
    cap: int = LATTICE_CAP,
) -> float:
    """Midpoint-rule value of integral_S h(x) (m^{d/2} S_{r,s,m}(x) - phi_{r,s}(x)) dx.

    Reported for trend-to-zero studies only; h names an entry of
    TEST_FUNCTIONS ("x2"/"x1x2" require d >= 2).
    """
    if h not in TEST_FUNCTIONS:
        raise ValueError(f"unknown test function {h!r}; choose from {sorted(TEST_FUNCTIONS)}")
    if h in ("x2", "x1x2") and p.d < 2:
        raise ValueError(f"test function {h!r} needs d >= 2")
    xs = simplex_midpoint_grid(p.d, resolution)
    hv = TEST_FUNCTIONS[h](xs)
    if not np.any(hv):
        return 0.0
    scale = float(p.m) ** (p.d / 2.0)
    sv = s_eval_grid(p, xs, cap)
    det = (p.r * p.s * (p.r + p.s)) ** p.d * np.prod(xs, axis=1)
    phiv = math.gcd(p.r, p.s) ** p.d / ((2.0 * math.pi) ** (p.d / 2.0) * np.sqrt(det))
    integrand = hv * (scale * sv - phiv)
    return float(integrand.sum() * resolution ** (-p.d))
