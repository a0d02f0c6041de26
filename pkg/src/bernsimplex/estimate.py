"""Empirical and Bernstein-smoothed cdf/density estimators.

The empirical cdf uses the standard convention F_n(y) = (1/n) #{j : y_j <= y}
componentwise (the source display reads the indicator the other way; as a
cdf smoother only the standard reading makes sense, so that is what is
implemented).  Likewise the hypercube cdf kernel uses the binomial pmf
exponent m - k_i on (1 - x_i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .simplex import (
    LATTICE_CAP,
    CapacityError,
    SampleSet,
    SimplexPoint,
    lattice_array,
    log_factorial_table,
)

__all__ = [
    "EstimatorConfig",
    "empirical_cdf",
    "bernstein_cdf_simplex",
    "bernstein_cdf_hypercube",
    "bernstein_density_hypercube",
    "sup_error_on_grid",
]

ESTIMATOR_KINDS = ("simplex-cdf", "hypercube-cdf", "hypercube-density")


@dataclass(frozen=True)
class EstimatorConfig:
    m: int
    kind: str = "simplex-cdf"

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("degree m must be >= 1")
        if self.kind not in ESTIMATOR_KINDS:
            raise ValueError(f"kind must be one of {ESTIMATOR_KINDS}")


def _empirical_cdf_many(samples: SampleSet, ys: np.ndarray) -> np.ndarray:
    """F_n at each row of ys, vectorized: (P,) from (P, d) queries."""
    dominated = np.all(samples.points[None, :, :] <= ys[:, None, :], axis=2)
    return dominated.mean(axis=1)


def empirical_cdf(samples: SampleSet, y) -> float:
    """F_n(y) = fraction of sample points componentwise <= y."""
    y = np.atleast_1d(np.asarray(y, dtype=float))
    if y.shape != (samples.d,):
        raise ValueError(f"query point must have d={samples.d} coordinates")
    return float(_empirical_cdf_many(samples, y[None, :])[0])


def _binomial_log_pmf_rows(m: int, x: float) -> np.ndarray:
    """ln C(m,k) + k ln x + (m-k) ln(1-x) for k = 0..m, boundary-safe."""
    k = np.arange(m + 1)
    lf = log_factorial_table(m)
    out = lf[m] - lf[k] - lf[m - k]
    if x > 0.0:
        out = out + k * math.log(x)
    else:
        out = np.where(k > 0, -np.inf, out)
    if x < 1.0:
        out = out + (m - k) * math.log1p(-x)
    else:
        out = np.where(k < m, -np.inf, out)
    return out


def bernstein_cdf_simplex(samples: SampleSet, m: int, x: SimplexPoint,
                          cap: int = LATTICE_CAP) -> float:
    """sum_{||k|| <= m} F_n(k/m) P_{k,m}(x) on the simplex."""
    if samples.domain != "simplex":
        raise ValueError("samples must be tagged simplex")
    if samples.d != x.d:
        raise ValueError("sample and point dimensions differ")
    if m < 1:
        raise ValueError("degree m must be >= 1")
    lat = lattice_array(x.d, m, cap)
    fn = _empirical_cdf_many(samples, lat[:, :-1] / m)
    lf = log_factorial_table(m)
    logp = np.full(lat.shape[0], lf[m])
    xf = np.array(x.full)
    for i in range(x.d + 1):
        ki = lat[:, i]
        logp -= lf[ki]
        if xf[i] > 0.0:
            logp += ki * math.log(xf[i])
        else:
            logp = np.where(ki > 0, -np.inf, logp)
    return float(np.dot(fn, np.exp(logp)))


def bernstein_cdf_hypercube(samples: SampleSet, m: int, x, cap: int = LATTICE_CAP) -> float:
    """sum_{k in [0,m]^d} F_n(k/m) prod_i C(m,k_i) x_i^{k_i} (1-x_i)^{m-k_i}."""
    if samples.domain != "hypercube":
        raise ValueError("samples must be tagged hypercube")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    d = samples.d
    if x.shape != (d,):
        raise ValueError(f"query point must have d={d} coordinates")
    if np.any(x < 0.0) or np.any(x > 1.0):
        raise ValueError("query point must lie in [0,1]^d")
    if m < 1:
        raise ValueError("degree m must be >= 1")
    if (m + 1) ** d > cap:
        raise CapacityError(f"(m+1)^d = {(m + 1) ** d} exceeds cap {cap}")
    # F_n over the full grid, then contract one axis at a time
    axes = [np.arange(m + 1) / m for _ in range(d)]
    mesh = np.meshgrid(*axes, indexing="ij")
    grid_pts = np.stack([g.ravel() for g in mesh], axis=1)
    fn = _empirical_cdf_many(samples, grid_pts).reshape((m + 1,) * d)
    out = fn
    for i in range(d):
        w = np.exp(_binomial_log_pmf_rows(m, float(x[i])))
        out = np.tensordot(out, w, axes=([0], [0]))
    return float(out)


def bernstein_density_hypercube(samples: SampleSet, m: int, x, cap: int = LATTICE_CAP) -> float:
    """m^d sum_{k in [0,m-1]^d} P_n((k/m, (k+1)/m]) prod_i C(m-1,k_i) x^{k_i} (1-x)^{m-1-k_i}.

    Cells are half-open on the left, so points with any coordinate equal to
    0 belong to no cell and contribute nothing.
    """
    if samples.domain != "hypercube":
        raise ValueError("samples must be tagged hypercube")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    d = samples.d
    if x.shape != (d,):
        raise ValueError(f"query point must have d={d} coordinates")
    if m < 1:
        raise ValueError("degree m must be >= 1")
    if m**d > cap:
        raise CapacityError(f"m^d = {m ** d} exceeds cap {cap}")
    # cell index of y in (k/m, (k+1)/m] is ceil(y*m) - 1
    idx = np.ceil(samples.points * m).astype(int) - 1
    inside = np.all((idx >= 0) & (idx <= m - 1), axis=1)
    counts = np.zeros((m,) * d)
    if np.any(inside):
        np.add.at(counts, tuple(idx[inside].T), 1.0)
    out = counts / samples.n
    for i in range(d):
        w = np.exp(_binomial_log_pmf_rows(m - 1, float(x[i]))) if m > 1 else np.ones(1)
        out = np.tensordot(out, w, axes=([0], [0]))
    return float(m**d * out)


def sup_error_on_grid(values, reference) -> float:
    """max |values - reference| over matching grids."""
    a = np.asarray(values, dtype=float)
    b = np.asarray(reference, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"grid mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))
