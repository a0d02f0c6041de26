"""Simplex geometry and multinomial probability primitives.

Points, multi-index lattices, the multinomial pmf in log space, and a
seedable Dirichlet sampler.  All probabilities are kept in log space
end-to-end; exponentiation happens only at accumulation points (degrees in
the hundreds overflow direct factorials).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .specfun import log_gamma

__all__ = [
    "SimplexPoint",
    "MultiIndex",
    "WeightVector",
    "SampleSet",
    "enumerate_lattice",
    "lattice_array",
    "lattice_size",
    "multinomial_log_pmf",
    "pmf_normalization_check",
    "sample_dirichlet",
    "log_factorial_table",
    "CapacityError",
    "LATTICE_CAP",
]

LATTICE_CAP = 10**8
_TOL = 1e-12


class CapacityError(RuntimeError):
    """Raised when an enumeration would exceed the configured lattice cap."""


@dataclass(frozen=True)
class SimplexPoint:
    """A point x in the closed d-simplex; x_{d+1} = 1 - ||x|| is derived."""

    coords: tuple

    def __init__(self, coords: Sequence[float]):
        coords = tuple(float(c) for c in coords)
        if not coords:
            raise ValueError("simplex point needs at least one coordinate")
        if any(not math.isfinite(c) or c < -_TOL for c in coords):
            raise ValueError(f"coordinates must be nonnegative, got {coords}")
        s = sum(coords)
        if s > 1.0 + _TOL:
            raise ValueError(f"coordinate sum {s} exceeds 1")
        # clamp tiny negative / overshoot noise
        coords = tuple(min(max(c, 0.0), 1.0) for c in coords)
        object.__setattr__(self, "coords", coords)

    @property
    def d(self) -> int:
        return len(self.coords)

    @property
    def last(self) -> float:
        return max(1.0 - sum(self.coords), 0.0)

    @property
    def full(self) -> tuple:
        """All d+1 barycentric coordinates."""
        return self.coords + (self.last,)

    @property
    def interior(self) -> bool:
        return min(self.full) > 0.0


@dataclass(frozen=True)
class MultiIndex:
    """Integer vector k with ||k|| <= m; k_{d+1} = m - ||k|| is derived."""

    k: tuple
    m: int

    def __init__(self, k: Sequence[int], m: int):
        k = tuple(int(v) for v in k)
        if m < 0 or any(v < 0 for v in k):
            raise ValueError("multi-index entries and degree must be nonnegative")
        if sum(k) > m:
            raise ValueError(f"||k|| = {sum(k)} exceeds degree m = {m}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "m", m)

    @property
    def d(self) -> int:
        return len(self.k)

    @property
    def last(self) -> int:
        return self.m - sum(self.k)

    @property
    def full(self) -> tuple:
        return self.k + (self.last,)


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights gamma (d+1 entries) with total mass M."""

    gamma: tuple
    M: float

    def __init__(self, gamma: Sequence[float]):
        gamma = tuple(float(g) for g in gamma)
        if len(gamma) < 2:
            raise ValueError("need at least two weights (d >= 1)")
        if any(not math.isfinite(g) or g < 0.0 for g in gamma):
            raise ValueError(f"weights must be nonnegative, got {gamma}")
        M = sum(gamma)
        if M <= 0.0:
            raise ValueError("total mass M must be positive")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "M", M)

    @property
    def d(self) -> int:
        return len(self.gamma) - 1


@dataclass
class SampleSet:
    """n observations on the simplex or hypercube, with provenance."""

    points: np.ndarray
    domain: str = "simplex"
    seed: Optional[int] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] == 0:
            raise ValueError("points must be a nonempty (n, d) array")
        if self.domain not in ("simplex", "hypercube"):
            raise ValueError(f"unknown domain tag {self.domain!r}")
        if np.any(pts < -_TOL) or np.any(pts > 1.0 + _TOL):
            raise ValueError("sample coordinates outside [0, 1]")
        if self.domain == "simplex" and np.any(pts.sum(axis=1) > 1.0 + _TOL):
            raise ValueError("simplex samples must satisfy ||x|| <= 1")
        self.points = pts

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]

    def to_csv(self, path) -> None:
        """Write header x1,...,xd and one full-precision row per point."""
        header = ",".join(f"x{i + 1}" for i in range(self.d))
        lines = [header]
        for row in self.points:
            lines.append(",".join(f"{v:.17g}" for v in row))
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")

    @classmethod
    def from_csv(cls, path, domain: str = "simplex") -> "SampleSet":
        with open(path) as fh:
            header = fh.readline().strip()
            if not header.startswith("x1"):
                raise ValueError(f"missing x1,...,xd header in {path}")
            pts = np.loadtxt(fh, delimiter=",", ndmin=2)
        return cls(points=pts, domain=domain)


def lattice_size(d: int, m: int) -> int:
    """Number of multi-indices with d entries and ||k|| <= m: C(m+d, d)."""
    return math.comb(m + d, d)


def _check_capacity(d: int, m: int, cap: int = LATTICE_CAP) -> None:
    if lattice_size(d, m) > cap:
        raise CapacityError(
            f"lattice with d={d}, m={m} has {lattice_size(d, m)} points (cap {cap})"
        )


def enumerate_lattice(d: int, m: int, cap: int = LATTICE_CAP) -> Iterator[MultiIndex]:
    """Yield every k in N_0^d with ||k|| <= m once, lexicographically."""
    if d < 1 or m < 0:
        raise ValueError(f"need d >= 1 and m >= 0, got d={d}, m={m}")
    _check_capacity(d, m, cap)

    def rec(prefix, budget, depth):
        if depth == d:
            yield MultiIndex(prefix, m)
            return
        for v in range(budget + 1):
            yield from rec(prefix + (v,), budget - v, depth + 1)

    yield from rec((), m, 0)


def lattice_array(d: int, m: int, cap: int = LATTICE_CAP) -> np.ndarray:
    """The full lattice as an (N, d+1) int64 array (last column = m - ||k||).

    Rows follow the same lexicographic order as enumerate_lattice.
    """
    if d < 1 or m < 0:
        raise ValueError(f"need d >= 1 and m >= 0, got d={d}, m={m}")
    _check_capacity(d, m, cap)
    if d == 1:
        k = np.arange(m + 1, dtype=np.int64)[:, None]
    else:
        blocks = []
        for v in range(m + 1):
            sub = lattice_array(d - 1, m - v, cap)[:, :-1]
            first = np.full((sub.shape[0], 1), v, dtype=np.int64)
            blocks.append(np.hstack([first, sub]))
        k = np.vstack(blocks)
    last = (m - k.sum(axis=1))[:, None]
    return np.hstack([k, last])


def log_factorial_table(n: int) -> np.ndarray:
    """lf[j] = ln(j!) for j = 0..n, each entry from log_gamma."""
    return np.array([log_gamma(j + 1.0) for j in range(n + 1)])


def multinomial_log_pmf(k: MultiIndex, x: SimplexPoint) -> float:
    """ln P_{k,m}(x) with the 0*ln 0 = 0 convention; -inf on excluded boundary."""
    if k.d != x.d:
        raise ValueError(f"dimension mismatch: k has d={k.d}, x has d={x.d}")
    kf = k.full
    xf = x.full
    out = log_gamma(k.m + 1.0)
    for ki, xi in zip(kf, xf):
        out -= log_gamma(ki + 1.0)
        if ki > 0:
            if xi == 0.0:
                return -math.inf
            out += ki * math.log(xi)
    return out


def pmf_normalization_check(d: int, m: int, x: SimplexPoint, cap: int = LATTICE_CAP) -> float:
    """sum_{||k||<=m} P_{k,m}(x); equals 1 within 1e-12 for interior x."""
    if x.d != d:
        raise ValueError("point dimension does not match d")
    lat = lattice_array(d, m, cap)
    lf = log_factorial_table(m)
    logp = np.full(lat.shape[0], lf[m])
    xf = np.array(x.full)
    for i in range(d + 1):
        ki = lat[:, i]
        logp -= lf[ki]
        if xf[i] > 0.0:
            logp += ki * math.log(xf[i])
        else:
            logp = np.where(ki > 0, -np.inf, logp)
    return float(np.exp(logp).sum())


def sample_dirichlet(alpha: Sequence[float], n: int, seed: int) -> SampleSet:
    """n iid Dirichlet(alpha) draws; rows carry the first d of d+1 coordinates.

    Uses numpy's PCG64 generator; draws are normalized gamma variates (the
    generator's gamma sampler handles shape < 1 by accept-reject).
    """
    alpha = [float(a) for a in alpha]
    if len(alpha) < 2:
        raise ValueError("alpha needs at least two entries")
    if any(a <= 0.0 for a in alpha):
        raise ValueError(f"alpha entries must be positive, got {alpha}")
    if n < 1:
        raise ValueError("need n >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    g = rng.gamma(shape=np.array(alpha), size=(n, len(alpha)))
    g /= g.sum(axis=1, keepdims=True)
    return SampleSet(points=g[:, :-1], domain="simplex", seed=seed, meta={"alpha": alpha})
