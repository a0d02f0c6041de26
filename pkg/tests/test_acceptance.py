"""End-to-end acceptance suite.

Each test covers one numbered criterion, runs it at the stated tolerance,
and prints a single pass/fail line (run with ``pytest -s`` to see them).
All twelve must pass for the package to be considered correct.
"""

import math
import time

import numpy as np

from bernsimplex import estimate as est
from bernsimplex import ineq, monotone, specfun, spoly
from bernsimplex.cli import _random_instance
from bernsimplex.simplex import SimplexPoint, WeightVector, sample_dirichlet


def _report(num: int, desc: str, passed: bool, t0: float, detail: str = "") -> None:
    tag = "PASS" if passed else "FAIL"
    extra = f" ({detail})" if detail else ""
    print(f"criterion {num:2d} [{tag}] {desc}{extra} in {time.time() - t0:.2f}s")
    assert passed, f"criterion {num}: {desc}{extra}"


def test_criterion_01_central_binomial_identity():
    t0 = time.time()
    ok = True
    for d in range(1, 5):
        for m in range(1, 61):
            ok = ok and spoly.central_binomial_identity(d, m)["equal"]
    _report(1, "central binomial lattice identity exact for d<=4, m<=60", ok, t0)


def test_criterion_02_exact_vs_closed_form_integral():
    t0 = time.time()
    worst = 0.0
    for d in (1, 2, 3):
        for m in range(1, 201):
            a = spoly.s_integral_exact(spoly.SPolyParams(1, 1, m, d))
            b = spoly.s_integral_closed_form(d, m)
            worst = max(worst, abs(a - b) / abs(b))
    _report(2, "exact integral matches closed form, d<=3 m<=200",
            worst <= 1e-11, t0, f"worst rel {worst:.3g}")


def test_criterion_03_scaled_integral_limit():
    t0 = time.time()
    stated = {1: 0.8862269255, 2: 0.5, 3: 0.2215567314}
    m_list = (10, 20, 40, 80, 160, 320)
    ok = True
    detail = []
    for d in (1, 2, 3):
        limit = spoly.asymptotic_constant(d)
        ok = ok and abs(limit - stated[d]) <= 5e-10
        errs = [
            abs(m ** (d / 2.0) * spoly.s_integral_exact(spoly.SPolyParams(1, 1, m, d)) - limit)
            for m in m_list
        ]
        scaled = [m * e for m, e in zip(m_list, errs)]
        ok = ok and max(scaled) <= 2.0 * scaled[0]
        ok = ok and errs[-1] * 10.0 < errs[0]
        detail.append(f"d={d} ratio {errs[0] / errs[-1]:.1f}x")
    _report(3, "m^(d/2)*integral -> limit with bounded m*error", ok, t0, ", ".join(detail))


def test_criterion_04_complete_monotonicity_scan():
    t0 = time.time()
    rng = np.random.Generator(np.random.PCG64(2024))
    grid = [0.1 + 0.1 * i for i in range(100)]
    ok = True
    worst = 0.0
    for _ in range(200):
        d = int(rng.integers(1, 6))
        rep = monotone.cm_scan(_random_instance(rng, d), grid, max_order=7)
        ok = ok and rep.passed
        worst = min(worst, rep.max_violation)
    corrupt = monotone.cm_scan(
        _random_instance(np.random.Generator(np.random.PCG64(0)), 2),
        grid, max_order=7, corrupt=True)
    ok = ok and not corrupt.passed
    _report(4, "complete-monotonicity certificates on 200 instances + corrupt self-test",
            ok, t0, f"max violation {worst:.3g}")


def test_criterion_05_kl_limit_and_monotone_h_prime():
    t0 = time.time()
    rng = np.random.Generator(np.random.PCG64(5))
    grid = [0.1 * 2.0 ** (k / 2.0) for k in range(20)]
    worst = 0.0
    ok = True
    for _ in range(50):
        inst = _random_instance(rng, int(rng.integers(1, 5)))
        gap = abs(monotone.h_derivative(inst, 1e4, 1) - monotone.kl_limit(inst))
        worst = max(worst, gap)
        hp = [monotone.h_derivative(inst, a, 1) for a in grid]
        ok = ok and all(hp[i] > hp[i + 1] for i in range(len(hp) - 1))
    _report(5, "h'(1e4) within 5e-4 of KL limit; h' strictly decreasing",
            ok and worst <= 5e-4, t0, f"worst gap {worst:.3g}")


def test_criterion_06_j_positivity():
    t0 = time.time()
    rng = np.random.Generator(np.random.PCG64(6))
    worst = math.inf
    for _ in range(10_000):
        d = int(rng.integers(1, 7))
        u = rng.dirichlet(np.ones(d + 1))
        y = 1.0 + 10.0 ** rng.uniform(-12.0, math.log10(1e6 - 1.0))
        worst = min(worst, monotone.j_eval(u, y))
    _report(6, "J_u(y) > 0 on 1e4 random draws, d<=6, y in (1, 1e6]",
            worst > 0.0, t0, f"min value {worst:.3g}")


def test_criterion_07_inequality_fuzz_and_equality_cases():
    t0 = time.time()
    rep = ineq.fuzz_inequalities(10_000, 5, 77)
    margins = {"a": [], "b": [], "c": []}
    for _, _, _, tag, margin in rep.rows:
        margins[tag].append(margin)
    ok = min(margins["a"]) >= -1e-10 and min(margins["c"]) >= -1e-10
    ok = ok and min(margins["b"]) > 0.0
    inst = ineq.CoeffInstance(WeightVector((1.5, 2.5, 1.0)))
    eq = [
        ineq.check_weighted_logconvexity(inst, (1.3, 1.3), (0.4, 0.6)),
        ineq.check_weighted_logconvexity(inst, (0.7, 0.7, 0.7), (0.2, 0.3, 0.5)),
        ineq.check_exchange(inst, 0.9, 1.7, 0.9),
    ]
    ok = ok and all(abs(v) <= 1e-12 for v in eq)
    _report(7, "coefficient inequalities: 1e4 fuzz trials + exact equality cases",
            ok, t0, f"min margins a={min(margins['a']):.2g} b={min(margins['b']):.2g} "
                    f"c={min(margins['c']):.2g}")


def test_criterion_08_local_clt_at_barycenter():
    t0 = time.time()
    ok = True
    for d, m_list in ((1, (16, 64, 256, 1024)), (2, (16, 64, 256))):
        bary = SimplexPoint([1.0 / (d + 1)] * d)
        for r, s in ((1, 1), (1, 2), (2, 2), (2, 3)):
            phi = spoly.phi_eval(r, s, bary)
            errs = [
                abs(m ** (d / 2.0) * spoly.s_eval(spoly.SPolyParams(r, s, m, d), bary) - phi)
                for m in m_list
            ]
            ok = ok and all(errs[i] > errs[i + 1] for i in range(len(errs) - 1))
    _report(8, "scaled lattice sum error strictly decreasing toward Gaussian limit", ok, t0)


def test_criterion_09_domination_by_unit_case():
    t0 = time.time()
    rng = np.random.Generator(np.random.PCG64(9))
    worst = -math.inf
    for _ in range(50):
        d = int(rng.integers(1, 4))
        x = SimplexPoint(rng.dirichlet(np.ones(d + 1))[:-1])
        m = int(rng.integers(1, 31))
        base = spoly.s_eval(spoly.SPolyParams(1, 1, m, d), x)
        for r in (1, 2, 3):
            for s in (1, 2, 3):
                worst = max(worst, spoly.s_eval(spoly.SPolyParams(r, s, m, d), x) - base)
    _report(9, "S_{r,s,m} <= S_{1,1,m} on 50 interior points",
            worst <= 1e-12, t0, f"worst excess {worst:.3g}")


def test_criterion_10_determinant_two_routes():
    t0 = time.time()
    rng = np.random.Generator(np.random.PCG64(10))
    worst = 0.0
    for _ in range(1000):
        d = int(rng.integers(1, 7))
        x = SimplexPoint(rng.dirichlet(np.ones(d + 1))[:-1])
        r = int(rng.integers(1, 5))
        s = int(rng.integers(1, 5))
        a = spoly.det_covariance(r, s, x, route="product")
        b = spoly.det_covariance(r, s, x, route="dense")
        worst = max(worst, abs(a - b) / abs(a))
    _report(10, "covariance determinant: product vs dense route",
            worst <= 1e-12, t0, f"worst rel {worst:.3g}")


def test_criterion_11_special_function_residuals():
    t0 = time.time()
    worst_dup = max(
        abs(specfun.duplication_residual(10.0 ** (-3.0 + 9.0 * i / 999.0)))
        for i in range(1000)
    )
    rng = np.random.Generator(np.random.PCG64(11))
    worst_poly = 0.0
    for _ in range(500):
        n = int(rng.integers(0, 9))
        z = 10.0 ** rng.uniform(-2, 4)
        lhs = specfun.polygamma(n, z + 1.0) - specfun.polygamma(n, z)
        rhs = (-1.0) ** n * math.gamma(n + 1) / z ** (n + 1)
        scale = max(abs(specfun.polygamma(n, z)), abs(rhs))
        worst_poly = max(worst_poly, abs(lhs - rhs) / scale)
    worst_ratio = max(
        spoly.gamma_ratio_residual(m)
        for m in sorted({int(round(10.0 ** (1.0 + 3.0 * i / 199.0))) for i in range(200)})
    )
    ok = worst_dup <= 1e-12 and worst_poly <= 1e-11 and worst_ratio <= 0.05
    _report(11, "duplication, polygamma recurrence, and gamma-ratio residuals",
            ok, t0, f"dup {worst_dup:.2g}, poly {worst_poly:.2g}, ratio {worst_ratio:.2g}")


def test_criterion_12_estimator_coincidence_and_convergence():
    t0 = time.time()
    pts = np.array([[0.15], [0.5], [0.82], [0.5], [0.07]])
    from bernsimplex.simplex import SampleSet

    ss, sh = SampleSet(pts, "simplex"), SampleSet(pts, "hypercube")
    ok = all(
        abs(est.bernstein_cdf_simplex(ss, m, SimplexPoint((x,)))
            - est.bernstein_cdf_hypercube(sh, m, (x,))) <= 1e-12
        for m in (1, 9, 50)
        for x in (0.0, 0.3, 0.5, 0.97, 1.0)
    )
    samp = sample_dirichlet((1.0, 1.0, 1.0), 2000, seed=42)
    for vertex in ((1.0, 0.0), (0.0, 1.0), (0.0, 0.0)):
        ok = ok and abs(
            est.bernstein_cdf_simplex(samp, 25, SimplexPoint(vertex))
            - est.empirical_cdf(samp, vertex)
        ) <= 1e-12
    grid = spoly.simplex_midpoint_grid(2, 12)[:, :-1]
    fn = [est.empirical_cdf(samp, tuple(row)) for row in grid]
    sup = {
        m: est.sup_error_on_grid(
            [est.bernstein_cdf_simplex(samp, m, SimplexPoint(row)) for row in grid], fn)
        for m in (10, 100)
    }
    ok = ok and sup[100] < sup[10]
    _report(12, "estimator coincidence, vertex exactness, sup-error decrease",
            ok, t0, f"sup m=10 {sup[10]:.3g} -> m=100 {sup[100]:.3g}")
