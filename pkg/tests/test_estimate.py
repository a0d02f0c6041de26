import math

import numpy as np
import pytest

from bernsimplex import estimate as est
from bernsimplex.simplex import SampleSet, SimplexPoint, sample_dirichlet

TWO_POINTS = SampleSet(np.array([[0.1, 0.2], [0.3, 0.4]]), "simplex")


class TestEmpiricalCdf:
    def test_examples(self):
        assert est.empirical_cdf(TWO_POINTS, (0.3, 0.4)) == 1.0
        assert est.empirical_cdf(TWO_POINTS, (0.2, 0.3)) == 0.5
        assert est.empirical_cdf(TWO_POINTS, (0.05, 0.05)) == 0.0

    def test_bad_query(self):
        with pytest.raises(ValueError):
            est.empirical_cdf(TWO_POINTS, (0.5,))


class TestBernsteinCdfSimplex:
    def test_vertex_collapse_at_origin(self):
        # x = 0 everywhere: only k = 0 has mass
        s = SampleSet(np.array([[0.2], [0.6]]), "simplex")
        v = est.bernstein_cdf_simplex(s, 5, SimplexPoint((0.0,)))
        assert v == pytest.approx(est.empirical_cdf(s, (0.0,)), abs=1e-14)

    def test_hand_example(self):
        s = SampleSet(np.array([[0.5]]), "simplex")
        v = est.bernstein_cdf_simplex(s, 2, SimplexPoint((0.75,)))
        assert v == pytest.approx(0.9375, rel=1e-12)

    def test_vertex_exactness(self):
        s = sample_dirichlet((1.0, 1.0, 1.0), 200, seed=5)
        for vertex in [(1.0, 0.0), (0.0, 1.0), (0.0, 0.0)]:
            fhat = est.bernstein_cdf_simplex(s, 12, SimplexPoint(vertex))
            fn = est.empirical_cdf(s, vertex)
            assert fhat == pytest.approx(fn, abs=1e-12)

    def test_range_and_convergence_to_empirical(self):
        s = sample_dirichlet((2.0, 3.0), 400, seed=9)
        grid = np.linspace(0.05, 0.95, 19)
        fn = [est.empirical_cdf(s, (x,)) for x in grid]
        sups = []
        for m in (5, 20, 80, 320):
            fhat = [est.bernstein_cdf_simplex(s, m, SimplexPoint((x,))) for x in grid]
            assert all(0.0 <= v <= 1.0 for v in fhat)
            sups.append(est.sup_error_on_grid(fhat, fn))
        assert sups[0] > sups[-1]

    def test_monotone_along_rays_d1(self):
        s = sample_dirichlet((1.0, 2.0), 300, seed=2)
        grid = np.linspace(0.0, 1.0, 41)
        vals = [est.bernstein_cdf_simplex(s, 15, SimplexPoint((x,))) for x in grid]
        assert all(vals[i + 1] >= vals[i] - 1e-12 for i in range(len(vals) - 1))

    def test_domain_mismatch(self):
        s = SampleSet(np.array([[0.5, 0.5]]), "hypercube")
        with pytest.raises(ValueError):
            est.bernstein_cdf_simplex(s, 3, SimplexPoint((0.3, 0.3)))


class TestBernsteinCdfHypercube:
    def test_univariate_coincidence(self):
        pts = np.array([[0.12], [0.5], [0.87], [0.5]])
        ss = SampleSet(pts, "simplex")
        sh = SampleSet(pts, "hypercube")
        for m in (1, 7, 40):
            for x in (0.0, 0.21, 0.5, 0.93, 1.0):
                a = est.bernstein_cdf_simplex(ss, m, SimplexPoint((x,)))
                b = est.bernstein_cdf_hypercube(sh, m, (x,))
                assert abs(a - b) <= 1e-12

    def test_all_ones_corner(self):
        s = SampleSet(np.array([[0.3, 0.6], [0.9, 0.1]]), "hypercube")
        assert est.bernstein_cdf_hypercube(s, 6, (1.0, 1.0)) == pytest.approx(1.0, rel=1e-12)

    def test_single_sample_center_m1(self):
        # d=2, m=1, x=(0.5,0.5): weights 1/4 on each corner k in {0,1}^2,
        # F_n(k) = 1 iff k = (1,1) for a sample at the center
        s = SampleSet(np.array([[0.5, 0.5]]), "hypercube")
        assert est.bernstein_cdf_hypercube(s, 1, (0.5, 0.5)) == pytest.approx(0.25, rel=1e-12)


class TestBernsteinDensityHypercube:
    def test_single_sample_hand_value(self):
        # one sample at 0.4 with m = 2 activates only cell (0, 0.5]
        s = SampleSet(np.array([[0.4]]), "hypercube")
        for x in (0.0, 0.3, 0.7, 1.0):
            assert est.bernstein_density_hypercube(s, 2, (x,)) == pytest.approx(
                2.0 * (1.0 - x), rel=1e-12
            )

    def test_empty_cells_zero(self):
        # all mass at coordinate 0 belongs to no half-open cell
        s = SampleSet(np.array([[0.0, 0.0]]), "hypercube")
        assert est.bernstein_density_hypercube(s, 3, (0.5, 0.5)) == 0.0

    def test_uniform_density_near_one(self):
        rng = np.random.Generator(np.random.PCG64(12))
        s = SampleSet(rng.uniform(size=(100_000, 2)), "hypercube")
        v = est.bernstein_density_hypercube(s, 8, (0.5, 0.5))
        assert v == pytest.approx(1.0, abs=0.05)

    def test_integrates_to_sample_mass(self):
        rng = np.random.Generator(np.random.PCG64(4))
        s = SampleSet(rng.uniform(size=(5000, 1)), "hypercube")
        grid = (np.arange(400) + 0.5) / 400
        total = np.mean([est.bernstein_density_hypercube(s, 6, (x,)) for x in grid])
        assert total == pytest.approx(1.0, abs=0.01)


class TestSupError:
    def test_identical(self):
        assert est.sup_error_on_grid([1.0, 2.0], [1.0, 2.0]) == 0.0

    def test_constant_offset(self):
        assert est.sup_error_on_grid([1.0, 2.0], [1.5, 2.5]) == pytest.approx(0.5)

    def test_grid_mismatch(self):
        with pytest.raises(ValueError):
            est.sup_error_on_grid([1.0], [1.0, 2.0])


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            est.EstimatorConfig(m=0)
        with pytest.raises(ValueError):
            est.EstimatorConfig(m=3, kind="spline")
        assert est.EstimatorConfig(m=3, kind="hypercube-cdf").kind == "hypercube-cdf"
