import math
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gyroball import (
    BoundaryViolation,
    DegenerateRay,
    DimensionMismatch,
    ModelParams,
    active_backend,
    as_point,
    einstein_add,
    einstein_add_batch,
    gamma_factor,
    gamma_factor_batch,
    gyroangle,
    gyrodistance,
    gyromidpoint,
    scalar_mul,
)

from conftest import ADD_GENERIC, ADD_ORTHOGONAL, T0_VERTICES, ball_points


def vec2(rmax=0.98):
    # polar sampling keeps the norm bound exact regardless of direction
    return st.tuples(
        st.floats(0.0, rmax), st.floats(0.0, 2.0 * math.pi)
    ).map(lambda r_t: np.array([r_t[0] * math.cos(r_t[1]), r_t[0] * math.sin(r_t[1])]))


class TestAddition:
    def test_orthogonal_fixture(self):
        w = einstein_add(ADD_ORTHOGONAL["u"], ADD_ORTHOGONAL["v"])
        np.testing.assert_allclose(w, ADD_ORTHOGONAL["sum"], rtol=1e-15, atol=0)

    def test_generic_fixture(self):
        w = einstein_add(ADD_GENERIC["u"], ADD_GENERIC["v"])
        np.testing.assert_allclose(w, ADD_GENERIC["sum"], rtol=1e-15, atol=0)

    def test_zero_identity(self):
        v = np.array([0.3, -0.4])
        np.testing.assert_array_equal(einstein_add(np.zeros(2), v), v)
        np.testing.assert_array_equal(einstein_add(v, np.zeros(2)), v)

    def test_left_inverse(self):
        for v in ([0.63, -0.21], [0.1, 0.1], [0.0, 0.97]):
            w = einstein_add(-np.asarray(v), v)
            assert np.linalg.norm(w) <= 1e-15

    def test_noncommutative(self):
        u, v = np.array([0.5, 0.0]), np.array([0.0, 0.5])
        assert not np.allclose(einstein_add(u, v), einstein_add(v, u))

    def test_right_cancellation_fails(self):
        # (u (+) v) (-) v does not recover u for non-parallel operands
        u, v = np.asarray(ADD_GENERIC["u"]), np.asarray(ADD_GENERIC["v"])
        w = einstein_add(einstein_add(u, v), -v)
        assert np.linalg.norm(w - u) > 1e-3

    @given(vec2(), vec2())
    @settings(max_examples=200, deadline=None)
    def test_left_cancellation(self, u, v):
        w = einstein_add(u, einstein_add(-u, v))
        assert np.linalg.norm(w - v) <= 1e-12 * (1.0 + np.linalg.norm(v))

    @given(vec2(), vec2())
    @settings(max_examples=200, deadline=None)
    def test_negation_distributes(self, u, v):
        # the formula is odd under joint negation, so this holds bitwise
        np.testing.assert_array_equal(
            einstein_add(-u, -v), -einstein_add(u, v)
        )

    @given(vec2(), vec2())
    @settings(max_examples=200, deadline=None)
    def test_result_stays_inside_ball(self, u, v):
        assert np.linalg.norm(einstein_add(u, v)) < 1.0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            einstein_add(np.array([0.1, 0.2]), np.array([0.1, 0.2, 0.3]))

    def test_three_dimensional(self):
        u = np.array([0.1, 0.2, -0.3])
        v = np.array([-0.2, 0.05, 0.4])
        w = einstein_add(u, einstein_add(-u, v))
        np.testing.assert_allclose(w, v, rtol=0, atol=1e-14)


class TestGamma:
    def test_zero(self):
        assert gamma_factor(np.zeros(2)) == 1.0

    def test_closed_form(self):
        v = np.array([0.6, 0.0])
        assert math.isclose(gamma_factor(v), 1.25, rel_tol=1e-15)

    @given(vec2())
    @settings(max_examples=200, deadline=None)
    def test_norm_identity(self, v):
        # s^2 (gamma^2 - 1) / gamma^2 recovers the squared norm
        g = gamma_factor(v)
        lhs = (g * g - 1.0) / (g * g)
        assert math.isclose(lhs, float(v @ v), rel_tol=0, abs_tol=1e-13)

    def test_scaled_params(self):
        p = ModelParams(s=2.0)
        v = np.array([1.2, 0.0])
        assert math.isclose(gamma_factor(v, p), 1.25, rel_tol=1e-15)

    def test_boundary_guard(self):
        with pytest.raises(BoundaryViolation):
            as_point(np.array([1.0, 0.0]))
        with pytest.raises(BoundaryViolation):
            gamma_factor(np.array([1.0 - 1e-16, 0.0]))


class TestScalarMul:
    def test_one_is_identity(self):
        v = np.array([0.4, -0.3])
        np.testing.assert_allclose(scalar_mul(1.0, v), v, rtol=1e-15)

    def test_two_matches_double(self):
        v = np.array([0.4, -0.3])
        np.testing.assert_allclose(
            scalar_mul(2.0, v), einstein_add(v, v), rtol=1e-14
        )

    def test_zero_vector(self):
        np.testing.assert_array_equal(scalar_mul(3.7, np.zeros(2)), np.zeros(2))

    def test_half_undoes_double(self):
        np.testing.assert_allclose(
            scalar_mul(0.5, np.array([0.8, 0.0])), (0.5, 0.0), rtol=0, atol=1e-15
        )

    def test_norm_closed_form(self):
        v = np.array([0.0, 0.5])
        r = 2.75
        want = math.tanh(r * math.atanh(0.5))
        assert math.isclose(np.linalg.norm(scalar_mul(r, v)), want, rel_tol=1e-14)

    @given(st.floats(-4.0, 4.0), st.floats(-4.0, 4.0), vec2(0.9))
    @settings(max_examples=200, deadline=None)
    def test_scalar_distributive(self, r1, r2, v):
        lhs = scalar_mul(r1 + r2, v)
        rhs = einstein_add(scalar_mul(r1, v), scalar_mul(r2, v))
        assert np.linalg.norm(lhs - rhs) <= 1e-10 * (1.0 + np.linalg.norm(lhs))

    @given(st.floats(-3.0, 3.0), st.floats(-3.0, 3.0), vec2(0.9))
    @settings(max_examples=200, deadline=None)
    def test_scalar_associative(self, r1, r2, v):
        lhs = scalar_mul(r1 * r2, v)
        rhs = scalar_mul(r1, scalar_mul(r2, v))
        assert np.linalg.norm(lhs - rhs) <= 1e-10 * (1.0 + np.linalg.norm(lhs))


class TestDistanceMidpointAngle:
    def test_distance_symmetric(self):
        A, B = np.array([0.1, 0.2]), np.array([-0.5, 0.3])
        d1, g1 = gyrodistance(A, B)
        d2, g2 = gyrodistance(B, A)
        assert math.isclose(d1, d2, rel_tol=1e-14)
        assert math.isclose(g1, g2, rel_tol=1e-14)

    def test_distance_zero(self):
        A = np.array([0.2, -0.7])
        d, g = gyrodistance(A, A)
        assert d == 0.0 and g == 1.0

    @given(vec2(0.95), vec2(0.95), vec2(0.95))
    @settings(max_examples=200, deadline=None)
    def test_gyrotriangle_inequality(self, a, b, c):
        dab = gyrodistance(a, b)[0]
        dbc = gyrodistance(b, c)[0]
        dac = gyrodistance(a, c)[0]
        bound = (dab + dbc) / (1.0 + dab * dbc)
        assert dac <= bound + 1e-12

    def test_midpoint_fixture(self):
        m = gyromidpoint(T0_VERTICES[0], T0_VERTICES[1])
        np.testing.assert_allclose(m, (0.25, 0.25), rtol=0, atol=1e-15)

    @given(vec2(0.95), vec2(0.95))
    @settings(max_examples=150, deadline=None)
    def test_midpoint_symmetric_and_equidistant(self, a, b):
        m1 = gyromidpoint(a, b)
        m2 = gyromidpoint(b, a)
        assert np.linalg.norm(m1 - m2) <= 1e-12
        da = gyrodistance(m1, a)[0]
        db = gyrodistance(m1, b)[0]
        assert abs(da - db) <= 1e-10 * (1.0 + da)

    def test_angle_right(self):
        v = np.zeros(2)
        ang = gyroangle(v, np.array([0.5, 0.0]), np.array([0.0, 0.3]))
        assert math.isclose(ang, math.pi / 2.0, rel_tol=1e-14)

    def test_angle_degenerate_ray(self):
        v = np.array([0.1, 0.1])
        with pytest.raises(DegenerateRay):
            gyroangle(v, v, np.array([0.3, 0.0]))

    def test_angle_invariant_under_scalar_mul_of_legs(self):
        # rays through r (x) b keep the vertex angle fixed
        v = np.array([0.15, -0.2])
        b = np.array([0.5, 0.1])
        c = np.array([-0.3, 0.4])
        base = gyroangle(v, b, c)
        b2 = einstein_add(v, scalar_mul(0.37, einstein_add(-v, b)))
        c2 = einstein_add(v, scalar_mul(2.1, einstein_add(-v, c)))
        assert math.isclose(gyroangle(v, b2, c2), base, rel_tol=1e-12)


class TestBatch:
    def test_gamma_matches_scalar(self):
        rng = np.random.default_rng(3)
        V = ball_points(rng, 64)
        got = gamma_factor_batch(V)
        want = np.array([gamma_factor(v) for v in V])
        np.testing.assert_allclose(got, want, rtol=1e-15)

    def test_add_matches_scalar(self):
        rng = np.random.default_rng(4)
        U = ball_points(rng, 64)
        V = ball_points(rng, 64)
        got = einstein_add_batch(U, V)
        want = np.array([einstein_add(u, v) for u, v in zip(U, V)])
        np.testing.assert_allclose(got, want, rtol=0, atol=1e-15)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            einstein_add_batch(np.zeros((4, 2)), np.zeros((3, 2)))

    def test_batch_boundary_guard(self):
        V = np.array([[0.1, 0.2], [1.0, 0.0]])
        with pytest.raises(BoundaryViolation):
            gamma_factor_batch(V)


class TestBackendFlag:
    def _backend_in_subprocess(self, flag):
        env = dict(os.environ, GYROBALL_BACKEND=flag)
        code = (
            "import numpy as np\n"
            "from gyroball import active_backend, einstein_add_batch\n"
            "U = np.array([[0.3, 0.1]]); V = np.array([[-0.2, 0.4]])\n"
            "print(active_backend())\n"
            "print(repr(einstein_add_batch(U, V)[0].tolist()))\n"
        )
        out = subprocess.run(
            [sys.executable, "-c", code], env=env,
            capture_output=True, text=True, check=True,
        )
        lines = out.stdout.strip().splitlines()
        return lines[0], eval(lines[1])

    def test_numpy_backend_selected(self):
        backend, w = self._backend_in_subprocess("numpy")
        assert backend == "numpy"
        np.testing.assert_allclose(w, ADD_GENERIC["sum"], rtol=1e-15)

    def test_numba_backend_selected(self):
        pytest.importorskip("numba")
        backend, w = self._backend_in_subprocess("numba")
        assert backend == "numba"
        np.testing.assert_allclose(w, ADD_GENERIC["sum"], rtol=1e-15)

    def test_backends_agree(self):
        pytest.importorskip("numba")
        _, w_np = self._backend_in_subprocess("numpy")
        _, w_nb = self._backend_in_subprocess("numba")
        np.testing.assert_allclose(w_np, w_nb, rtol=0, atol=1e-15)
