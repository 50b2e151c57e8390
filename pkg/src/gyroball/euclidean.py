"""Euclidean counterparts of the gyrocircle theorems, plus limit probes.

Implemented directly from plane geometry with no shared code path with
the hyperbolic modules, so that large-s convergence tests are genuine
differential tests.  Weight triples are ordinary projective barycentric
coordinates: P = sum m_k A_k / sum m_k.
"""

import math
from typing import NamedTuple

import numpy as np

from .circle import Classification, CircleParamPoint
from .einstein import ModelParams, gyrodistance
from .errors import (
    CollinearPoints,
    DegenerateConfiguration,
    DimensionMismatch,
    ParamOutOfRange,
    ZeroDenominator,
)

COLLINEAR_REL_TOL = 1e-12

DEFAULT_ON_TOL = 1e-10


def _as_coords(A):
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 1 or A.shape[0] < 2:
        raise DimensionMismatch("expected an n-vector with n >= 2")
    if not np.all(np.isfinite(A)):
        raise ParamOutOfRange("coordinates must be finite")
    return A


def _triple(A1, A2, A3):
    A1, A2, A3 = _as_coords(A1), _as_coords(A2), _as_coords(A3)
    if not (A1.shape == A2.shape == A3.shape):
        raise DimensionMismatch("points must share a dimension")
    u = A2 - A1
    v = A3 - A1
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise CollinearPoints("coincident points")
    # sine of the angle at A1 via the residual of v against u; the Gram
    # determinant form loses the zero to rounding for exact multiples
    w = v - u * (np.dot(u, v) / np.dot(u, u))
    if np.linalg.norm(w) / nv < COLLINEAR_REL_TOL:
        raise CollinearPoints("collinear points (relative area below tolerance)")
    return A1, A2, A3


def _weights3(w):
    w = np.asarray(w, dtype=np.float64)
    if w.shape != (3,):
        raise DimensionMismatch("expected a weight triple")
    if not np.any(w != 0.0):
        raise ZeroDenominator("weights must not be all zero")
    return w


def side_lengths(A1, A2, A3):
    """(a12, a13, a23) edge lengths."""
    A1, A2, A3 = _triple(A1, A2, A3)
    return (
        float(np.linalg.norm(A2 - A1)),
        float(np.linalg.norm(A3 - A1)),
        float(np.linalg.norm(A3 - A2)),
    )


def triangle_angles_euc(A1, A2, A3):
    """Vertex angles (alpha1, alpha2, alpha3) from the law of cosines."""
    a12, a13, a23 = side_lengths(A1, A2, A3)

    def ang(adj1, adj2, opp):
        c = (adj1 * adj1 + adj2 * adj2 - opp * opp) / (2.0 * adj1 * adj2)
        return math.acos(min(1.0, max(-1.0, c)))

    return (
        ang(a12, a13, a23),
        ang(a12, a23, a13),
        ang(a13, a23, a12),
    )


def evaluate_euc(w, A1, A2, A3):
    """The point with barycentric weights w: sum m_k A_k / sum m_k."""
    w = _weights3(w)
    A1, A2, A3 = _as_coords(A1), _as_coords(A2), _as_coords(A3)
    M = float(np.sum(w))
    if M == 0.0:
        raise ZeroDenominator("weights sum to zero")
    return (w[0] * A1 + w[1] * A2 + w[2] * A3) / M


def weights_from_point_euc(A1, A2, A3, P):
    """Barycentric weights of P, summing to one."""
    A1, A2, A3 = _triple(A1, A2, A3)
    P = _as_coords(P)
    # solve the affine system on the triangle's 2-flat
    M = np.stack([A2 - A1, A3 - A1], axis=1)
    rhs = P - A1
    uv, *_ = np.linalg.lstsq(M, rhs, rcond=None)
    u, v = float(uv[0]), float(uv[1])
    return np.array([1.0 - u - v, u, v])


def limit_gap(A, B, s):
    """s^2 (gamma - 1) for the pair A, B in the s-ball.

    Converges to |-A+B|^2 / 2 as s grows, with error of order 1/s^2.
    Evaluated through gamma^2 |v|^2 / (gamma + 1) to avoid cancellation
    at large s.
    """
    p = ModelParams(s=float(s))
    d, g = gyrodistance(A, B, p)
    return g * g * d * d / (g + 1.0)


def circumcenter_euc(A1, A2, A3):
    """Circumcenter as the sin-2-alpha weighted vertex average."""
    A1, A2, A3 = _triple(A1, A2, A3)
    al1, al2, al3 = triangle_angles_euc(A1, A2, A3)
    w = np.array([math.sin(2.0 * al1), math.sin(2.0 * al2), math.sin(2.0 * al3)])
    return evaluate_euc(w, A1, A2, A3)


def circumradius_euc(A1, A2, A3):
    """Circumradius from the side lengths alone."""
    a12, a13, a23 = side_lengths(A1, A2, A3)
    p2, q2, r2 = a12 * a12, a13 * a13, a23 * a23
    denom = 2.0 * (p2 * q2 + p2 * r2 + q2 * r2) - (p2 * p2 + q2 * q2 + r2 * r2)
    if denom <= 0.0:
        raise CollinearPoints("degenerate triangle")
    return math.sqrt(p2 * q2 * r2 / denom)


def k_indicator_euc(w, A1, A2, A3):
    """Quadratic circle indicator m1 m2 a12^2 + m1 m3 a13^2 + m2 m3 a23^2."""
    w = _weights3(w)
    a12, a13, a23 = side_lengths(A1, A2, A3)
    m1, m2, m3 = w
    return m1 * m2 * a12 * a12 + m1 * m3 * a13 * a13 + m2 * m3 * a23 * a23


def t_indicator_euc(w, A1, A2, A3):
    """Trigonometric circle indicator; same sign as k_indicator_euc."""
    w = _weights3(w)
    al1, al2, al3 = triangle_angles_euc(A1, A2, A3)
    m1, m2, m3 = w
    return (
        m1 * m2 * math.sin(al3) ** 2
        + m1 * m3 * math.sin(al2) ** 2
        + m2 * m3 * math.sin(al1) ** 2
    )


def _on_band_euc(w, a12, a13, a23, tol):
    m1, m2, m3 = w
    scale = (
        abs(m1 * m2) * a12 * a12 + abs(m1 * m3) * a13 * a13 + abs(m2 * m3) * a23 * a23
    )
    return tol * scale


def classify_euc(w, A1, A2, A3, tol=DEFAULT_ON_TOL):
    """Interior, On, or Exterior relative to the circumcircle."""
    w = _weights3(w)
    if float(np.sum(w)) == 0.0:
        raise ZeroDenominator("weights sum to zero")
    a12, a13, a23 = side_lengths(A1, A2, A3)
    m1, m2, m3 = w
    K = m1 * m2 * a12 * a12 + m1 * m3 * a13 * a13 + m2 * m3 * a23 * a23
    if abs(K) <= _on_band_euc(w, a12, a13, a23, tol):
        return Classification.ON
    return Classification.INTERIOR if K > 0.0 else Classification.EXTERIOR


def dist_to_circumcenter_euc(w, A1, A2, A3):
    """Distance from the represented point to the circumcenter.

    d = R sqrt(1 - K_euc / (M^2 R^2)).
    """
    w = _weights3(w)
    M = float(np.sum(w))
    if M == 0.0:
        raise ZeroDenominator("weights sum to zero")
    K = k_indicator_euc(w, A1, A2, A3)
    R = circumradius_euc(A1, A2, A3)
    return R * math.sqrt(max(1.0 - K / (M * M * R * R), 0.0))


def circum_param_euc(A1, A2, A3, q):
    """Barycentric weights of the circumcircle point at parameter q."""
    al1, al2, al3 = triangle_angles_euc(A1, A2, A3)
    s1, s2, s3 = math.sin(al1) ** 2, math.sin(al2) ** 2, math.sin(al3) ** 2
    if q.mode == "t-line":
        t = q.value
        if math.isinf(t):
            return np.array([0.0, 1.0, 0.0])
        return np.array([-t * s1, t * s2 + t * t * s3, s2 + t * s3])
    th = q.value
    sn, cs = math.sin(th), math.cos(th)
    return np.array(
        [-s1 * sn, s2 * sn + s3 * (1.0 - cs), s3 * sn + s2 * (1.0 + cs)]
    )


def tangency_points_euc(w, A1, A2, A3, tol=DEFAULT_ON_TOL):
    """Tangency points on the circumcircle from P, and the tangent length.

    Returns (points, length): points is a weight pair (W+, W-) for an
    exterior P, P's own weights for an on-circle P, or None for an
    interior P; length is sqrt(-K_euc)/M, or 0.0 on the circle, or None
    when no tangent exists.
    """
    w = _weights3(w)
    A1, A2, A3 = _triple(A1, A2, A3)
    a12, a13, a23 = side_lengths(A1, A2, A3)
    al1, al2, al3 = triangle_angles_euc(A1, A2, A3)
    s1, s2, s3 = math.sin(al1) ** 2, math.sin(al2) ** 2, math.sin(al3) ** 2
    m1, m2, m3 = w
    delta = m1 * m2 * s3 + m1 * m3 * s2 + m2 * m3 * s1
    K = m1 * m2 * a12 * a12 + m1 * m3 * a13 * a13 + m2 * m3 * a23 * a23
    M = float(np.sum(w))
    if abs(K) <= _on_band_euc(w, a12, a13, a23, tol):
        return (w.copy(), 0.0)
    if K > 0.0:
        return (None, None)
    if M == 0.0:
        raise ZeroDenominator("weights sum to zero")
    rad = math.sqrt(-delta) * math.sin(al1) * math.sin(al2) * math.sin(al3)
    f0 = m1 * s3 + m3 * s1

    def branch(sign):
        f1 = m1 * s2 * s3 + sign * rad
        f2 = -m3 * s1 * s2 + sign * rad
        return np.array([f0 * f1 * s1, f1 * f2, -f0 * f2 * s3])

    length = math.sqrt(-K) / abs(M)
    return ((branch(+1.0), branch(-1.0)), length)


def circumcevian_euc(A1, A2, A3, t1):
    """Weights of the circumcevian point for the foot parameter t1.

    With c = sin^2(alpha2) + t1 sin(alpha1 - alpha2) sin(alpha3) the
    triple is (c (1-t1), c t1, -(1-t1) t1 sin^2(alpha3)).
    """
    t1 = float(t1)
    if math.isnan(t1) or not 0.0 <= t1 <= 1.0:
        raise ParamOutOfRange("t1 must lie in [0, 1]")
    al1, al2, al3 = triangle_angles_euc(A1, A2, A3)
    c = math.sin(al2) ** 2 + t1 * math.sin(al1 - al2) * math.sin(al3)
    return np.array(
        [c * (1.0 - t1), c * t1, -(1.0 - t1) * t1 * math.sin(al3) ** 2]
    )


def _line_circle_products(P, direction, O, R):
    # |u1 u2| for intersections P + u * unit(direction) with the circle
    d = direction / np.linalg.norm(direction)
    b = float(np.dot(d, P - O))
    c = float(np.dot(P - O, P - O)) - R * R
    disc = b * b - c
    if disc <= 0.0:
        raise DegenerateConfiguration("line misses the circle")
    root = math.sqrt(disc)
    u1, u2 = -b - root, -b + root
    return abs(u1) * abs(u2)


class PowerResiduals(NamedTuple):
    line_vs_line: float
    tangent_vs_line: float  # NaN when P is interior (no tangent)


def power_theorems_euc(A1, A2, A3, P):
    """Residuals of the classical power-of-a-point equalities at P.

    Two deterministic lines through P (one aimed at the circumcenter O,
    one at the midpoint of O and A1) each cut the circumcircle; the
    products of the unsigned segment lengths must agree, and for an
    exterior P the squared tangent length must equal them too.
    """
    A1, A2, A3 = _triple(A1, A2, A3)
    P = _as_coords(P)
    O = circumcenter_euc(A1, A2, A3)
    R = circumradius_euc(A1, A2, A3)
    def parallel(a, b):
        na, nb = np.linalg.norm(a), np.linalg.norm(b)
        if na == 0.0 or nb == 0.0:
            return True
        gram = na * na * nb * nb - float(np.dot(a, b)) ** 2
        return math.sqrt(max(gram, 0.0)) <= 1e-12 * na * nb

    dir1 = O - P
    if np.linalg.norm(dir1) == 0.0:
        dir1 = A1 - P
    dir2 = 0.5 * (O + A1) - P
    if parallel(dir1, dir2):
        dir2 = 0.5 * (O + A2) - P
    prod1 = _line_circle_products(P, dir1, O, R)
    prod2 = _line_circle_products(P, dir2, O, R)
    power = float(np.dot(P - O, P - O)) - R * R
    if power > 0.0:
        tangent_sq = power
        tangent_res = abs(tangent_sq - prod1)
    else:
        tangent_res = math.nan
    return PowerResiduals(abs(prod1 - prod2), tangent_res)
