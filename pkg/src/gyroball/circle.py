"""Gyrocircle machinery over a reference gyrotriangle.

A point with gyrobarycentric weights (m1, m2, m3) relative to the
triangle lies on, inside, or outside the circumgyrocircle according to
the sign of the quadratic indicator
K = m1 m2 (g12-1) + m1 m3 (g13-1) + m2 m3 (g23-1).
All weight triples are projective: scaling by a nonzero factor does not
move the point.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .barycentric import GyroBaryRep, evaluate
from .einstein import as_point, einstein_add, gyroangle, gyrodistance
from .errors import (
    CoincidentPoints,
    DimensionMismatch,
    InteriorPoint,
    NoCircumcircle,
    OutsideBall,
    ParamOutOfRange,
    SideUndetermined,
    ZeroDenominator,
)
from .triangle import circum_margin, circumcenter, circumradius, d3_h3

TWO_PI = 2.0 * math.pi

# relative threshold for the Klein side-of-chord test
SIDE_REL_TOL = 1e-12


class Classification(Enum):
    INTERIOR = "interior"
    ON = "on"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class CircleParamPoint:
    """A point of the circumgyrocircle named by a parameter.

    mode "t-line" sweeps t over the reals with both infinities
    identified (the missing vertex A2); mode "theta" sweeps [0, 2pi]
    with the endpoints identified.
    """

    mode: str
    value: float

    def __post_init__(self):
        if self.mode not in ("t-line", "theta"):
            raise ParamOutOfRange("mode must be 't-line' or 'theta'")
        if self.mode == "theta" and not 0.0 <= self.value <= TWO_PI:
            raise ParamOutOfRange("theta must lie in [0, 2pi]")
        if self.mode == "t-line" and math.isnan(self.value):
            raise ParamOutOfRange("t must not be NaN")


def _weights3(w):
    w = np.asarray(w, dtype=np.float64)
    if w.shape != (3,):
        raise DimensionMismatch("expected a weight triple")
    if not np.any(w != 0.0):
        raise ZeroDenominator("weights must not be all zero")
    return w


def circle_point(C, theta, p, basis=None):
    """Point of gyrocircle C at polar angle theta about its gyrocenter.

    The left gyrotranslation of a Euclidean radius vector: exact by the
    left cancellation law, so the result is at gyrodistance C.radius
    from C.center for every theta.  In dimension above two a pair of
    orthonormal basis vectors spanning the wanted 2-flat is required.
    """
    O = as_point(C.center, p)
    n = O.shape[0]
    c, s_ = math.cos(theta), math.sin(theta)
    if basis is None:
        if n != 2:
            raise DimensionMismatch("circle_point needs n=2 or an explicit 2-flat basis")
        v = np.array([C.radius * c, C.radius * s_])
    else:
        e1 = np.asarray(basis[0], dtype=np.float64)
        e2 = np.asarray(basis[1], dtype=np.float64)
        if e1.shape != O.shape or e2.shape != O.shape:
            raise DimensionMismatch("basis vectors must match the center's dimension")
        v = C.radius * (c * e1 + s_ * e2)
    return einstein_add(O, v, p)


def k_indicator(w, T):
    """Quadratic circle indicator of the weights: 0 on, >0 inside, <0 outside."""
    m1, m2, m3 = _weights3(w)
    a, b, c = T.excesses
    return m1 * m2 * a + m1 * m3 * b + m2 * m3 * c


def t_indicator(w, T):
    """Gyrotrigonometric circle indicator; same sign as k_indicator."""
    m1, m2, m3 = _weights3(w)
    hd = 0.5 * T.defect
    return (
        m1 * m2 * math.sin(T.alpha3) * math.sin(T.alpha3 + hd)
        + m1 * m3 * math.sin(T.alpha2) * math.sin(T.alpha2 + hd)
        + m2 * m3 * math.sin(T.alpha1) * math.sin(T.alpha1 + hd)
    )


def _on_band(w, T):
    # scale-aware zero band for the homogeneous quadratic K
    m1, m2, m3 = w
    scale = (
        abs(m1 * m2) * T.e12
        + abs(m1 * m3) * T.e13
        + abs(m2 * m3) * T.e23
    )
    return T.params.tol_rel * scale


def _require_circum(T):
    d3, h3 = d3_h3(T)
    margin = circum_margin(T)
    if not margin > 0.0:
        raise NoCircumcircle(
            "no circumgyrocircle: D3 <= H3",
            detail="D3 = %.17g <= H3 = %.17g" % (d3, h3),
        )
    return d3, h3, margin


def classify(w, T):
    """Interior, On, or Exterior relative to the circumgyrocircle."""
    _require_circum(T)
    w = _weights3(w)
    K = k_indicator(w, T)
    M = float(np.sum(w))
    if M * M + 2.0 * K <= 0.0:
        raise OutsideBall("weights do not represent a ball point")
    if abs(K) <= _on_band(w, T):
        return Classification.ON
    return Classification.INTERIOR if K > 0.0 else Classification.EXTERIOR


def dist_to_circumcenter(w, T):
    """Gyrodistance from the represented point to the circumgyrocenter.

    Uses the cancellation-free square
    d^2 = s^2 (M^2 H3 - 2K(D3 - H3)) / (M^2 D3).
    """
    d3, h3, margin = _require_circum(T)
    w = _weights3(w)
    K = k_indicator(w, T)
    M = float(np.sum(w))
    if M * M + 2.0 * K <= 0.0:
        raise OutsideBall("weights do not represent a ball point")
    if M == 0.0:
        raise ZeroDenominator("weights sum to zero")
    s = T.params.s
    num = M * M * h3 - 2.0 * K * margin
    return s * math.sqrt(max(num, 0.0) / (M * M * d3))


def circum_param(T, q):
    """Weights of the circumgyrocircle point at parameter q.

    The t-line sweep starts at A3 (t=0) and closes up at A2 (t at
    either infinity, returned projectively as that vertex); the theta
    sweep starts at A3 (theta=0) and passes A2 at theta=pi.
    """
    _require_circum(T)
    a, b, c = T.excesses
    if q.mode == "t-line":
        t = q.value
        if math.isinf(t):
            return np.array([0.0, 1.0, 0.0])
        m3 = a * t + b
        return np.array([-c * t, m3 * t, m3])
    th = q.value
    sn, cs = math.sin(th), math.cos(th)
    return np.array(
        [
            -c * sn,
            b * sn + a * (1.0 - cs),
            a * sn + b * (1.0 + cs),
        ]
    )


def second_intersection(T, wP, t):
    """Other on-circle point of the gyroline from P to the circle point at t.

    With (m1, m2, m3) the weights of P and the circle swept in t-line
    mode, the second intersection has weights
    (E1 E2, E0 E1 (g13-1), -E0 E2 (g12-1)) where
    E0 = m2 - m3 t,
    E1 = m1 (g13-1) + m2 (g23-1) + m1 (g12-1) t,
    E2 = m1 (g13-1) + m1 (g12-1) t + m3 (g23-1) t,
    and E1 - E2 = E0 (g23-1).
    """
    wP = _weights3(wP)
    wprime = circum_param(T, CircleParamPoint("t-line", t))
    cross = np.cross(wP, wprime)
    if np.linalg.norm(cross) <= 1e-12 * np.linalg.norm(wP) * np.linalg.norm(wprime):
        raise CoincidentPoints("P coincides with the circle point at t")
    a, b, c = T.excesses
    m1, m2, m3 = wP
    if math.isinf(t):
        # limiting line through P and A2; divide the E's by t
        e0 = -m3
        e1 = m1 * a
        e2 = m1 * a + m3 * c
    else:
        e0 = m2 - m3 * t
        e1 = m1 * b + m2 * c + m1 * a * t
        e2 = m1 * b + m1 * a * t + m3 * c * t
    return np.array([e1 * e2, e0 * e1 * b, -e0 * e2 * a])


def tangency_points(T, wP):
    """Tangency points of the gyrotangents from P to the circumgyrocircle.

    Case split on K(P): negative (exterior P) gives a weight pair
    (W+, W-), the + entry taking the + branch of the shared radical;
    zero gives P itself back; positive (interior P) gives None.
    """
    _require_circum(T)
    wP = _weights3(wP)
    if T.A1.shape[0] != 2:
        raise DimensionMismatch("tangency construction is planar (n=2)")
    K = k_indicator(wP, T)
    if abs(K) <= _on_band(wP, T):
        return wP.copy()
    if K > 0.0:
        return None
    a, b, c = T.excesses
    m1, _, m3 = wP
    delta2 = a * b * c
    rad = math.sqrt(-K * delta2)
    f0 = m1 * a + m3 * c

    def branch(sign):
        f1 = m1 * a * b + sign * rad
        f2 = -m3 * b * c + sign * rad
        return np.array([f0 * f1 * c, f1 * f2, -f0 * f2 * a])

    return (branch(+1.0), branch(-1.0))


def tangency_constants(T, wP):
    """Representation constants of the two tangency points, closed form.

    Returns (c_plus, c_minus) matching the weight scaling produced by
    tangency_points; each equals the quadratic-form constant of its
    weight triple up to overall sign.
    """
    _require_circum(T)
    wP = _weights3(wP)
    K = k_indicator(wP, T)
    if K >= 0.0:
        raise InteriorPoint("tangency constants need an exterior point (K < 0)")
    a, b, c = T.excesses
    m1, _, m3 = wP
    delta2 = a * b * c
    rad = math.sqrt(-K * delta2)
    e1 = (wP[0] - wP[1] + wP[2]) * (m1 * a + m3 * c) - 2.0 * m1 * m3 * b
    e2 = (
        -m1 * a * a
        + m3 * c * c
        + m1 * a * b
        - m3 * b * c
        + (m1 - m3) * a * c
    )
    return (delta2 * e1 + rad * e2, delta2 * e1 - rad * e2)


def tangent_length(T, wP):
    """(gamma, length) of either gyrotangent segment from P to the circle.

    gamma = (m1+m2+m3)/m_P with m_P the representation constant of P's
    own weights; the two tangent segments share this gyrolength.
    """
    _require_circum(T)
    wP = _weights3(wP)
    K = k_indicator(wP, T)
    if K > _on_band(wP, T):
        raise InteriorPoint("no gyrotangent from an interior point")
    M = float(np.sum(wP))
    rad2 = M * M + 2.0 * K
    if rad2 <= 0.0:
        raise OutsideBall("weights do not represent a ball point")
    if K >= 0.0:
        return (1.0, 0.0)
    mP = math.sqrt(rad2)
    gamma = abs(M) / mP
    L = T.params.s * math.sqrt(-2.0 * K) / abs(M)
    return (gamma, L)


def gyropower(P, X, Y, p):
    """Two-sided chord/secant invariant of P against the pair X, Y.

    gamma_PX |PX| gamma_PY |PY| / (gamma_XY + 1): equal over any two
    gyrochords through an interior P and over any two gyrosecants from
    an exterior P.
    """
    P = as_point(P, p)
    X = as_point(X, p)
    Y = as_point(Y, p)
    if np.array_equal(X, Y):
        raise CoincidentPoints("chord endpoints coincide")
    dX, gX = gyrodistance(P, X, p)
    dY, gY = gyrodistance(P, Y, p)
    _, gXY = gyrodistance(X, Y, p)
    return gX * dX * gY * dY / (gXY + 1.0)


def inscribed_angle_I(T):
    """Inscribed gyroangle against half the gyrocentral gyroangle.

    Returns (theta, phi, sin theta, 2 gamma_R sin phi / sqrt((g13+1)(g23+1)))
    where theta is the gyroangle at A3 subtending A1 A2 and 2 phi the
    gyrocentral gyroangle at the circumgyrocenter over the same chord.
    """
    O = circumcenter(T)
    _, gR = circumradius(T)
    phi = 0.5 * gyroangle(O, T.A1, T.A2, T.params)
    theta = T.alpha3
    rhs = 2.0 * gR * math.sin(phi) / math.sqrt((T.g13 + 1.0) * (T.g23 + 1.0))
    return (theta, phi, math.sin(theta), rhs)


def _side_of_chord(A1, A2, X):
    # signed in-plane offset of X from the Klein chord A1 A2
    u = A2 - A1
    u = u / np.linalg.norm(u)
    v = X - A1
    w = v - np.dot(v, u) * u
    return w


def inscribed_angle_II(T):
    """Defect-shifted inscribed-gyroangle identity and its side case.

    Returns (theta + d123/2, phi + d12O/2, case): the two angles have
    equal sines; they are equal in case "a" (A3 and the
    circumgyrocenter on the same side of the chord A1 A2) and
    supplementary in case "b".
    """
    O = circumcenter(T)
    p = T.params
    nA3 = _side_of_chord(T.A1, T.A2, T.A3)
    nO = _side_of_chord(T.A1, T.A2, O)
    if np.linalg.norm(nO) <= SIDE_REL_TOL * max(np.linalg.norm(O - T.A1), np.linalg.norm(O - T.A2)):
        raise SideUndetermined("circumgyrocenter lies on the chord A1 A2")
    denom = np.linalg.norm(nA3) * np.linalg.norm(nO)
    cosang = float(np.dot(nA3, nO)) / denom
    if abs(cosang) < 0.5:
        raise SideUndetermined("side of chord numerically ambiguous")
    same_side = cosang > 0.0
    apex = gyroangle(O, T.A1, T.A2, p)
    b1 = gyroangle(T.A1, T.A2, O, p)
    b2 = gyroangle(T.A2, T.A1, O, p)
    d12O = math.pi - apex - b1 - b2
    phi = 0.5 * apex
    lhs_angle = T.alpha3 + 0.5 * T.defect
    rhs_angle = phi + 0.5 * d12O
    return (lhs_angle, rhs_angle, "a" if same_side else "b")


def weights_on_circle(T, count=256):
    """Equally spaced theta-sweep weight triples, one per row."""
    if count < 1:
        raise ParamOutOfRange("count must be positive")
    thetas = np.linspace(0.0, TWO_PI, count, endpoint=False)
    return np.stack(
        [circum_param(T, CircleParamPoint("theta", float(th))) for th in thetas]
    )


def on_circle_points(T, count=256):
    """Ball coordinates of an equally spaced theta sweep of the circle."""
    pts = []
    for w in weights_on_circle(T, count):
        pts.append(evaluate(GyroBaryRep(T.vertices, w, T.params)))
    return np.stack(pts)
