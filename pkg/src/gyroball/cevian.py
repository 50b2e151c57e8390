"""Circumgyrocevians: the gyrocevian from A3 extended to the circumgyrocircle.

The foot P divides gyrosegment A1 A2 by a parameter t1 in [0,1]; the
gyroline A3 P meets the circumgyrocircle again at the circumgyrocevian
point Q.  Cevians from the other two vertices are obtained by
relabeling, not by formula copies.
"""

import math
from typing import NamedTuple

import numpy as np

from .barycentric import GyroBaryRep, evaluate, gamma_between_reps
from .errors import ParamOutOfRange
from .triangle import GyroTriangle, _require_circum


def _check_t1(t1, interior=False):
    t1 = float(t1)
    if math.isnan(t1) or not 0.0 <= t1 <= 1.0:
        raise ParamOutOfRange("t1 must lie in [0, 1]")
    if interior and not 0.0 < t1 < 1.0:
        raise ParamOutOfRange("t1 must lie strictly inside (0, 1)")
    return t1


def relabel(T, apex):
    """Copy of T with the chosen vertex (1, 2, or 3) relabeled as A3."""
    if apex == 3:
        order = (T.A1, T.A2, T.A3)
    elif apex == 1:
        order = (T.A2, T.A3, T.A1)
    elif apex == 2:
        order = (T.A1, T.A3, T.A2)
    else:
        raise ParamOutOfRange("apex must be 1, 2, or 3")
    return GyroTriangle(*order, p=T.params)


def foot_weights(t1):
    """Gyrobarycentric weights of the foot on gyrosegment A1 A2."""
    t1 = _check_t1(t1)
    return np.array([1.0 - t1, t1, 0.0])


def cevian_foot(T, t1):
    """The point dividing gyrosegment A1 A2: A1 at t1=0, A2 at t1=1."""
    t1 = _check_t1(t1)
    if t1 == 0.0:
        return T.A1.copy()
    if t1 == 1.0:
        return T.A2.copy()
    return evaluate(GyroBaryRep(T.vertices, foot_weights(t1), T.params))


def circumcevian(T, t1):
    """Weights of the second circle intersection Q of the gyroline A3 P.

    With c = g13 - 1 + (g23 - g13) t1 the triple is
    (c (1-t1), c t1, -(g12-1)(1-t1) t1); its circle indicator vanishes
    identically in t1.
    """
    t1 = _check_t1(t1)
    _require_circum(T)
    c = T.e13 + (T.e23 - T.e13) * t1
    return np.array([c * (1.0 - t1), c * t1, -T.e12 * (1.0 - t1) * t1])


class CevianDistances(NamedTuple):
    gamma1: float
    dist1: float
    gamma2: float
    dist2: float
    gamma3: float
    dist3: float


def cevian_distances(T, t1):
    """Gamma factors and gyrodistances from each vertex to the foot.

    Closed forms over the common constant
    m_P = sqrt(1 + 2 (g12-1)(1-t1) t1).
    """
    t1 = _check_t1(t1)
    s = T.params.s
    mP = math.sqrt(1.0 + 2.0 * T.e12 * (1.0 - t1) * t1)
    g1 = ((1.0 - t1) + t1 * T.g12) / mP
    g2 = ((1.0 - t1) * T.g12 + t1) / mP
    g3 = ((1.0 - t1) * T.g13 + t1 * T.g23) / mP

    def dist(g):
        return s * math.sqrt(max(g * g - 1.0, 0.0)) / g

    return CevianDistances(g1, dist(g1), g2, dist(g2), g3, dist(g3))


def foot_to_circumcevian_distance(T, t1):
    """(gamma_PQ |PQ|, |PQ|) between the foot P and its circle point Q."""
    t1 = _check_t1(t1, interior=True)
    _require_circum(T)
    repP = GyroBaryRep(T.vertices, foot_weights(t1), T.params)
    repQ = GyroBaryRep(T.vertices, circumcevian(T, t1), T.params)
    g = gamma_between_reps(repP, repQ)
    s = T.params.s
    product = s * math.sqrt(max(g * g - 1.0, 0.0))
    return (product, product / g)


def circumcevian_length(T, t1):
    """(gamma, gyrodistance) of the full circumgyrocevian A3 Q.

    Uses the closed form over the representation constant of Q, which
    is the perfect square of
    m_Q = (g13-1)(1-t1) + (g23-1) t1 - (g12-1)(1-t1) t1.
    """
    t1 = _check_t1(t1)
    _require_circum(T)
    mQ = T.e13 * (1.0 - t1) + T.e23 * t1 - T.e12 * (1.0 - t1) * t1
    num = (
        T.g13 * T.e13 * (1.0 - t1)
        + T.g23 * T.e23 * t1
        - (T.e12 + (T.e13 - T.e23) ** 2) * (1.0 - t1) * t1
    )
    g = num / mQ
    d = T.params.s * math.sqrt(max(g * g - 1.0, 0.0)) / g
    return (g, d)


def chord_power(T, t1):
    """Common gyropower of the two gyrochords A1 A2 and A3 Q through the foot.

    Closed form s^2 (g12-1)(1-t1) t1 / (1 + 2 (g12-1)(1-t1) t1), shared
    by gyropower(P, A1, A2) and gyropower(P, A3, Q).
    """
    t1 = _check_t1(t1, interior=True)
    _require_circum(T)
    s = T.params.s
    q = T.e12 * (1.0 - t1) * t1
    return s * s * q / (1.0 + 2.0 * q)
