"""Gyrotriangles and their circumgyrocircle.

Side/angle caches use the index notation a_ij = (-A_i) (+) A_j,
a_ij = ||a_ij||, gamma_ij = gamma factor of a_ij.  The circumgyrocircle
exists iff D3 > H3, where D3 is the 3x3 gamma determinant and
H3 = 2 (gamma12-1)(gamma13-1)(gamma23-1).
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .barycentric import evaluate_weights
from .einstein import DEFAULT_PARAMS, as_point, gyroangle, gyrodistance
from .errors import (
    AngleSumNotHyperbolic,
    DegenerateTriangle,
    DimensionMismatch,
    NoCircumcircle,
    ParamOutOfRange,
)

# Klein-coordinate relative area below which vertices count as gyrocollinear
COLLINEAR_REL_TOL = 1e-12


def _rel_area(A1, A2, A3):
    u = A2 - A1
    v = A3 - A1
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    # sine of the angle at A1 via the residual of v against u; the Gram
    # determinant form loses the zero to rounding for exact multiples
    w = v - u * (np.dot(u, v) / np.dot(u, u))
    return np.linalg.norm(w) / nv


class GyroTriangle:
    """Three gyrobarycentrically independent ball points, with caches.

    Attributes: A1, A2, A3 (vertices); g12, g13, g23 (side gamma
    factors); a12, a13, a23 (side gyrolengths); alpha1..alpha3 (vertex
    gyroangles); defect (pi minus the gyroangle sum).  All fixed at
    construction.
    """

    def __init__(self, A1, A2, A3, p=DEFAULT_PARAMS):
        A1 = as_point(A1, p)
        A2 = as_point(A2, p)
        A3 = as_point(A3, p)
        if not (A1.shape == A2.shape == A3.shape):
            raise DimensionMismatch("triangle vertices must share a dimension")
        if not (np.any(A1 != A2) and np.any(A1 != A3) and np.any(A2 != A3)):
            raise DegenerateTriangle("coincident vertices")
        if _rel_area(A1, A2, A3) < COLLINEAR_REL_TOL:
            raise DegenerateTriangle("gyrocollinear vertices (Klein relative area below tolerance)")
        self.A1, self.A2, self.A3 = A1, A2, A3
        self.params = p
        self.a12, self.g12 = gyrodistance(A1, A2, p)
        self.a13, self.g13 = gyrodistance(A1, A3, p)
        self.a23, self.g23 = gyrodistance(A2, A3, p)
        # gamma excesses g - 1 via g^2 a^2 / (s^2 (g+1)): subtraction-free,
        # so they keep full relative precision when s dwarfs the sides
        s2 = p.s * p.s
        self.e12 = self.g12 * self.g12 * self.a12 * self.a12 / (s2 * (self.g12 + 1.0))
        self.e13 = self.g13 * self.g13 * self.a13 * self.a13 / (s2 * (self.g13 + 1.0))
        self.e23 = self.g23 * self.g23 * self.a23 * self.a23 / (s2 * (self.g23 + 1.0))
        self.alpha1 = gyroangle(A1, A2, A3, p)
        self.alpha2 = gyroangle(A2, A1, A3, p)
        self.alpha3 = gyroangle(A3, A1, A2, p)
        self.defect = math.pi - self.alpha1 - self.alpha2 - self.alpha3

    @property
    def vertices(self):
        return (self.A1, self.A2, self.A3)

    @property
    def gammas(self):
        return (self.g12, self.g13, self.g23)

    @property
    def excesses(self):
        return (self.e12, self.e13, self.e23)


@dataclass(frozen=True)
class GyroCircle:
    """Gyrocenter O and gyroradius r, with 0 < r < s."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("gyroradius must be positive")


def angles_and_defect(T):
    """Vertex gyroangles and the defect, as cached on the triangle."""
    return (T.alpha1, T.alpha2, T.alpha3, T.defect)


def aaa_to_sss(alpha1, alpha2, alpha3):
    """Side gamma factors from the gyroangles (AAA to SSS conversion).

    Returns (gamma23, gamma13, gamma12) in that order: the side opposite
    each successive vertex.  Requires a hyperbolic angle sum (< pi).
    """
    for a in (alpha1, alpha2, alpha3):
        if not 0.0 < a < math.pi:
            raise ParamOutOfRange("gyroangles must lie in (0, pi)")
    if alpha1 + alpha2 + alpha3 >= math.pi:
        raise AngleSumNotHyperbolic("gyroangle sum must be below pi")
    c1, c2, c3 = math.cos(alpha1), math.cos(alpha2), math.cos(alpha3)
    s1, s2, s3 = math.sin(alpha1), math.sin(alpha2), math.sin(alpha3)
    g23 = (c1 + c2 * c3) / (s2 * s3)
    g13 = (c2 + c1 * c3) / (s1 * s3)
    g12 = (c3 + c1 * c2) / (s1 * s2)
    return (g23, g13, g12)


def d3_h3_from_gammas(g12, g13, g23):
    """(D3, H3) from raw side gamma factors (degenerate inputs allowed)."""
    d3 = 1.0 + 2.0 * g12 * g13 * g23 - g12 * g12 - g13 * g13 - g23 * g23
    h3 = 2.0 * (g12 - 1.0) * (g13 - 1.0) * (g23 - 1.0)
    return (d3, h3)


def d3_h3(T):
    """(D3, H3) of the triangle; D3 > 0 for any gyrotriangle.

    Evaluated in the gamma excesses a = g12-1, b = g13-1, c = g23-1:
    D3 = 2(ab+ac+bc) - (a^2+b^2+c^2) + 2abc and H3 = 2abc, which keeps
    the leading 1's of the determinant from swallowing the margin when
    the gammas sit just above 1 (large s).
    """
    a, b, c = T.e12, T.e13, T.e23
    h3 = 2.0 * a * b * c
    d3 = 2.0 * (a * b + a * c + b * c) - (a * a + b * b + c * c) + h3
    return (d3, h3)


def circum_margin(T):
    """D3 - H3 without the float subtraction: the cubic terms cancel
    identically, leaving 2(ab+ac+bc) - (a^2+b^2+c^2) in the excesses."""
    a, b, c = T.e12, T.e13, T.e23
    return 2.0 * (a * b + a * c + b * c) - (a * a + b * b + c * c)


@dataclass(frozen=True)
class ExistenceDiagnostics:
    """The four equivalent circumgyrocircle existence margins.

    Each margin is positive exactly when its inequality is satisfied;
    `agree` records whether all four booleans coincide.
    """

    exists: bool
    determinant: float  # D3 - H3
    sine_sum: float  # sum sin(2a_k + d/2) - 3 sin(d/2)
    sine_product: float  # prod sin(a_k + d/2) - sin(d/2)
    gamma_sum_square: float  # (g12+g13+g23-1)^2 - 2(g12^2+g13^2+g23^2-1)
    gamma_pair_square: float  # 4(g12-1)(g13-1) - (g12+g13-g23-1)^2

    @property
    def agree(self):
        votes = {
            m > 0.0
            for m in (
                self.determinant,
                self.sine_sum,
                self.sine_product,
                self.gamma_sum_square,
                self.gamma_pair_square,
            )
        }
        return len(votes) == 1


def existence_diagnostics(T):
    g12, g13, g23 = T.gammas
    margin = circum_margin(T)
    hd = 0.5 * T.defect
    sine_sum = (
        math.sin(2.0 * T.alpha1 + hd)
        + math.sin(2.0 * T.alpha2 + hd)
        + math.sin(2.0 * T.alpha3 + hd)
        - 3.0 * math.sin(hd)
    )
    sine_product = (
        math.sin(T.alpha1 + hd) * math.sin(T.alpha2 + hd) * math.sin(T.alpha3 + hd)
        - math.sin(hd)
    )
    gsq = (g12 + g13 + g23 - 1.0) ** 2 - 2.0 * (g12 * g12 + g13 * g13 + g23 * g23 - 1.0)
    gpair = 4.0 * (g12 - 1.0) * (g13 - 1.0) - (g12 + g13 - g23 - 1.0) ** 2
    return ExistenceDiagnostics(
        exists=margin > 0.0,
        determinant=margin,
        sine_sum=sine_sum,
        sine_product=sine_product,
        gamma_sum_square=gsq,
        gamma_pair_square=gpair,
    )


def circum_exists(T):
    """Whether the circumgyrocircle exists (D3 > H3)."""
    return circum_margin(T) > 0.0


def _require_circum(T):
    d3, h3 = d3_h3(T)
    margin = circum_margin(T)
    if not margin > 0.0:
        raise NoCircumcircle(
            "no circumgyrocircle: D3 <= H3",
            detail="D3 = %.17g <= H3 = %.17g" % (d3, h3),
        )
    return d3, h3, margin


def circumcenter_weights(T, form="gamma"):
    """Gyrobarycentric weights of the circumgyrocenter.

    form="gamma" uses the side gamma factors, form="trig" the gyroangles
    cos(alpha_k + delta/2) sin(alpha_k); the two agree projectively.
    """
    _require_circum(T)
    if form == "gamma":
        # (g12+g13-g23-1)(g23-1) and cyclic, written in the excesses
        a, b, c = T.excesses
        return np.array(
            [
                (a + b - c) * c,
                (a - b + c) * b,
                (-a + b + c) * a,
            ]
        )
    if form == "trig":
        hd = 0.5 * T.defect
        return np.array(
            [
                math.cos(T.alpha1 + hd) * math.sin(T.alpha1),
                math.cos(T.alpha2 + hd) * math.sin(T.alpha2),
                math.cos(T.alpha3 + hd) * math.sin(T.alpha3),
            ]
        )
    raise ValueError("form must be 'gamma' or 'trig'")


def circumcenter(T):
    """The point equigyrodistant from the three vertices."""
    return evaluate_weights(T.vertices, circumcenter_weights(T), T.params)


def circumradius(T):
    """(R, gamma_R) with R = s sqrt(H3/D3) and gamma_R^2 = D3/(D3-H3)."""
    d3, h3, margin = _require_circum(T)
    R = T.params.s * math.sqrt(h3 / d3)
    gR = math.sqrt(d3 / margin)
    return (R, gR)


def circumcircle_of(T):
    """The circumgyrocircle as a GyroCircle, or NoCircumcircle with detail."""
    R, _ = circumradius(T)
    return GyroCircle(center=circumcenter(T), radius=R)


def extended_gyrosines(T):
    """Common ratio gamma_ij a_ij / sin(opposite gyroangle) of the three sides.

    Returned in the cancellation-free closed form
    sqrt((g12+1)(g13+1)(g23+1)/2) * R.
    """
    g12, g13, g23 = T.gammas
    R, _ = circumradius(T)
    return math.sqrt((g12 + 1.0) * (g13 + 1.0) * (g23 + 1.0) / 2.0) * R


def circumradius_from_angles(alpha1, alpha2, alpha3, p=DEFAULT_PARAMS):
    """R determined by the gyroangles: s^2 sin(d/2) = R^2 prod sin(a_k + d/2)."""
    if alpha1 + alpha2 + alpha3 >= math.pi:
        raise AngleSumNotHyperbolic("gyroangle sum must be below pi")
    d = math.pi - alpha1 - alpha2 - alpha3
    hd = 0.5 * d
    prod = (
        math.sin(alpha1 + hd) * math.sin(alpha2 + hd) * math.sin(alpha3 + hd)
    )
    return p.s * math.sqrt(math.sin(hd) / prod)


class SideData(NamedTuple):
    a12: float
    a13: float
    a23: float
    g12a12: float
    g13a13: float
    g23a23: float


def sides_from_angles_radius(alpha1, alpha2, alpha3, R, p=DEFAULT_PARAMS):
    """Side gyrolengths and gamma-weighted gyrolengths from angles and R.

    Consistent with an actual gyrotriangle only when R equals
    circumradius_from_angles of the same triple; the gyrotriangle
    identity cos a3 + cos a1 cos a2 = gamma12 sin a1 sin a2 then links
    the two returned families.
    """
    for a in (alpha1, alpha2, alpha3):
        if not 0.0 < a < math.pi:
            raise ParamOutOfRange("gyroangles must lie in (0, pi)")
    if alpha1 + alpha2 + alpha3 >= math.pi:
        raise AngleSumNotHyperbolic("gyroangle sum must be below pi")
    if not 0.0 < R < p.s:
        raise ParamOutOfRange("R must lie in (0, s)")
    d = math.pi - alpha1 - alpha2 - alpha3
    hd = 0.5 * d
    c1, c2, c3 = math.cos(alpha1), math.cos(alpha2), math.cos(alpha3)
    s1, s2, s3 = math.sin(alpha1), math.sin(alpha2), math.sin(alpha3)
    prod = math.sin(alpha1 + hd) * math.sin(alpha2 + hd) * math.sin(alpha3 + hd)
    twoRp = 2.0 * R * prod
    return SideData(
        a12=twoRp / (c3 + c1 * c2),
        a13=twoRp / (c2 + c1 * c3),
        a23=twoRp / (c1 + c2 * c3),
        g12a12=twoRp / (s1 * s2),
        g13a13=twoRp / (s1 * s3),
        g23a23=twoRp / (s2 * s3),
    )
