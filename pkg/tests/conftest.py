"""Shared fixtures and generators for the test suite.

Reference values below were computed independently with mpmath at 50
significant digits from the defining formulas, then rounded to
binary64.  They are frozen here so regressions show up as numeric
drift, not as silent re-derivation.
"""

import math

import numpy as np
import pytest

from gyroball import GyroTriangle, ModelParams, circum_exists

# reference triangle T0: symmetric, all quantities have short closed forms
T0_VERTICES = ((0.5, 0.0), (0.0, 0.5), (-0.5, 0.0))
T0 = {
    "g12": 4.0 / 3.0,
    "g13": 5.0 / 3.0,
    "g23": 4.0 / 3.0,
    "a12": 0.6614378277661476,
    "a13": 0.8,
    "a23": 0.6614378277661476,
    "alpha1": 0.7137243789447656,
    "alpha2": 1.4274487578895313,
    "alpha3": 0.7137243789447656,
    "defect": 0.2866951378107307,
    "d3": 16.0 / 27.0,
    "h3": 4.0 / 27.0,
    "center": (0.0, 0.0),
    "radius": 0.5,
    "gamma_r": 1.1547005383792515,
    "m_o_sq": 0.26337448559670781893,
}

# reference triangle T1: generic scalene, nothing cancels
T1_VERTICES = ((0.1, 0.2), (0.4, -0.1), (-0.2, 0.3))
T1 = {
    "g12": 1.103634394904275,
    "g13": 1.055965681673009,
    "g23": 1.306243993034772,
    "a12": 0.4230696416658751,
    "a13": 0.3212321655231099,
    "a23": 0.6433719304993559,
    "alpha1": 2.666536824693925,
    "alpha2": 0.185680237877717,
    "alpha3": 0.256935719322677,
    "d3": 0.005247851660726390,
    "h3": 0.003552411672366536,
    "d3_minus_h3": 0.001695439988359854,
    "center": (-0.3770248698170615, -0.6302952106482514),
    "radius": 0.8227556416608426,
    "gamma_r": 1.7593391384813569,
    "gyrosines_ratio": 1.8373908924297404,
    "dist_w123": 0.7982565008191225,        # point with weights (1, 2, 3)
    "gamma_reps": 1.017363764359686,        # between (1, 2, 3) and (2.5, -0.5, 1)
    "inscribed1_phi": 0.1579148738973243,
    "inscribed1_sin": 0.2541180594211207,
    "inscribed2_sin": 0.2697714321773726,
    "cevian_t03": {                          # cevian through A3, t1 = 0.3
        "gamma_a1p": 1.009357418088727,
        "gamma_a2p": 1.049937430680002,
        "gamma_a3p": 1.107209382767066,
        "m_q": 0.1092859521516405,
        "gamma_a3q": 1.157146329893543,
        "gamma_pq_sq_minus_1": 0.008958973000241657,
    },
}

# exterior tangency fixture on T0: P = (-0.4, 0.9), weights (-4/9, 1, 0)
T0_TANGENCY = {
    "point": (-0.4, 0.9),
    "point_weights": (-4.0 / 9.0, 1.0, 0.0),
    "k": -4.0 / 27.0,
    "plus_point": (-0.4967398575677687, 0.05700450774765834),
    "plus_weights": (-0.05719095841793663, 0.1213203435596426, 1.0),
    "minus_point": (0.29055429055745945, 0.40691301802553753),
    "minus_weights": (0.4714045207910317, 1.0, -0.2426406871192851),
    "gamma_t": 5.0,
    "length": 0.9797958971132712,            # 2 sqrt(6) / 5
    "const_plus": 0.005504915257749038,
    "const_minus": 0.026197569119632459,
}

# second intersection on T0: line through A3 with t = 0.7
T0_SECOND = {
    "t": 0.7,
    "first_point": (-0.4370179948586118, 0.2429305912596401),
    "second_point": (-6.0 / 13.0, -5.0 / 26.0),
}

# T0 chord-power fixture: t1 = 0.3 gives power 7/114 on both chords
T0_CHORD_POWER = 7.0 / 114.0

# TN: a triangle with no circumgyrocircle; both polynomial existence
# margins equal d3 - h3 exactly
TN_VERTICES = ((0.99, 0.0), (-0.99, 0.0), (0.0, 0.1))
TN_MARGIN = -7289.620902994565

# Euclidean fixtures on the 3-4-5 right triangle
E345_VERTICES = ((0.0, 0.0), (3.0, 0.0), (0.0, 4.0))
E345 = {
    "radius": 2.5,
    "center": (1.5, 2.0),
    "tangency_point": (4.5, 0.0),
    "tangency_weights": (-6.0, 18.0, 0.0),
    "plus_point": (3.941567773597429, 2.537351660396144),
    "minus_point": (1.9430476110179554, -0.4604285834730669),
    "tangent_length": 2.598076211353316,     # sqrt(6.75)
    "k": -972.0,
    "circumcevian_t03": (1.0011897679952409, -0.4497323022010708),
}

# simple Einstein addition witnesses
ADD_ORTHOGONAL = {
    "u": (0.3, 0.0),
    "v": (0.0, 0.4),
    "sum": (0.3, 0.38157568056677826),
}
ADD_GENERIC = {
    "u": (0.3, 0.1),
    "v": (-0.2, 0.4),
    "sum": (0.10937177374788578, 0.48821120936858755),
}


def e0_vertices():
    """Three points at radius 0.5 spaced 120 degrees, starting at pi/2."""
    pts = []
    for k in range(3):
        ang = math.pi / 2.0 + 2.0 * math.pi * k / 3.0
        pts.append((0.5 * math.cos(ang), 0.5 * math.sin(ang)))
    return tuple(pts)


@pytest.fixture
def params():
    return ModelParams()


@pytest.fixture
def t0():
    return GyroTriangle(*T0_VERTICES)


@pytest.fixture
def t1():
    return GyroTriangle(*T1_VERTICES)


@pytest.fixture
def e0():
    return GyroTriangle(*e0_vertices())


def ball_points(rng, n, dim=2, rmax=0.95, s=1.0):
    """n random points with norm <= rmax * s, volume-uniform in the ball."""
    x = rng.standard_normal((n, dim))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    r = rmax * s * rng.uniform(0.0, 1.0, n) ** (1.0 / dim)
    return x * r[:, None]


def random_triangle(rng, rmax=0.9, min_area=1e-3, require_circle=False, s=1.0):
    """A non-degenerate random triangle, optionally with a circumgyrocircle."""
    p = ModelParams(s=s)
    while True:
        a, b, c = ball_points(rng, 3, rmax=rmax, s=s)
        area = abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
        if area < min_area * s * s:
            continue
        try:
            tri = GyroTriangle(a, b, c, p=p)
        except Exception:
            continue
        if require_circle and not circum_exists(tri):
            continue
        return tri


def _klein_gamma(a, b):
    # gamma factor of the gyrodifference, straight from ball coordinates
    num = 1.0 - (a[0] * b[0] + a[1] * b[1])
    den = math.sqrt((1.0 - a[0] ** 2 - a[1] ** 2) * (1.0 - b[0] ** 2 - b[1] ** 2))
    return num / den


def _margin(a, h):
    # existence margin d3 - h3 for the isoceles family (-a,0),(a,0),(0,h)
    p1, p2, p3 = (-a, 0.0), (a, 0.0), (0.0, h)
    g12 = _klein_gamma(p1, p2)
    g13 = _klein_gamma(p1, p3)
    g23 = _klein_gamma(p2, p3)
    d3 = 1.0 + 2.0 * g12 * g13 * g23 - g12 * g12 - g13 * g13 - g23 * g23
    h3 = 2.0 * (g12 - 1.0) * (g13 - 1.0) * (g23 - 1.0)
    return d3 - h3, d3


def near_boundary_triangles(rng, count):
    """Triangles whose existence margin |d3 - h3| is pushed down to 1e-8 d3.

    Uses an isoceles family with the apex height as the control knob:
    scans for a sign change of the margin, bisects to the root, then
    steps off the root to hit log-spaced relative margins of both signs.
    """
    targets = np.geomspace(1e-8, 1e-3, 10)
    out = []
    while len(out) < count:
        a = rng.uniform(0.55, 0.93)
        hs = np.linspace(0.02, 0.97, 60)
        ms = [_margin(a, h)[0] for h in hs]
        bracket = None
        for i in range(len(hs) - 1):
            if ms[i] * ms[i + 1] < 0.0:
                bracket = (hs[i], hs[i + 1])
                break
        if bracket is None:
            continue
        lo, hi = bracket
        mlo = _margin(a, lo)[0]
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            mm = _margin(a, mid)[0]
            if mm == 0.0:
                break
            if (mm > 0.0) == (mlo > 0.0):
                lo, mlo = mid, mm
            else:
                hi = mid
        root = 0.5 * (lo + hi)
        for target in targets:
            for sign in (1.0, -1.0):
                # grow the offset until the relative margin clears the target
                u = 1e-12
                hit = None
                for _ in range(64):
                    h = root + sign * u
                    if not 0.01 < h < 0.98:
                        break
                    m, d3 = _margin(a, h)
                    if d3 > 0.0 and abs(m) >= target * d3:
                        hit = (h, m, d3)
                        break
                    u *= 2.0
                if hit is None:
                    continue
                h, m, d3 = hit
                if abs(m) <= 1e3 * target * d3:
                    out.append(((-a, 0.0), (a, 0.0), (0.0, h)))
                if len(out) >= count:
                    return out
    return out
