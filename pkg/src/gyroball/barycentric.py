"""Gyrobarycentric representations over two or three reference points.

A point is encoded by homogeneous weights (m_1 : ... : m_N): the
represented point is (sum m_k gamma_k A_k) / (sum m_k gamma_k).  Weights
are stored raw and signed; rescaling by any nonzero factor leaves the
point unchanged.
"""

from functools import cached_property

import numpy as np

from .einstein import DEFAULT_PARAMS, as_point, einstein_add, gamma_factor, gyrodistance
from .errors import (
    DegenerateConfiguration,
    DimensionMismatch,
    FrameMismatch,
    OutsideBall,
    ZeroDenominator,
)


def quad_k(weights, g12, g13, g23):
    """K = m1 m2 (g12-1) + m1 m3 (g13-1) + m2 m3 (g23-1).

    The sign-bearing half of the representation-constant split
    m0^2 = (sum m)^2 + 2K; also the on-circumcircle indicator.
    """
    m1, m2, m3 = weights
    return m1 * m2 * (g12 - 1.0) + m1 * m3 * (g13 - 1.0) + m2 * m3 * (g23 - 1.0)


def evaluate_weights(refs, weights, p=DEFAULT_PARAMS):
    """Evaluate homogeneous weights against reference points directly."""
    refs = [as_point(A, p) for A in refs]
    gs = np.array([gamma_factor(A, p) for A in refs])
    w = np.asarray(weights, dtype=np.float64)
    den = float(np.dot(w, gs))
    if den == 0.0:
        raise ZeroDenominator("gamma-weighted denominator vanishes")
    num = sum(m * g * A for m, g, A in zip(w, gs, refs))
    return num / den


class GyroBaryRep:
    """Homogeneous weights over N=2 or N=3 reference ball points."""

    def __init__(self, refs, weights, p=DEFAULT_PARAMS):
        refs = tuple(as_point(A, p) for A in refs)
        if len(refs) not in (2, 3):
            raise DimensionMismatch("reference sets of size 2 or 3 only")
        if len({A.shape[0] for A in refs}) != 1:
            raise DimensionMismatch("reference points must share a dimension")
        weights = np.asarray(weights, dtype=np.float64)
        if weights.shape != (len(refs),):
            raise DimensionMismatch("need one weight per reference point")
        if not np.any(weights):
            raise ValueError("weights must not be all zero")
        self.refs = refs
        self.weights = weights
        self.params = p

    @cached_property
    def _ref_excesses(self):
        # pairwise gamma - 1 via gamma^2 d^2 / (s^2 (gamma + 1)): subtraction-free,
        # so the constants below survive s far larger than the configuration
        n = len(self.refs)
        s2 = self.params.s * self.params.s
        out = {}
        for i in range(n):
            for j in range(i + 1, n):
                d, g = gyrodistance(self.refs[i], self.refs[j], self.params)
                out[(i, j)] = g * g * d * d / (s2 * (g + 1.0))
        return out

    def same_frame(self, other):
        return len(self.refs) == len(other.refs) and all(
            a.shape == b.shape and np.array_equal(a, b)
            for a, b in zip(self.refs, other.refs)
        )

    def normalized(self):
        """Canonical display form: divide by the entry of largest magnitude."""
        w = self.weights
        return w / w[np.argmax(np.abs(w))]


def rep_radicand(rep):
    """Signed radicand of the representation constant.

    Positive exactly when the represented point lies in the ball; the
    sign is reported, never thrown.
    """
    w = rep.weights
    out = float(np.sum(w)) ** 2
    for (i, j), eij in rep._ref_excesses.items():
        out += 2.0 * w[i] * w[j] * eij
    return out


def rep_constant(rep, p=None):
    """Representation constant m0 = sqrt of the radicand; NaN if it is <= 0."""
    r = rep_radicand(rep)
    return float(np.sqrt(r)) if r > 0.0 else float("nan")


def evaluate(rep, p=None):
    """The represented ball point."""
    p = p or rep.params
    if rep_radicand(rep) <= 0.0:
        raise OutsideBall("representation constant has nonpositive radicand")
    return evaluate_weights(rep.refs, rep.weights, p)


def gamma_to_point(rep, X, p=None):
    """Gamma factor of the gyrodistance from X to the represented point.

    Gyrocovariance gives it weight-by-weight: sum m_k gamma_{(-X)(+)A_k} / m0,
    with no need to evaluate the point first.
    """
    p = p or rep.params
    m0 = rep_constant(rep)
    if not np.isfinite(m0):
        raise OutsideBall("representation constant has nonpositive radicand")
    X = as_point(X, p)
    acc = 0.0
    for m, A in zip(rep.weights, rep.refs):
        acc += m * gyrodistance(X, A, p)[1]
    # a projectively negated weight triple flips the numerator sign with m0 fixed
    return abs(acc) / m0


def gamma_between_reps(repP, repQ, p=None):
    """Gamma factor between two points given over the same reference frame."""
    if not repP.same_frame(repQ):
        raise FrameMismatch("representations use different reference points")
    p = p or repP.params
    mP = rep_constant(repP)
    mQ = rep_constant(repQ)
    if not (np.isfinite(mP) and np.isfinite(mQ)):
        raise OutsideBall("a representation has nonpositive radicand")
    w, v = repP.weights, repQ.weights
    acc = float(np.sum(w)) * float(np.sum(v))
    for (i, j), eij in repP._ref_excesses.items():
        acc += (w[i] * v[j] + v[i] * w[j]) * eij
    return abs(acc) / (mP * mQ)


def weights_from_point(refs, P, p=DEFAULT_PARAMS):
    """Invert evaluate(): homogeneous weights of P over three references.

    In the plane the null vector of the 2x3 system sum m_k gamma_k (A_k - P) = 0
    is written down with cross products; in higher dimension the least-squares
    null vector is used and the residual checked.
    """
    refs = tuple(as_point(A, p) for A in refs)
    if len(refs) != 3:
        raise DimensionMismatch("weights_from_point needs exactly three references")
    P = as_point(P, p)
    cols = [gamma_factor(A, p) * (A - P) for A in refs]
    if P.shape[0] == 2:
        cr = lambda a, b: a[0] * b[1] - a[1] * b[0]
        w = np.array([cr(cols[1], cols[2]), cr(cols[2], cols[0]), cr(cols[0], cols[1])])
        if not np.any(w):
            raise DegenerateConfiguration("reference points are collinear in Klein coordinates")
        return w
    M = np.column_stack(cols)
    _, sv, vt = np.linalg.svd(M)
    w = vt[-1]
    scale = np.linalg.norm(M, ord="fro")
    if np.linalg.norm(M @ w) > 1e-9 * max(scale, 1.0):
        raise DegenerateConfiguration("point does not lie in the references' plane")
    return w
